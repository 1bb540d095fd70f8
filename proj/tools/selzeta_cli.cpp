#include <selzeta/cli.hpp>

int main(int argc, char** argv) { return selzeta::cli::run(argc, argv); }
