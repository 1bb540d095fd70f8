#pragma once

#include "errors.hpp"
#include "numeric.hpp"
#include "symdyn.hpp"
#include "hyperbolic.hpp"
#include "zetacore.hpp"
#include "transfermat.hpp"
#include "zerofinder.hpp"
#include "zerogeom.hpp"
#include "lfunction.hpp"
#include "io.hpp"
