#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <istream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "lfunction.hpp"
#include "numeric.hpp"
#include "transfermat.hpp"
#include "zerofinder.hpp"
#include "zerogeom.hpp"
#include "zetacore.hpp"

namespace selzeta {

inline void write_spectrum_csv(std::ostream& os, const std::vector<LengthSpectrum>& spectra) {
    os << "m,length,count\n";
    for (const auto& sp : spectra)
        for (const auto& e : sp.entries) os << sp.m << ',' << format_double(e.length) << ',' << e.count << '\n';
}

// re,im,residual,iterations,multiplicity; a leading character column when
// `character` is set.
inline void write_zeros_csv(std::ostream& os, const ZeroSet& zs, std::optional<int> character = std::nullopt) {
    if (character) os << "character,";
    os << "re,im,residual,iterations,multiplicity\n";
    for (const auto& z : zs.zeros) {
        if (character) os << *character << ',';
        os << format_double(z.s.real()) << ',' << format_double(z.s.imag()) << ',' << format_double(z.residual) << ','
           << z.iterations << ',' << z.multiplicity << '\n';
    }
}

namespace detail {

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        if (!cell.empty() && cell.back() == '\r') cell.pop_back();
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline double cell_double(const std::string& cell, std::size_t line_no) {
    double v = 0.0;
    if (!parse_double(cell, v)) throw DomainError("CSV line " + std::to_string(line_no) + ": bad number '" + cell + "'");
    return v;
}

inline long cell_long(const std::string& cell, std::size_t line_no) {
    const double v = cell_double(cell, line_no);
    if (v != std::floor(v)) throw DomainError("CSV line " + std::to_string(line_no) + ": expected a whole number");
    return static_cast<long>(v);
}

}  // namespace detail

// Reads a zero CSV written by write_zeros_csv; the multiplicity column is
// optional and defaults to 1.
inline std::vector<FoundZero> read_zeros_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw DomainError("zero CSV: missing header");
    const auto header = detail::split_csv(line);
    auto column = [&](const std::string& name) -> std::optional<std::size_t> {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) return std::nullopt;
        return static_cast<std::size_t>(it - header.begin());
    };
    const auto re = column("re"), im = column("im"), res = column("residual"), iters = column("iterations");
    const auto mult = column("multiplicity");
    if (!re || !im || !res || !iters) throw DomainError("zero CSV: header must contain re,im,residual,iterations");
    std::vector<FoundZero> out;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto cells = detail::split_csv(line);
        if (cells.size() != header.size()) throw DomainError("zero CSV line " + std::to_string(line_no) + ": wrong column count");
        FoundZero z;
        z.s = {detail::cell_double(cells[*re], line_no), detail::cell_double(cells[*im], line_no)};
        z.residual = detail::cell_double(cells[*res], line_no);
        z.iterations = static_cast<int>(detail::cell_long(cells[*iters], line_no));
        if (mult) z.multiplicity = static_cast<int>(detail::cell_long(cells[*mult], line_no));
        if (z.multiplicity < 1) throw DomainError("zero CSV line " + std::to_string(line_no) + ": multiplicity below 1");
        out.push_back(z);
    }
    return out;
}

inline void write_points_csv(std::ostream& os, const std::vector<cplx>& pts) {
    os << "re,im\n";
    for (const cplx& z : pts) os << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
}

inline void write_curves_csv(std::ostream& os, double t0, double t1, double dt) {
    if (!(t1 > t0) || !(dt > 0.0)) throw DomainError("curves: need t1 > t0 and dt > 0");
    const auto steps = static_cast<std::size_t>(std::ceil((t1 - t0) / dt));
    const CurveFamily cf;
    os << "t,sigma1,sigma2,sigma3,sigma4\n";
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = k == steps ? t1 : t0 + static_cast<double>(k) * ((t1 - t0) / static_cast<double>(steps));
        os << format_double(t);
        for (int j = 1; j <= 4; ++j) os << ',' << format_double(cf.clipped(j, t));
        os << '\n';
    }
}

inline nlohmann::json polynomial_json(const IntPolynomial& p) { return p.coefficients(); }

inline nlohmann::json polynomials_json(const std::array<IntPolynomial, 7>& ps) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : ps) j.push_back(polynomial_json(p));
    return j;
}

struct SvgPlot {
    double re_min = -0.1, re_max = 0.8, im_min = 0.0, im_max = 0.0;
    std::vector<cplx> points;
    bool curves = false;        // overlay the four limit curves
    double width = 480.0, height = 720.0;
    std::string title;
};

namespace detail {

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string fmt_px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace detail

// Static SVG 1.1: frame, axis labels, zero markers, optional curves.
inline void write_svg(std::ostream& os, const SvgPlot& p) {
    if (!(p.re_max > p.re_min) || !(p.im_max > p.im_min)) throw DomainError("plot: empty window");
    const double margin = 50.0;
    const double w = p.width - 2.0 * margin, h = p.height - 2.0 * margin;
    auto X = [&](double re) { return margin + (re - p.re_min) / (p.re_max - p.re_min) * w; };
    auto Y = [&](double im) { return margin + (p.im_max - im) / (p.im_max - p.im_min) * h; };
    auto inside = [&](cplx z) {
        return z.real() >= p.re_min && z.real() <= p.re_max && z.imag() >= p.im_min && z.imag() <= p.im_max;
    };
    using detail::fmt_px;

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt_px(p.width) << "\" height=\""
       << fmt_px(p.height) << "\" viewBox=\"0 0 " << fmt_px(p.width) << ' ' << fmt_px(p.height) << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << fmt_px(p.width) << "\" height=\"" << fmt_px(p.height) << "\" fill=\"white\"/>\n";
    if (!p.title.empty())
        os << "<text x=\"" << fmt_px(p.width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
           << detail::xml_escape(p.title) << "</text>\n";
    os << "<rect x=\"" << fmt_px(margin) << "\" y=\"" << fmt_px(margin) << "\" width=\"" << fmt_px(w) << "\" height=\""
       << fmt_px(h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int k = 0; k <= 4; ++k) {
        const double re = p.re_min + (p.re_max - p.re_min) * k / 4.0;
        const double im = p.im_min + (p.im_max - p.im_min) * k / 4.0;
        os << "<text x=\"" << fmt_px(X(re)) << "\" y=\"" << fmt_px(margin + h + 16) << "\" text-anchor=\"middle\">"
           << format_double(std::round(re * 1e4) / 1e4) << "</text>\n";
        os << "<text x=\"" << fmt_px(margin - 6) << "\" y=\"" << fmt_px(Y(im) + 4) << "\" text-anchor=\"end\">"
           << format_double(std::round(im * 1e3) / 1e3) << "</text>\n";
    }
    os << "<text x=\"" << fmt_px(margin + w / 2) << "\" y=\"" << fmt_px(p.height - 10) << "\" text-anchor=\"middle\">Re s</text>\n";
    os << "<text x=\"14\" y=\"" << fmt_px(margin + h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
       << fmt_px(margin + h / 2) << ")\">Im s</text>\n</g>\n";

    if (p.curves) {
        static constexpr const char* colours[4] = {"#1f77b4", "#2ca02c", "#d62728", "#9467bd"};
        const CurveFamily cf;
        const double dt = std::min(1e-3, (p.im_max - p.im_min) / 2000.0);
        const auto steps = static_cast<std::size_t>(std::ceil((p.im_max - p.im_min) / dt));
        for (int j = 1; j <= 4; ++j) {
            os << "<g fill=\"none\" stroke=\"" << colours[j - 1] << "\" stroke-width=\"1\">\n";
            std::string path;
            for (std::size_t k = 0; k <= steps; ++k) {
                const double t = p.im_min + (p.im_max - p.im_min) * static_cast<double>(k) / static_cast<double>(steps);
                const auto s = cf.sigma(j, t);
                if (!s || !inside({*s, t})) {
                    if (!path.empty()) os << "<path d=\"" << path << "\"/>\n";
                    path.clear();
                    continue;
                }
                path += (path.empty() ? "M" : " L") + fmt_px(X(*s)) + ' ' + fmt_px(Y(t));
            }
            if (!path.empty()) os << "<path d=\"" << path << "\"/>\n";
            os << "</g>\n";
        }
    }
    os << "<g fill=\"black\">\n";
    for (const cplx& z : p.points)
        if (inside(z)) os << "<circle cx=\"" << fmt_px(X(z.real())) << "\" cy=\"" << fmt_px(Y(z.imag())) << "\" r=\"1.5\"/>\n";
    os << "</g>\n</svg>\n";
}

}  // namespace selzeta
