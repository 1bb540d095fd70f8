#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace selzeta {

using Symbol = std::uint8_t;  // reflection index 1, 2 or 3
using Word = std::vector<Symbol>;

inline constexpr int kDefaultMaxWordLength = 16;

// A periodic point of the shift on {1,2,3} with no two equal neighbours.
struct OrbitClass {
    Word rep;         // minimal rotation, full length m
    int m = 0;        // period as a fixed point of the shift power
    int p = 0;        // primitive period
    int cweight = 0;  // positions j with rep[j] != rep[j+2] (cyclic)

    // number of distinct sequences (fixed points) the record stands for
    int orbit_size() const { return p; }
    int repetitions() const { return p == 0 ? 0 : m / p; }
    std::span<const Symbol> primitive() const { return {rep.data(), static_cast<std::size_t>(p)}; }
};

inline bool is_cyclically_admissible(std::span<const Symbol> w) {
    if (w.empty()) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 1 || w[i] > 3) return false;
        if (w[i] == w[(i + 1) % w.size()]) return false;
    }
    return true;
}

inline int c_weight(std::span<const Symbol> w) {
    if (!is_cyclically_admissible(w)) throw DomainError("c_weight: word is not cyclically admissible");
    const std::size_t m = w.size();
    int count = 0;
    for (std::size_t j = 0; j < m; ++j)
        if (w[j] != w[(j + 2) % m]) ++count;
    return count;
}

// Lexicographically minimal cyclic rotation.
inline Word minimal_rotation(std::span<const Symbol> w) {
    const std::size_t m = w.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < m; ++r) {
        for (std::size_t k = 0; k < m; ++k) {
            const Symbol a = w[(r + k) % m];
            const Symbol b = w[(best + k) % m];
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    }
    Word out(m);
    for (std::size_t k = 0; k < m; ++k) out[k] = w[(best + k) % m];
    return out;
}

inline int primitive_period(std::span<const Symbol> w) {
    const int m = static_cast<int>(w.size());
    for (int p = 1; p < m; ++p) {
        if (m % p != 0) continue;
        bool periodic = true;
        for (int k = p; k < m && periodic; ++k) periodic = w[k] == w[k - p];
        if (periodic) return p;
    }
    return m;
}

// Canonical key of the orbit of w under rotation, reversal and relabelling.
// Lengths of closed geodesics are constant on these classes.
inline Word symmetry_key(std::span<const Symbol> w) {
    static constexpr std::array<std::array<Symbol, 3>, 6> perms{{
        {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
    Word best;
    Word tmp(w.size());
    for (const auto& perm : perms) {
        for (int rev = 0; rev < 2; ++rev) {
            for (std::size_t k = 0; k < w.size(); ++k) {
                const Symbol s = rev ? w[w.size() - 1 - k] : w[k];
                tmp[k] = perm[s - 1];
            }
            Word cand = minimal_rotation(tmp);
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

inline void check_word_length(int m, int max_m) {
    if (m < 2 || m % 2 != 0) throw DomainError("word length must be even and at least 2");
    if (m > max_m) throw ResourceError("word length " + std::to_string(m) + " exceeds ceiling " + std::to_string(max_m));
}

// All periodic points of the shift power m, grouped by rotation orbit and
// sorted by representative.
inline std::vector<OrbitClass> enumerate_fixed_points(int m, int max_m = kDefaultMaxWordLength) {
    check_word_length(m, max_m);
    std::vector<OrbitClass> out;
    Word w(static_cast<std::size_t>(m));

    // depth-first over admissible words; a word is kept only when it equals
    // its minimal rotation, so each orbit is emitted once, in lexicographic order
    auto is_minimal = [&] {
        for (int r = 1; r < m; ++r) {
            for (int k = 0; k < m; ++k) {
                const Symbol a = w[(r + k) % m];
                const Symbol b = w[k];
                if (a != b) {
                    if (a < b) return false;
                    break;
                }
            }
        }
        return true;
    };
    auto recurse = [&](auto&& self, int pos) -> void {
        if (pos == m) {
            if (w[m - 1] == w[0] || !is_minimal()) return;
            OrbitClass oc;
            oc.rep = w;
            oc.m = m;
            oc.p = primitive_period(w);
            oc.cweight = c_weight(w);
            out.push_back(std::move(oc));
            return;
        }
        for (Symbol s = 1; s <= 3; ++s) {
            if (pos > 0 && s == w[pos - 1]) continue;
            // a minimal rotation never has a symbol smaller than its first
            if (pos > 0 && s < w[0]) continue;
            w[pos] = s;
            self(self, pos + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

inline std::int64_t count_fixed_points(const std::vector<OrbitClass>& orbits) {
    std::int64_t total = 0;
    for (const auto& o : orbits) total += o.orbit_size();
    return total;
}

// Fixed points of the shift power m, binned by c-weight.
inline std::map<int, std::int64_t> cweight_histogram(int m, int max_m = kDefaultMaxWordLength) {
    std::map<int, std::int64_t> hist;
    for (const auto& o : enumerate_fixed_points(m, max_m)) hist[o.cweight] += o.orbit_size();
    return hist;
}

inline std::int64_t expected_fixed_point_count(int m) {
    return (std::int64_t{1} << m) + 2;  // 4^{m/2} + 2
}

}  // namespace selzeta
