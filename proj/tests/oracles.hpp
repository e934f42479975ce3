#pragma once

// Brute-force reference implementations. These deliberately avoid the library
// operations they are compared against: values are plain rationals in flat
// row-major vectors and every check is done by direct enumeration.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Frac = boost::multiprecision::cpp_rational;
using Flat = std::vector<Frac>;

/// Values cross over from the library as "p/q" text so that no arithmetic
/// backend is shared with it.
inline Frac frac(const std::string& text) { return Frac(text); }

inline Flat hadamard(const Flat& a, const Flat& b) {
    Flat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
    return r;
}

inline Flat plus(const Flat& a, const Flat& b) {
    Flat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/// Row-by-column product of n x n matrices.
inline Flat matmul(const Flat& a, const Flat& b, std::size_t n) {
    Flat r(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) r[i * n + j] += a[i * n + k] * b[k * n + j];
    return r;
}

/// Polynomial as degree -> flat coefficient; zero coefficients are kept out.
using Poly = std::map<std::size_t, Flat>;

inline bool all_zero(const Flat& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline void accumulate(Poly& p, std::size_t k, const Flat& c) {
    auto it = p.find(k);
    if (it == p.end()) {
        if (!all_zero(c)) p.emplace(k, c);
        return;
    }
    it->second = plus(it->second, c);
    if (all_zero(it->second)) p.erase(it);
}

/// Convolution with entrywise coefficient products.
inline Poly poly_hadamard(const Poly& p, const Poly& q) {
    Poly r;
    for (const auto& [i, a] : p)
        for (const auto& [j, b] : q) accumulate(r, i + j, hadamard(a, b));
    return r;
}

inline Poly poly_plus(const Poly& p, const Poly& q) {
    Poly r = p;
    for (const auto& [k, c] : q) accumulate(r, k, c);
    return r;
}

inline Poly derivative(const Poly& p) {
    Poly r;
    for (const auto& [k, c] : p) {
        if (k == 0) continue;
        Flat d = c;
        for (auto& x : d) x *= k;
        accumulate(r, k - 1, d);
    }
    return r;
}

/// Counts tuples in {0..n-1}^cells with x*x == x (mod n) in every entry,
/// squaring each tuple of the full carrier.
inline std::uint64_t mod_idempotent_count(unsigned n, std::size_t cells) {
    std::vector<unsigned> x(cells, 0);
    std::uint64_t count = 0;
    while (true) {
        bool idem = true;
        for (unsigned v : x)
            if ((v * v) % n != v) idem = false;
        count += idem;
        std::size_t i = 0;
        while (i < cells && ++x[i] == n) x[i++] = 0;
        if (i == cells) break;
    }
    return count;
}

/// 0/1 tuples squared under the ordinary integer product.
inline std::uint64_t mask_idempotent_count(std::size_t cells) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << cells); ++k) {
        bool idem = true;
        for (std::size_t i = 0; i < cells; ++i) {
            const long long v = (k >> i) & 1;
            if (v * v != v) idem = false;
        }
        count += idem;
    }
    return count;
}

/// Closure of {x} under multiplication by every 0/1 tuple, iterated until
/// nothing new appears. Masks are bit patterns; the product is bitwise AND.
inline std::size_t mask_ideal_size(std::uint64_t x, std::size_t cells) {
    std::set<std::uint64_t> seen{x};
    std::vector<std::uint64_t> todo{x};
    while (!todo.empty()) {
        const std::uint64_t y = todo.back();
        todo.pop_back();
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << cells); ++s)
            if (seen.insert(y & s).second) todo.push_back(y & s);
    }
    return seen.size();
}

/// Whether an integer a has an integer b with a*b = 1, searching |b| <= |a|.
inline bool int_has_inverse(long long a) {
    const long long bound = a < 0 ? -a : a;
    for (long long b = -bound; b <= bound; ++b)
        if (a * b == 1) return true;
    return false;
}

enum class Sum { Direct, PseudoDirect, NotSpanning };

/// Classifies coordinate subspaces by counting how often each cell is covered.
inline Sum classify(const std::vector<std::vector<int>>& masks) {
    const std::size_t cells = masks.front().size();
    bool overlap = false;
    for (std::size_t i = 0; i < cells; ++i) {
        int cover = 0;
        for (const auto& m : masks) cover += m[i];
        if (cover == 0) return Sum::NotSpanning;
        if (cover > 1) overlap = true;
    }
    return overlap ? Sum::PseudoDirect : Sum::Direct;
}

} // namespace oracle
