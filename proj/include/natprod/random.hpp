#pragma once

/**
 * @file random.hpp
 * @brief Seeded generators for sampled law checks.
 */

#include <natprod/matpoly.hpp>

#include <random>

namespace natprod {

using Rng = std::mt19937_64;

inline long long uniform_int(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// A random value of the domain: small integers, small fractions over Q, and
/// strictly positive values on request (cones only).
inline Scalar random_scalar(Rng& rng, DomainTag d, bool positive = false) {
    switch (d.kind()) {
    case DomainKind::Int: return Scalar(d, uniform_int(rng, -9, 9));
    case DomainKind::NonNegInt: return Scalar(d, uniform_int(rng, positive ? 1 : 0, 9));
    case DomainKind::Mod: return Scalar(d, uniform_int(rng, 0, static_cast<long long>(std::min<std::uint64_t>(d.modulus(), 1u << 30) - 1)));
    case DomainKind::Rat: return Scalar(d, BigRat(uniform_int(rng, -9, 9), uniform_int(rng, 1, 6)));
    case DomainKind::NonNegRat: return Scalar(d, BigRat(uniform_int(rng, positive ? 1 : 0, 9), uniform_int(rng, 1, 6)));
    }
    return Scalar::zero(d);
}

inline Matrix random_matrix(Rng& rng, Shape s, DomainTag d, bool positive = false) {
    std::vector<Scalar> e;
    e.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) e.push_back(random_scalar(rng, d, positive));
    return Matrix(s, d, std::move(e));
}

inline Shape random_shape(Rng& rng, std::size_t max_rows, std::size_t max_cols) {
    return Shape{static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long long>(max_rows))),
                 static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long long>(max_cols)))};
}

inline PartitionType random_partition(Rng& rng, Shape s) {
    std::set<std::size_t> rc, cc;
    for (std::size_t k = 1; k < s.rows; ++k)
        if (uniform_int(rng, 0, 1)) rc.insert(k);
    for (std::size_t k = 1; k < s.cols; ++k)
        if (uniform_int(rng, 0, 1)) cc.insert(k);
    return PartitionType(s, rc, cc);
}

inline SupportMask random_mask(Rng& rng, Shape s) {
    SupportMask m(s);
    for (std::size_t i = 0; i < s.size(); ++i) m.assign(i, uniform_int(rng, 0, 1) == 1);
    return m;
}

/// Polynomial with up to max_deg+1 random coefficients; some degrees are skipped.
inline MatPoly random_poly(Rng& rng, Shape s, DomainTag d, std::size_t max_deg,
                           std::optional<PartitionType> p = std::nullopt) {
    MatPoly out(s, d, std::move(p));
    for (std::size_t k = 0; k <= max_deg; ++k)
        if (uniform_int(rng, 0, 3) != 0) out.add_term(k, random_matrix(rng, s, d));
    return out;
}

} // namespace natprod
