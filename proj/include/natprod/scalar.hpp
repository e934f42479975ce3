#pragma once

/**
 * @file scalar.hpp
 * @brief Exact coefficient domains: Z, Q, Z_n and the cones Z+ u {0}, Q+ u {0}.
 *
 * Every value is stored as a reduced rational. Integral domains (Z, Z_n, Z+)
 * always hold denominator 1, Z_n values live in [0, n), cone values are >= 0.
 */

#include <natprod/error.hpp>

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace natprod {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

enum class DomainKind { Int, Rat, Mod, NonNegInt, NonNegRat };

class DomainTag {
public:
    constexpr DomainTag() = default;

    static constexpr DomainTag integers() { return DomainTag(DomainKind::Int, 0); }
    static constexpr DomainTag rationals() { return DomainTag(DomainKind::Rat, 0); }
    static constexpr DomainTag nonneg_integers() { return DomainTag(DomainKind::NonNegInt, 0); }
    static constexpr DomainTag nonneg_rationals() { return DomainTag(DomainKind::NonNegRat, 0); }
    static DomainTag mod(std::uint64_t n) {
        if (n < 2) fail(ErrorKind::InvalidArgument, "Z_n requires n >= 2, got " + std::to_string(n));
        return DomainTag(DomainKind::Mod, n);
    }

    constexpr DomainKind kind() const { return kind_; }
    constexpr std::uint64_t modulus() const { return modulus_; }

    constexpr bool is_cone() const { return kind_ == DomainKind::NonNegInt || kind_ == DomainKind::NonNegRat; }
    /// Values are integers (Z, Z_n, Z+).
    constexpr bool is_integral() const { return kind_ != DomainKind::Rat && kind_ != DomainKind::NonNegRat; }
    /// Z, Q and both cones have no zero divisors among scalars.
    constexpr bool is_integral_domain() const { return kind_ != DomainKind::Mod; }

    /// Short name used in literals, flags and JSON: Z, Q, Zn:<n>, Z+, Q+.
    std::string name() const {
        switch (kind_) {
        case DomainKind::Int: return "Z";
        case DomainKind::Rat: return "Q";
        case DomainKind::Mod: return "Zn:" + std::to_string(modulus_);
        case DomainKind::NonNegInt: return "Z+";
        case DomainKind::NonNegRat: return "Q+";
        }
        return "?";
    }

    static DomainTag parse(std::string_view s) {
        if (s == "Z") return integers();
        if (s == "Q") return rationals();
        if (s == "Z+") return nonneg_integers();
        if (s == "Q+") return nonneg_rationals();
        if (s.starts_with("Zn:")) {
            std::uint64_t n = 0;
            auto digits = s.substr(3);
            if (digits.empty() || digits.size() > 18) fail(ErrorKind::ParseError, "bad modulus in domain '" + std::string(s) + "'");
            for (char c : digits) {
                if (c < '0' || c > '9') fail(ErrorKind::ParseError, "bad modulus in domain '" + std::string(s) + "'");
                n = n * 10 + static_cast<std::uint64_t>(c - '0');
            }
            return mod(n);
        }
        fail(ErrorKind::ParseError, "unknown domain '" + std::string(s) + "'");
    }

    friend constexpr bool operator==(const DomainTag&, const DomainTag&) = default;
    friend constexpr auto operator<=>(const DomainTag&, const DomainTag&) = default;

private:
    constexpr DomainTag(DomainKind k, std::uint64_t n) : kind_(k), modulus_(n) {}

    DomainKind kind_ = DomainKind::Rat;
    std::uint64_t modulus_ = 0;
};

namespace detail {

/// Denominator test without copying the denominator out of the GMP value.
inline bool is_integer(const BigRat& v) { return mpz_cmp_ui(mpq_denref(v.backend().data()), 1) == 0; }

inline BigInt floor_mod(const BigInt& a, const BigInt& n) {
    BigInt r = a % n;
    if (r < 0) r += n;
    return r;
}

/// floor(a^(1/k)) for a >= 0.
inline BigInt integer_root_floor(const BigInt& a, unsigned k) {
    if (a < 2 || k == 1) return a;
    const auto bits = boost::multiprecision::msb(a) + 1;
    BigInt lo = 0;
    BigInt hi = BigInt(1) << (bits / k + 1);
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) >> 1;
        if (boost::multiprecision::pow(mid, k) <= a)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

inline std::optional<BigInt> exact_integer_root(const BigInt& a, unsigned k) {
    BigInt r = integer_root_floor(a, k);
    if (boost::multiprecision::pow(r, k) == a) return r;
    return std::nullopt;
}

} // namespace detail

class Scalar {
public:
    Scalar() = default;

    Scalar(DomainTag d, BigRat v) : domain_(d), value_(std::move(v)) { normalize(); }
    Scalar(DomainTag d, long long v) : Scalar(d, BigRat(v)) {}

    static Scalar zero(DomainTag d) { return Scalar(d, BigRat(0)); }
    static Scalar one(DomainTag d) { return Scalar(d, BigRat(1)); }

    DomainTag domain() const { return domain_; }
    const BigRat& value() const { return value_; }
    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.domain_ == b.domain_ && a.value_ == b.value_;
    }
    /// Canonical order: domain first, then numeric value.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const { return value_.str(); }

private:
    void normalize() {
        if (domain_.is_integral() && !detail::is_integer(value_))
            fail(ErrorKind::UnsupportedDomain, value_.str() + " is not an integer in " + domain_.name());
        if (domain_.kind() == DomainKind::Mod)
            value_ = BigRat(detail::floor_mod(numerator(), BigInt(domain_.modulus())));
        else if (domain_.is_cone() && value_ < 0)
            fail(ErrorKind::OutsideCone, value_.str() + " is negative in " + domain_.name());
    }

    DomainTag domain_ = DomainTag::rationals();
    BigRat value_ = 0;
};

inline void require_same_domain(const Scalar& a, const Scalar& b) {
    if (a.domain() != b.domain())
        fail(ErrorKind::DomainMismatch, a.domain().name() + " vs " + b.domain().name());
}

inline Scalar dom_add(const Scalar& a, const Scalar& b) {
    require_same_domain(a, b);
    return Scalar(a.domain(), a.value() + b.value());
}

/// Subtraction; in a cone any result below zero is an OutsideCone error.
inline Scalar dom_sub(const Scalar& a, const Scalar& b) {
    require_same_domain(a, b);
    return Scalar(a.domain(), a.value() - b.value());
}

inline Scalar dom_neg(const Scalar& a) { return Scalar(a.domain(), -a.value()); }

inline Scalar dom_mul(const Scalar& a, const Scalar& b) {
    require_same_domain(a, b);
    return Scalar(a.domain(), a.value() * b.value());
}

inline bool is_unit(const Scalar& a) {
    switch (a.domain().kind()) {
    case DomainKind::Rat:
    case DomainKind::NonNegRat:
        return !a.is_zero();
    case DomainKind::Int:
        return a.value() == 1 || a.value() == -1;
    case DomainKind::NonNegInt:
        return a.is_one();
    case DomainKind::Mod:
        return boost::multiprecision::gcd(a.numerator(), BigInt(a.domain().modulus())) == 1;
    }
    return false;
}

inline Scalar dom_inv(const Scalar& a) {
    if (!is_unit(a)) fail(ErrorKind::NotAUnit, a.to_string() + " has no inverse in " + a.domain().name());
    if (a.domain().kind() != DomainKind::Mod) return Scalar(a.domain(), BigRat(1) / a.value());

    // extended Euclid on (a, n)
    const BigInt n(a.domain().modulus());
    BigInt old_r = a.numerator(), r = n;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    return Scalar(a.domain(), BigRat(detail::floor_mod(old_s, n)));
}

/// Multiply by an integer constant (k * a), used by formal differentiation.
inline Scalar dom_scale(const Scalar& a, const BigInt& k) { return Scalar(a.domain(), a.value() * BigRat(k)); }

/**
 * Exact k-th root. Over Q the numerator and denominator are rooted
 * independently; odd k keeps the sign of a, even k yields the nonnegative
 * root. Returns nullopt when a is not a perfect k-th power.
 */
inline std::optional<Scalar> kth_root(const Scalar& a, unsigned k) {
    if (k == 0) fail(ErrorKind::InvalidArgument, "root index must be >= 1");
    if (a.domain().kind() == DomainKind::Mod)
        fail(ErrorKind::UnsupportedDomain, "exact roots are not defined over " + a.domain().name());

    const bool negative = a.value() < 0;
    if (negative && k % 2 == 0) return std::nullopt;
    const BigInt num = boost::multiprecision::abs(a.numerator());
    const auto rn = detail::exact_integer_root(num, k);
    const auto rd = detail::exact_integer_root(a.denominator(), k);
    if (!rn || !rd) {
        if (a.domain().is_cone() && k % 2 == 0)
            fail(ErrorKind::UnsupportedDomain,
                 a.to_string() + " has no exact even root in " + a.domain().name());
        return std::nullopt;
    }
    BigRat root(*rn, *rd);
    if (negative) root = -root;
    return Scalar(a.domain(), root);
}

inline bool is_prime(const BigInt& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (BigInt d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// Parse the scalar text form: optional sign, integer or p/q. Z_n values are
/// reduced mod n.
inline Scalar parse_scalar(std::string_view text, DomainTag d) {
    auto bad = [&] { fail(ErrorKind::ParseError, "bad scalar '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    std::size_t i = 0;
    bool neg = false;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        i = 1;
    }
    auto read_digits = [&](std::size_t& pos) {
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) bad();
        return BigInt(std::string(text.substr(start, pos - start)));
    };
    BigInt num = read_digits(i);
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_digits(i);
        if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    if (i != text.size()) bad();
    BigRat v(num, den);
    if (neg) v = -v;
    return Scalar(d, v);
}

inline std::string render_scalar(const Scalar& s) { return s.to_string(); }

inline Scalar operator+(const Scalar& a, const Scalar& b) { return dom_add(a, b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return dom_sub(a, b); }
inline Scalar operator-(const Scalar& a) { return dom_neg(a); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return dom_mul(a, b); }

} // namespace natprod
