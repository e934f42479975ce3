#pragma once

/**
 * @file matpoly.hpp
 * @brief Polynomials in one variable whose coefficients are matrices (or
 * partitioned matrices) of one shape and domain.
 */

#include <natprod/supermatrix.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace natprod {

class MatPoly {
public:
    using Terms = std::map<std::size_t, Matrix>;

    MatPoly() : MatPoly(Shape{1, 1}, DomainTag::rationals()) {}
    /// Zero polynomial. A partition without cuts is stored as no partition.
    MatPoly(Shape s, DomainTag d, std::optional<PartitionType> p = std::nullopt) : shape_(s), domain_(d) {
        check_shape(s);
        set_ptype(std::move(p));
    }

    static MatPoly constant(const Matrix& c, std::optional<PartitionType> p = std::nullopt) {
        MatPoly r(c.shape(), c.domain(), std::move(p));
        r.add_term(0, c);
        return r;
    }

    static MatPoly from_terms(const std::vector<std::pair<std::size_t, Matrix>>& terms,
                              std::optional<PartitionType> p = std::nullopt) {
        if (terms.empty()) fail(ErrorKind::InvalidArgument, "from_terms needs at least one term to fix the shape");
        MatPoly r(terms.front().second.shape(), terms.front().second.domain(), std::move(p));
        for (const auto& [k, m] : terms) r.add_term(k, m);
        return r;
    }

    /// Adds c * x^k to this polynomial; zero sums are dropped.
    void add_term(std::size_t k, const Matrix& c) {
        if (c.shape() != shape_) fail(ErrorKind::ShapeMismatch, "coefficient " + c.shape().to_string() + " in a " + shape_.to_string() + " polynomial");
        if (c.domain() != domain_) fail(ErrorKind::DomainMismatch, c.domain().name() + " coefficient in a " + domain_.name() + " polynomial");
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(k, c);
            return;
        }
        it->second = mat_add(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }

    Shape shape() const { return shape_; }
    DomainTag domain() const { return domain_; }
    const std::optional<PartitionType>& ptype() const { return ptype_; }
    /// The partition in effect, trivial when none was declared.
    PartitionType effective_ptype() const { return ptype_ ? *ptype_ : PartitionType(shape_); }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::optional<std::size_t> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first;
    }
    Matrix coeff(std::size_t k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Matrix::zero(shape_, domain_) : it->second;
    }
    /// Leading coefficient; the zero matrix for the zero polynomial.
    Matrix lead() const { return terms_.empty() ? Matrix::zero(shape_, domain_) : terms_.rbegin()->second; }

    friend bool operator==(const MatPoly&, const MatPoly&) = default;

private:
    void set_ptype(std::optional<PartitionType> p) {
        if (p && p->shape() != shape_)
            fail(ErrorKind::ShapeMismatch, "partition for " + p->shape().to_string() + " on " + shape_.to_string() + " coefficients");
        if (p && p->trivial()) p.reset();
        ptype_ = std::move(p);
    }

    Shape shape_;
    DomainTag domain_;
    std::optional<PartitionType> ptype_;
    Terms terms_;
};

inline std::optional<std::size_t> poly_degree(const MatPoly& p) { return p.degree(); }

inline void require_compatible(const MatPoly& p, const MatPoly& q) {
    require_same_type(p.effective_ptype(), q.effective_ptype());
    if (p.domain() != q.domain()) fail(ErrorKind::DomainMismatch, p.domain().name() + " vs " + q.domain().name());
}

inline MatPoly poly_add(const MatPoly& p, const MatPoly& q) {
    require_compatible(p, q);
    MatPoly r = p;
    for (const auto& [k, c] : q.terms()) r.add_term(k, c);
    return r;
}

inline MatPoly poly_neg(const MatPoly& p) {
    MatPoly r(p.shape(), p.domain(), p.ptype());
    for (const auto& [k, c] : p.terms()) r.add_term(k, mat_neg(c));
    return r;
}

inline MatPoly poly_sub(const MatPoly& p, const MatPoly& q) { return poly_add(p, poly_neg(q)); }

/// Cauchy product with the natural product on coefficients.
inline MatPoly poly_mul_natural(const MatPoly& p, const MatPoly& q) {
    require_compatible(p, q);
    MatPoly r(p.shape(), p.domain(), p.ptype());
    for (const auto& [i, a] : p.terms())
        for (const auto& [j, b] : q.terms()) r.add_term(i + j, nproduct(a, b));
    return r;
}

/// Cauchy product with the usual matrix product; square, unpartitioned coefficients.
inline MatPoly poly_mul_usual(const MatPoly& p, const MatPoly& q) {
    if (p.shape().rows != p.shape().cols) fail(ErrorKind::NotSquare, "usual product needs square coefficients, got " + p.shape().to_string());
    if (p.shape() != q.shape()) fail(ErrorKind::ShapeMismatch, p.shape().to_string() + " vs " + q.shape().to_string());
    if (p.ptype() || q.ptype()) fail(ErrorKind::TypeMismatch, "usual product is defined on unpartitioned coefficients");
    if (p.domain() != q.domain()) fail(ErrorKind::DomainMismatch, p.domain().name() + " vs " + q.domain().name());
    MatPoly r(p.shape(), p.domain());
    for (const auto& [i, a] : p.terms())
        for (const auto& [j, b] : q.terms()) r.add_term(i + j, uproduct(a, b));
    return r;
}

inline MatPoly poly_derivative(const MatPoly& p) {
    MatPoly r(p.shape(), p.domain(), p.ptype());
    for (const auto& [k, c] : p.terms())
        if (k > 0) r.add_term(k - 1, scale(Scalar(p.domain(), BigRat(BigInt(k))), c));
    return r;
}

/// Formal antiderivative plus the constant C (zero when omitted).
inline MatPoly poly_integrate(const MatPoly& p, const std::optional<Matrix>& constant = std::nullopt) {
    MatPoly r(p.shape(), p.domain(), p.ptype());
    if (constant) {
        if (constant->shape() != p.shape()) fail(ErrorKind::ShapeMismatch, "constant " + constant->shape().to_string() + " vs " + p.shape().to_string());
        r.add_term(0, *constant);
    }
    const DomainTag d = p.domain();
    for (const auto& [k, c] : p.terms()) {
        const BigInt m = BigInt(k) + 1;
        std::vector<Scalar> e;
        e.reserve(c.shape().size());
        if (d.kind() == DomainKind::Mod) {
            const Scalar ms(d, BigRat(m));
            if (!is_unit(ms))
                fail(ErrorKind::NotClosed, "degree " + std::to_string(k) + " needs division by " + m.str() +
                                               ", which is not a unit in " + d.name());
            const Scalar inv = dom_inv(ms);
            for (const auto& x : c.entries()) e.push_back(dom_mul(x, inv));
        } else {
            for (std::size_t i = 0; i < c.shape().size(); ++i) {
                const BigRat q = c[i].value() / BigRat(m);
                if (d.is_integral() && boost::multiprecision::denominator(q) != 1)
                    fail(ErrorKind::NotClosed, "degree " + std::to_string(k) + " entry " + std::to_string(i + 1) +
                                                   ": " + c[i].to_string() + "/" + m.str() + " is not in " + d.name());
                e.emplace_back(d, q);
            }
        }
        r.add_term(k + 1, Matrix(c.shape(), d, std::move(e)));
    }
    return r;
}

/// t x_n p where t is the entrywise inverse of the leading coefficient.
inline MatPoly monicize_natural(const MatPoly& p) {
    if (p.is_zero()) fail(ErrorKind::NotMonicizable, "the zero polynomial has no leading coefficient");
    const Matrix lead = p.lead();
    for (std::size_t i = 0; i < lead.shape().size(); ++i) {
        if (lead[i].is_zero())
            fail(ErrorKind::NotMonicizable, "leading coefficient has a zero at entry " + std::to_string(i + 1));
        if (!is_unit(lead[i]))
            fail(ErrorKind::NotMonicizable, "leading entry " + lead[i].to_string() + " is not a unit in " + p.domain().name());
    }
    const Matrix t = natural_inverse(lead);
    MatPoly r(p.shape(), p.domain(), p.ptype());
    for (const auto& [k, c] : p.terms()) r.add_term(k, nproduct(t, c));
    return r;
}

/// Gauss-Jordan inverse under the usual product. Computed over Q; over Z the
/// inverse must itself be integral.
inline std::optional<Matrix> usual_inverse(const Matrix& a) {
    if (a.rows() != a.cols()) fail(ErrorKind::NotSquare, "inverse of a non-square " + a.shape().to_string() + " matrix");
    const auto k = a.domain().kind();
    if (k != DomainKind::Rat && k != DomainKind::Int)
        fail(ErrorKind::UnsupportedDomain, "usual inverse is supported over Q and Z, got " + a.domain().name());
    const std::size_t n = a.rows();
    std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j).value();
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        const BigRat inv = BigRat(1) / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const BigRat f = m[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<Scalar> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (k == DomainKind::Int && boost::multiprecision::denominator(m[i][n + j]) != 1) return std::nullopt;
            e.emplace_back(a.domain(), m[i][n + j]);
        }
    return Matrix(a.shape(), a.domain(), std::move(e));
}

/// A^{-1} p where A is the leading coefficient; the result has lead I.
inline MatPoly monicize_usual(const MatPoly& p) {
    if (p.shape().rows != p.shape().cols) fail(ErrorKind::NotSquare, "usual monicization needs square coefficients");
    if (p.is_zero()) fail(ErrorKind::SingularLead, "the zero polynomial has no leading coefficient");
    const auto inv = usual_inverse(p.lead());
    if (!inv) fail(ErrorKind::SingularLead, "leading coefficient is not invertible in " + p.domain().name());
    MatPoly r(p.shape(), p.domain(), p.ptype());
    for (const auto& [k, c] : p.terms()) r.add_term(k, uproduct(*inv, c));
    return r;
}

/// Inverse under the natural product. Over a domain without zero divisors
/// the entry polynomials of p x_n q have degrees that add, so only constants
/// whose entries are all units qualify.
inline std::optional<MatPoly> poly_natural_inverse(const MatPoly& p) {
    const DomainTag d = p.domain();
    if (d.kind() == DomainKind::Mod && !is_prime(BigInt(d.modulus())))
        fail(ErrorKind::UnsupportedDomain, "unit test over " + d.name() + " needs a prime modulus");
    if (p.is_zero() || *p.degree() != 0) return std::nullopt;
    const Matrix c = p.coeff(0);
    if (!is_invertible_natural(c)) return std::nullopt;
    return MatPoly::constant(natural_inverse(c), p.ptype());
}

inline bool poly_is_idempotent_natural(const MatPoly& p) { return poly_mul_natural(p, p) == p; }

/// Sum of a_i x_n X^{x_n i}.
inline Matrix poly_evaluate_natural(const MatPoly& p, const Matrix& x) {
    if (x.shape() != p.shape()) fail(ErrorKind::ShapeMismatch, x.shape().to_string() + " vs " + p.shape().to_string());
    if (x.domain() != p.domain()) fail(ErrorKind::DomainMismatch, x.domain().name() + " vs " + p.domain().name());
    Matrix acc = Matrix::zero(p.shape(), p.domain());
    Matrix pw = Matrix::ones(p.shape(), p.domain());
    std::size_t at = 0;
    for (const auto& [k, c] : p.terms()) {
        for (; at < k; ++at) pw = nproduct(pw, x);
        acc = mat_add(acc, nproduct(c, pw));
    }
    return acc;
}

/// Result of componentwise equation solving.
struct RootSet {
    /// Aligned roots; the all-plus root comes first.
    std::vector<Matrix> roots;
    /// Set when roots is empty.
    std::optional<ErrorKind> reason;
    std::optional<std::size_t> component;
    /// True when independent per-component sign choices give further roots
    /// that are not listed.
    bool more_sign_combinations = false;
};

namespace detail {

inline void require_nonzero_lead(const Matrix& a) {
    for (std::size_t i = 0; i < a.shape().size(); ++i)
        if (a[i].is_zero()) fail(ErrorKind::ZeroLead, "leading coefficient is 0 at entry " + std::to_string(i + 1));
}

inline void require_solvable_domain(DomainTag d) {
    if (d.kind() != DomainKind::Rat && d.kind() != DomainKind::Int)
        fail(ErrorKind::UnsupportedDomain, "componentwise solving is supported over Q and Z, got " + d.name());
}

inline RootSet aligned_pair(const Matrix& plus, const Matrix& minus, std::size_t varying) {
    RootSet rs;
    rs.roots.push_back(plus);
    if (minus != plus) rs.roots.push_back(minus);
    rs.more_sign_combinations = varying >= 2;
    return rs;
}

} // namespace detail

/// Solves a x_n x^{x_n k} = c componentwise.
inline RootSet solve_binomial(const Matrix& a, const Matrix& c, unsigned k) {
    require_same_shape(a, c);
    detail::require_solvable_domain(a.domain());
    if (k == 0) fail(ErrorKind::InvalidArgument, "exponent must be >= 1");
    detail::require_nonzero_lead(a);
    const DomainTag d = a.domain();
    std::vector<Scalar> plus, minus;
    std::size_t varying = 0;
    for (std::size_t i = 0; i < a.shape().size(); ++i) {
        const BigRat r = c[i].value() / a[i].value();
        RootSet none;
        none.reason = ErrorKind::NoRationalRoot;
        none.component = i;
        if (d.is_integral() && boost::multiprecision::denominator(r) != 1) return none;
        const auto root = kth_root(Scalar(d, r), k);
        if (!root) return none;
        plus.push_back(*root);
        minus.push_back(k % 2 == 0 ? dom_neg(*root) : *root);
        if (k % 2 == 0 && !root->is_zero()) ++varying;
    }
    return detail::aligned_pair(Matrix(a.shape(), d, std::move(plus)), Matrix(a.shape(), d, std::move(minus)), varying);
}

/// Solves a x_n x^2 + b x_n x + c = 0 componentwise with aligned signs.
inline RootSet solve_quadratic(const Matrix& a, const Matrix& b, const Matrix& c) {
    require_same_shape(a, b);
    require_same_shape(a, c);
    if (a.domain().kind() != DomainKind::Rat)
        fail(ErrorKind::UnsupportedDomain, "quadratic solving is supported over Q, got " + a.domain().name());
    detail::require_nonzero_lead(a);
    const DomainTag d = a.domain();
    std::vector<Scalar> plus, minus;
    std::size_t varying = 0;
    for (std::size_t i = 0; i < a.shape().size(); ++i) {
        const BigRat disc = b[i].value() * b[i].value() - 4 * a[i].value() * c[i].value();
        const auto s = kth_root(Scalar(d, disc), 2);
        if (!s)
            fail(ErrorKind::NoRationalRoot, "component " + std::to_string(i + 1) + ": discriminant " + disc.str() +
                                                " is not a rational square");
        const BigRat two_a = 2 * a[i].value();
        plus.emplace_back(d, (-b[i].value() + s->value()) / two_a);
        minus.emplace_back(d, (-b[i].value() - s->value()) / two_a);
        if (!s->is_zero()) ++varying;
    }
    return detail::aligned_pair(Matrix(a.shape(), d, std::move(plus)), Matrix(a.shape(), d, std::move(minus)), varying);
}

} // namespace natprod
