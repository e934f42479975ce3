#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact matrices with the natural (entrywise) product.
 */

#include <natprod/scalar.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace natprod {

struct Shape {
    std::size_t rows = 1;
    std::size_t cols = 1;

    std::size_t size() const { return rows * cols; }
    std::string to_string() const { return std::to_string(rows) + "x" + std::to_string(cols); }

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;
};

inline void check_shape(Shape s) {
    if (s.rows == 0 || s.cols == 0) fail(ErrorKind::InvalidArgument, "shape must be at least 1x1, got " + s.to_string());
}

class Matrix {
public:
    Matrix() : Matrix(Shape{1, 1}, DomainTag::rationals()) {}

    /// Zero matrix.
    Matrix(Shape s, DomainTag d) : shape_(s), domain_(d) {
        check_shape(s);
        entries_.assign(s.size(), Scalar::zero(d));
    }

    Matrix(Shape s, DomainTag d, std::vector<Scalar> entries) : shape_(s), domain_(d), entries_(std::move(entries)) {
        check_shape(s);
        if (entries_.size() != s.size())
            fail(ErrorKind::ShapeMismatch, "expected " + std::to_string(s.size()) + " entries for " + s.to_string() +
                                               ", got " + std::to_string(entries_.size()));
        for (const auto& e : entries_)
            if (e.domain() != d) fail(ErrorKind::DomainMismatch, "entry in " + e.domain().name() + ", matrix in " + d.name());
    }

    /// Convenience for tests and fixed data: row-major list of rationals.
    static Matrix from_rows(const std::vector<std::vector<BigRat>>& rows, DomainTag d = DomainTag::rationals()) {
        if (rows.empty() || rows.front().empty()) fail(ErrorKind::InvalidArgument, "empty matrix");
        Shape s{rows.size(), rows.front().size()};
        std::vector<Scalar> e;
        e.reserve(s.size());
        for (const auto& r : rows) {
            if (r.size() != s.cols) fail(ErrorKind::ShapeMismatch, "ragged rows");
            for (const auto& v : r) e.emplace_back(d, v);
        }
        return Matrix(s, d, std::move(e));
    }

    static Matrix zero(Shape s, DomainTag d) { return Matrix(s, d); }
    /// All-ones matrix J, the identity of the natural product.
    static Matrix ones(Shape s, DomainTag d) { return filled(s, d, Scalar::one(d)); }
    static Matrix filled(Shape s, DomainTag d, const Scalar& v) { return Matrix(s, d, std::vector<Scalar>(s.size(), v)); }
    static Matrix identity(std::size_t n, DomainTag d) {
        Matrix m(Shape{n, n}, d);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(d);
        return m;
    }
    static Matrix diagonal(const std::vector<Scalar>& diag) {
        if (diag.empty()) fail(ErrorKind::InvalidArgument, "empty diagonal");
        const auto d = diag.front().domain();
        Matrix m(Shape{diag.size(), diag.size()}, d);
        for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
        return m;
    }

    Shape shape() const { return shape_; }
    std::size_t rows() const { return shape_.rows; }
    std::size_t cols() const { return shape_.cols; }
    DomainTag domain() const { return domain_; }
    const std::vector<Scalar>& entries() const { return entries_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * shape_.cols + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * shape_.cols + c]; }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }

    /// Replace an entry; the value must already live in this matrix's domain.
    void set(std::size_t r, std::size_t c, Scalar v) {
        if (v.domain() != domain_) fail(ErrorKind::DomainMismatch, "entry in " + v.domain().name());
        at(r, c) = std::move(v);
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    /// Same values reinterpreted in another domain (fails if a value does not fit).
    Matrix in_domain(DomainTag d) const {
        std::vector<Scalar> e;
        e.reserve(entries_.size());
        for (const auto& x : entries_) e.emplace_back(d, x.value());
        return Matrix(shape_, d, std::move(e));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.shape_ == b.shape_ && a.domain_ == b.domain_ && a.entries_ == b.entries_;
    }

    /// Canonical order: shape, domain, then row-major lexicographic entries.
    friend bool operator<(const Matrix& a, const Matrix& b) {
        if (a.shape_ != b.shape_) return a.shape_ < b.shape_;
        if (a.domain_ != b.domain_) return a.domain_ < b.domain_;
        return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                                            [](const Scalar& x, const Scalar& y) { return x.value() < y.value(); });
    }

private:
    Shape shape_;
    DomainTag domain_;
    std::vector<Scalar> entries_;
};

class SupportMask {
public:
    SupportMask() = default;
    explicit SupportMask(Shape s) : shape_(s), bits_(s.size(), 0) { check_shape(s); }
    SupportMask(Shape s, std::vector<std::uint8_t> bits) : shape_(s), bits_(std::move(bits)) {
        check_shape(s);
        if (bits_.size() != s.size()) fail(ErrorKind::ShapeMismatch, "mask bit count does not match " + s.to_string());
        for (auto& b : bits_)
            if (b > 1) fail(ErrorKind::InvalidArgument, "mask bits must be 0 or 1");
    }
    static SupportMask full(Shape s) { return SupportMask(s, std::vector<std::uint8_t>(s.size(), 1)); }

    /// Mask number k in row-major lexicographic order: position 0 is the most
    /// significant bit.
    static SupportMask from_index(Shape s, std::uint64_t k) {
        SupportMask m(s);
        const std::size_t n = s.size();
        for (std::size_t i = 0; i < n; ++i) m.bits_[i] = static_cast<std::uint8_t>((k >> (n - 1 - i)) & 1u);
        return m;
    }
    std::uint64_t index() const {
        std::uint64_t k = 0;
        for (auto b : bits_) k = (k << 1) | b;
        return k;
    }

    Shape shape() const { return shape_; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    bool test(std::size_t r, std::size_t c) const { return bits_[r * shape_.cols + c] != 0; }
    bool test(std::size_t i) const { return bits_[i] != 0; }
    void assign(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (auto b : bits_) n += b;
        return n;
    }

    SupportMask complement() const {
        SupportMask m(shape_);
        for (std::size_t i = 0; i < bits_.size(); ++i) m.bits_[i] = bits_[i] ? 0 : 1;
        return m;
    }

    bool subset_of(const SupportMask& o) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] && !o.bits_[i]) return false;
        return true;
    }

    /// The {0,1} matrix with this pattern.
    Matrix to_matrix(DomainTag d) const {
        std::vector<Scalar> e;
        e.reserve(bits_.size());
        for (auto b : bits_) e.emplace_back(d, static_cast<long long>(b));
        return Matrix(shape_, d, std::move(e));
    }

    friend bool operator==(const SupportMask&, const SupportMask&) = default;
    friend bool operator<(const SupportMask& a, const SupportMask& b) {
        if (a.shape_ != b.shape_) return a.shape_ < b.shape_;
        return a.bits_ < b.bits_;
    }

private:
    Shape shape_;
    std::vector<std::uint8_t> bits_;
};

inline void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.shape() != b.shape())
        fail(ErrorKind::ShapeMismatch, a.shape().to_string() + " vs " + b.shape().to_string());
    if (a.domain() != b.domain())
        fail(ErrorKind::DomainMismatch, a.domain().name() + " vs " + b.domain().name());
}

namespace detail {

template <class F>
Matrix zip_entries(const Matrix& a, const Matrix& b, F f) {
    require_same_shape(a, b);
    std::vector<Scalar> e;
    e.reserve(a.shape().size());
    for (std::size_t i = 0; i < a.shape().size(); ++i) e.push_back(f(a[i], b[i]));
    return Matrix(a.shape(), a.domain(), std::move(e));
}

template <class F>
Matrix map_entries(const Matrix& a, F f) {
    std::vector<Scalar> e;
    e.reserve(a.shape().size());
    for (const auto& x : a.entries()) e.push_back(f(x));
    return Matrix(a.shape(), a.domain(), std::move(e));
}

} // namespace detail

inline Matrix mat_add(const Matrix& a, const Matrix& b) { return detail::zip_entries(a, b, dom_add); }
inline Matrix mat_sub(const Matrix& a, const Matrix& b) { return detail::zip_entries(a, b, dom_sub); }
inline Matrix mat_neg(const Matrix& a) { return detail::map_entries(a, dom_neg); }

/// Natural product: (a_ij * b_ij).
inline Matrix nproduct(const Matrix& a, const Matrix& b) { return detail::zip_entries(a, b, dom_mul); }

/// Multiply every entry by a scalar of the same domain.
inline Matrix scale(const Scalar& s, const Matrix& a) {
    return detail::map_entries(a, [&](const Scalar& x) { return dom_mul(s, x); });
}

/// A^{x_n k}, with A^0 = J.
inline Matrix npower(const Matrix& a, unsigned k) {
    Matrix r = Matrix::ones(a.shape(), a.domain());
    for (unsigned i = 0; i < k; ++i) r = nproduct(r, a);
    return r;
}

/// Usual (row-by-column) matrix product.
inline Matrix uproduct(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        fail(ErrorKind::ShapeMismatch, "cannot multiply " + a.shape().to_string() + " by " + b.shape().to_string());
    if (a.domain() != b.domain()) fail(ErrorKind::DomainMismatch, a.domain().name() + " vs " + b.domain().name());
    Matrix c(Shape{a.rows(), b.cols()}, a.domain());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            BigRat acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k).value() * b.at(k, j).value();
            c.at(i, j) = Scalar(a.domain(), acc);
        }
    return c;
}

inline bool is_invertible_natural(const Matrix& a) {
    for (const auto& x : a.entries())
        if (!is_unit(x)) return false;
    return true;
}

/// Entrywise inverse B with A x_n B = J.
inline Matrix natural_inverse(const Matrix& a) {
    for (std::size_t i = 0; i < a.shape().size(); ++i)
        if (!is_unit(a[i]))
            fail(ErrorKind::NotInvertible, "entry (" + std::to_string(i / a.cols() + 1) + "," +
                                               std::to_string(i % a.cols() + 1) + ") = " + a[i].to_string() +
                                               " is not a unit in " + a.domain().name());
    return detail::map_entries(a, dom_inv);
}

inline bool is_idempotent(const Matrix& a) { return nproduct(a, a) == a; }

inline constexpr unsigned default_enumeration_bits = 24;

/// Number of {0,1} matrices of the given shape, as an exact integer.
inline BigInt trivial_idempotent_count(Shape s) { return BigInt(1) << s.size(); }

/// Every {0,1} mask of the shape, in row-major lexicographic order.
inline std::vector<SupportMask> trivial_idempotents(Shape s, unsigned bound_bits = default_enumeration_bits) {
    check_shape(s);
    if (s.size() > bound_bits)
        fail(ErrorKind::TooLarge, "2^" + std::to_string(s.size()) + " masks exceed the enumeration bound of 2^" +
                                      std::to_string(bound_bits));
    const std::uint64_t n = std::uint64_t{1} << s.size();
    std::vector<SupportMask> out;
    out.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) out.push_back(SupportMask::from_index(s, k));
    return out;
}

inline SupportMask support(const Matrix& a) {
    SupportMask m(a.shape());
    for (std::size_t i = 0; i < a.shape().size(); ++i) m.assign(i, !a[i].is_zero());
    return m;
}

inline SupportMask main_complement(const Matrix& a) { return support(a).complement(); }

inline bool is_orthogonal(const Matrix& a, const Matrix& b) { return nproduct(a, b).is_zero(); }

/// Quotient C with a_ij * c_ij = b_ij over Z, or nullopt if some division is inexact.
inline std::optional<Matrix> divides(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    if (a.domain().kind() != DomainKind::Int)
        fail(ErrorKind::UnsupportedDomain, "divisibility is defined over Z, got " + a.domain().name());
    std::vector<Scalar> q;
    q.reserve(a.shape().size());
    for (std::size_t i = 0; i < a.shape().size(); ++i) {
        if (a[i].is_zero())
            fail(ErrorKind::ZeroDivisorEntry, "entry " + std::to_string(i + 1) + " of the divisor is 0");
        const BigInt n = b[i].numerator(), d = a[i].numerator();
        if (n % d != 0) return std::nullopt;
        q.emplace_back(a.domain(), BigRat(n / d));
    }
    return Matrix(a.shape(), a.domain(), std::move(q));
}

inline bool is_prime_row(const Matrix& a) {
    if (a.rows() != 1 || a.domain().kind() != DomainKind::Int) return false;
    for (const auto& x : a.entries())
        if (!is_prime(x.numerator())) return false;
    return true;
}

/// The {0,1} matrix on the zero set of A, or nullopt when A has full support.
inline std::optional<Matrix> zero_divisor_witness(const Matrix& a) {
    const SupportMask z = main_complement(a);
    if (z.popcount() == 0) return std::nullopt;
    return z.to_matrix(a.domain());
}

} // namespace natprod
