#pragma once

/**
 * @file supermatrix.hpp
 * @brief Partitioned matrices. Binary operations require the same type of
 * partition: identical shape and identical row and column cut sets.
 */

#include <natprod/matrix.hpp>

#include <set>

namespace natprod {

/// Cut k sits between row (or column) k and k+1, 1 <= k < dimension.
class PartitionType {
public:
    PartitionType() = default;
    explicit PartitionType(Shape s) : shape_(s) { check_shape(s); }
    PartitionType(Shape s, std::set<std::size_t> row_cuts, std::set<std::size_t> col_cuts)
        : shape_(s), row_cuts_(std::move(row_cuts)), col_cuts_(std::move(col_cuts)) {
        check_shape(s);
        for (auto k : row_cuts_)
            if (k < 1 || k >= s.rows) fail(ErrorKind::InvalidArgument, "row cut " + std::to_string(k) + " outside 1.." + std::to_string(s.rows - 1));
        for (auto k : col_cuts_)
            if (k < 1 || k >= s.cols) fail(ErrorKind::InvalidArgument, "column cut " + std::to_string(k) + " outside 1.." + std::to_string(s.cols - 1));
    }

    Shape shape() const { return shape_; }
    const std::set<std::size_t>& row_cuts() const { return row_cuts_; }
    const std::set<std::size_t>& col_cuts() const { return col_cuts_; }
    bool trivial() const { return row_cuts_.empty() && col_cuts_.empty(); }

    std::string to_string() const {
        auto list = [](const std::set<std::size_t>& s) {
            std::string out = "{";
            for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
            return out + "}";
        };
        return shape_.to_string() + " rows" + list(row_cuts_) + " cols" + list(col_cuts_);
    }

    friend bool operator==(const PartitionType&, const PartitionType&) = default;
    friend auto operator<=>(const PartitionType&, const PartitionType&) = default;

private:
    Shape shape_;
    std::set<std::size_t> row_cuts_;
    std::set<std::size_t> col_cuts_;
};

class SuperMatrix {
public:
    SuperMatrix() = default;
    /// Unpartitioned view of a plain matrix.
    explicit SuperMatrix(Matrix base) : base_(std::move(base)), ptype_(base_.shape()) {}
    SuperMatrix(Matrix base, PartitionType p) : base_(std::move(base)), ptype_(std::move(p)) {
        if (ptype_.shape() != base_.shape())
            fail(ErrorKind::ShapeMismatch, "partition for " + ptype_.shape().to_string() + " on a " +
                                               base_.shape().to_string() + " matrix");
    }

    const Matrix& base() const { return base_; }
    const PartitionType& ptype() const { return ptype_; }
    Shape shape() const { return base_.shape(); }
    DomainTag domain() const { return base_.domain(); }

    friend bool operator==(const SuperMatrix&, const SuperMatrix&) = default;

private:
    Matrix base_;
    PartitionType ptype_;
};

inline bool same_type(const SuperMatrix& s, const SuperMatrix& t) {
    return s.domain() == t.domain() && s.ptype() == t.ptype();
}

/// ShapeMismatch when shapes differ, TypeMismatch when only the cuts differ.
inline void require_same_type(const PartitionType& a, const PartitionType& b) {
    if (a.shape() != b.shape())
        fail(ErrorKind::ShapeMismatch, a.shape().to_string() + " vs " + b.shape().to_string());
    if (a != b) fail(ErrorKind::TypeMismatch, "partition " + a.to_string() + " vs " + b.to_string());
}

inline void require_same_type(const SuperMatrix& s, const SuperMatrix& t) {
    require_same_type(s.ptype(), t.ptype());
    if (s.domain() != t.domain()) fail(ErrorKind::DomainMismatch, s.domain().name() + " vs " + t.domain().name());
}

inline SuperMatrix super_add(const SuperMatrix& s, const SuperMatrix& t) {
    require_same_type(s, t);
    return SuperMatrix(mat_add(s.base(), t.base()), s.ptype());
}

inline SuperMatrix super_sub(const SuperMatrix& s, const SuperMatrix& t) {
    require_same_type(s, t);
    return SuperMatrix(mat_sub(s.base(), t.base()), s.ptype());
}

inline SuperMatrix super_nproduct(const SuperMatrix& s, const SuperMatrix& t) {
    require_same_type(s, t);
    return SuperMatrix(nproduct(s.base(), t.base()), s.ptype());
}

inline SuperMatrix super_inverse(const SuperMatrix& s) { return SuperMatrix(natural_inverse(s.base()), s.ptype()); }

inline SuperMatrix super_ones(const PartitionType& p, DomainTag d) { return SuperMatrix(Matrix::ones(p.shape(), d), p); }
inline SuperMatrix super_zero(const PartitionType& p, DomainTag d) { return SuperMatrix(Matrix::zero(p.shape(), d), p); }

} // namespace natprod
