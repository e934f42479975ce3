#pragma once

/**
 * @file structures.hpp
 * @brief Finite structure analysis (closure, associativity, identity,
 * idempotents, zero divisors, ideals, Smarandache subgroups) and the lattice
 * of support-mask subspaces.
 */

#include <natprod/random.hpp>
#include <natprod/text.hpp>

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace natprod {

enum class CarrierOp { NaturalProduct, Addition };

inline std::string to_string(CarrierOp op) { return op == CarrierOp::NaturalProduct ? "nprod" : "add"; }

inline constexpr unsigned carrier_enumeration_bits = 24;
inline constexpr std::size_t exhaustive_assoc_limit = 64;
inline constexpr std::size_t default_assoc_samples = 20000;
/// Largest carrier for which a full operation table is built.
inline constexpr std::size_t table_limit = 1024;

class Carrier {
public:
    enum class Kind { AllMatrices, Masks, ExplicitList };

    /// Every matrix of the shape over Z_n.
    static Carrier all_matrices(Shape s, DomainTag d, CarrierOp op = CarrierOp::NaturalProduct) {
        check_shape(s);
        if (d.kind() != DomainKind::Mod) fail(ErrorKind::UnsupportedDomain, "AllMatrices needs a Z_n domain, got " + d.name());
        Carrier c(Kind::AllMatrices, s, d, op);
        const BigInt card = boost::multiprecision::pow(BigInt(d.modulus()), static_cast<unsigned>(s.size()));
        if (card > (BigInt(1) << carrier_enumeration_bits))
            fail(ErrorKind::TooLarge, card.str() + " matrices exceed the enumeration bound 2^" + std::to_string(carrier_enumeration_bits));
        return c;
    }

    /// The {0,1} matrices of the shape.
    static Carrier masks(Shape s, DomainTag d = DomainTag::nonneg_integers(), CarrierOp op = CarrierOp::NaturalProduct) {
        check_shape(s);
        if (s.size() > carrier_enumeration_bits)
            fail(ErrorKind::TooLarge, "2^" + std::to_string(s.size()) + " masks exceed the enumeration bound");
        return Carrier(Kind::Masks, s, d, op);
    }

    static Carrier explicit_list(std::vector<Matrix> elems, CarrierOp op = CarrierOp::NaturalProduct) {
        if (elems.empty()) fail(ErrorKind::InvalidArgument, "an explicit carrier needs at least one element");
        std::sort(elems.begin(), elems.end());
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (elems[i].shape() != elems[0].shape()) fail(ErrorKind::ShapeMismatch, "carrier members of different shapes");
            if (elems[i].domain() != elems[0].domain()) fail(ErrorKind::DomainMismatch, "carrier members of different domains");
            if (i > 0 && elems[i] == elems[i - 1]) fail(ErrorKind::InvalidArgument, "duplicate carrier member");
        }
        Carrier c(Kind::ExplicitList, elems[0].shape(), elems[0].domain(), op);
        c.list_ = std::move(elems);
        return c;
    }

    Kind kind() const { return kind_; }
    Shape shape() const { return shape_; }
    DomainTag domain() const { return domain_; }
    CarrierOp op() const { return op_; }

    std::size_t size() const {
        switch (kind_) {
        case Kind::AllMatrices: {
            std::size_t n = 1;
            for (std::size_t i = 0; i < shape_.size(); ++i) n *= domain_.modulus();
            return n;
        }
        case Kind::Masks: return std::size_t{1} << shape_.size();
        case Kind::ExplicitList: return list_.size();
        }
        return 0;
    }

    /// Members in canonical (row-major lexicographic) order.
    std::vector<Matrix> elements() const {
        if (kind_ == Kind::ExplicitList) return list_;
        const std::size_t n = size();
        std::vector<Matrix> out;
        out.reserve(n);
        if (kind_ == Kind::Masks) {
            for (std::size_t k = 0; k < n; ++k) out.push_back(SupportMask::from_index(shape_, k).to_matrix(domain_));
            return out;
        }
        const std::uint64_t base = domain_.modulus();
        std::vector<std::uint64_t> digits(shape_.size(), 0);
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Scalar> e;
            e.reserve(digits.size());
            for (auto v : digits) e.emplace_back(domain_, BigRat(BigInt(v)));
            out.emplace_back(shape_, domain_, std::move(e));
            for (std::size_t i = digits.size(); i-- > 0;) {
                if (++digits[i] < base) break;
                digits[i] = 0;
            }
        }
        return out;
    }

    bool contains(const Matrix& m) const {
        if (m.shape() != shape_ || m.domain() != domain_) return false;
        switch (kind_) {
        case Kind::AllMatrices: return true;
        case Kind::Masks:
            for (const auto& x : m.entries())
                if (!x.is_zero() && !x.is_one()) return false;
            return true;
        case Kind::ExplicitList: return std::binary_search(list_.begin(), list_.end(), m);
        }
        return false;
    }

    Matrix apply(const Matrix& a, const Matrix& b) const {
        return op_ == CarrierOp::NaturalProduct ? nproduct(a, b) : mat_add(a, b);
    }

    std::string describe() const {
        switch (kind_) {
        case Kind::AllMatrices: return "AllMatrices(" + shape_.to_string() + ", " + domain_.name() + ")";
        case Kind::Masks: return "Masks(" + shape_.to_string() + ", " + domain_.name() + ")";
        case Kind::ExplicitList: return "ExplicitList(" + std::to_string(list_.size()) + " x " + shape_.to_string() + ", " + domain_.name() + ")";
        }
        return "?";
    }

private:
    Carrier(Kind k, Shape s, DomainTag d, CarrierOp op) : kind_(k), shape_(s), domain_(d), op_(op) {}

    Kind kind_;
    Shape shape_;
    DomainTag domain_;
    CarrierOp op_;
    std::vector<Matrix> list_;
};

struct Subgroup {
    Matrix identity;
    std::vector<Matrix> elements;
};

struct StructureReport {
    std::string carrier;
    CarrierOp op = CarrierOp::NaturalProduct;
    std::size_t size = 0;

    bool closed = true;
    std::optional<std::pair<Matrix, Matrix>> closure_witness;

    bool associative = true;
    std::optional<std::array<Matrix, 3>> associativity_witness;
    /// Set when associativity was sampled rather than checked exhaustively.
    std::optional<std::size_t> associativity_samples;

    bool commutative = true;
    std::optional<std::pair<Matrix, Matrix>> commutativity_witness;

    std::optional<Matrix> identity;
    std::vector<Matrix> idempotents;
    /// Pairs a <= b of nonzero members with a x_n b = 0 (natural product only).
    std::vector<std::pair<Matrix, Matrix>> zero_divisor_pairs;
    std::vector<Subgroup> max_subgroups;
    std::optional<Subgroup> smarandache;
};

namespace detail {

/// Operation table over a canonical element list; -1 marks a product outside
/// the carrier.
class Table {
public:
    explicit Table(const Carrier& c) : elems_(checked_elements(c)) {
        const std::size_t n = elems_.size();
        table_.assign(n * n, -1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) table_[i * n + j] = index_of(c.apply(elems_[i], elems_[j]));
    }

    std::size_t size() const { return elems_.size(); }
    const Matrix& at(std::size_t i) const { return elems_[i]; }
    const std::vector<Matrix>& elements() const { return elems_; }
    long op(std::size_t i, std::size_t j) const { return table_[i * elems_.size() + j]; }

    long index_of(const Matrix& m) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), m);
        if (it == elems_.end() || !(*it == m)) return -1;
        return static_cast<long>(it - elems_.begin());
    }

private:
    static std::vector<Matrix> checked_elements(const Carrier& c) {
        if (c.size() > table_limit)
            fail(ErrorKind::TooLarge, std::to_string(c.size()) + " elements exceed the table limit of " + std::to_string(table_limit));
        return c.elements();
    }

    std::vector<Matrix> elems_;
    std::vector<long> table_;
};

inline std::vector<std::size_t> subgroup_at(const Table& t, std::size_t e) {
    const std::size_t n = t.size();
    std::vector<std::size_t> cand;
    for (std::size_t a = 0; a < n; ++a)
        if (t.op(a, e) == static_cast<long>(a) && t.op(e, a) == static_cast<long>(a)) cand.push_back(a);
    std::vector<std::size_t> g;
    for (auto a : cand) {
        for (auto b : cand)
            if (t.op(a, b) == static_cast<long>(e) && t.op(b, a) == static_cast<long>(e)) {
                g.push_back(a);
                break;
            }
    }
    return g;
}

inline bool closed_subset(const Table& t, const std::vector<std::size_t>& s) {
    std::set<std::size_t> in(s.begin(), s.end());
    for (auto a : s)
        for (auto b : s) {
            const long p = t.op(a, b);
            if (p < 0 || !in.count(static_cast<std::size_t>(p))) return false;
        }
    return true;
}

inline Subgroup to_subgroup(const Table& t, std::size_t e, const std::vector<std::size_t>& g) {
    Subgroup s{t.at(e), {}};
    for (auto i : g) s.elements.push_back(t.at(i));
    return s;
}

inline std::vector<std::pair<std::size_t, std::vector<std::size_t>>> maximal_subgroups(const Table& t) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> out;
    for (std::size_t e = 0; e < t.size(); ++e) {
        if (t.op(e, e) != static_cast<long>(e)) continue;
        auto g = subgroup_at(t, e);
        if (closed_subset(t, g)) out.emplace_back(e, std::move(g));
    }
    return out;
}

/// Largest proper maximal subgroup of size >= 2 (ties: first idempotent in
/// canonical order). When the carrier is itself a group, falls back to the
/// first proper cyclic subgroup of size >= 2.
inline std::optional<Subgroup> smarandache_witness(const Table& t) {
    const auto groups = maximal_subgroups(t);
    const std::size_t n = t.size();
    const std::pair<std::size_t, std::vector<std::size_t>>* best = nullptr;
    bool whole_group = false;
    for (const auto& g : groups) {
        if (g.second.size() == n) whole_group = true;
        if (g.second.size() < 2 || g.second.size() == n) continue;
        if (!best || g.second.size() > best->second.size()) best = &g;
    }
    if (best) return to_subgroup(t, best->first, best->second);
    if (!whole_group) return std::nullopt;
    std::size_t e = 0;
    for (const auto& g : groups)
        if (g.second.size() == n) e = g.first;
    for (std::size_t a = 0; a < n; ++a) {
        if (a == e) continue;
        std::vector<std::size_t> cyc{a};
        std::size_t cur = a;
        while (cur != e) {
            cur = static_cast<std::size_t>(t.op(cur, a));
            cyc.push_back(cur);
        }
        if (cyc.size() < n) {
            std::sort(cyc.begin(), cyc.end());
            return to_subgroup(t, e, cyc);
        }
    }
    return std::nullopt;
}

} // namespace detail

inline std::vector<Matrix> idempotents_in(const Carrier& c) {
    std::vector<Matrix> out;
    for (const auto& m : c.elements())
        if (c.apply(m, m) == m) out.push_back(m);
    return out;
}

inline StructureReport analyze(const Carrier& c, std::uint64_t seed = 0, std::size_t samples = default_assoc_samples) {
    const detail::Table t(c);
    const std::size_t n = t.size();
    StructureReport r;
    r.carrier = c.describe();
    r.op = c.op();
    r.size = n;

    for (std::size_t i = 0; i < n && r.closed; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (t.op(i, j) < 0) {
                r.closed = false;
                r.closure_witness = {t.at(i), t.at(j)};
                break;
            }

    auto product = [&](const Matrix& a, const Matrix& b) { return c.apply(a, b); };
    auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        bool ok;
        if (r.closed) {
            ok = t.op(static_cast<std::size_t>(t.op(i, j)), k) == t.op(i, static_cast<std::size_t>(t.op(j, k)));
        } else {
            ok = product(product(t.at(i), t.at(j)), t.at(k)) == product(t.at(i), product(t.at(j), t.at(k)));
        }
        if (!ok) {
            r.associative = false;
            r.associativity_witness = std::array<Matrix, 3>{t.at(i), t.at(j), t.at(k)};
        }
        return ok;
    };
    if (n <= exhaustive_assoc_limit) {
        for (std::size_t i = 0; i < n && r.associative; ++i)
            for (std::size_t j = 0; j < n && r.associative; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!check_triple(i, j, k)) break;
    } else {
        Rng rng(seed);
        r.associativity_samples = samples;
        for (std::size_t s = 0; s < samples; ++s) {
            const auto i = static_cast<std::size_t>(rng() % n), j = static_cast<std::size_t>(rng() % n),
                       k = static_cast<std::size_t>(rng() % n);
            if (!check_triple(i, j, k)) break;
        }
    }

    for (std::size_t i = 0; i < n && r.commutative; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool same = r.closed ? t.op(i, j) == t.op(j, i) : product(t.at(i), t.at(j)) == product(t.at(j), t.at(i));
            if (!same) {
                r.commutative = false;
                r.commutativity_witness = {t.at(i), t.at(j)};
                break;
            }
        }

    for (std::size_t e = 0; e < n && !r.identity; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = t.op(e, a) == static_cast<long>(a) && t.op(a, e) == static_cast<long>(a);
        if (ok) r.identity = t.at(e);
    }

    for (std::size_t e = 0; e < n; ++e)
        if (t.op(e, e) == static_cast<long>(e)) r.idempotents.push_back(t.at(e));

    if (c.op() == CarrierOp::NaturalProduct) {
        for (std::size_t i = 0; i < n; ++i) {
            if (t.at(i).is_zero()) continue;
            for (std::size_t j = i; j < n; ++j) {
                if (t.at(j).is_zero()) continue;
                const long p = t.op(i, j);
                const bool zero = p >= 0 ? t.at(static_cast<std::size_t>(p)).is_zero() : product(t.at(i), t.at(j)).is_zero();
                if (zero) r.zero_divisor_pairs.emplace_back(t.at(i), t.at(j));
            }
        }
    }

    if (r.closed && r.associative) {
        for (const auto& [e, g] : detail::maximal_subgroups(t)) r.max_subgroups.push_back(detail::to_subgroup(t, e, g));
        r.smarandache = detail::smarandache_witness(t);
    }
    return r;
}

/// A proper subgroup with at least two elements, or nullopt.
inline std::optional<Subgroup> is_smarandache(const Carrier& c) {
    const detail::Table t(c);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
            if (t.op(i, j) < 0) return std::nullopt;
    return detail::smarandache_witness(t);
}

/// Smallest ideal containing x: {x} together with x*s for every s in C.
/// Both carrier operations are associative, so (x s) t = x (s t) is already
/// in the set and one pass suffices.
inline std::vector<Matrix> ideal_generated(const Carrier& c, const Matrix& x) {
    if (!c.contains(x)) fail(ErrorKind::NotMember, render_matrix(x) + " is not in " + c.describe());
    std::set<Matrix> seen{x};
    for (const auto& s : c.elements()) {
        Matrix p = c.apply(x, s);
        if (!c.contains(p)) fail(ErrorKind::NotClosed, "carrier is not closed under its operation");
        seen.insert(std::move(p));
    }
    return {seen.begin(), seen.end()};
}

class MaskSubspace {
public:
    MaskSubspace(SupportMask mask, DomainTag d) : mask_(std::move(mask)), domain_(d) {}

    const SupportMask& mask() const { return mask_; }
    DomainTag domain() const { return domain_; }
    Shape shape() const { return mask_.shape(); }
    std::size_t dimension() const { return mask_.popcount(); }
    bool contains(const Matrix& m) const { return m.shape() == shape() && support(m).subset_of(mask_); }

    friend bool operator==(const MaskSubspace&, const MaskSubspace&) = default;

private:
    SupportMask mask_;
    DomainTag domain_;
};

/// {y : x x_n y = 0}.
inline MaskSubspace orthogonal_space(const Matrix& x) { return MaskSubspace(main_complement(x), x.domain()); }

inline MaskSubspace subspace_complement(const MaskSubspace& w) { return MaskSubspace(w.mask().complement(), w.domain()); }

enum class SumKind { Direct, PseudoDirect, NotSpanning };

inline std::string to_string(SumKind k) {
    switch (k) {
    case SumKind::Direct: return "Direct";
    case SumKind::PseudoDirect: return "PseudoDirect";
    case SumKind::NotSpanning: return "NotSpanning";
    }
    return "?";
}

struct SumOverlap {
    std::size_t first;
    std::size_t second;
    SupportMask common;
};

struct SumReport {
    SumKind kind = SumKind::NotSpanning;
    std::vector<SumOverlap> overlaps;
    /// Positions covered by no subspace.
    SupportMask gap;
};

inline SumReport check_sum(const std::vector<MaskSubspace>& parts) {
    if (parts.empty()) fail(ErrorKind::InvalidArgument, "check_sum needs at least one subspace");
    const Shape s = parts.front().shape();
    for (const auto& p : parts)
        if (p.shape() != s) fail(ErrorKind::ShapeMismatch, p.shape().to_string() + " vs " + s.to_string());
    SumReport rep;
    SupportMask covered(s);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t k = 0; k < s.size(); ++k)
            if (parts[i].mask().test(k)) covered.assign(k, true);
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            SupportMask common(s);
            for (std::size_t k = 0; k < s.size(); ++k) common.assign(k, parts[i].mask().test(k) && parts[j].mask().test(k));
            if (common.popcount() > 0) rep.overlaps.push_back({i, j, common});
        }
    }
    rep.gap = covered.complement();
    if (rep.gap.popcount() > 0)
        rep.kind = SumKind::NotSpanning;
    else
        rep.kind = rep.overlaps.empty() ? SumKind::Direct : SumKind::PseudoDirect;
    return rep;
}

struct ConeReport {
    std::size_t samples = 0;
    /// A strictly positive pair whose product has a zero entry.
    std::optional<std::pair<Matrix, Matrix>> positive_zero_divisor;
    /// A pair of cone elements with a + b = 0 but not both zero.
    std::optional<std::pair<Matrix, Matrix>> strictness_violation;
    /// Nonzero pair with a x_n b = 0, searched for when zeros are allowed.
    std::optional<std::pair<Matrix, Matrix>> zero_divisor;
};

/// Samples cone elements and checks the semifield laws: positive times
/// positive stays positive, and a + b = 0 forces a = b = 0.
inline ConeReport cone_positivity_check(Shape shape, DomainTag d, std::size_t samples, std::uint64_t seed = 0,
                                        bool allow_zeros = false) {
    if (!d.is_cone()) fail(ErrorKind::UnsupportedDomain, "cone check needs Z+ or Q+, got " + d.name());
    Rng rng(seed);
    ConeReport rep;
    rep.samples = samples;
    for (std::size_t i = 0; i < samples; ++i) {
        const Matrix a = random_matrix(rng, shape, d, !allow_zeros);
        const Matrix b = random_matrix(rng, shape, d, !allow_zeros);
        const Matrix p = nproduct(a, b);
        const SupportMask sp = support(p);
        if (!allow_zeros && sp.popcount() != shape.size() && !rep.positive_zero_divisor) rep.positive_zero_divisor = {a, b};
        if (mat_add(a, b).is_zero() && !(a.is_zero() && b.is_zero()) && !rep.strictness_violation)
            rep.strictness_violation = {a, b};
        if (allow_zeros && !rep.zero_divisor && !a.is_zero() && !b.is_zero() && p.is_zero()) rep.zero_divisor = {a, b};
        if (allow_zeros && !rep.zero_divisor && !a.is_zero())
            if (auto w = zero_divisor_witness(a)) rep.zero_divisor = {a, *w};
    }
    return rep;
}

} // namespace natprod
