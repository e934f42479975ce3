// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <natprod/natprod.hpp>

#include "../oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace natprod;

namespace {

const DomainTag Q = DomainTag::rationals();
const DomainTag Z = DomainTag::integers();
const DomainTag ZP = DomainTag::nonneg_integers();
const DomainTag QP = DomainTag::nonneg_rationals();

oracle::Flat flat(const Matrix& m) {
    oracle::Flat f;
    for (const auto& e : m.entries()) f.push_back(oracle::frac(e.to_string()));
    return f;
}

oracle::Poly flat(const MatPoly& p) {
    oracle::Poly r;
    for (const auto& [k, c] : p.terms()) r.emplace(k, flat(c));
    return r;
}

std::uint64_t bits(const Matrix& m) {
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < m.shape().size(); ++i)
        if (!m[i].is_zero()) b |= std::uint64_t{1} << i;
    return b;
}

Matrix mask_matrix(Shape s, std::uint64_t b, DomainTag d = ZP) {
    std::vector<Scalar> e;
    for (std::size_t i = 0; i < s.size(); ++i) e.emplace_back(d, static_cast<long long>((b >> i) & 1));
    return Matrix(s, d, std::move(e));
}

std::vector<Shape> shapes_up_to(std::size_t cells) {
    std::vector<Shape> out;
    for (std::size_t m = 1; m <= cells; ++m)
        for (std::size_t n = 1; m * n <= cells; ++n) out.push_back(Shape{m, n});
    return out;
}

template <class F>
bool throws_kind(ErrorKind k, F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind() == k;
    }
    return false;
}

// Each check returns an empty string on success, else the first problem.
using Check = std::function<std::string()>;

std::string worked_examples() {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult r = run_worked_examples();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (const auto* f = r.first_failure()) return f->name + ": " + f->detail;
    if (r.cases.size() < 25) return "only " + std::to_string(r.cases.size()) + " cases";
    if (secs >= 1.0) return "took " + std::to_string(secs) + " s";
    return {};
}

std::string algebraic_laws() {
    Rng rng(11);
    for (int i = 0; i < 10000; ++i) {
        const Shape s = random_shape(rng, 5, 5);
        const Matrix a = random_matrix(rng, s, Q), b = random_matrix(rng, s, Q), c = random_matrix(rng, s, Q);
        const Matrix ab = nproduct(a, b);
        if (flat(ab) != oracle::hadamard(flat(a), flat(b))) return "product disagrees with the oracle";
        if (ab != nproduct(b, a)) return "not commutative";
        if (nproduct(ab, c) != nproduct(a, nproduct(b, c))) return "not associative";
        if (nproduct(a, mat_add(b, c)) != mat_add(ab, nproduct(a, c))) return "not distributive";
        if (nproduct(a, Matrix::ones(s, Q)) != a) return "J is not the identity";
    }
    for (int i = 0; i < 1000; ++i) {
        const Shape s = random_shape(rng, 3, 3);
        const auto pt = random_partition(rng, s);
        const MatPoly p = random_poly(rng, s, Q, 3, pt), q = random_poly(rng, s, Q, 3, pt), r = random_poly(rng, s, Q, 3, pt);
        const MatPoly pq = poly_mul_natural(p, q);
        if (flat(pq) != oracle::poly_hadamard(flat(p), flat(q))) return "polynomial product disagrees with the oracle";
        if (flat(poly_add(p, q)) != oracle::poly_plus(flat(p), flat(q))) return "polynomial sum disagrees with the oracle";
        if (pq != poly_mul_natural(q, p) || poly_add(p, q) != poly_add(q, p)) return "polynomial ring not commutative";
        if (poly_mul_natural(pq, r) != poly_mul_natural(p, poly_mul_natural(q, r))) return "polynomial product not associative";
        if (poly_add(poly_add(p, q), r) != poly_add(p, poly_add(q, r))) return "polynomial sum not associative";
        if (poly_mul_natural(p, poly_add(q, r)) != poly_add(pq, poly_mul_natural(p, r))) return "polynomial ring not distributive";
        if (poly_mul_natural(p, MatPoly::constant(Matrix::ones(s, Q), pt)) != p) return "constant J is not the identity";
        if (!poly_add(p, poly_neg(p)).is_zero()) return "p + (-p) is not zero";
    }
    return {};
}

std::string diagonal_equivalence() {
    Rng rng(12);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
        std::vector<Scalar> da, db;
        for (std::size_t k = 0; k < n; ++k) {
            da.push_back(random_scalar(rng, Q));
            db.push_back(random_scalar(rng, Q));
        }
        const Matrix a = Matrix::diagonal(da), b = Matrix::diagonal(db);
        const Matrix u = uproduct(a, b);
        if (u != nproduct(a, b)) return "uproduct differs from nproduct for " + render_matrix(a) + ", " + render_matrix(b);
        if (flat(u) != oracle::matmul(flat(a), flat(b), n)) return "uproduct disagrees with the oracle";
    }
    const auto diag = [](std::vector<long long> v) {
        std::vector<Scalar> e;
        for (auto x : v) e.emplace_back(Z, x);
        return Matrix::diagonal(e);
    };
    const Matrix m = diag({7, 8, 2, 4}), n = diag({1, 2, 3, 4}), want = diag({7, 16, 6, 16});
    if (uproduct(m, n) != want || uproduct(n, m) != want || nproduct(m, n) != want) return "diag(7,16,6,16) not reproduced";
    return {};
}

std::string idempotent_census() {
    for (Shape s : shapes_up_to(12)) {
        const auto idem = idempotents_in(Carrier::masks(s));
        const std::uint64_t want = std::uint64_t{1} << s.size();
        if (idem.size() != want || oracle::mask_idempotent_count(s.size()) != want)
            return "Masks(" + s.to_string() + "): " + std::to_string(idem.size());
        if (trivial_idempotent_count(s) != BigInt(want)) return "count mode at " + s.to_string();
    }
    for (Shape s : shapes_up_to(4)) {
        const auto idem = idempotents_in(Carrier::all_matrices(s, DomainTag::mod(6)));
        std::uint64_t want = 1;
        for (std::size_t i = 0; i < s.size(); ++i) want *= 4;
        if (idem.size() != want || oracle::mod_idempotent_count(6, s.size()) != want)
            return "Z_6 " + s.to_string() + ": " + std::to_string(idem.size());
        for (const auto& x : idem)
            if (!is_idempotent(x)) return "listed non-idempotent " + render_matrix(x);
    }
    return {};
}

std::string ideal_orders() {
    for (std::size_t m = 1; m <= 2; ++m)
        for (std::size_t n = 1; n <= 4; ++n) {
            const Shape s{m, n};
            const Carrier c = Carrier::masks(s);
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << s.size()); ++b) {
                const Matrix x = mask_matrix(s, b);
                const auto ideal = ideal_generated(c, x);
                const std::size_t want = std::size_t{1} << support(x).popcount();
                if (ideal.size() != want || oracle::mask_ideal_size(b, s.size()) != want)
                    return "|<" + render_matrix(x) + ">| = " + std::to_string(ideal.size());
                for (const auto& y : ideal)
                    if ((bits(y) & ~b) != 0) return render_matrix(y) + " escapes the support of " + render_matrix(x);
            }
        }
    const Carrier c = Carrier::masks(Shape{2, 4});
    if (ideal_generated(c, parse_matrix("[1 1 1 1;0 0 0 0]", ZP)).size() != 16) return "order 16 figure";
    if (ideal_generated(c, parse_matrix("[1 1 1 0;1 1 1 0]", ZP)).size() != 64) return "order 2^6 figure";
    return {};
}

std::string inverse_characterization() {
    for (std::size_t m = 1; m <= 2; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            const Shape s{m, n};
            const PartitionType pt(s, m > 1 ? std::set<std::size_t>{1} : std::set<std::size_t>{},
                                   n > 1 ? std::set<std::size_t>{1} : std::set<std::size_t>{});
            std::vector<long long> v(s.size(), -3);
            while (true) {
                std::vector<Scalar> e;
                bool oracle_unit = true, all_pm1 = true;
                for (long long x : v) {
                    e.emplace_back(Z, x);
                    oracle_unit = oracle_unit && oracle::int_has_inverse(x);
                    all_pm1 = all_pm1 && (x == 1 || x == -1);
                }
                const Matrix a(s, Z, std::move(e));
                if (oracle_unit != all_pm1) return "oracle disagrees at " + render_matrix(a);
                if (is_invertible_natural(a) != all_pm1) return "is_invertible_natural wrong at " + render_matrix(a);
                if (all_pm1) {
                    if (nproduct(a, natural_inverse(a)) != Matrix::ones(s, Z)) return "A x_n A^-1 != J at " + render_matrix(a);
                    const SuperMatrix sa(a, pt);
                    const SuperMatrix si = super_inverse(sa);
                    if (si.ptype() != pt || super_nproduct(sa, si) != super_ones(pt, Z)) return "super inverse at " + render_matrix(a);
                } else {
                    if (!throws_kind(ErrorKind::NotInvertible, [&] { natural_inverse(a); })) return "no NotInvertible at " + render_matrix(a);
                    if (!throws_kind(ErrorKind::NotInvertible, [&] { super_inverse(SuperMatrix(a, pt)); }))
                        return "super inverse accepted " + render_matrix(a);
                }
                std::size_t i = 0;
                while (i < v.size() && ++v[i] == 4) v[i++] = -3;
                if (i == v.size()) break;
            }
        }
    return {};
}

std::string calculus_closure() {
    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Shape s = random_shape(rng, 3, 3);
        const MatPoly p = random_poly(rng, s, Z, 6);
        const MatPoly d = poly_derivative(p);
        if (d.domain() != Z) return "derivative changed domain";
        for (const auto& [k, c] : d.terms())
            for (const auto& e : c.entries())
                if (e.denominator() != 1) return "derivative left Z at " + render_poly(p);
        if (flat(d) != oracle::derivative(flat(p))) return "derivative disagrees with the oracle at " + render_poly(p);
    }
    const char* text = "[3 8 4 0] + [2 0 4 9] * x + [1 2 1 1] * x^2 + [1 0 1 1] * x^3 + [3 4 8 9] * x^5";
    if (!throws_kind(ErrorKind::NotClosed, [&] { poly_integrate(parse_poly(text, Z)); })) return "integral over Z did not raise NotClosed";
    const MatPoly qi = poly_integrate(parse_poly(text, Q));
    if (poly_derivative(qi) != parse_poly(text, Q)) return "integral over Q does not differentiate back";
    for (int i = 0; i < 1000; ++i) {
        const Shape s = random_shape(rng, 3, 3);
        const MatPoly p = random_poly(rng, s, Q, 6);
        if (poly_derivative(poly_integrate(p, random_matrix(rng, s, Q))) != p) return "round trip fails at " + render_poly(p);
    }
    return {};
}

std::string orthogonality() {
    for (Shape s : shapes_up_to(10)) {
        const std::uint64_t count = std::uint64_t{1} << s.size();
        std::vector<Matrix> masks;
        masks.reserve(count);
        for (std::uint64_t b = 0; b < count; ++b) masks.push_back(mask_matrix(s, b));
        for (std::uint64_t bx = 0; bx < count; ++bx) {
            const MaskSubspace w = orthogonal_space(masks[bx]);
            for (std::uint64_t by = 0; by < count; ++by) {
                const bool want = (bx & by) == 0;
                if (is_orthogonal(masks[bx], masks[by]) != want || w.contains(masks[by]) != want)
                    return "masks " + render_matrix(masks[bx]) + ", " + render_matrix(masks[by]);
            }
        }
    }
    Rng rng(14);
    const auto sparse = [&](Shape s) {
        Matrix m = random_matrix(rng, s, Q);
        for (std::size_t r = 0; r < s.rows; ++r)
            for (std::size_t c = 0; c < s.cols; ++c)
                if (uniform_int(rng, 0, 2) == 0) m.set(r, c, Scalar::zero(Q));
        return m;
    };
    for (int i = 0; i < 10000; ++i) {
        const Shape s = random_shape(rng, 4, 4);
        const Matrix x = sparse(s), y = sparse(s);
        const bool want = oracle::all_zero(oracle::hadamard(flat(x), flat(y)));
        if (is_orthogonal(x, y) != want || orthogonal_space(x).contains(y) != want)
            return "Q sample " + render_matrix(x) + ", " + render_matrix(y);
    }
    const auto member = [&](const MaskSubspace& w) {
        Matrix m = random_matrix(rng, w.shape(), Q);
        for (std::size_t i = 0; i < w.shape().size(); ++i)
            if (!w.mask().test(i)) m.set(i / w.shape().cols, i % w.shape().cols, Scalar::zero(Q));
        return m;
    };
    for (int i = 0; i < 1000; ++i) {
        const Shape s = random_shape(rng, 5, 5);
        const MaskSubspace w(random_mask(rng, s), Q);
        const MaskSubspace wc = subspace_complement(w);
        if (w.dimension() + wc.dimension() != s.size()) return "dimensions do not add up on " + s.to_string();
        const Matrix a = member(w), b = member(wc);
        if (!w.contains(a) || !wc.contains(b)) return "sampled member outside its subspace";
        if (!nproduct(a, b).is_zero() || !oracle::all_zero(oracle::hadamard(flat(a), flat(b))))
            return "cross product nonzero for " + render_matrix(a) + ", " + render_matrix(b);
    }
    return {};
}

std::string direct_sums() {
    const auto subspaces = [](std::vector<const char*> texts) {
        std::vector<MaskSubspace> out;
        std::vector<std::vector<int>> raw;
        for (const char* t : texts) {
            const Matrix m = parse_matrix(t, Q);
            out.emplace_back(support(m), Q);
            std::vector<int> r;
            for (const auto& e : m.entries()) r.push_back(e.is_zero() ? 0 : 1);
            raw.push_back(r);
        }
        return std::pair{out, raw};
    };
    auto [direct, direct_raw] = subspaces({"[1 1 0;0 0 0;0 0 1]", "[0 0 1;0 1 0;0 0 0]", "[0 0 0;1 0 1;0 1 0]", "[0 0 0;0 0 0;1 0 0]"});
    if (check_sum(direct).kind != SumKind::Direct || oracle::classify(direct_raw) != oracle::Sum::Direct) return "3x3 family is not Direct";
    direct.pop_back();
    direct_raw.pop_back();
    if (check_sum(direct).kind != SumKind::NotSpanning || oracle::classify(direct_raw) != oracle::Sum::NotSpanning)
        return "dropping a part did not give NotSpanning";
    const auto col = [](std::initializer_list<int> rows) {
        std::string t = "[";
        for (int r = 1; r <= 12; ++r) {
            bool on = false;
            for (int x : rows) on = on || x == r;
            t += (r > 1 ? ";" : "") + std::string(on ? "1" : "0");
        }
        return t + "]";
    };
    const std::string x1 = col({1, 2}), x2 = col({2, 3, 4}), x3 = col({3, 4, 5, 6}), x4 = col({6, 7, 8, 9, 10, 11, 12});
    const auto [pseudo, pseudo_raw] = subspaces({x1.c_str(), x2.c_str(), x3.c_str(), x4.c_str()});
    if (check_sum(pseudo).kind != SumKind::PseudoDirect || oracle::classify(pseudo_raw) != oracle::Sum::PseudoDirect)
        return "12x1 family is not PseudoDirect";
    return {};
}

std::string partition_contract() {
    Rng rng(15);
    int mismatched = 0;
    for (int i = 0; i < 10000; ++i) {
        const Shape s = random_shape(rng, 5, 5);
        const PartitionType p = random_partition(rng, s), q = random_partition(rng, s);
        const SuperMatrix a(random_matrix(rng, s, Q), p), b(random_matrix(rng, s, Q), p);
        if (super_add(a, b).base() != mat_add(a.base(), b.base()) || super_sub(a, b).base() != mat_sub(a.base(), b.base()) ||
            super_nproduct(a, b).base() != nproduct(a.base(), b.base()))
            return "flattening fails at " + render_super(a);
        if (super_add(a, b).ptype() != p || super_nproduct(a, b).ptype() != p) return "result lost its partition";
        if (p == q) continue;
        ++mismatched;
        const SuperMatrix c(b.base(), q);
        const MatPoly pa = MatPoly::constant(a.base(), p), pc = MatPoly::constant(c.base(), q);
        if (!throws_kind(ErrorKind::TypeMismatch, [&] { super_add(a, c); }) ||
            !throws_kind(ErrorKind::TypeMismatch, [&] { super_sub(a, c); }) ||
            !throws_kind(ErrorKind::TypeMismatch, [&] { super_nproduct(a, c); }) ||
            !throws_kind(ErrorKind::TypeMismatch, [&] { poly_add(pa, pc); }) ||
            !throws_kind(ErrorKind::TypeMismatch, [&] { poly_mul_natural(pa, pc); }))
            return "different cuts accepted: " + render_super(a) + " vs " + render_super(c);
        if (same_type(a, c)) return "same_type true for different cuts";
    }
    if (mismatched == 0) return "no mismatched pair sampled";
    return {};
}

std::string cone_semifield() {
    const ConeReport r = cone_positivity_check(Shape{1, 4}, QP, 10000, 16);
    if (r.positive_zero_divisor) return "zero divisor among positive samples";
    if (r.strictness_violation) return "additive strictness fails";
    for (int i = 0; i < 100; ++i) {
        const ConeReport rs = cone_positivity_check(Shape{3, 3}, QP, 100, static_cast<std::uint64_t>(i));
        if (rs.positive_zero_divisor || rs.strictness_violation) return "3x3 cone sample fails";
    }
    const ConeReport z = cone_positivity_check(Shape{1, 3}, ZP, 200, 17, true);
    if (!z.zero_divisor) return "no zero divisor exhibited with zeros allowed";
    const Matrix a = parse_matrix("[3 0 4]", ZP), b = parse_matrix("[0 7 0]", ZP);
    if (!nproduct(a, b).is_zero() || a.is_zero() || b.is_zero()) return "(3,0,4) x_n (0,7,0) is not a zero divisor pair";
    const auto w = zero_divisor_witness(a);
    if (!w || !nproduct(a, *w).is_zero()) return "no witness for (3,0,4)";
    return {};
}

std::string constant_units() {
    const std::vector<long long> vals{-1, 0, 1};
    for (std::size_t m = 1; m <= 2; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            const Shape s{m, n};
            const PartitionType pt(s, {}, n > 1 ? std::set<std::size_t>{n - 1} : std::set<std::size_t>{});
            std::vector<std::size_t> idx(s.size(), 0);
            while (true) {
                oracle::Flat f;
                std::vector<Scalar> e;
                for (auto i : idx) {
                    f.push_back(vals[i]);
                    e.emplace_back(Z, vals[i]);
                }
                const MatPoly p = MatPoly::constant(Matrix(s, Z, e), pt);
                // oracle: search every constant q over {-1,0,1} for p q = J, and square p directly
                bool unit = false;
                std::vector<std::size_t> jdx(s.size(), 0);
                while (!unit) {
                    oracle::Flat g;
                    for (auto j : jdx) g.push_back(vals[j]);
                    unit = oracle::hadamard(f, g) == oracle::Flat(s.size(), 1);
                    std::size_t j = 0;
                    while (j < jdx.size() && ++jdx[j] == 3) jdx[j++] = 0;
                    if (j == jdx.size()) break;
                }
                const bool idem = oracle::hadamard(f, f) == f;
                const auto inv = poly_natural_inverse(p);
                if (inv.has_value() != unit) return "unit test wrong at " + render_poly(p);
                if (inv && poly_mul_natural(p, *inv) != MatPoly::constant(Matrix::ones(s, Z), pt)) return "bad inverse at " + render_poly(p);
                if (poly_is_idempotent_natural(p) != idem) return "idempotent test wrong at " + render_poly(p);
                std::size_t i = 0;
                while (i < idx.size() && ++idx[i] == 3) idx[i++] = 0;
                if (i == idx.size()) break;
            }
        }
    Rng rng(18);
    int tested = 0;
    while (tested < 1000) {
        const Shape s = random_shape(rng, 3, 3);
        const MatPoly p = random_poly(rng, s, Q, 4);
        if (!p.degree() || *p.degree() < 1) continue;
        ++tested;
        const oracle::Poly sq = oracle::poly_hadamard(flat(p), flat(p));
        const oracle::Poly j{{0, oracle::Flat(s.size(), 1)}};
        if (sq == flat(p) || sq == j) return "oracle square is p or J at " + render_poly(p);
        if (poly_natural_inverse(p) || poly_is_idempotent_natural(p)) return "degree >= 1 unit or idempotent at " + render_poly(p);
    }
    return {};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, Check>> criteria{
        {"worked-example regression", worked_examples},
        {"algebraic laws of the natural product", algebraic_laws},
        {"diagonal matrices: usual product equals natural product", diagonal_equivalence},
        {"idempotent censuses", idempotent_census},
        {"ideal order is 2^popcount", ideal_orders},
        {"natural inverse exists iff entries are +-1", inverse_characterization},
        {"calculus closure", calculus_closure},
        {"orthogonal spaces", orthogonality},
        {"direct sum classifier", direct_sums},
        {"partition contract", partition_contract},
        {"cone semifield properties", cone_semifield},
        {"polynomial units and idempotents are constant", constant_units},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = criteria[i].second();
        } catch (const std::exception& e) {
            detail = std::string("unexpected error: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (detail.empty() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << " (" << static_cast<long>(secs * 1000) << " ms)\n";
        failed += !detail.empty();
    }
    std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
