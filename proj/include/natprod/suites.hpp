#pragma once

/**
 * @file suites.hpp
 * @brief Built-in verification suites: worked examples, sampled algebraic
 * laws, and counting checks.
 */

#include <natprod/structures.hpp>
#include <natprod/text.hpp>

#include <functional>
#include <string>
#include <vector>

namespace natprod {

struct CaseResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseResult> cases;

    bool passed() const {
        for (const auto& c : cases)
            if (!c.passed) return false;
        return !cases.empty();
    }
    const CaseResult* first_failure() const {
        for (const auto& c : cases)
            if (!c.passed) return &c;
        return nullptr;
    }
};

namespace detail {

/// Each check returns an empty string on success or a description of the
/// first difference.
using Check = std::function<std::string()>;

inline void run_case(SuiteResult& out, std::string name, const Check& check) {
    CaseResult r{std::move(name), false, {}};
    try {
        r.detail = check();
        r.passed = r.detail.empty();
    } catch (const std::exception& e) {
        r.detail = std::string("unexpected error: ") + e.what();
    }
    out.cases.push_back(std::move(r));
}

inline std::string diff(const std::string& what, const std::string& expected, const std::string& actual) {
    if (expected == actual) return {};
    return what + ": expected " + expected + ", got " + actual;
}

inline std::string same(const std::string& what, const Matrix& expected, const Matrix& actual) {
    if (expected == actual) return {};
    return what + ": expected " + render_matrix(expected) + ", got " + render_matrix(actual);
}

inline std::string same(const std::string& what, const MatPoly& expected, const MatPoly& actual) {
    if (expected == actual) return {};
    return what + ": expected " + render_poly(expected) + ", got " + render_poly(actual);
}

inline std::string same(const std::string& what, const SuperMatrix& expected, const SuperMatrix& actual) {
    if (expected == actual) return {};
    return what + ": expected " + render_super(expected) + ", got " + render_super(actual);
}

template <class F>
std::string expect_error(ErrorKind kind, F&& f) {
    try {
        f();
    } catch (const Error& e) {
        if (e.kind() == kind) return {};
        return "expected " + std::string(to_string(kind)) + ", got " + e.what();
    }
    return "expected " + std::string(to_string(kind)) + ", but the call succeeded";
}

/// Concatenates check results, keeping the first failure.
inline std::string all(std::initializer_list<std::string> parts) {
    for (const auto& p : parts)
        if (!p.empty()) return p;
    return {};
}

const DomainTag Q = DomainTag::rationals();
const DomainTag Z = DomainTag::integers();

inline Matrix mq(std::string_view s) { return parse_matrix(s, Q); }
inline Matrix mz(std::string_view s) { return parse_matrix(s, Z); }
inline MatPoly pq(std::string_view s) { return parse_poly(s, Q); }
inline MatPoly pz(std::string_view s) { return parse_poly(s, Z); }
inline SuperMatrix sq(std::string_view s) { return parse_super(s, Q); }

} // namespace detail

inline SuiteResult run_worked_examples() {
    using namespace detail;
    SuiteResult s{"paper-examples", {}};

    run_case(s, "row polynomial sum", [] {
        const MatPoly p = pq("[0 2 1 0] + [7 0 1 2] * x + [1 1 1 1] * x^3 + [0 1 2 0] * x^5");
        const MatPoly q = pq("[7 8 9 10] + [3 1 0 7] * x + [3 0 1 4] * x^3 - [4 2 3 4] * x^4 + [7 1 0 0] * x^5 + [1 2 3 4] * x^8");
        return same("p+q", pq("[7 10 10 10] + [10 1 1 9] * x + [4 1 2 5] * x^3 - [4 2 3 4] * x^4 + [7 2 2 0] * x^5 + [1 2 3 4] * x^8"),
                    poly_add(p, q));
    });

    run_case(s, "square polynomial sum", [] {
        const MatPoly p = pq("[0 3 -2;1 0 0;0 0 4] + [2 1 0;3 0 2;1 2 3] * x^2 + [0 1 2;1 2 0;2 1 0] * x^3");
        const MatPoly q = pq("[1 2 1;0 1 3;-6 1 2] + [1 2 3;0 1 5;-5 0 1] * x + [-1 2 3;-2 3 1;-3 2 1] * x^2 + [0 1 0;9 0 1;0 2 3] * x^3");
        return all({same("constant terms", mq("[1 5 -1;1 1 3;-6 1 6]"), mat_add(mq("[0 3 -2;1 0 0;0 0 4]"), mq("[1 2 1;0 1 3;-6 1 2]"))),
                    same("p+q", pq("[1 5 -1;1 1 3;-6 1 6] + [1 2 3;0 1 5;-5 0 1] * x + [1 3 3;1 3 3;-2 4 4] * x^2 + [0 2 2;10 2 1;2 3 3] * x^3"),
                         poly_add(p, q))});
    });

    run_case(s, "row polynomial natural product", [] {
        const MatPoly p = pq("[0 1 2] + [3 4 0] * x + [2 1 5] * x^2 + [3 0 2] * x^3");
        const MatPoly q = pq("[6 0 2] + [0 1 4] * x + [3 1 0] * x^2 + [1 2 3] * x^4");
        return same("p x q", pq("[0 0 4] + [18 1 8] * x + [12 5 10] * x^2 + [27 5 24] * x^3 + [6 3 14] * x^4 + [12 8 0] * x^5 + [2 2 15] * x^6 + [3 0 6] * x^7"),
                    poly_mul_natural(p, q));
    });

    run_case(s, "usual product of 2x2 polynomials", [] {
        const MatPoly p = pq("[1 2;0 4] + [0 1;2 3] * x + [1 2;3 0] * x^2");
        const MatPoly q = pq("[0 1;2 0] + [1 0;2 3] * x + [1 2;3 4] * x^3");
        return same("p.q", pq("[4 1;8 0] + [7 6;14 14] * x + [6 4;8 12] * x^2 + [12 16;15 16] * x^3 + [3 4;11 16] * x^4 + [7 10;3 6] * x^5"),
                    poly_mul_usual(p, q));
    });

    run_case(s, "derivative", [] {
        const MatPoly p = pq("[3 0;1 2] + [2 6;1 5] * x + [7 0;0 8] * x^2 - [3 1;0 0] * x^3 + [8 1;0 1] * x^4 - [0 4;-2 0] * x^5");
        return same("p'", pq("[2 6;1 5] + [14 0;0 16] * x - [9 3;0 0] * x^2 + [32 4;0 4] * x^3 - [0 20;-10 0] * x^4"), poly_derivative(p));
    });

    run_case(s, "derivative over Z", [] {
        const MatPoly p = pz("[2 0 1 0 1 5] + [3 2 1 0 0 0] * x + [0 1 0 2 0 4] * x^2 + [0 -2 -3 0 0 0] * x^3 + [8 0 7 0 1 0] * x^5");
        return same("p'", pz("[3 2 1 0 0 0] + [0 2 0 4 0 8] * x + [0 -6 -9 0 0 0] * x^2 + [40 0 35 0 5 0] * x^4"), poly_derivative(p));
    });

    run_case(s, "integral over Q", [] {
        const MatPoly p = pq("[1 2 3 4 5] + [0 1 0 3 -1] * x + [5 0 8 1 7] * x^2 + [1 2 0 4 5] * x^3 + [-2 1 4 3 0] * x^4");
        const Matrix c = mq("[1 1 2 3 5]");
        return same("integral", pq("[1 1 2 3 5] + [1 2 3 4 5] * x + [0 1/2 0 3/2 -1/2] * x^2 + [5/3 0 8/3 1/3 7/3] * x^3 + [1/4 1/2 0 1 5/4] * x^4 + [-2/5 1/5 4/5 3/5 0] * x^5"),
                    poly_integrate(p, c));
    });

    run_case(s, "integral leaves Z but exists over Q", [] {
        const char* text = "[3 8 4 0] + [2 0 4 9] * x + [1 2 1 1] * x^2 + [1 0 1 1] * x^3 + [3 4 8 9] * x^5";
        return all({expect_error(ErrorKind::NotClosed, [&] { poly_integrate(pz(text)); }),
                    same("integral over Q", pq("[3 8 4 0] * x + [1 0 2 9/2] * x^2 + [1/3 2/3 1/3 1/3] * x^3 + [1/4 0 1/4 1/4] * x^4 + [1/2 2/3 4/3 3/2] * x^6"),
                         poly_integrate(pq(text)))});
    });

    run_case(s, "degree", [] {
        const MatPoly p = pq("[3 0;-1 2] + [1 0;0 2] * x^2 + [0 1;0 3] * x^3 + [1 0;4 0] * x^5 + [1 4;0 0] * x^8 + [0 0;1 2] * x^9 + [0 1;5 0] * x^10");
        return diff("degree", "10", std::to_string(poly_degree(p).value_or(0)));
    });

    run_case(s, "square polynomial of degree 8", [] {
        const MatPoly p = pq("[3 1 2;0 1 5;0 0 1] + [7 2 1;0 5 7;6 1 2] * x^2 + [2 0 1;0 7 4;0 1 0] * x^4 + [2 1 5;6 7 8;0 1 2] * x^8");
        return diff("degree", "8", std::to_string(poly_degree(p).value_or(0)));
    });

    run_case(s, "cubic (1,1,1)x^3 = (27,8,125)", [] {
        const RootSet r = solve_binomial(mq("[1 1 1]"), mq("[27 8 125]"), 3);
        return all({diff("root count", "1", std::to_string(r.roots.size())), r.roots.empty() ? "" : same("root", mq("[3 2 5]"), r.roots[0])});
    });

    run_case(s, "square root x^2 = (4,9,25,4)", [] {
        const RootSet r = solve_binomial(mq("[1 1 1 1]"), mq("[4 9 25 4]"), 2);
        if (r.roots.size() != 2) return diff("root count", "2", std::to_string(r.roots.size()));
        return all({same("+root", mq("[2 3 5 2]"), r.roots[0]), same("-root", mq("[-2 -3 -5 -2]"), r.roots[1]),
                    r.more_sign_combinations ? "" : "sign-combination flag not set"});
    });

    run_case(s, "x^2 = -(4,9,25,4) has no rational root", [] {
        const RootSet r = solve_binomial(mq("[1 1 1 1]"), mq("[-4 -9 -25 -4]"), 2);
        return all({diff("root count", "0", std::to_string(r.roots.size())),
                    diff("reason", "NoRationalRoot", r.reason ? std::string(to_string(*r.reason)) : "none")});
    });

    run_case(s, "quadratic with coincident roots", [] {
        const RootSet r = solve_quadratic(mq("[1 1 1 1]"), mq("[4 4 4 4]"), mq("[4 4 4 4]"));
        return all({diff("root count", "1", std::to_string(r.roots.size())), r.roots.empty() ? "" : same("root", mq("[-2 -2 -2 -2]"), r.roots[0])});
    });

    run_case(s, "quadratic (1,1,1,1,1)x^2 - (4,9,16,25,81)", [] {
        const RootSet r = solve_quadratic(mq("[1 1 1 1 1]"), mq("[0 0 0 0 0]"), mq("[-4 -9 -16 -25 -81]"));
        if (r.roots.size() != 2) return diff("root count", "2", std::to_string(r.roots.size()));
        return all({same("+root", mq("[2 3 4 5 9]"), r.roots[0]), same("-root", mq("[-2 -3 -4 -5 -9]"), r.roots[1])});
    });

    run_case(s, "((1,1,1)x - (2,1,3))^3 vanishes at (2,1,3)", [] {
        const MatPoly lin = pq("[-2 -1 -3] + [1 1 1] * x");
        const MatPoly cube = poly_mul_natural(poly_mul_natural(lin, lin), lin);
        return all({same("expansion", pq("[-8 -1 -27] + [12 3 27] * x + [-6 -3 -9] * x^2 + [1 1 1] * x^3"), cube),
                    same("value", mq("[0 0 0]"), poly_evaluate_natural(cube, mq("[2 1 3]")))});
    });

    run_case(s, "polynomial zero divisors", [] {
        const MatPoly p = pq("[3 2 0 0 0] + [6 3 0 0 0] * x + [7 0 0 0 0] * x^2 + [8 1 0 0 0] * x^4");
        const MatPoly q = pq("[0 0 1 2 3] + [0 0 0 4 2] * x^2 + [0 0 0 1 4] * x^3 + [0 0 0 3 4] * x^4 + [0 0 0 5 2] * x^7");
        const MatPoly pr = poly_mul_natural(p, q);
        return pr.is_zero() ? std::string() : "p x q = " + render_poly(pr);
    });

    run_case(s, "natural monicization", [] {
        const MatPoly q = pq("[8 9 0 2] + [7 0 1 5] * x + [1 2 3 0] * x^3 + [5 7 8 -4] * x^5");
        const MatPoly bad = pq("[1 2 0 5] + [2 0 0 1] * x + [1 2 3 4] * x^3 + [0 3 0 0] * x^4");
        return all({same("tq", pq("[8/5 9/7 0 -1/2] + [7/5 0 1/8 -5/4] * x + [1/5 2/7 3/8 0] * x^3 + [1 1 1 1] * x^5"), monicize_natural(q)),
                    expect_error(ErrorKind::NotMonicizable, [&] { monicize_natural(bad); })});
    });

    run_case(s, "usual monicization", [] {
        const MatPoly p = pq("[1 0;2 5] + [0 1;1 0] * x^2 + [0 1;2 0] * x^3 + [1 8;7 5] * x^4 + [7 0;0 8] * x^5");
        const MatPoly bad = pq("[1 2;3 4] + [18 7;0 2] * x + [8 1;0 5] * x^2 + [2 1;5 7] * x^3 + [3 0;1 0] * x^7");
        return all({same("Ap", pq("[1/7 0;1/4 5/8] + [0 1/7;1/8 0] * x^2 + [0 1/7;1/4 0] * x^3 + [1/7 8/7;7/8 5/8] * x^4 + [1 0;0 1] * x^5"),
                         monicize_usual(p)),
                    expect_error(ErrorKind::SingularLead, [&] { monicize_usual(bad); })});
    });

    run_case(s, "divisibility of row matrices", [] {
        const auto q = divides(mz("[5 7 2 8]"), mz("[10 14 8 8]"));
        return all({q ? same("y/x", mz("[2 2 4 1]"), *q) : "no quotient",
                    expect_error(ErrorKind::ZeroDivisorEntry, [] { divides(mz("[0 2 3 5 7 8]"), mz("[5 4 6 10 21 24]")); })});
    });

    run_case(s, "prime row matrices", [] {
        for (const char* row : {"[3 5 11 13]", "[7 5 2 19 23 31]", "[11 23 29 43 41 53 59 47 7 11]"})
            if (!is_prime_row(mz(row))) return std::string(row) + " not recognised as a prime row";
        return std::string();
    });

    run_case(s, "column natural product", [] {
        return same("x_n", mq("[7;6;0;2;35]"), nproduct(mq("[7;2;0;1;5]"), mq("[1;3;5;2;7]")));
    });

    run_case(s, "orthogonal pairs", [] {
        if (!is_orthogonal(mq("[1;2;3;0;0;0]"), mq("[0;0;0;0;1;2]"))) return std::string("column pair not orthogonal");
        if (!is_orthogonal(mq("[0 4 -5 0 7]"), mq("[1 0 0 8 0]"))) return std::string("row pair not orthogonal");
        return std::string();
    });

    run_case(s, "natural and usual products", [] {
        const Matrix a = mq("[6 1 2;0 3 4;2 1 0]"), b = mq("[3 0 1;2 1 0;0 1 2]");
        return all({same("A x_n B", mq("[18 0 2;0 3 0;0 1 0]"), nproduct(a, b)), same("A.B", mq("[20 3 10;6 7 8;8 1 2]"), uproduct(a, b))});
    });

    run_case(s, "noncommuting usual product", [] {
        const Matrix m = mq("[3 4;2 0]"), n = mq("[1 2;0 1]");
        return all({same("M.N", mq("[3 10;2 4]"), uproduct(m, n)), same("N.M", mq("[7 4;2 0]"), uproduct(n, m)),
                    same("M x_n N", mq("[3 8;0 0]"), nproduct(m, n))});
    });

    run_case(s, "diagonal products agree", [] {
        const Matrix a = mq("[7 0 0 0;0 8 0 0;0 0 2 0;0 0 0 4]"), b = mq("[1 0 0 0;0 2 0 0;0 0 3 0;0 0 0 4]");
        const Matrix e = mq("[7 0 0 0;0 16 0 0;0 0 6 0;0 0 0 16]");
        return all({same("natural", e, nproduct(a, b)), same("usual", e, uproduct(a, b))});
    });

    run_case(s, "natural inverse", [] {
        return same("inverse", mq("[1/3 1/4;1/5 1/8;1 1/9;1/4 1/7]"), natural_inverse(mq("[3 4;5 8;1 9;4 7]")));
    });

    run_case(s, "sign vectors form a group", [] {
        std::vector<Matrix> p;
        for (const char* v : {"[1;1;1]", "[-1;-1;-1]", "[1;-1;1]", "[-1;1;-1]", "[-1;-1;1]", "[1;1;-1]", "[-1;1;1]", "[1;-1;-1]"}) p.push_back(mz(v));
        const StructureReport r = analyze(Carrier::explicit_list(p));
        const bool group = r.closed && r.identity && *r.identity == mz("[1;1;1]") && r.max_subgroups.size() == 1 &&
                           r.max_subgroups[0].elements.size() == 8;
        if (!group) return std::string("P is not reported as a group of order 8");
        if (!r.smarandache) return std::string("no proper subgroup found");
        const std::vector<Matrix> b{mz("[-1;-1;-1]"), mz("[1;1;1]")};
        if (r.smarandache->elements != b) return std::string("subgroup witness is not {J, -J}");
        return std::string();
    });

    run_case(s, "cone zero divisor", [] {
        const DomainTag zp = DomainTag::nonneg_integers();
        const Matrix a = parse_matrix("[3 0 4]", zp), b = parse_matrix("[0 7 0]", zp);
        const auto w = zero_divisor_witness(a);
        return all({nproduct(a, b).is_zero() ? "" : "a x_n b is not zero", w ? same("witness", parse_matrix("[0 1 0]", zp), *w) : "no witness"});
    });

    run_case(s, "positive cone has no zero divisors", [] {
        const ConeReport r = cone_positivity_check(Shape{1, 4}, DomainTag::nonneg_rationals(), 500, 0);
        if (r.positive_zero_divisor) return std::string("zero divisor among strictly positive elements");
        if (r.strictness_violation) return std::string("strictness violated");
        return std::string();
    });

    run_case(s, "trivial idempotents", [] {
        const DomainTag zp = DomainTag::nonneg_integers();
        if (!is_idempotent(parse_matrix("[1 1 1;0 0 0;1 1 1;0 0 0;0 0 0]", zp))) return std::string("x is not idempotent");
        if (!is_idempotent(parse_matrix("[0 0 0;1 0 0;0 1 0;0 0 1;0 1 1]", zp))) return std::string("y is not idempotent");
        return std::string();
    });

    run_case(s, "the 16 trivial idempotents of 2x2", [] {
        std::set<SupportMask> listed;
        for (const char* m : {"[0 0;0 0]", "[1 0;0 0]", "[0 1;0 0]", "[0 0;1 0]", "[0 0;0 1]", "[1 0;1 0]", "[1 1;0 0]", "[0 0;1 1]",
                              "[0 1;0 1]", "[1 1;1 1]", "[1 0;1 1]", "[0 1;1 1]", "[1 1;1 0]", "[1 1;0 1]", "[1 0;0 1]", "[0 1;1 0]"})
            listed.insert(support(mq(m)));
        const auto all_masks = trivial_idempotents(Shape{2, 2});
        const std::set<SupportMask> enumerated(all_masks.begin(), all_masks.end());
        if (listed != enumerated) return std::string("enumerated masks differ from the listed set");
        const StructureReport add = analyze(Carrier::masks(Shape{2, 2}, DomainTag::nonneg_integers(), CarrierOp::Addition));
        if (add.closed) return std::string("masks reported closed under +");
        const StructureReport mul = analyze(Carrier::masks(Shape{2, 2}));
        if (!mul.closed || !mul.associative || !mul.commutative || !mul.identity) return std::string("masks are not a commutative monoid under x_n");
        return std::string();
    });

    run_case(s, "masks of 2x4 and their ideals", [] {
        const DomainTag zp = DomainTag::nonneg_integers();
        const Carrier c = Carrier::masks(Shape{2, 4});
        const auto m = [&](const char* t) { return parse_matrix(t, zp); };
        const auto ideal = ideal_generated(c, m("[1 1 1 1;0 0 0 0]"));
        std::set<Matrix> listed;
        for (const char* t : {"[0 0 0 0;0 0 0 0]", "[1 1 1 1;0 0 0 0]", "[0 1 0 1;0 0 0 0]", "[0 0 0 1;0 0 0 0]", "[1 0 0 0;0 0 0 0]",
                              "[0 0 1 0;0 0 0 0]", "[0 0 1 1;0 0 0 0]", "[0 1 0 0;0 0 0 0]", "[1 1 0 0;0 0 0 0]", "[0 1 1 0;0 0 0 0]",
                              "[1 0 1 0;0 0 0 0]", "[1 0 0 1;0 0 0 0]", "[1 1 1 0;0 0 0 0]", "[0 1 1 1;0 0 0 0]", "[1 1 0 1;0 0 0 0]",
                              "[1 0 1 1;0 0 0 0]"})
            listed.insert(m(t));
        return all({diff("|I|", "256", trivial_idempotent_count(Shape{2, 4}).str()),
                    diff("idempotents", "256", std::to_string(idempotents_in(c).size())),
                    std::set<Matrix>(ideal.begin(), ideal.end()) == listed ? "" : "<[1 1 1 1;0 0 0 0]> differs from the listed ideal",
                    diff("|<[1 1 1 0;1 1 1 0]>|", "64", std::to_string(ideal_generated(c, m("[1 1 1 0;1 1 1 0]")).size())),
                    diff("|<0>|", "1", std::to_string(ideal_generated(c, m("[0 0 0 0;0 0 0 0]")).size())),
                    diff("|<J>|", "256", std::to_string(ideal_generated(c, m("[1 1 1 1;1 1 1 1]")).size())),
                    nproduct(m("[1 1 0 0;0 0 0 0]"), m("[0 0 1 1;1 1 1 1]")).is_zero() ? "" : "x x_n y is not zero"});
    });

    run_case(s, "direct sum of 3x3 mask subspaces", [] {
        std::vector<MaskSubspace> parts;
        for (const char* t : {"[1 1 0;0 0 0;0 0 1]", "[0 0 1;0 1 0;0 0 0]", "[0 0 0;1 0 1;0 1 0]", "[0 0 0;0 0 0;1 0 0]"})
            parts.emplace_back(support(mq(t)), Q);
        const auto full = check_sum(parts);
        parts.pop_back();
        const auto partial = check_sum(parts);
        return all({diff("kind", "Direct", to_string(full.kind)), diff("without M4", "NotSpanning", to_string(partial.kind))});
    });

    run_case(s, "pseudo direct sum on 12x1", [] {
        auto rows = [](std::initializer_list<int> on) {
            SupportMask m(Shape{12, 1});
            for (int r : on) m.assign(static_cast<std::size_t>(r - 1), true);
            return MaskSubspace(m, Q);
        };
        const auto rep = check_sum({rows({1, 2}), rows({2, 3, 4}), rows({3, 4, 5, 6}), rows({6, 7, 8, 9, 10, 11, 12})});
        return diff("kind", "PseudoDirect", to_string(rep.kind));
    });

    run_case(s, "orthogonal space of a diagonal pattern", [] {
        const MaskSubspace w = orthogonal_space(mq("[3 0;0 -2]"));
        return diff("x^perp", "[0 1;1 0]", render_mask(w.mask()));
    });

    run_case(s, "complement of the bottom row", [] {
        const MaskSubspace b(support(mq("[0 0 0;0 0 0;1 1 1]")), Q);
        const MaskSubspace c = subspace_complement(b);
        return all({diff("B^perp", "[1 1 1;1 1 1;0 0 0]", render_mask(c.mask())),
                    diff("dimensions", "9", std::to_string(b.dimension() + c.dimension()))});
    });

    run_case(s, "main complement", [] {
        return diff("main complement", "[0 1;0 1]", render_mask(main_complement(mq("[5 0;-3 0]"))));
    });

    run_case(s, "orthogonal spaces of zero and of a full-support matrix", [] {
        return all({diff("{0}^perp", "[1 1;1 1]", render_mask(orthogonal_space(mq("[0 0;0 0]")).mask())),
                    diff("V^perp", "[0 0;0 0]", render_mask(orthogonal_space(mq("[1 2;3 4]")).mask()))});
    });

    run_case(s, "super row product", [] {
        const SuperMatrix x = sq("[1 2 | 3 4 | 5;9 8 | 7 6 | 5;0 1 | 2 7 | 1]");
        const SuperMatrix y = sq("[0 1 | 2 3 | 5;9 0 | 1 3 | 4;7 2 | 3 1 | 2]");
        return same("x x_n y", sq("[0 2 | 6 12 | 25;81 0 | 7 18 | 20;0 2 | 6 7 | 2]"), super_nproduct(x, y));
    });

    run_case(s, "3x5 super zero divisor pair", [] {
        const SuperMatrix x = sq("[9 0 2 | 0 | 1;0 1 0 | 5 | 0;1 0 0 | 2 | 0]");
        const SuperMatrix y = sq("[0 7 0 | 8 | 0;9 0 2 | 0 | 7;0 7 9 | 0 | 2]");
        const SuperMatrix lit = sq("[9 0 2 | 0 1 ; 0 1 0 | 5 0 ; 1 0 0 | 2 0]");
        return all({super_nproduct(x, y).base().is_zero() ? "" : "x x_n y is not zero",
                    lit.ptype().col_cuts() == std::set<std::size_t>{3} ? "" : "literal cuts differ from {3}",
                    same("identity", x, super_nproduct(x, super_ones(x.ptype(), Q)))});
    });

    run_case(s, "6x6 super zero divisor pair", [] {
        const SuperMatrix x = sq("[7 8 0 | 9 4 2;--;0 1 2 | 5 7 8;1 2 3 | 0 1 0;--;5 7 0 | 9 2 0;1 2 3 | 0 2 3;0 8 7 | 0 5 4]");
        const SuperMatrix y = sq("[0 0 9 | 0 0 0;--;7 0 0 | 0 0 0;0 0 0 | 6 0 8;--;0 0 6 | 0 0 2;0 0 0 | 6 0 0;5 0 0 | 7 0 0]");
        return super_nproduct(x, y).base().is_zero() ? std::string() : "x x_n y = " + render_super(super_nproduct(x, y));
    });

    run_case(s, "super inverses", [] {
        const SuperMatrix z = parse_super("[1 -1 | 1 1 -1 | -1 -1]", Z);
        return all({same("row inverse", sq("[8 | 1/7 1/5 | 1/3 1/2 1/4 -1]"), super_inverse(sq("[1/8 | 7 5 | 3 2 4 -1]"))),
                    expect_error(ErrorKind::NotInvertible, [] { super_inverse(sq("[1 0 | 5 7 2 | 1 5 7 -1 2]")); }),
                    same("+-1 self inverse", z, super_inverse(z)),
                    same("4x3 inverse", sq("[1/7 1/3 | -1;1 1/2 | 1/9;--;1/8 1/5 | 1;1/4 1/7 | 1/2]"),
                         super_inverse(sq("[7 3 | -1;1 2 | 9;--;8 5 | 1;4 7 | 2]")))});
    });

    run_case(s, "super polynomial product", [] {
        const MatPoly p = pq("[3 2 | 0;1 0 | 1;0 2 | 3] + [7 5 | 1;0 1 | 2;0 0 | 3] * x + [1 2 | 3;0 0 | 7;0 1 | 2] * x^2 + [0 0 | 9;1 0 | 3;2 7 | 2] * x^4");
        const MatPoly q = pq("[4 0 | 2;1 5 | 6;7 0 | 2] + [1 2 | 3;4 5 | 6;7 8 | 9] * x^2 + [0 3 | 1;2 1 | 0;3 4 | 5] * x^3");
        const MatPoly expected = pq(
            "[12 0 | 0;1 0 | 6;0 0 | 6] + [28 0 | 2;0 5 | 12;0 0 | 6] * x + [7 4 | 6;4 0 | 48;0 16 | 31] * x^2 + "
            "[7 16 | 3;2 5 | 12;0 8 | 42] * x^3 + [1 19 | 28;1 1 | 60;14 8 | 37] * x^4 + [0 6 | 3;0 0 | 0;0 4 | 10] * x^5 + "
            "[0 0 | 27;4 0 | 18;14 56 | 18] * x^6 + [0 0 | 9;2 0 | 0;6 28 | 10] * x^7");
        return all({same("p x_n q", expected, poly_mul_natural(p, q)),
                    expect_error(ErrorKind::TypeMismatch, [&] { poly_mul_natural(p, pq("[1 0 0;0 1 0;0 0 1]")); })});
    });

    return s;
}

/// Sampled algebraic laws over seeded random data. Polynomial laws use a
/// tenth of the matrix sample count.
inline SuiteResult run_laws(std::size_t samples = 10000, std::uint64_t seed = 0) {
    using namespace detail;
    SuiteResult s{"laws", {}};
    const std::size_t poly_samples = std::max<std::size_t>(1, samples / 10);

    run_case(s, "scalar ring axioms over Z, Q, Z_12", [&] {
        Rng rng(seed);
        for (DomainTag d : {Z, Q, DomainTag::mod(12)})
            for (std::size_t i = 0; i < samples; ++i) {
                const Scalar a = random_scalar(rng, d), b = random_scalar(rng, d), c = random_scalar(rng, d);
                if (a + b != b + a || a * b != b * a) return "commutativity fails in " + d.name();
                if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) return "associativity fails in " + d.name();
                if (a * (b + c) != a * b + a * c) return "distributivity fails in " + d.name();
                if (a + Scalar::zero(d) != a || a * Scalar::one(d) != a) return "identities fail in " + d.name();
            }
        return std::string();
    });

    run_case(s, "natural product laws on Q matrices up to 5x5", [&] {
        Rng rng(seed + 1);
        for (std::size_t i = 0; i < samples; ++i) {
            const Shape sh = random_shape(rng, 5, 5);
            const Matrix a = random_matrix(rng, sh, Q), b = random_matrix(rng, sh, Q), c = random_matrix(rng, sh, Q);
            if (nproduct(a, b) != nproduct(b, a)) return "commutativity: " + render_matrix(a) + " " + render_matrix(b);
            if (nproduct(nproduct(a, b), c) != nproduct(a, nproduct(b, c))) return "associativity: " + render_matrix(a);
            if (nproduct(a, mat_add(b, c)) != mat_add(nproduct(a, b), nproduct(a, c))) return "distributivity: " + render_matrix(a);
            if (nproduct(a, Matrix::ones(sh, Q)) != a) return "J identity: " + render_matrix(a);
        }
        return std::string();
    });

    run_case(s, "diagonal matrices: usual product equals natural product", [&] {
        Rng rng(seed + 2);
        for (std::size_t i = 0; i < samples; ++i) {
            const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
            std::vector<Scalar> da, db;
            for (std::size_t k = 0; k < n; ++k) {
                da.push_back(random_scalar(rng, Q));
                db.push_back(random_scalar(rng, Q));
            }
            const Matrix a = Matrix::diagonal(da), b = Matrix::diagonal(db);
            if (uproduct(a, b) != nproduct(a, b)) return "mismatch at " + render_matrix(a) + " " + render_matrix(b);
        }
        return std::string();
    });

    run_case(s, "flattening commutes with super operations", [&] {
        Rng rng(seed + 3);
        for (std::size_t i = 0; i < samples; ++i) {
            const Shape sh = random_shape(rng, 5, 5);
            const PartitionType p = random_partition(rng, sh);
            const SuperMatrix a(random_matrix(rng, sh, Q), p), b(random_matrix(rng, sh, Q), p);
            const SuperMatrix prod = super_nproduct(a, b), sum = super_add(a, b);
            if (prod.base() != nproduct(a.base(), b.base()) || prod.ptype() != p) return "product at " + render_super(a);
            if (sum.base() != mat_add(a.base(), b.base()) || sum.ptype() != p) return "sum at " + render_super(a);
        }
        return std::string();
    });

    run_case(s, "polynomial ring laws under natural product", [&] {
        Rng rng(seed + 4);
        for (std::size_t i = 0; i < poly_samples; ++i) {
            const Shape sh = random_shape(rng, 3, 3);
            const MatPoly p = random_poly(rng, sh, Q, 4), q = random_poly(rng, sh, Q, 4), r = random_poly(rng, sh, Q, 4);
            if (poly_mul_natural(p, q) != poly_mul_natural(q, p)) return "commutativity at " + render_poly(p);
            if (poly_mul_natural(poly_mul_natural(p, q), r) != poly_mul_natural(p, poly_mul_natural(q, r))) return "associativity at " + render_poly(p);
            if (poly_mul_natural(p, poly_add(q, r)) != poly_add(poly_mul_natural(p, q), poly_mul_natural(p, r))) return "distributivity at " + render_poly(p);
            if (poly_add(poly_add(p, q), r) != poly_add(p, poly_add(q, r))) return "additive associativity at " + render_poly(p);
            if (poly_mul_natural(p, MatPoly::constant(Matrix::ones(sh, Q))) != p) return "J identity at " + render_poly(p);
            if (!poly_add(p, poly_neg(p)).is_zero()) return "additive inverse at " + render_poly(p);
        }
        return std::string();
    });

    run_case(s, "Leibniz rule and integration round trip", [&] {
        Rng rng(seed + 5);
        for (std::size_t i = 0; i < poly_samples; ++i) {
            const Shape sh = random_shape(rng, 3, 3);
            const MatPoly p = random_poly(rng, sh, Q, 4), q = random_poly(rng, sh, Q, 4);
            const MatPoly lhs = poly_derivative(poly_mul_natural(p, q));
            const MatPoly rhs = poly_add(poly_mul_natural(poly_derivative(p), q), poly_mul_natural(p, poly_derivative(q)));
            if (lhs != rhs) return "Leibniz at " + render_poly(p);
            if (poly_derivative(poly_integrate(p, random_matrix(rng, sh, Q))) != p) return "round trip at " + render_poly(p);
            const MatPoly zp = random_poly(rng, sh, Z, 6);
            const MatPoly dz = poly_derivative(zp);
            for (const auto& [k, c] : dz.terms())
                for (const auto& e : c.entries())
                    if (e.domain() != Z || e.denominator() != 1) return "derivative left Z at " + render_poly(zp);
        }
        return std::string();
    });

    run_case(s, "usual product of polynomials is noncommutative", [] {
        const MatPoly m = MatPoly::constant(mq("[3 4;2 0]")), n = MatPoly::constant(mq("[1 2;0 1]"));
        return poly_mul_usual(m, n) != poly_mul_usual(n, m) ? std::string() : std::string("M.N = N.M");
    });

    return s;
}

/// Counting checks: mask and Z_6 idempotent censuses and ideal orders.
inline SuiteResult run_census() {
    using namespace detail;
    SuiteResult s{"census", {}};

    run_case(s, "Masks(2x4) idempotent count is 256", [] {
        return diff("count", "256", std::to_string(idempotents_in(Carrier::masks(Shape{2, 4})).size()));
    });

    run_case(s, "Masks(mxn) idempotents number 2^(mn) for mn <= 12", [] {
        for (std::size_t m = 1; m <= 12; ++m)
            for (std::size_t n = 1; m * n <= 12; ++n) {
                const std::size_t got = idempotents_in(Carrier::masks(Shape{m, n})).size();
                if (got != (std::size_t{1} << (m * n)))
                    return "shape " + Shape{m, n}.to_string() + ": " + std::to_string(got);
                if (trivial_idempotent_count(Shape{m, n}) != BigInt(got)) return "count-only mode disagrees at " + Shape{m, n}.to_string();
            }
        return std::string();
    });

    run_case(s, "Z_6 idempotents number 4^(mn) for mn <= 4", [] {
        for (std::size_t m = 1; m <= 4; ++m)
            for (std::size_t n = 1; m * n <= 4; ++n) {
                const std::size_t got = idempotents_in(Carrier::all_matrices(Shape{m, n}, DomainTag::mod(6))).size();
                if (got != (std::size_t{1} << (2 * m * n))) return "shape " + Shape{m, n}.to_string() + ": " + std::to_string(got);
            }
        return std::string();
    });

    run_case(s, "ideal order is 2^popcount for masks up to 2x4", [] {
        for (std::size_t m = 1; m <= 2; ++m)
            for (std::size_t n = 1; n <= 4; ++n) {
                const Carrier c = Carrier::masks(Shape{m, n});
                for (const auto& x : c.elements()) {
                    const std::size_t got = ideal_generated(c, x).size();
                    if (got != (std::size_t{1} << support(x).popcount())) return "|<" + render_matrix(x) + ">| = " + std::to_string(got);
                }
            }
        return std::string();
    });

    return s;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"paper-examples", "laws", "census"};
    return names;
}

} // namespace natprod
