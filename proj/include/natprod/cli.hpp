#pragma once

/**
 * @file cli.hpp
 * @brief The natprod command line: natprod <verb> <subverb?> [flags] <inputs...>
 *
 * Exit codes: 0 success, 1 negative finding or failed verification, 2 usage,
 * parse or contract error.
 */

#include <natprod/serialize.hpp>
#include <natprod/structures.hpp>
#include <natprod/suites.hpp>
#include <natprod/text.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace natprod {

namespace cli {

enum Exit : int { Ok = 0, Negative = 1, Usage = 2 };

struct Options {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::optional<std::size_t> samples;
    std::optional<std::string> domain;
    std::optional<std::string> constant;
    std::string op = "nprod";
    std::vector<std::string> args;
};

/// Thrown for malformed command lines that CLI11 itself accepts.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : opt_(o), out_(out) {
        if (opt_.format != "text" && opt_.format != "json") throw UsageError("--format must be text or json");
    }

    DomainTag domain(DomainTag fallback = DomainTag::rationals()) const {
        return opt_.domain ? DomainTag::parse(*opt_.domain) : fallback;
    }
    bool json() const { return opt_.format == "json"; }

    /// Inline literal (leading '[') or a file holding text or JSON.
    std::string source(const std::string& arg) const {
        if (!arg.empty() && arg.front() == '[') return arg;
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot read input file '" + arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    static std::optional<Json> as_json(const std::string& text) {
        const auto p = text.find_first_not_of(" \t\r\n");
        if (p == std::string::npos || text[p] != '{') return std::nullopt;
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            fail(ErrorKind::ParseError, std::string("JSON: ") + e.what());
        }
    }

    SuperMatrix super_arg(const std::string& arg, DomainTag fallback = DomainTag::rationals()) const {
        const std::string text = source(arg);
        if (auto j = as_json(text)) return super_from_json(*j);
        return parse_super(text, domain(fallback));
    }
    Matrix matrix_arg(const std::string& arg, DomainTag fallback = DomainTag::rationals()) const {
        return super_arg(arg, fallback).base();
    }
    MatPoly poly_arg(const std::string& arg) const {
        const std::string text = source(arg);
        if (auto j = as_json(text)) return poly_from_json(*j);
        return parse_poly(text, domain());
    }

    void emit(const SuperMatrix& s) {
        if (json())
            out_ << (s.ptype().trivial() ? to_json(s.base()) : to_json(s)).dump() << "\n";
        else
            out_ << render_super(s) << "\n";
    }
    void emit(const Matrix& m) { emit(SuperMatrix(m)); }
    void emit(const MatPoly& p) { out_ << (json() ? to_json(p).dump() : render_poly(p)) << "\n"; }
    void emit_mask(const SupportMask& m) { out_ << (json() ? to_json(m).dump() : render_mask(m)) << "\n"; }
    int emit_bool(const char* key, bool v) {
        if (json())
            out_ << Json{{key, v}}.dump() << "\n";
        else
            out_ << (v ? "true" : "false") << "\n";
        return v ? Ok : Negative;
    }

    const std::vector<std::string>& inputs() const { return opt_.args; }
    void need(std::size_t n, const std::string& usage) const {
        if (opt_.args.size() != n + 1) throw UsageError("usage: " + usage);
    }
    const std::string& in(std::size_t i) const { return opt_.args[i + 1]; }

    int eval();
    int poly();
    int analyze();
    int complement();
    int verify(const std::string& suite);

private:
    Carrier carrier_from(const std::vector<std::string>& spec) const;
    int report(const StructureReport& r);

    Options opt_;
    std::ostream& out_;
};

inline int Runner::eval() {
    const std::string& verb = opt_.args.at(0);
    if (verb == "add" || verb == "nprod") {
        need(2, "eval " + verb + " A B");
        const SuperMatrix a = super_arg(in(0)), b = super_arg(in(1));
        emit(verb == "add" ? super_add(a, b) : super_nproduct(a, b));
        return Ok;
    }
    if (verb == "uprod") {
        need(2, "eval uprod A B");
        emit(uproduct(matrix_arg(in(0)), matrix_arg(in(1))));
        return Ok;
    }
    if (verb == "inv") {
        need(1, "eval inv A");
        emit(super_inverse(super_arg(in(0))));
        return Ok;
    }
    if (verb == "orth") {
        need(2, "eval orth A B");
        return emit_bool("orthogonal", is_orthogonal(matrix_arg(in(0)), matrix_arg(in(1))));
    }
    if (verb == "divides") {
        need(2, "eval divides A B");
        const auto q = divides(matrix_arg(in(0), DomainTag::integers()), matrix_arg(in(1), DomainTag::integers()));
        if (q) {
            emit(*q);
            return Ok;
        }
        out_ << (json() ? Json{{"quotient", nullptr}}.dump() : std::string("none")) << "\n";
        return Negative;
    }
    if (verb == "prime") {
        need(1, "eval prime A");
        return emit_bool("prime_row", is_prime_row(matrix_arg(in(0), DomainTag::integers())));
    }
    if (verb == "idempotent") {
        need(1, "eval idempotent A");
        return emit_bool("idempotent", is_idempotent(matrix_arg(in(0))));
    }
    if (verb == "same-type") {
        need(2, "eval same-type A B");
        return emit_bool("same_type", same_type(super_arg(in(0)), super_arg(in(1))));
    }
    if (verb == "support") {
        need(1, "eval support A");
        emit_mask(support(matrix_arg(in(0))));
        return Ok;
    }
    if (verb == "zero-divisor") {
        need(1, "eval zero-divisor A");
        if (auto w = zero_divisor_witness(matrix_arg(in(0)))) {
            emit(*w);
            return Ok;
        }
        out_ << (json() ? Json{{"witness", nullptr}}.dump() : std::string("none")) << "\n";
        return Negative;
    }
    if (verb == "parse-render") {
        need(1, "eval parse-render F");
        const std::string text = source(in(0));
        if (auto j = as_json(text)) {
            if (j->contains("terms"))
                emit(poly_from_json(*j));
            else
                emit(super_from_json(*j));
            return Ok;
        }
        const MatPoly p = parse_poly(text, domain());
        if (p.degree().value_or(0) == 0)
            emit(SuperMatrix(p.coeff(0), p.effective_ptype()));
        else
            emit(p);
        return Ok;
    }
    throw UsageError("unknown eval operation '" + verb + "'");
}

inline int Runner::poly() {
    const std::string& verb = opt_.args.at(0);
    if (verb == "add" || verb == "nmul" || verb == "umul") {
        need(2, "poly " + verb + " P Q");
        const MatPoly p = poly_arg(in(0)), q = poly_arg(in(1));
        emit(verb == "add" ? poly_add(p, q) : verb == "nmul" ? poly_mul_natural(p, q) : poly_mul_usual(p, q));
        return Ok;
    }
    if (verb == "diff") {
        need(1, "poly diff P");
        emit(poly_derivative(poly_arg(in(0))));
        return Ok;
    }
    if (verb == "int") {
        need(1, "poly int P [--const C]");
        const MatPoly p = poly_arg(in(0));
        std::optional<Matrix> c;
        if (opt_.constant) c = matrix_arg(*opt_.constant, p.domain()).in_domain(p.domain());
        emit(poly_integrate(p, c));
        return Ok;
    }
    if (verb == "degree") {
        need(1, "poly degree P");
        const auto d = poly_degree(poly_arg(in(0)));
        if (json())
            out_ << Json{{"degree", d ? Json(*d) : Json(nullptr)}}.dump() << "\n";
        else
            out_ << (d ? std::to_string(*d) : std::string("none")) << "\n";
        return Ok;
    }
    if (verb == "monic" || verb == "monic-usual") {
        need(1, "poly " + verb + " P");
        const MatPoly p = poly_arg(in(0));
        emit(verb == "monic" ? monicize_natural(p) : monicize_usual(p));
        return Ok;
    }
    if (verb == "eval") {
        need(2, "poly eval P X");
        const MatPoly p = poly_arg(in(0));
        emit(poly_evaluate_natural(p, matrix_arg(in(1), p.domain()).in_domain(p.domain())));
        return Ok;
    }
    if (verb == "solve") {
        need(1, "poly solve P");
        const MatPoly p = poly_arg(in(0));
        const auto deg = p.degree();
        if (!deg || *deg == 0) throw UsageError("poly solve needs a polynomial of degree >= 1");
        RootSet rs;
        std::size_t middle = 0;
        for (const auto& [k, c] : p.terms())
            if (k != 0 && k != *deg) ++middle;
        if (middle == 0)
            rs = solve_binomial(p.lead(), mat_neg(p.coeff(0)), static_cast<unsigned>(*deg));
        else if (*deg == 2)
            rs = solve_quadratic(p.coeff(2), p.coeff(1), p.coeff(0));
        else
            throw UsageError("poly solve handles a*x^k + c and quadratics");
        if (json()) {
            out_ << to_json(rs).dump() << "\n";
        } else if (rs.roots.empty()) {
            out_ << "no roots: " << to_string(*rs.reason) << " at component " << (*rs.component + 1) << "\n";
        } else {
            for (const auto& r : rs.roots) out_ << render_matrix(r) << "\n";
            if (rs.more_sign_combinations) out_ << "# further roots from independent component signs\n";
        }
        return rs.roots.empty() ? Negative : Ok;
    }
    throw UsageError("unknown poly operation '" + verb + "'");
}

/// masks:RxC[:DOMAIN], all:RxC:DOMAIN, or a list of matrix literals.
inline Carrier Runner::carrier_from(const std::vector<std::string>& spec) const {
    if (opt_.op != "nprod" && opt_.op != "add") throw UsageError("--op must be nprod or add");
    const CarrierOp op = opt_.op == "add" ? CarrierOp::Addition : CarrierOp::NaturalProduct;
    if (spec.empty()) throw UsageError("missing carrier");
    auto shape_of = [](const std::string& s) {
        const auto x = s.find('x');
        try {
            if (x == std::string::npos) throw std::invalid_argument(s);
            return Shape{std::stoul(s.substr(0, x)), std::stoul(s.substr(x + 1))};
        } catch (const std::exception&) {
            throw UsageError("bad shape '" + s + "', expected RxC");
        }
    };
    const std::string& head = spec.front();
    for (const char* kind : {"masks:", "all:"}) {
        if (!head.starts_with(kind)) continue;
        if (spec.size() != 1) throw UsageError("a " + std::string(kind) + " carrier takes no further inputs");
        const std::string rest = head.substr(std::string(kind).size());
        const auto colon = rest.find(':');
        const Shape s = shape_of(rest.substr(0, colon));
        if (std::string(kind) == "masks:")
            return Carrier::masks(s, colon == std::string::npos ? domain(DomainTag::nonneg_integers()) : DomainTag::parse(rest.substr(colon + 1)), op);
        if (colon == std::string::npos) throw UsageError("all:RxC:Zn:<n> needs a domain");
        return Carrier::all_matrices(s, DomainTag::parse(rest.substr(colon + 1)), op);
    }
    std::vector<Matrix> elems;
    for (const auto& a : spec) elems.push_back(matrix_arg(a));
    return Carrier::explicit_list(std::move(elems), op);
}

namespace detail {

inline Json matrices_json(const std::vector<Matrix>& ms) {
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(render_matrix(m));
    return a;
}

inline Json pair_json(const std::optional<std::pair<Matrix, Matrix>>& p) {
    if (!p) return nullptr;
    return Json::array({render_matrix(p->first), render_matrix(p->second)});
}

inline Json subgroup_json(const Subgroup& g) {
    return Json{{"identity", render_matrix(g.identity)}, {"size", g.elements.size()}, {"elements", matrices_json(g.elements)}};
}

inline std::string yes_no(bool v) { return v ? "yes" : "no"; }

} // namespace detail

inline Json to_json(const StructureReport& r) {
    using namespace detail;
    Json zd = Json::array();
    for (const auto& [a, b] : r.zero_divisor_pairs) zd.push_back(Json::array({render_matrix(a), render_matrix(b)}));
    Json groups = Json::array();
    for (const auto& g : r.max_subgroups) groups.push_back(subgroup_json(g));
    Json assoc_w = nullptr;
    if (r.associativity_witness) assoc_w = matrices_json({(*r.associativity_witness)[0], (*r.associativity_witness)[1], (*r.associativity_witness)[2]});
    return Json{
        {"carrier", r.carrier},
        {"operation", to_string(r.op)},
        {"size", r.size},
        {"closure", Json{{"holds", r.closed}, {"witness", pair_json(r.closure_witness)}}},
        {"associative", Json{{"holds", r.associative}, {"witness", assoc_w},
                             {"sampled", r.associativity_samples ? Json(*r.associativity_samples) : Json(nullptr)}}},
        {"commutative", Json{{"holds", r.commutative}, {"witness", pair_json(r.commutativity_witness)}}},
        {"identity", r.identity ? Json(render_matrix(*r.identity)) : Json(nullptr)},
        {"idempotents", matrices_json(r.idempotents)},
        {"zero_divisor_pairs", std::move(zd)},
        {"max_subgroups", std::move(groups)},
        {"smarandache", r.smarandache ? subgroup_json(*r.smarandache) : Json(nullptr)},
    };
}

inline int Runner::report(const StructureReport& r) {
    using detail::yes_no;
    if (json()) {
        out_ << to_json(r).dump() << "\n";
        return Ok;
    }
    auto pair_text = [](const std::optional<std::pair<Matrix, Matrix>>& p) {
        return p ? " (" + render_matrix(p->first) + ", " + render_matrix(p->second) + ")" : std::string();
    };
    out_ << "carrier             " << r.carrier << "\n";
    out_ << "operation           " << to_string(r.op) << "\n";
    out_ << "size                " << r.size << "\n";
    out_ << "closed              " << yes_no(r.closed) << pair_text(r.closure_witness) << "\n";
    out_ << "associative         " << yes_no(r.associative)
         << (r.associativity_samples ? " (sampled " + std::to_string(*r.associativity_samples) + ")" : std::string(" (exhaustive)"));
    if (r.associativity_witness)
        out_ << " (" << render_matrix((*r.associativity_witness)[0]) << ", " << render_matrix((*r.associativity_witness)[1]) << ", "
             << render_matrix((*r.associativity_witness)[2]) << ")";
    out_ << "\n";
    out_ << "commutative         " << yes_no(r.commutative) << pair_text(r.commutativity_witness) << "\n";
    out_ << "identity            " << (r.identity ? render_matrix(*r.identity) : std::string("none")) << "\n";
    out_ << "idempotents         " << r.idempotents.size() << "\n";
    for (const auto& e : r.idempotents) out_ << "  " << render_matrix(e) << "\n";
    out_ << "zero divisor pairs  " << r.zero_divisor_pairs.size() << "\n";
    for (const auto& [a, b] : r.zero_divisor_pairs) out_ << "  " << render_matrix(a) << " " << render_matrix(b) << "\n";
    out_ << "maximal subgroups   " << r.max_subgroups.size() << "\n";
    for (const auto& g : r.max_subgroups) out_ << "  at " << render_matrix(g.identity) << ": order " << g.elements.size() << "\n";
    out_ << "smarandache         ";
    if (!r.smarandache) {
        out_ << "no\n";
    } else {
        out_ << "yes, order " << r.smarandache->elements.size() << ":";
        for (const auto& m : r.smarandache->elements) out_ << " " << render_matrix(m);
        out_ << "\n";
    }
    return Ok;
}

inline int Runner::analyze() {
    const std::string& verb = opt_.args.at(0);
    const std::vector<std::string> rest(opt_.args.begin() + 1, opt_.args.end());
    if (verb == "carrier") return report(natprod::analyze(carrier_from(rest), opt_.seed, opt_.samples.value_or(default_assoc_samples)));
    if (verb == "idempotents") {
        const auto ids = idempotents_in(carrier_from(rest));
        if (json()) {
            out_ << Json{{"count", ids.size()}, {"idempotents", detail::matrices_json(ids)}}.dump() << "\n";
        } else {
            out_ << ids.size() << "\n";
            for (const auto& e : ids) out_ << render_matrix(e) << "\n";
        }
        return Ok;
    }
    if (verb == "ideal") {
        if (rest.size() < 2) throw UsageError("usage: analyze ideal <carrier...> <x>");
        const Carrier c = carrier_from({rest.begin(), rest.end() - 1});
        const Matrix x = matrix_arg(rest.back(), c.domain()).in_domain(c.domain());
        const auto ideal = ideal_generated(c, x);
        if (json()) {
            out_ << Json{{"generator", render_matrix(x)}, {"order", ideal.size()}, {"elements", detail::matrices_json(ideal)}}.dump() << "\n";
        } else {
            out_ << "order " << ideal.size() << "\n";
            for (const auto& e : ideal) out_ << render_matrix(e) << "\n";
        }
        return Ok;
    }
    if (verb == "smarandache") {
        const auto g = is_smarandache(carrier_from(rest));
        if (json()) {
            out_ << Json{{"smarandache", g ? detail::subgroup_json(*g) : Json(nullptr)}}.dump() << "\n";
        } else if (g) {
            out_ << "order " << g->elements.size() << "\n";
            for (const auto& e : g->elements) out_ << render_matrix(e) << "\n";
        } else {
            out_ << "none\n";
        }
        return g ? Ok : Negative;
    }
    if (verb == "sum") {
        if (rest.empty()) throw UsageError("usage: analyze sum M1 M2 ...");
        std::vector<MaskSubspace> parts;
        for (const auto& a : rest) {
            const Matrix m = matrix_arg(a);
            parts.emplace_back(support(m), m.domain());
        }
        const SumReport rep = check_sum(parts);
        if (json()) {
            Json ov = Json::array();
            for (const auto& o : rep.overlaps) ov.push_back(Json{{"first", o.first + 1}, {"second", o.second + 1}, {"common", render_mask(o.common)}});
            out_ << Json{{"kind", to_string(rep.kind)}, {"overlaps", ov}, {"gap", render_mask(rep.gap)}}.dump() << "\n";
        } else {
            out_ << to_string(rep.kind) << "\n";
            for (const auto& o : rep.overlaps) out_ << "  overlap " << o.first + 1 << "," << o.second + 1 << " " << render_mask(o.common) << "\n";
            if (rep.gap.popcount() > 0) out_ << "  gap " << render_mask(rep.gap) << "\n";
        }
        return Ok;
    }
    if (verb == "cone") {
        if (rest.size() != 1) throw UsageError("usage: analyze cone RxC [--domain Z+|Q+] [--samples N] [--seed S]");
        const auto x = rest[0].find('x');
        if (x == std::string::npos) throw UsageError("bad shape '" + rest[0] + "'");
        Shape s;
        try {
            s = Shape{std::stoul(rest[0].substr(0, x)), std::stoul(rest[0].substr(x + 1))};
        } catch (const std::exception&) {
            throw UsageError("bad shape '" + rest[0] + "'");
        }
        const ConeReport r = cone_positivity_check(s, domain(DomainTag::nonneg_rationals()), opt_.samples.value_or(10000), opt_.seed);
        const bool ok = !r.positive_zero_divisor && !r.strictness_violation;
        if (json())
            out_ << Json{{"samples", r.samples}, {"zero_divisor", detail::pair_json(r.positive_zero_divisor)},
                         {"strictness_violation", detail::pair_json(r.strictness_violation)}}.dump() << "\n";
        else
            out_ << (ok ? "semifield laws hold on " : "violation found in ") << r.samples << " samples\n";
        return ok ? Ok : Negative;
    }
    throw UsageError("unknown analyze operation '" + verb + "'");
}

inline int Runner::complement() {
    if (opt_.args.size() != 1) throw UsageError("usage: complement <matrix>");
    emit_mask(main_complement(matrix_arg(opt_.args[0])));
    return Ok;
}

inline int Runner::verify(const std::string& suite) {
    SuiteResult r;
    if (suite == "paper-examples")
        r = run_worked_examples();
    else if (suite == "laws")
        r = run_laws(opt_.samples.value_or(10000), opt_.seed);
    else if (suite == "census")
        r = run_census();
    else
        throw UsageError("unknown suite '" + suite + "'");
    std::size_t passed = 0;
    for (const auto& c : r.cases) passed += c.passed ? 1 : 0;
    if (json()) {
        Json cases = Json::array();
        for (const auto& c : r.cases) cases.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out_ << Json{{"suite", r.suite}, {"passed", r.passed()}, {"cases", cases}}.dump() << "\n";
    } else {
        for (const auto& c : r.cases) out_ << (c.passed ? "PASS " : "FAIL ") << c.name << (c.passed ? "" : "\n     " + c.detail) << "\n";
        out_ << r.suite << ": " << passed << "/" << r.cases.size() << " passed\n";
    }
    return r.passed() ? Ok : Negative;
}

} // namespace cli

/// Runs one command line (without the program name).
inline int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact natural-product matrix algebra", "natprod"};
    app.require_subcommand(1, 1);
    cli::Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", opt.seed, "Seed for sampled checks");
        sub->add_option("--samples", opt.samples, "Sample count for sampled checks");
        sub->add_option("--domain", opt.domain, "Coefficient domain: Z, Q, Zn:<n>, Z+ or Q+");
        sub->add_option("--const", opt.constant, "Constant of integration");
        sub->add_option("--op", opt.op, "Carrier operation: nprod or add")->check(CLI::IsMember({"nprod", "add"}));
        // inputs are collected as extras: a positional option would strip the
        // brackets of "[a,b]" style arguments
        sub->allow_extras();
    };
    CLI::App* eval = app.add_subcommand("eval", "Matrix and super matrix operations");
    CLI::App* poly = app.add_subcommand("poly", "Matrix-coefficient polynomial operations");
    CLI::App* analyze = app.add_subcommand("analyze", "Finite structure and subspace analysis");
    CLI::App* complement = app.add_subcommand("complement", "Main complement mask of a matrix");
    CLI::App* verify = app.add_subcommand("verify", "Run a built-in suite: paper-examples, laws, census");
    for (CLI::App* sub : {eval, poly, analyze, complement, verify}) common(sub);

    try {
        std::vector<std::string> rev(argv.rbegin(), argv.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return cli::Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return cli::Usage;
    }

    for (CLI::App* sub : {eval, poly, analyze, complement, verify})
        if (sub->parsed()) opt.args = sub->remaining();
    for (const auto& a : opt.args)
        if (a.size() > 1 && a[0] == '-' && (a[1] == '-' || std::isalpha(static_cast<unsigned char>(a[1])))) {
            err << "error: unknown option '" << a << "'\n";
            return cli::Usage;
        }

    try {
        cli::Runner run(opt, out);
        if (complement->parsed()) return run.complement();
        if (opt.args.empty()) throw cli::UsageError("missing operation; try --help");
        if (verify->parsed()) {
            if (opt.args.size() != 1) throw cli::UsageError("usage: verify <suite>");
            return run.verify(opt.args[0]);
        }
        if (eval->parsed()) return run.eval();
        if (poly->parsed()) return run.poly();
        return run.analyze();
    } catch (const cli::UsageError& e) {
        err << "error: " << e.what() << "\n";
        return cli::Usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_negative_finding(e.kind()) ? cli::Negative : cli::Usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return cli::Usage;
    }
}

} // namespace natprod
