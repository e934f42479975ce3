#include <natprod/natprod.hpp>

#include <gtest/gtest.h>

using namespace natprod;

namespace {

const DomainTag Q = DomainTag::rationals();

const Error* caught(auto&& f) {
    static thread_local std::optional<Error> last;
    last.reset();
    try {
        f();
    } catch (const Error& e) {
        last = e;
    }
    return last ? &*last : nullptr;
}

} // namespace

TEST(Text, MatrixRoundTrip) {
    for (const char* t : {"[1]", "[1 -2/3;0 4]", "[7;6;0;2;35]", "[0 0 0 0;0 0 0 0]"}) EXPECT_EQ(render_matrix(parse_matrix(t, Q)), t);
    EXPECT_EQ(render_matrix(parse_matrix("  [ 1  2 ; 3 4 ; ]  ", Q)), "[1 2;3 4]");
    EXPECT_EQ(render_matrix(parse_matrix("[2/4 -0]", Q)), "[1/2 0]");
}

TEST(Text, SuperRoundTrip) {
    for (const char* t : {"[1 2 | 3 4 | 5;9 8 | 7 6 | 5;0 1 | 2 7 | 1]", "[7 8 0 | 9 4 2;--;0 1 2 | 5 7 8;1 2 3 | 0 1 0]",
                          "[1;--;2;3]", "[1/8 | 7 5 | 3 2 4 -1]"})
        EXPECT_EQ(render_super(parse_super(t, Q)), t);
    const SuperMatrix s = parse_super("[1 | 2;--;3 | 4]", Q);
    EXPECT_EQ(s.ptype().row_cuts(), std::set<std::size_t>{1});
    EXPECT_EQ(s.ptype().col_cuts(), std::set<std::size_t>{1});
}

TEST(Text, ParseErrorsCarryPositions) {
    const Error* e = caught([] { parse_matrix("[1 2;3 x]", Q); });
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->kind(), ErrorKind::ParseError);
    EXPECT_EQ(e->line(), 1u);
    EXPECT_TRUE(e->column().has_value());

    e = caught([] { parse_super("[1 2 | 3;4 | 5 6]", Q); });
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->kind(), ErrorKind::RaggedCuts);

    for (const char* bad : {"[1 2;3]", "[]", "[| 1]", "[1 |]", "[1 2", "1 2]", "[1;;2]"}) {
        e = caught([&] { parse_super(bad, Q); });
        ASSERT_NE(e, nullptr) << bad;
        EXPECT_TRUE(e->kind() == ErrorKind::ParseError || e->kind() == ErrorKind::RaggedCuts) << bad;
    }
    EXPECT_EQ(caught([] { parse_matrix("[1 | 2]", Q); })->kind(), ErrorKind::ParseError);
}

TEST(Text, PolynomialForms) {
    const MatPoly p = parse_poly("[3 0;1 2] + [2 6;1 5] * x - [3 1;0 0] * x^3", Q);
    EXPECT_EQ(render_poly(p), "[3 0;1 2] + [2 6;1 5] * x + [-3 -1;0 0] * x^3");
    EXPECT_EQ(parse_poly(render_poly(p), Q), p);
    EXPECT_EQ(render_poly(parse_poly("- [1 2] * x", Q)), "[-1 -2] * x");
    EXPECT_EQ(render_poly(parse_poly("[1 2] * x^2 + [1 0] * x^2", Q)), "[2 2] * x^2");
    EXPECT_EQ(render_poly(parse_poly("# comment line\n[1 2] # trailing\n", Q)), "[1 2]");
    EXPECT_EQ(render_poly(MatPoly(Shape{1, 2}, Q)), "[0 0]");
    EXPECT_EQ(caught([] { parse_poly("[1 2] + [1 2 3] * x", Q); })->kind(), ErrorKind::ShapeMismatch);
    EXPECT_NE(caught([] { parse_poly("[1 2] * y", Q); }), nullptr);
    EXPECT_NE(caught([] { parse_poly("[1 2] +", Q); }), nullptr);
}

TEST(Text, SuperPolynomialsKeepCuts) {
    const MatPoly p = parse_poly("[1 | 2] + [3 | 4] * x", Q);
    ASSERT_TRUE(p.ptype().has_value());
    EXPECT_EQ(render_poly(p), "[1 | 2] + [3 | 4] * x");
    EXPECT_NE(caught([] { parse_poly("[1 | 2] + [3 4] * x", Q); }), nullptr);
}

TEST(Text, JsonRoundTrip) {
    const SuperMatrix s = parse_super("[1/2 | 3;--;-4 | 5]", Q);
    EXPECT_EQ(super_from_json(to_json(s)), s);
    const MatPoly p = parse_poly("[1 | 2] + [3/7 | 4] * x^4", Q);
    EXPECT_EQ(poly_from_json(to_json(p)), p);
    EXPECT_EQ(to_json(parse_matrix("[1 2]", Q)).dump(), R"({"cols":2,"domain":"Q","entries":[["1","2"]],"rows":1})");
    EXPECT_THROW(matrix_from_json(Json::parse(R"({"domain":"Q","rows":1,"cols":2,"entries":[["1"]]})")), Error);
    EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows":1})")), Error);
}
