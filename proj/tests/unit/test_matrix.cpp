#include <natprod/natprod.hpp>

#include <gtest/gtest.h>

#include "../oracles.hpp"

using namespace natprod;

namespace {

const DomainTag Q = DomainTag::rationals();
const DomainTag Z = DomainTag::integers();

Matrix mq(const char* t) { return parse_matrix(t, Q); }
Matrix mz(const char* t) { return parse_matrix(t, Z); }

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InvalidArgument;
}

oracle::Flat flat(const Matrix& m) {
    oracle::Flat f;
    for (const auto& e : m.entries()) f.push_back(oracle::frac(e.to_string()));
    return f;
}

} // namespace

TEST(Matrix, Construction) {
    EXPECT_EQ(kind_of([] { Matrix(Shape{0, 3}, Q); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Matrix(Shape{2, 2}, Q, {Scalar(Q, 1)}); }), ErrorKind::ShapeMismatch);
    EXPECT_EQ(kind_of([] { Matrix(Shape{1, 1}, Q, {Scalar(Z, 1)}); }), ErrorKind::DomainMismatch);
    EXPECT_EQ(Matrix::identity(2, Q), mq("[1 0;0 1]"));
    EXPECT_EQ(Matrix::ones(Shape{1, 3}, Z), mz("[1 1 1]"));
    EXPECT_TRUE(Matrix::zero(Shape{2, 3}, Q).is_zero());
}

TEST(Matrix, SumAndNaturalProduct) {
    EXPECT_EQ(mat_add(mq("[0 3 -2;1 0 0;0 0 4]"), mq("[1 2 1;0 1 3;-6 1 2]")), mq("[1 5 -1;1 1 3;-6 1 6]"));
    EXPECT_EQ(nproduct(mq("[6 1 2;0 3 4;2 1 0]"), mq("[3 0 1;2 1 0;0 1 2]")), mq("[18 0 2;0 3 0;0 1 0]"));
    EXPECT_EQ(kind_of([] { nproduct(mq("[1 2]"), mq("[1 2 3]")); }), ErrorKind::ShapeMismatch);
    EXPECT_EQ(kind_of([] { mat_add(mq("[1 2]"), mz("[1 2]")); }), ErrorKind::DomainMismatch);
    // natural product is defined for rectangular matrices, usual product is not
    EXPECT_EQ(nproduct(mq("[1 2 3;4 5 6]"), mq("[1 0 1;0 1 0]")), mq("[1 0 3;0 5 0]"));
    EXPECT_EQ(kind_of([] { uproduct(mq("[1 2 3;4 5 6]"), mq("[1 0 1;0 1 0]")); }), ErrorKind::ShapeMismatch);
}

TEST(Matrix, UsualProductAgainstOracle) {
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const Matrix a = random_matrix(rng, Shape{n, n}, Q), b = random_matrix(rng, Shape{n, n}, Q);
        ASSERT_EQ(flat(uproduct(a, b)), oracle::matmul(flat(a), flat(b), n));
    }
    EXPECT_NE(uproduct(mq("[3 4;2 0]"), mq("[1 2;0 1]")), uproduct(mq("[1 2;0 1]"), mq("[3 4;2 0]")));
}

TEST(Matrix, PowersAndIdempotents) {
    EXPECT_EQ(npower(mq("[2 -1;0 3]"), 3), mq("[8 -1;0 27]"));
    EXPECT_EQ(npower(mq("[2 -1;0 3]"), 0), Matrix::ones(Shape{2, 2}, Q));
    EXPECT_TRUE(is_idempotent(mq("[1 0 1;0 0 1]")));
    EXPECT_FALSE(is_idempotent(mq("[1 2]")));
    EXPECT_TRUE(is_idempotent(parse_matrix("[3 4]", DomainTag::mod(6))));
    EXPECT_EQ(trivial_idempotent_count(Shape{2, 2}), 16);
    EXPECT_EQ(trivial_idempotent_count(Shape{10, 10}), BigInt(1) << 100);
    EXPECT_EQ(trivial_idempotents(Shape{2, 2}).size(), 16u);
    EXPECT_EQ(kind_of([] { trivial_idempotents(Shape{5, 5}); }), ErrorKind::TooLarge);
}

TEST(Matrix, NaturalInverse) {
    EXPECT_EQ(natural_inverse(mq("[2 -1/3;5 7]")), mq("[1/2 -3;1/5 1/7]"));
    EXPECT_EQ(natural_inverse(mz("[1 -1]")), mz("[1 -1]"));
    EXPECT_EQ(kind_of([] { natural_inverse(mz("[1 2]")); }), ErrorKind::NotInvertible);
    EXPECT_EQ(kind_of([] { natural_inverse(mq("[1 0]")); }), ErrorKind::NotInvertible);
    EXPECT_EQ(natural_inverse(parse_matrix("[3 7]", DomainTag::mod(10))), parse_matrix("[7 3]", DomainTag::mod(10)));
}

TEST(Matrix, SupportAndOrthogonality) {
    const Matrix x = mq("[3 0;0 -2]");
    EXPECT_EQ(render_mask(support(x)), "[1 0;0 1]");
    EXPECT_EQ(render_mask(main_complement(x)), "[0 1;1 0]");
    EXPECT_TRUE(is_orthogonal(x, mq("[0 5;1 0]")));
    EXPECT_FALSE(is_orthogonal(x, mq("[1 5;0 0]")));
    const SupportMask m = SupportMask::from_index(Shape{2, 2}, 0b1001);
    EXPECT_EQ(render_mask(m), "[1 0;0 1]");
    EXPECT_EQ(m.index(), 0b1001u);
    EXPECT_TRUE(m.subset_of(SupportMask::full(Shape{2, 2})));
    EXPECT_EQ(m.complement().popcount(), 2u);
}

TEST(Matrix, Divides) {
    EXPECT_EQ(*divides(mz("[2 3 -1]"), mz("[4 9 5]")), mz("[2 3 -5]"));
    EXPECT_FALSE(divides(mz("[2 3]"), mz("[3 3]")).has_value());
    EXPECT_EQ(kind_of([] { divides(mz("[0 2 3 5 7 8]"), mz("[5 4 6 10 21 24]")); }), ErrorKind::ZeroDivisorEntry);
    EXPECT_EQ(kind_of([] { divides(mq("[1]"), mq("[1]")); }), ErrorKind::UnsupportedDomain);
}

TEST(Matrix, PrimeRowsAndZeroDivisors) {
    EXPECT_TRUE(is_prime_row(mz("[2 3 5 7 11]")));
    EXPECT_FALSE(is_prime_row(mz("[2 4]")));
    EXPECT_FALSE(is_prime_row(mz("[2;3]")));
    const auto w = zero_divisor_witness(mz("[3 0 4]"));
    ASSERT_TRUE(w.has_value());
    EXPECT_FALSE(w->is_zero());
    EXPECT_TRUE(nproduct(mz("[3 0 4]"), *w).is_zero());
    EXPECT_FALSE(zero_divisor_witness(mz("[3 1 4]")).has_value());
    EXPECT_EQ(*zero_divisor_witness(mz("[0 0]")), mz("[1 1]"));
}

TEST(Matrix, CanonicalOrder) {
    std::set<Matrix> s{mq("[2]"), mq("[1 0]"), mq("[-1]"), mq("[0 5]")};
    std::vector<std::string> order;
    for (const auto& m : s) order.push_back(render_matrix(m));
    EXPECT_EQ(order, (std::vector<std::string>{"[-1]", "[2]", "[0 5]", "[1 0]"}));
}
