#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotabaxter/linalg.hpp"
#include "rotabaxter/random.hpp"

using namespace rb;

namespace {

Matrix mat2(const Field& f, long long a, long long b, long long c, long long d) {
    Matrix m(f, 2, 2);
    m.at(0, 0) = Scalar::from_int(f, a);
    m.at(0, 1) = Scalar::from_int(f, b);
    m.at(1, 0) = Scalar::from_int(f, c);
    m.at(1, 1) = Scalar::from_int(f, d);
    return m;
}

Vec ints(const Field& f, std::initializer_list<long long> xs) {
    Vec v;
    for (long long x : xs) v.push_back(Scalar::from_int(f, x));
    return v;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
    Field q = Field::rationals();
    Scalar half = Scalar::rational(1, 2);
    Scalar third = Scalar::rational(1, 3);
    CHECK((half + third).str() == "5/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half - half).is_zero());
    CHECK(Scalar::rational(2, 4) == half);
    CHECK(Scalar::rational(-3, -6) == half);  // sign normalization
    CHECK(Scalar::rational(3, -6).str() == "-1/2");
    CHECK(half.inverse().str() == "2");
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), ContractError);
    CHECK(Scalar::parse(q, "7/3").str() == "7/3");
    CHECK(Scalar::parse(q, "-4").str() == "-4");

    Field f7 = Field::fp(7);
    CHECK(Scalar::from_int(f7, 10).str() == "3");
    CHECK(Scalar::from_int(f7, -1).str() == "6");
    CHECK((Scalar::from_int(f7, 3) * Scalar::from_int(f7, 5)).str() == "1");
    CHECK(Scalar::from_int(f7, 3).inverse().str() == "5");
    CHECK(Scalar::parse(f7, "1/2").str() == "4");
    CHECK_THROWS_AS(Field::fp(6), ContractError);
    CHECK_THROWS_AS(Scalar::from_int(f7, 1) + Scalar::one(q), ContractError);
}

TEST_CASE("scalar field axioms on random triples") {
    for (Field f : {Field::rationals(), Field::fp(97)}) {
        Rng rng(kDefaultSeed);
        for (int t = 0; t < 200; ++t) {
            Scalar a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(f));
            CHECK((a + b) - b == a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
        }
    }
}

TEST_CASE("solve: identity, inconsistent, underdetermined") {
    Field f = Field::rationals();
    auto x = solve(Matrix::identity(f, 2), ints(f, {3, 5}));
    REQUIRE(x);
    CHECK(vec_eq(*x, ints(f, {3, 5})));

    Matrix a = mat2(f, 1, 1, 2, 2);
    CHECK(!solve(a, ints(f, {1, 3})));

    auto y = solve(a, ints(f, {1, 2}));
    REQUIRE(y);
    CHECK(vec_eq(*y, ints(f, {1, 0})));  // free variable pinned to zero

    CHECK_THROWS_AS(solve(a, ints(f, {1, 2, 3})), ContractError);
}

TEST_CASE("kernel and rank on the pinned examples") {
    Field f = Field::rationals();
    CHECK(kernel(Matrix::identity(f, 3)).dim() == 0);
    CHECK(kernel(Matrix::zero(f, 2, 2)) == Subspace::full(f, 2));

    Subspace k = kernel(mat2(f, 1, 1, 2, 2));
    CHECK(k.dim() == 1);
    CHECK(k == Subspace::span(f, 2, {ints(f, {1, -1})}));

    CHECK(rank(Matrix::identity(f, 4)) == 4);
    CHECK(rank(Matrix::zero(f, 3, 5)) == 0);
    Matrix r31 = Matrix::from_rows(f, {ints(f, {1, 2}), ints(f, {2, 4}), ints(f, {3, 6})}, 2);
    CHECK(rank(r31) == 1);
}

TEST_CASE("rank-nullity and solve consistency on random matrices") {
    for (Field f : {Field::rationals(), Field::fp(97)}) {
        Rng rng(kDefaultSeed + 1);
        for (int t = 0; t < 200; ++t) {
            int rows = static_cast<int>(rng.uniform(1, 8));
            int cols = static_cast<int>(rng.uniform(1, 8));
            Matrix a = rng.matrix(f, rows, cols, 5);
            CHECK(kernel(a).dim() + rank(a) == cols);

            Vec x = rng.vector(f, cols, 5);
            Vec b = a.apply(x);
            auto sol = solve(a, b);
            REQUIRE(sol);
            CHECK(vec_eq(a.apply(*sol), b));
        }
    }
}

TEST_CASE("subspace operations and canonical forms") {
    Field f = Field::rationals();
    Subspace s1 = Subspace::span(f, 3, {ints(f, {1, 1, 0}), ints(f, {2, 2, 0})});
    CHECK(s1.dim() == 1);
    CHECK(s1.contains(ints(f, {-3, -3, 0})));
    CHECK(!s1.contains(ints(f, {1, 0, 0})));

    Subspace s2 = Subspace::span(f, 3, {ints(f, {0, 1, 1})});
    Subspace sum = s1.sum(s2);
    CHECK(sum.dim() == 2);
    CHECK(sum.contains(ints(f, {1, 2, 1})));
    CHECK(s1.intersect(s2).dim() == 0);

    Subspace s3 = Subspace::span(f, 3, {ints(f, {1, 0, 0}), ints(f, {0, 1, 0})});
    Subspace s4 = Subspace::span(f, 3, {ints(f, {1, 1, 0}), ints(f, {1, -1, 0})});
    CHECK(s3 == s4);  // same subspace, same canonical form
    CHECK(s3.intersect(sum).dim() == 1);

    Vec coords = s3.coordinates(ints(f, {4, -7, 0}));
    CHECK(vec_eq(coords, ints(f, {4, -7})));
    CHECK_THROWS_AS(s3.coordinates(ints(f, {0, 0, 1})), ContractError);
}

TEST_CASE("quotient space projection/section identities") {
    Field f = Field::rationals();
    Rng rng(kDefaultSeed + 2);
    for (int t = 0; t < 50; ++t) {
        int n = static_cast<int>(rng.uniform(1, 6));
        int g = static_cast<int>(rng.uniform(0, n));
        std::vector<Vec> gens;
        for (int i = 0; i < g; ++i) gens.push_back(rng.vector(f, n, 3));
        Subspace w = Subspace::span(f, n, gens);
        QuotientSpace qs = quotient_space(w);
        CHECK(qs.dim == n - w.dim());
        CHECK(qs.projection * qs.section == Matrix::identity(f, qs.dim));
        // v - section(projection(v)) lies in W
        for (int k = 0; k < 5; ++k) {
            Vec v = rng.vector(f, n, 5);
            Vec back = qs.section.apply(qs.projection.apply(v));
            CHECK(w.contains(vec_sub(v, back)));
        }
    }
}

TEST_CASE("kron flattening convention matches row-major matrix products") {
    Field f = Field::rationals();
    Rng rng(kDefaultSeed + 3);
    for (int t = 0; t < 20; ++t) {
        Matrix x = rng.matrix(f, 3, 2, 4);
        Matrix a = rng.matrix(f, 2, 2, 4);
        Matrix b = rng.matrix(f, 3, 3, 4);
        // vec(X A) = (I (x) A^T) vec(X), vec(B X) = (B (x) I) vec(X)
        Vec lhs1 = kron(Matrix::identity(f, 3), a.transpose()).apply(x.flatten());
        CHECK(vec_eq(lhs1, (x * a).flatten()));
        Vec lhs2 = kron(b, Matrix::identity(f, 2)).apply(x.flatten());
        CHECK(vec_eq(lhs2, (b * x).flatten()));
    }
}
