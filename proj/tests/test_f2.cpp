#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "telhom/f2.hpp"
#include "telhom/genrandom.hpp"

#include "oracle.hpp"

using telhom::Rng;
using telhom::f2::Echelon;
using telhom::f2::Matrix;
using telhom::f2::Vector;

TEST_CASE("vector bit ops across word boundaries") {
    Vector v(130);
    CHECK(v.is_zero());
    v.set(0, true);
    v.set(63, true);
    v.set(64, true);
    v.set(129, true);
    CHECK(v.popcount() == 4);
    CHECK(v.get(63));
    CHECK(v.get(64));
    CHECK_FALSE(v.get(65));
    CHECK(v.lowest_bit() == 0);
    v.flip(0);
    CHECK(v.lowest_bit() == 63);

    Vector w(130);
    w.set(64, true);
    v.xor_in(w);
    CHECK_FALSE(v.get(64));
    CHECK(v.popcount() == 2);
}

TEST_CASE("matrix multiply and apply match the naive oracle") {
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        Matrix a = telhom::random_matrix(rng, 19, 37);
        Matrix b = telhom::random_matrix(rng, 37, 23);
        Matrix ab = a * b;
        oracle::Mat expect = oracle::mul(oracle::from(a), oracle::from(b));
        CHECK(oracle::from(ab) == expect);

        Vector v(23);
        for (std::size_t i = 0; i < 23; ++i)
            if (rng.flip()) v.set(i, true);
        Vector lhs = ab.apply(v);
        Vector rhs = a.apply(b.apply(v));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("transpose is an involution and reverses products") {
    Rng rng(11);
    Matrix a = telhom::random_matrix(rng, 13, 29);
    Matrix b = telhom::random_matrix(rng, 29, 17);
    CHECK(a.transposed().transposed() == a);
    CHECK((a * b).transposed() == b.transposed() * a.transposed());
}

TEST_CASE("rank matches the oracle, kernel vectors die") {
    Rng rng(23);
    for (int t = 0; t < 10; ++t) {
        Matrix m = telhom::random_matrix(rng, 20, 31);
        std::size_t r = telhom::f2::rank(m);
        CHECK(r == oracle::rank(oracle::from(m)));
        auto kb = telhom::f2::kernel_basis(m);
        CHECK(kb.size() == 31 - r);
        for (const Vector& v : kb) CHECK(m.apply(v).is_zero());
    }
}

TEST_CASE("solve finds witnesses exactly when consistent") {
    Rng rng(31);
    Matrix m = telhom::random_matrix(rng, 14, 9);
    Vector x(9);
    x.set(2, true);
    x.set(7, true);
    Vector b = m.apply(x);
    auto s = telhom::f2::solve(m, b);
    REQUIRE(s.has_value());
    CHECK(m.apply(*s) == b);

    Matrix z(3, 4);
    Vector bad(3);
    bad.set(1, true);
    CHECK_FALSE(telhom::f2::solve(z, bad).has_value());
}

TEST_CASE("inverse round trips, singular matrices rejected") {
    Rng rng(41);
    for (int t = 0; t < 6; ++t) {
        Matrix inv_direct;
        Matrix m = telhom::random_invertible(rng, 12, &inv_direct);
        auto inv = telhom::f2::inverse(m);
        REQUIRE(inv.has_value());
        CHECK(*inv * m == Matrix::identity(12));
        CHECK(m * *inv == Matrix::identity(12));
        CHECK(m * inv_direct == Matrix::identity(12));
    }
    CHECK_FALSE(telhom::f2::inverse(Matrix(3, 3)).has_value());
    Matrix rect(2, 3);
    CHECK_THROWS(telhom::f2::inverse(rect));
}

TEST_CASE("echelon tracks span membership") {
    Echelon e(10);
    Vector a(10), b(10), c(10);
    a.set(1, true);
    b.set(1, true);
    b.set(4, true);
    c = a;
    c.xor_in(b);   // c = e4
    CHECK(e.insert(a));
    CHECK(e.insert(b));
    CHECK_FALSE(e.insert(c));
    CHECK(e.dim() == 2);
    CHECK(e.contains(c));
    Vector d(10);
    d.set(9, true);
    CHECK_FALSE(e.contains(d));
}

TEST_CASE("row xor and addition behave like xor") {
    Matrix m(2, 5);
    m.set(0, 1, true);
    m.set(1, 1, true);
    m.set(1, 3, true);
    m.xor_row_into(0, 1);   // row1 ^= row0
    CHECK_FALSE(m.get(1, 1));
    CHECK(m.get(1, 3));
    Matrix n = m + m;
    CHECK(n.is_zero());
}
