#include "boxpoly/ffop.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace boxpoly;

namespace {
Polynomial random_poly(Rng& rng, int max_deg = 6) {
    std::vector<BigRat> c;
    int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg + 1)));
    for (int i = 0; i <= deg; ++i) c.push_back(rng.rational());
    return Polynomial(std::move(c));
}
}  // namespace

TEST_CASE("the operator is a delta operator for every modulus", "[ffop]") {
    // the 1/r-normalized operator sends x to the nonzero constant 1
    for (int r = 1; r <= 5; ++r) CHECK(ff_apply(r, Polynomial::x()) == Polynomial::constant(1));
    // r = 1 sums all positive derivative orders: E - Id, the forward difference
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        Polynomial p = random_poly(rng);
        CHECK(ff_apply(1, p) == p.forward_difference());
    }
    CHECK(ff_apply(2, Polynomial({0, -1, 0, 1})) == Polynomial({0, 0, 3}));  // F_2(x^3 - x) = 3x^2
}

TEST_CASE("shift invariance", "[ffop]") {
    Rng rng(32);
    for (int r = 1; r <= 4; ++r)
        for (int t = 0; t < 15; ++t) {
            Polynomial p = random_poly(rng);
            BigRat a = rng.rational();
            CHECK(ff_apply(r, p.shift(a)) == ff_apply(r, p).shift(a));
        }
}

TEST_CASE("block size counts mod r", "[ffop]") {
    CHECK(mod_r_block_count(4, 2, 2) == 4);
    CHECK(mod_r_block_count(5, 1, 4) == 1);
    // sizes ≡ 1 mod 3 summing to 4 in two blocks: impossible
    CHECK(mod_r_block_count(4, 2, 3) == 0);
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            for (int r = 1; r <= 4; ++r) {
                CAPTURE(n, k, r);
                CHECK(mod_r_block_count(n, k, r) ==
                      enumerate_partitions(n, k, [&](const BlockMasks& b) {
                          return predicates::block_sizes_one_mod(b, r);
                      }));
            }
}

TEST_CASE("mobius values from series inversion", "[ffop]") {
    for (int r = 1; r <= 5; ++r) CHECK(mobius_mod_r(1, r) == 1);
    CHECK(mobius_mod_r(3, 2) == -1);
    CHECK(mobius_mod_r(5, 2) == 9);
    CHECK(mobius_mod_r(2, 2) == 0);
    CHECK(mobius_mod_r(4, 3) == -1);  // two-element interval
    for (int n = 1; n <= 9; ++n)
        for (int r = 1; r <= 3; ++r) {
            CAPTURE(n, r);
            CHECK(mobius_mod_r(n, r) == mobius_mod_r_poset_oracle(n, r));
        }
    // full partition lattice: mu(n) = (-1)^{n-1} (n-1)!
    for (int n = 1; n <= 8; ++n) {
        BigInt expected = factorial(static_cast<unsigned>(n - 1));
        if (n % 2 == 0) expected = -expected;
        CHECK(mobius_mod_r(n, 1) == expected);
    }
}

TEST_CASE("series inversion round-trips", "[ffop]") {
    for (int r = 1; r <= 4; ++r) {
        PowerSeries f = ff_series(r, 9);
        PowerSeries h = f.compositional_inverse();
        PowerSeries back = f.compose(h);
        for (unsigned i = 0; i <= 9; ++i) CHECK(back[i] == (i == 1 ? BigRat(1) : BigRat(0)));
    }
    CHECK_THROWS_AS(PowerSeries(3, {1, 1, 0, 0}).compositional_inverse(), std::invalid_argument);
}

TEST_CASE("basic sequences", "[ffop]") {
    CHECK(basic_sequence(2, 2) == Polynomial::monomial(2));
    CHECK(basic_sequence(2, 3) == Polynomial({0, -1, 0, 1}));
    for (int r = 1; r <= 5; ++r) CHECK(basic_sequence(r, 1) == Polynomial::x());
    // r = 1: falling factorials
    for (int n = 0; n <= 6; ++n) CHECK(basic_sequence(1, n) == falling_factorial(static_cast<unsigned>(n)));

    for (int r = 1; r <= 4; ++r) {
        std::vector<Polynomial> basis;
        for (int n = 0; n <= 8; ++n) basis.push_back(basic_sequence(r, n));
        CHECK(basis[0] == Polynomial::constant(1));
        for (int n = 1; n <= 8; ++n) {
            CAPTURE(r, n);
            CHECK(basis[static_cast<std::size_t>(n)].eval(0) == 0);
            CHECK(basis[static_cast<std::size_t>(n)].degree() == n);
            CHECK(ff_apply(r, basis[static_cast<std::size_t>(n)]) == BigRat(n) * basis[static_cast<std::size_t>(n - 1)]);
        }
        // the theorem's partition sum produces the same polynomials
        for (int n = 0; n <= 8; ++n) CHECK(basis[static_cast<std::size_t>(n)] == basic_sequence_partition_oracle(r, n));
    }
}

TEST_CASE("basic sequences are of binomial type", "[ffop]") {
    Rng rng(33);
    for (int r = 1; r <= 4; ++r) {
        std::vector<Polynomial> basis;
        for (int n = 0; n <= 6; ++n) basis.push_back(basic_sequence(r, n));
        for (int n = 0; n <= 6; ++n)
            for (int t = 0; t < 25; ++t) {
                BigRat x = rng.rational(), y = rng.rational();
                BigRat lhs = basis[static_cast<std::size_t>(n)].eval(x + y);
                BigRat rhs = 0;
                for (int k = 0; k <= n; ++k)
                    rhs += BigRat(binomial(n, k)) * basis[static_cast<std::size_t>(k)].eval(x) *
                           basis[static_cast<std::size_t>(n - k)].eval(y);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("squared operator carries the box polynomial", "[ffop]") {
    auto id22 = ff2_box_identity(2, 2);
    CHECK(id22.lhs == id22.rhs);
    auto id01 = ff2_box_identity(0, 1);
    CHECK(id01.lhs == Polynomial::constant(1));
    CHECK(id01.rhs == Polynomial::constant(1));
    auto id31 = ff2_box_identity(3, 1);
    CHECK(id31.lhs.degree() == 3);
    CHECK(id31.lhs == id31.rhs);
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            auto id = ff2_box_identity(m, n);
            CAPTURE(m, n);
            CHECK(id.lhs == id.rhs);
        }
}
