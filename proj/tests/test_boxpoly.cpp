#include "boxpoly/partition_counts.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace boxpoly;

TEST_CASE("partition enumeration in a box", "[boxpoly]") {
    auto p22 = partitions_in_box(2, 2);
    REQUIRE(p22.size() == 6);
    std::vector<std::vector<int>> expected{{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(p22[i].parts == expected[i]);

    CHECK(partitions_in_box(0, 5).size() == 1);
    CHECK(partitions_in_box(3, 3).size() == 20);
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            CHECK(BigInt(partitions_in_box(m, n).size()) == binomial(m + n, m));
}

TEST_CASE("the three box constructions agree", "[boxpoly]") {
    CHECK(box_poly(2, 2) == Polynomial({7, 12, 6}));
    CHECK(box_poly_oracle(2, 2) == Polynomial({7, 12, 6}));
    CHECK(box_poly_closed_form(2, 2) == Polynomial({7, 12, 6}));
    CHECK(box_poly(1, 2) == Polynomial({3, 3}));
    CHECK(box_poly_closed_form(1, 1) == Polynomial({1, 2}));
    CHECK(box_poly(0, 5) == Polynomial::constant(1));
    for (int m = 0; m <= 6; ++m) {
        CHECK(box_poly(m, 0) == Polynomial::monomial(static_cast<std::size_t>(m)));
        CHECK(box_poly_closed_form(m, 0) == Polynomial::monomial(static_cast<std::size_t>(m)));
    }
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            Polynomial b = box_poly(m, n);
            CHECK(b == box_poly_oracle(m, n));
            CHECK(b == box_poly_closed_form(m, n));
            CHECK(b == box_poly_via_alternating_sum(m, n));
        }
}

TEST_CASE("pascal-style recursion", "[boxpoly]") {
    for (int m = 1; m <= 10; ++m)
        for (int n = 1; n <= 10; ++n)
            CHECK(box_poly(m, n) == Polynomial::x() * box_poly(m - 1, n) + box_poly(m, n - 1).shift(1));
}

TEST_CASE("reflection symmetry in -n-x", "[boxpoly]") {
    for (int m = 0; m <= 10; ++m)
        for (int n = 0; n <= 10; ++n) {
            Polynomial b = box_poly(m, n);
            Polynomial reflected = b.scale_argument(-1).shift(BigRat(n));
            CHECK(reflected == (m % 2 == 0 ? b : -b));
        }
}

TEST_CASE("derivative lowers m", "[boxpoly]") {
    for (int m = 1; m <= 10; ++m)
        for (int n = 0; n <= 10; ++n)
            CHECK(box_poly(m, n).derivative() == BigRat(m + n) * box_poly(m - 1, n));
}

TEST_CASE("leading coefficient and constant term", "[boxpoly]") {
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) {
            Polynomial b = box_poly(m, n);
            CHECK(b.degree() == m);
            CHECK(b.leading_coefficient() == BigRat(binomial(m + n, m)));
            CHECK(b.eval(0) == BigRat(stirling2(m + n, n)));
        }
}

TEST_CASE("special values are Stirling numbers", "[boxpoly]") {
    auto v22 = box_special_values(2, 2);
    CHECK(v22.at0 == 7);
    CHECK(v22.at1 == 25);
    CHECK(v22.at1 == enumerate_partitions(5, 3, nullptr));  // S(5,3) by brute force
    auto v32 = box_special_values(3, 2);
    CHECK(v32.at_neg_n == -enumerate_partitions(5, 2, nullptr));  // -S(5,2) = -15
    CHECK(v32.at_neg_n == -15);
    for (int m = 0; m <= 7; ++m)
        for (int n = 0; n <= 7; ++n) {
            auto v = box_special_values(m, n);
            BigInt sign = (m % 2 == 0) ? 1 : -1;
            CHECK(v.at0 == stirling2(m + n, n));
            CHECK(v.at1 == stirling2(m + n + 1, n + 1));
            CHECK(v.at_neg_n == sign * stirling2(m + n, n));
            CHECK(v.at_neg_n_minus_1 == sign * stirling2(m + n + 1, n + 1));
        }
}

TEST_CASE("expansion in powers of x-1", "[boxpoly]") {
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) {
            Polynomial at1 = box_poly(m, n).shift(1);  // coefficients of (x-1)^j
            for (int j = 0; j <= m; ++j)
                CHECK(at1.coeff(static_cast<std::size_t>(j)) ==
                      BigRat(binomial(m + n, j) * stirling2(m + n - j + 1, n + 1)));
        }
}

TEST_CASE("splitting identity", "[boxpoly]") {
    auto s = box_split(2, 0, 1);
    CHECK(s.lhs == Polynomial({7, 12, 6}));
    CHECK(s.lhs == s.rhs);
    auto z = box_split(0, 3, 2);
    CHECK(z.lhs == Polynomial::constant(1));
    CHECK(z.rhs == Polynomial::constant(1));
    for (int m = 0; m <= 5; ++m)
        for (int n1 = 0; n1 <= 4; ++n1)
            for (int n2 = 0; n2 <= 4; ++n2) {
                auto sp = box_split(m, n1, n2);
                CHECK(sp.lhs == sp.rhs);
            }
}

TEST_CASE("odd-block counts via the half-integer evaluation", "[boxpoly]") {
    CHECK(box_at_minus_half_n_scaled(2, 2) == 4);
    CHECK(box_at_minus_half_n_scaled(1, 2) == 0);
    CHECK(box_at_minus_half_n_scaled(0, 4) == 1);
    CHECK(BigRat(odd_block_count_oracle(4, 2)) == box_at_minus_half_n_scaled(2, 2));
    for (int N = 1; N <= 10; ++N)
        for (int k = 1; k <= N; ++k)
            CHECK(box_at_minus_half_n_scaled(N - k, k) == BigRat(odd_block_count_oracle(N, k)));
}

TEST_CASE("odd-block convolution of Stirling numbers", "[boxpoly]") {
    CHECK(t_convolution(2, 2) == 4);
    CHECK(t_convolution(0, 2) == 1);
    CHECK_THROWS_AS(t_convolution(2, 3), std::invalid_argument);
    for (int m = 0; m <= 8; ++m)
        for (int n = 2; n <= 8; n += 2) CHECK(t_convolution(m, n) == box_at_minus_half_n_scaled(m, n));
    // h_{m/2}(2^2, 4^2, ..., n^2) for m, n both even
    for (int m = 0; m <= 8; m += 2)
        for (int n = 2; n <= 8; n += 2) {
            std::vector<BigRat> squares;
            for (int j = 2; j <= n; j += 2) squares.push_back(BigRat(j * j));
            CHECK(rational_series(squares, static_cast<unsigned>(m / 2))[static_cast<std::size_t>(m / 2)] ==
                  t_convolution(m, n));
        }
}

TEST_CASE("positive evaluation via both Stirling kinds", "[boxpoly]") {
    CHECK(box_at_positive_r_via_stirling(1, 1, 2) == 5);
    CHECK(box_poly(1, 1).eval(2) == 5);
    CHECK(box_at_positive_r_via_stirling(2, 2, 1) == 25);
    CHECK(box_at_positive_r_via_stirling(0, 4, 3) == 1);
    CHECK_THROWS_AS(box_at_positive_r_via_stirling(2, 2, 0), std::invalid_argument);
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            for (int r = 1; r <= 4; ++r)
                CHECK(box_at_positive_r_via_stirling(m, n, r) == box_poly(m, n).eval(BigRat(r)));
}

TEST_CASE("alternating binomial-Stirling sum hits the -1 evaluation", "[boxpoly]") {
    for (int n = 2; n <= 10; ++n)
        for (int k = 2; k <= n; ++k) {
            BigRat lhs = 0;
            for (int j = 0; j <= n; ++j) {
                BigRat term = BigRat(binomial(n, j) * stirling2(n - j, k));
                lhs += (j % 2 == 0) ? term : -term;
            }
            CHECK(lhs == box_poly(n - k, k).eval(-1));
        }
}
