#include "boxpoly/boxpoly.hpp"
#include "boxpoly/setpart.hpp"

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

TEST_CASE("eval is exact Horner", "[polynomial]") {
    Polynomial p({7, 12, 6});  // 6x^2+12x+7
    CHECK(p.eval(0) == 7);
    CHECK(p.eval(-1) == 1);
    CHECK(Polynomial().eval(5) == 0);
    CHECK(p.eval(BigRat(1, 2)) == BigRat(29, 2));
}

TEST_CASE("shift expands p(x+a)", "[polynomial]") {
    CHECK(Polynomial::monomial(2).shift(1) == Polynomial({1, 2, 1}));
    CHECK(Polynomial::x().shift(BigRat(-1, 2)) == Polynomial({BigRat(-1, 2), 1}));

    Rng rng(101);
    for (int t = 0; t < 30; ++t) {
        Polynomial p = random_poly(rng);
        BigRat a = rng.rational();
        CHECK(p.shift(a).shift(-a) == p);
    }
}

TEST_CASE("forward difference drops degree by k", "[polynomial]") {
    CHECK(Polynomial::monomial(4).forward_difference(2) == Polynomial({14, 24, 12}));
    CHECK(Polynomial::x().forward_difference() == Polynomial::constant(1));
    CHECK(Polynomial::constant(1).forward_difference() == Polynomial());

    Rng rng(102);
    for (int t = 0; t < 20; ++t) {
        Polynomial p = random_poly(rng);
        unsigned k = static_cast<unsigned>(rng.below(4));
        Polynomial d = p.forward_difference(k);
        if (static_cast<int>(k) <= p.degree())
            CHECK(d.degree() == p.degree() - static_cast<int>(k));
        else
            CHECK(d.is_zero());
    }
}

TEST_CASE("forward difference agrees with the binomial expansion of (E-I)^k", "[polynomial]") {
    Rng rng(103);
    for (int t = 0; t < 20; ++t) {
        Polynomial p = random_poly(rng);
        for (unsigned k = 0; k <= 6; ++k) {
            Polynomial expanded;
            for (unsigned r = 0; r <= k; ++r) {
                BigRat sign = ((k - r) % 2 == 0) ? 1 : -1;
                expanded = expanded + p.shift(BigRat(r)) * (sign * BigRat(binomial(k, r)));
            }
            CHECK(p.forward_difference(k) == expanded);
        }
    }
}

TEST_CASE("difference and shift commute", "[polynomial]") {
    Rng rng(104);
    for (int t = 0; t < 30; ++t) {
        Polynomial p = random_poly(rng);
        BigRat a = rng.rational();
        CHECK(p.forward_difference().shift(a) == p.shift(a).forward_difference());
    }
}

TEST_CASE("difference of x*p splits as x*diff + shifted lower difference", "[polynomial]") {
    // Δⁿ(x p) = x Δⁿ(p) + n E(Δ^{n-1}(p))
    Rng rng(105);
    for (int t = 0; t < 20; ++t) {
        Polynomial p = random_poly(rng);
        for (unsigned nn = 1; nn <= 5; ++nn) {
            Polynomial lhs = (Polynomial::x() * p).forward_difference(nn);
            Polynomial rhs = Polynomial::x() * p.forward_difference(nn) +
                             BigRat(nn) * p.forward_difference(nn - 1).shift(1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("derivative", "[polynomial]") {
    CHECK(Polynomial({7, 12, 6}).derivative() == Polynomial({12, 12}));
    CHECK(Polynomial::constant(3).derivative().is_zero());
    CHECK(box_poly(2, 2).derivative() == BigRat(4) * box_poly(1, 2));
    CHECK(box_poly(1, 2) == Polynomial({3, 3}));
}

TEST_CASE("scale_argument", "[polynomial]") {
    CHECK(Polynomial::monomial(2).scale_argument(2) == Polynomial::monomial(2, 4));
    Rng rng(106);
    for (int t = 0; t < 20; ++t) {
        Polynomial p = random_poly(rng);
        CHECK(p.scale_argument(1) == p);
        CHECK(p.scale_argument(2).scale_argument(BigRat(1, 2)) == p);
    }
}

TEST_CASE("poly_gcd", "[polynomial]") {
    CHECK(poly_gcd(Polynomial({-1, 0, 1}), Polynomial({-1, 1})) == Polynomial({-1, 1}));
    Polynomial b32 = box_poly(3, 2);
    CHECK(poly_gcd(b32, b32.derivative()) == Polynomial::constant(1));
    Polynomial p({2, 4});
    CHECK(poly_gcd(p, Polynomial()) == p.monic());
    CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), std::domain_error);
}

TEST_CASE("rational_series", "[polynomial]") {
    CHECK(rational_series({BigRat(1)}, 3) == std::vector<BigRat>{1, 1, 1, 1});
    CHECK(rational_series({BigRat(1), BigRat(2)}, 2) == std::vector<BigRat>{1, 3, 7});
    CHECK(rational_series({}, 2) == std::vector<BigRat>{1, 0, 0});
    // S(m+2,2) = h_m(1,2): brute-force anchor for the third coefficient
    BigInt s42 = enumerate_partitions(4, 2, nullptr);
    CHECK(rational_series({BigRat(1), BigRat(2)}, 2)[2] == BigRat(s42));
}

TEST_CASE("series coefficients reproduce box evaluations", "[polynomial]") {
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n)
            for (const BigRat& x0 : {BigRat(0), BigRat(-1), BigRat(2, 3)}) {
                std::vector<BigRat> poles;
                for (int i = 0; i <= n; ++i) poles.push_back(x0 + i);
                CHECK(rational_series(poles, static_cast<unsigned>(m))[static_cast<std::size_t>(m)] ==
                      box_poly(m, n).eval(x0));
            }
}

TEST_CASE("coefficient-string serialization", "[polynomial]") {
    Polynomial p({7, 12, 6});
    CHECK(p.to_coefficient_strings() == std::vector<std::string>{"7", "12", "6"});
    CHECK(Polynomial::from_coefficient_strings({"7", "12", "6"}) == p);
    Polynomial q({BigRat(-1, 2), 0, 3});
    CHECK(Polynomial::from_coefficient_strings(q.to_coefficient_strings()) == q);
    CHECK(q.to_coefficient_strings() == std::vector<std::string>{"-1/2", "0", "3"});
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("text rendering", "[polynomial]") {
    CHECK(Polynomial({7, 12, 6}).to_text() == "6x^2+12x+7");
    CHECK(Polynomial().to_text() == "0");
    CHECK(Polynomial({1, -2, 0, 1}).to_text() == "x^3-2x+1");
    CHECK(Polynomial({BigRat(1, 3), BigRat(-1, 2)}).to_text() == "-1/2x+1/3");
}
