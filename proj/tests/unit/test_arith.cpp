#include "cmfix/cyclotomic.hpp"
#include "cmfix/rational.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace cmfix;
using testing_support::random_rational;

namespace {

CyclotomicNumber random_cyclotomic(int order, std::mt19937_64& rng)
{
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(order)));
    for (auto& x : c) {
        x = random_rational(rng, 5, 4);
    }
    return CyclotomicNumber::from_coefficients(order, std::move(c));
}

CyclotomicNumber z(int order, std::int64_t e = 1) { return CyclotomicNumber::root_of_unity(order, e); }
CyclotomicNumber q(int order, std::int64_t p, std::int64_t d = 1) { return CyclotomicNumber(order, make_rational(p, d)); }

} // namespace

TEST_SUITE("arith") {

TEST_CASE("rationals parse exactly and print canonically")
{
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(parse_rational("-2") == -2);
    CHECK(parse_rational("0/5") == 0);
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(make_rational(4, 2)) == "2");
    for (const char* bad : {"", "1.5", "1/0", " 1", "a", "1/2/3", "--1", "6/-4"}) {
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    }
    const auto list = parse_rational_list("-1/2,3,0");
    REQUIRE(list.size() == 3);
    CHECK(list[0] == make_rational(-1, 2));
    CHECK(parse_int_list("-2,0,7") == std::vector<std::int64_t>{-2, 0, 7});
}

TEST_CASE("rationals stay in lowest terms")
{
    std::mt19937_64 rng(testing_support::seed);
    for (int i = 0; i < 200; ++i) {
        const Rational a = random_rational(rng), b = random_rational(rng);
        for (const Rational& r : {Rational{a + b}, Rational{a * b}, Rational{a - b}}) {
            CHECK(gcd(r.get_num(), r.get_den()) == 1);
            CHECK(r.get_den() > 0);
        }
    }
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic_mul examples")
{
    CHECK(cyclotomic_mul(z(3), z(3, 2)) == q(3, 1));
    CHECK((q(3, 1) + z(3) + z(3, 2)).is_zero());
    CHECK(cyclotomic_mul(z(4), z(4)) == q(4, -1));
    CHECK_THROWS_AS(cyclotomic_mul(z(3), z(4)), std::invalid_argument);
    CHECK_THROWS_AS(z(3) + z(6), std::invalid_argument);
}

TEST_CASE("embed examples")
{
    CHECK(embed(z(2), 4) == q(4, -1));
    CHECK(embed(z(2), 4) == z(4, 2));
    for (int m : {1, 2, 3, 4, 6, 12}) {
        CHECK(embed(q(1, 1), m) == q(m, 1));
    }
    const auto w = embed(z(3), 6);
    CHECK(w == z(6, 2));
    CHECK(cyclotomic_mul(cyclotomic_mul(w, w), w) == q(6, 1));
    CHECK_THROWS_AS(embed(z(4), 6), std::invalid_argument);
}

TEST_CASE("field axioms on random samples")
{
    std::mt19937_64 rng(testing_support::seed);
    for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
        for (int t = 0; t < 25; ++t) {
            const auto a = random_cyclotomic(m, rng), b = random_cyclotomic(m, rng), c = random_cyclotomic(m, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == q(m, 1));
                CHECK((b / a) * a == b);
            }
        }
    }
    CHECK_THROWS_AS(q(5, 0).inverse(), std::domain_error);
}

TEST_CASE("embedding is injective and multiplicative")
{
    std::mt19937_64 rng(testing_support::seed + 1);
    for (auto [l, m] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}, {2, 6}, {4, 12}, {3, 12}, {1, 5}}) {
        for (int t = 0; t < 20; ++t) {
            const auto a = random_cyclotomic(l, rng), b = random_cyclotomic(l, rng);
            CHECK(embed(a * b, m) == embed(a, m) * embed(b, m));
            CHECK(embed(a + b, m) == embed(a, m) + embed(b, m));
            CHECK((embed(a, m) == embed(b, m)) == (a == b));
        }
    }
}

TEST_CASE("sum of all m-th roots of unity vanishes")
{
    for (int m = 2; m <= 12; ++m) {
        for (std::int64_t g = 1; g < m; ++g) {
            if (std::gcd(g, static_cast<std::int64_t>(m)) != 1) {
                continue;
            }
            CyclotomicNumber s(m);
            for (int j = 0; j < m; ++j) {
                s += z(m, g * j);
            }
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("galois action and conjugation")
{
    CHECK(z(4).conj() == z(4, 3));
    CHECK(z(5, 2).galois(3) == z(5, 6));
    CHECK((z(3) * z(3).conj()) == q(3, 1));
    CHECK(z(7).pow(7) == q(7, 1));
    CHECK(z(7).pow(-1) == z(7, 6));
    CHECK(q(3, 2, 3).as_rational() == make_rational(2, 3));
    CHECK_FALSE(z(3).as_rational().has_value());
}

TEST_CASE("equality compares across orders by embedding")
{
    CHECK(z(2) == q(4, -1));
    CHECK(z(3) == z(6, 2));
    CHECK(z(3) != z(6));
}

}
