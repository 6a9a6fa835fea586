#include "cmfix/fixed_points.hpp"
#include "cmfix/parameters.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace cmfix;
using testing_support::random_nonzero_rational;
using testing_support::random_rational;

namespace {

ParamSet random_params(int l, std::mt19937_64& rng, int span = 9, int max_den = 6)
{
    std::vector<Rational> k(static_cast<std::size_t>(l));
    Rational sum = 0;
    for (int i = 0; i + 1 < l; ++i) {
        k[static_cast<std::size_t>(i)] = random_rational(rng, span, max_den);
        sum += k[static_cast<std::size_t>(i)];
    }
    k[static_cast<std::size_t>(l - 1)] = -sum;
    return ParamSet(l, random_rational(rng, span, max_den), std::move(k));
}

// Both smoothness products written out directly from their definitions.
bool quiver_product_nonzero(const ThetaVector& th, int n)
{
    const int l = th.modulus;
    Rational sigma = 0;
    for (int i = 0; i < l; ++i) {
        sigma += th[i];
    }
    Rational prod = sigma;
    for (int i = 1; i <= l - 1; ++i) {
        for (int j = i; j <= l - 1; ++j) {
            Rational partial = 0;
            for (int t = i; t <= j; ++t) {
                partial += th[t];
            }
            for (int s = -(n - 1); s <= n - 1; ++s) {
                prod *= partial + s * sigma;
            }
        }
    }
    return !is_zero(prod);
}

bool gl1n_product_nonzero(const ParamSet& p, int n)
{
    Rational prod = p.a;
    for (int i = 0; i < p.l; ++i) {
        for (int j = 0; j < p.l; ++j) {
            if (i == j) {
                continue;
            }
            for (int r = 0; r < n; ++r) {
                prod *= p.k[static_cast<std::size_t>(i)] - p.k[static_cast<std::size_t>(j)] - r * p.a;
            }
        }
    }
    return !is_zero(prod);
}

std::vector<Rational> sorted(std::vector<Rational> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_SUITE("parameters") {

TEST_CASE("ParamSet validates its k-vector")
{
    CHECK_NOTHROW(ParamSet(2, 1, {make_rational(1), make_rational(-1)}));
    CHECK_THROWS_AS(ParamSet(2, 1, {make_rational(1), make_rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(ParamSet(3, 1, {make_rational(1), make_rational(-1)}), std::invalid_argument);
}

TEST_CASE("theta_from_ak examples")
{
    const Rational a = make_rational(3, 7);
    CHECK(theta_from_ak(ParamSet(1, a, {Rational{0}})) == ThetaVector(1, {-a}));
    CHECK(theta_from_ak(ParamSet(4, 0, std::vector<Rational>(4))) == ThetaVector(4));
    std::mt19937_64 rng(testing_support::seed);
    for (int l = 1; l <= 6; ++l) {
        for (int t = 0; t < 200; ++t) {
            const auto p = random_params(l, rng);
            const auto th = theta_from_ak(p);
            Rational telescoped = -p.a;
            for (int i = 0; i < l; ++i) {
                telescoped += p.k[static_cast<std::size_t>(positive_mod(-i, l))] -
                              p.k[static_cast<std::size_t>(positive_mod(1 - i, l))];
            }
            CHECK(th.sum() == telescoped);
            CHECK(th.sum() == -p.a);
        }
    }
}

TEST_CASE("ak_from_theta inverts the dictionary")
{
    std::mt19937_64 rng(testing_support::seed + 1);
    for (int l = 1; l <= 6; ++l) {
        for (int t = 0; t < 1000; ++t) {
            const auto p = random_params(l, rng);
            REQUIRE(ak_from_theta(theta_from_ak(p)) == p);
        }
        ThetaVector th(l);
        for (int i = 0; i < l; ++i) {
            th[i] = random_rational(rng);
        }
        CHECK(theta_from_ak(ak_from_theta(th)) == th);
    }
    const auto zero = ak_from_theta(ThetaVector(3));
    CHECK(zero.a == 0);
    CHECK(zero.k == std::vector<Rational>(3));
    const Rational a = make_rational(5, 2), b = make_rational(-1, 3);
    const auto solved = ak_from_theta(ThetaVector(2, {-a - 2 * b, Rational{2 * b}}));
    CHECK(solved.a == a);
    CHECK(solved.k == std::vector<Rational>{-b, b});
}

TEST_CASE("weyl_on_ak")
{
    std::mt19937_64 rng(testing_support::seed + 2);
    for (int l = 2; l <= 5; ++l) {
        for (int t = 0; t < 100; ++t) {
            const auto p = random_params(l, rng);
            for (int j = 0; j < l; ++j) {
                const auto q = weyl_on_ak(j, p);
                CHECK(theta_from_ak(q) == reflect_theta(j, theta_from_ak(p)));
                CHECK(weyl_on_ak(j, q) == p);
                CHECK(q.a == p.a);
            }
        }
    }
    const Rational a = 2;
    const ParamSet p(3, a, {make_rational(1), make_rational(-3), make_rational(2)});
    CHECK(weyl_on_ak(0, p) == ParamSet(3, a, {Rational{-3 + 2}, Rational{1 - 2}, make_rational(2)}));
}

TEST_CASE("smooth_quiver and smooth_gl1n")
{
    CHECK_FALSE(smooth_quiver(ThetaVector(3), 2));
    CHECK(smooth_quiver(ThetaVector(1, {make_rational(-2)}), 4));
    CHECK_FALSE(smooth_quiver(ThetaVector(1, {Rational{0}}), 4));
    CHECK_FALSE(smooth_gl1n(ParamSet(2, 0, {make_rational(1), make_rational(-1)}), 2));
    CHECK(smooth_gl1n(ParamSet(1, 3, {Rational{0}}), 5));
    CHECK_FALSE(smooth_gl1n(ParamSet(1, 0, {Rational{0}}), 5));

    // n = 1 with and without the leading factor a
    const ParamSet no_a(3, 0, {make_rational(1), make_rational(2), make_rational(-3)});
    CHECK_FALSE(smooth_gl1n(no_a, 1));
    CHECK(smooth_gl1n(no_a, 1, true));
    CHECK(smooth_gl1n(no_a, 1, true) == smooth_cyclic(no_a.k));

    std::mt19937_64 rng(testing_support::seed + 3);
    for (auto [l, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        int smooth = 0;
        for (int t = 0; t < 1000; ++t) {
            // small denominators so that singular parameters turn up often
            const auto p = random_params(l, rng, 3, 2);
            const bool q = smooth_quiver(theta_from_ak(p), n);
            const bool g = smooth_gl1n(p, n);
            REQUIRE(q == g);
            CHECK(q == quiver_product_nonzero(theta_from_ak(p), n));
            CHECK(g == gl1n_product_nonzero(p, n));
            smooth += g ? 1 : 0;
        }
        CHECK(smooth > 0);
        CHECK(smooth < 1000);
    }
}

TEST_CASE("smooth_cyclic and smooth_g4")
{
    CHECK_FALSE(smooth_cyclic({Rational{0}, Rational{0}}));
    CHECK(smooth_cyclic({make_rational(-2), make_rational(2)}));
    CHECK(smooth_cyclic({make_rational(1, 2), make_rational(-1, 3), make_rational(-1, 6)}));
    CHECK_THROWS_AS(smooth_cyclic({make_rational(1), make_rational(1)}), std::invalid_argument);

    CHECK_FALSE(smooth_g4(0, 2, -2));
    CHECK_FALSE(smooth_g4(1, 1, -2));
    CHECK(smooth_g4(1, 2, -3));
    CHECK_THROWS_AS(smooth_g4(1, 1, 1), std::invalid_argument);

    std::mt19937_64 rng(testing_support::seed + 4);
    for (int t = 0; t < 300; ++t) {
        const Rational k0 = random_rational(rng, 2, 1), k1 = random_rational(rng, 2, 1);
        const Rational k2 = -k0 - k1;
        const bool distinct_nonzero = k0 != 0 && k1 != 0 && k2 != 0 && k0 != k1 && k0 != k2 && k1 != k2;
        CHECK(smooth_g4(k0, k1, k2) == distinct_nonzero);
    }
}

TEST_CASE("transport: two-by-two example")
{
    std::mt19937_64 rng(testing_support::seed + 5);
    for (int t = 0; t < 20; ++t) {
        const Rational a = random_nonzero_rational(rng), b = random_rational(rng);
        const ParamSet p(2, a, {-b, b});
        const auto out = transport(p, 2, ResidueVector(4));
        CHECK(out.a == 2 * a);
        CHECK(out.k == std::vector<Rational>{-b + a / 2, b - a / 2, -b - a / 2, b + a / 2});
        CHECK(transport_via_theta(p, 2, ResidueVector(4)) == out);
    }
}

TEST_CASE("transport: l = 1 at d = 0")
{
    std::mt19937_64 rng(testing_support::seed + 6);
    for (int k = 1; k <= 6; ++k) {
        const Rational a = random_nonzero_rational(rng);
        const auto out = transport(ParamSet(1, a, {Rational{0}}), k, ResidueVector(k));
        CHECK(out.a == k * a);
        for (int i = 1; i <= k; ++i) {
            const Rational want = a * (i - Rational{k + 1} / 2);
            CHECK(out.k[static_cast<std::size_t>(i % k)] == want);
        }
    }
}

TEST_CASE("transport agrees with the theta route")
{
    std::mt19937_64 rng(testing_support::seed + 7);
    for (auto [l, n, k] : std::vector<std::tuple<int, int, int>>{
             {1, 2, 2}, {1, 3, 2}, {1, 4, 2}, {1, 4, 3}, {2, 2, 2}, {2, 3, 2}, {3, 2, 2}, {2, 2, 3}}) {
        for (const auto& d : enumerate_E(k, l, n)) {
            for (int t = 0; t < 5; ++t) {
                const auto p = random_params(l, rng);
                const auto closed = transport(p, k, d);
                const auto routed = transport_via_theta(p, k, d);
                CHECK(closed == routed);
                CHECK(sorted(closed.k) == sorted(routed.k));
                CHECK(closed.a == k * p.a);
            }
        }
    }
    for (const auto& d : enumerate_E(2, 1, 2)) {
        const auto p = ParamSet(1, random_nonzero_rational(rng), {Rational{0}});
        CHECK(transport(p, 2, d) == transport_via_theta(p, 2, d));
    }
}

TEST_CASE("transport is linear")
{
    std::mt19937_64 rng(testing_support::seed + 8);
    for (auto [l, n, k] : std::vector<std::tuple<int, int, int>>{{2, 2, 2}, {2, 3, 2}, {3, 2, 2}, {1, 4, 2}}) {
        for (const auto& d : enumerate_E(k, l, n)) {
            const auto p1 = random_params(l, rng), p2 = random_params(l, rng);
            const Rational s = random_rational(rng);
            CHECK(transport(p1 + p2, k, d) == transport(p1, k, d) + transport(p2, k, d));
            CHECK(transport(s * p1, k, d) == s * transport(p1, k, d));
        }
    }
}

TEST_CASE("repeat_theta")
{
    const ThetaVector th(2, {make_rational(1), make_rational(-3)});
    const auto big = repeat_theta(th, 3);
    CHECK(big.modulus == 6);
    for (int j = 0; j < 6; ++j) {
        CHECK(big[j] == th[j % 2]);
    }
    CHECK(big.sum() == 3 * th.sum());
}

TEST_CASE("cyclic CM surfaces")
{
    const Rational b = make_rational(5, 3);
    const auto s = cyclic_cm_polynomial({-b, b});
    CHECK(same_root_multiset(s.roots, {Rational{-2 * b}, Rational{2 * b}}));
    CHECK_THROWS_AS(cyclic_cm_polynomial({Rational{1}, Rational{0}}), std::invalid_argument);

    std::mt19937_64 rng(testing_support::seed + 9);
    for (int t = 0; t < 50; ++t) {
        const auto p = random_params(4, rng);
        const auto surf = cyclic_cm_polynomial(p.k);
        Rational total = 0;
        for (const auto& r : surf.roots) {
            total += r;
        }
        CHECK(total == 0);
        // coefficient of e^{l-1} is minus the root sum, leading coefficient 1
        const auto coeffs = expand_roots(surf.roots);
        REQUIRE(coeffs.size() == 5);
        CHECK(coeffs[4] == 1);
        CHECK(coeffs[3] == 0);
        Rational prod = 1;
        for (const auto& r : surf.roots) {
            prod *= r;
        }
        CHECK(coeffs[0] == prod);
    }
    CHECK(same_root_multiset({Rational{1}, Rational{2}, Rational{1}}, {Rational{1}, Rational{1}, Rational{2}}));
    CHECK_FALSE(same_root_multiset({Rational{1}, Rational{2}, Rational{2}}, {Rational{1}, Rational{1}, Rational{2}}));
}

TEST_CASE("G4 surfaces match cyclic surfaces")
{
    std::mt19937_64 rng(testing_support::seed + 10);
    for (int t = 0; t < 100; ++t) {
        const Rational k0 = random_rational(rng), k1 = random_rational(rng), k2 = -k0 - k1;
        const auto heart = cyclic_cm_polynomial({Rational{0}, 3 * k0, 3 * k1, 3 * k2});
        CHECK(same_root_multiset(heart.roots, {Rational{0}, 12 * k0, 12 * k1, 12 * k2}));
        CHECK(same_root_multiset(heart.roots, g4_heart_roots(k0, k1, k2)));
        const auto spade = cyclic_cm_polynomial({2 * k0, 2 * k1, 2 * k2, -k0, -k1, -k2});
        CHECK(same_root_multiset(spade.roots,
                                 {-6 * k0, -6 * k1, -6 * k2, 12 * k0, 12 * k1, 12 * k2}));
        CHECK(same_root_multiset(spade.roots, g4_spade_roots(k0, k1, k2)));
        CHECK(expand_roots(heart.roots) == expand_roots(g4_heart_roots(k0, k1, k2)));
    }
}

}
