#include "cmfix/wreath.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

using namespace cmfix;

namespace {

const std::vector<std::pair<int, int>> table_sizes{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}};

Multipartition mp(std::initializer_list<Partition> parts) { return Multipartition(parts); }

// Filtration check with an arbitrary bijection from labels of W to labels of W'.
bool filtration_holds(int l, int n, int k, const Multipartition& gamma,
                      const std::function<Multipartition(const Multipartition&)>& label)
{
    const int m = k * l;
    const int r = (n - total_size(gamma)) / k;
    const int field = std::lcm(l, m);
    for (const auto& cls : character_table(l, n).classes) {
        std::map<Multipartition, CyclotomicNumber> image;
        for (const auto& [lambda, w] : idempotent_coordinates(class_sum(cls.type, l))) {
            if (!w.is_zero() && core_tuple(lambda, k) == gamma) {
                image.emplace(label(lambda), embed(w, field));
            }
        }
        if (filtration_degree(from_idempotent_coordinates(m, r, field, image)) > cls.codim) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_SUITE("wreath_characters") {

TEST_CASE("class sizes")
{
    auto sizes = [](int l, int n) {
        std::vector<Integer> out;
        for (const auto& c : enumerate_classes(l, n)) {
            out.push_back(c.size);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(sizes(1, 3) == std::vector<Integer>{1, 2, 3});
    CHECK(sizes(2, 1) == std::vector<Integer>{1, 1});
    const auto s22 = sizes(2, 2);
    CHECK(s22.size() == 5);
    CHECK(std::accumulate(s22.begin(), s22.end(), Integer{0}) == 8);
    for (int l = 1; l <= 4; ++l) {
        for (int n = 1; n <= 4; ++n) {
            const auto s = sizes(l, n);
            CHECK(std::accumulate(s.begin(), s.end(), Integer{0}) == group_order(l, n));
        }
    }
    CHECK(group_order(3, 4) == 81 * 24);
}

TEST_CASE("classes agree with brute-force conjugacy")
{
    for (auto [l, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {1, 4}, {4, 1}}) {
        const oracle::WreathGroup g(l, n);
        const auto brute = g.conjugacy_classes();
        const auto classes = enumerate_classes(l, n);
        REQUIRE(classes.size() == brute.size());
        for (const auto& c : classes) {
            REQUIRE(brute.count(c.type) == 1);
            CHECK(c.size == Integer{static_cast<long>(brute.at(c.type).size())});
            CHECK(centralizer_order(c.type, l) * c.size == group_order(l, n));
            const auto& rep = brute.at(c.type).front();
            CHECK(inverse_class(c.type) == g.class_type(g.inverse(rep)));
        }
    }
}

TEST_CASE("codim agrees with the rank of w - 1")
{
    CHECK(codim(mp({Partition{1, 1, 1}, Partition{}})) == 0);
    CHECK(codim(mp({Partition{2, 1}, Partition{}})) == 1);
    CHECK(codim(mp({Partition{1}, Partition{1}})) == 1);
    for (auto [l, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        const oracle::WreathGroup g(l, n);
        for (const auto& w : g.elements()) {
            CHECK(codim(g.class_type(w)) == n - g.fixed_space_dim(w));
        }
    }
}

TEST_CASE("symmetric group characters match the Frobenius formula")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            for (const auto& mu : enumerate_partitions(n)) {
                const auto v = character_value(Multipartition{lambda}, Multipartition{mu});
                CHECK(v == CyclotomicNumber(1, Rational{oracle::frobenius_character(lambda, mu)}));
            }
        }
    }
}

TEST_CASE("characters of the cyclic group")
{
    for (int l = 1; l <= 6; ++l) {
        for (int i = 0; i < l; ++i) {
            auto lambda = empty_multipartition(l);
            lambda[static_cast<std::size_t>(i)] = Partition{1};
            for (int c = 0; c < l; ++c) {
                auto type = empty_multipartition(l);
                type[static_cast<std::size_t>(c)] = Partition{1};
                CHECK(character_value(lambda, type) == CyclotomicNumber::root_of_unity(l, i * c));
            }
        }
    }
}

TEST_CASE("character tables match induced characters")
{
    for (auto [l, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {1, 4}, {4, 1}}) {
        const oracle::WreathGroup g(l, n);
        const auto brute = g.conjugacy_classes();
        const auto& t = character_table(l, n);
        for (std::size_t x = 0; x < t.characters.size(); ++x) {
            for (std::size_t c = 0; c < t.classes.size(); ++c) {
                const auto& rep = brute.at(t.classes[c].type).front();
                CHECK(t.values[x][c] == g.induced_character(t.characters[x], rep));
            }
        }
    }
}

TEST_CASE("orthogonality and degrees")
{
    for (auto [l, n] : table_sizes) {
        const auto& t = character_table(l, n);
        const std::size_t h = t.classes.size();
        REQUIRE(t.characters.size() == h);
        auto identity_class = empty_multipartition(l);
        identity_class[0] = Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
        const auto id = t.class_index.at(identity_class);
        Integer squares = 0;
        for (std::size_t x = 0; x < h; ++x) {
            const Integer deg = character_degree(t.characters[x]);
            squares += deg * deg;
            CHECK(t.values[x][id] == CyclotomicNumber(l, Rational{deg}));
            for (std::size_t y = 0; y < h; ++y) {
                CyclotomicNumber s(l);
                for (std::size_t c = 0; c < h; ++c) {
                    s += t.values[x][c] * t.values[y][c].conj() * Rational{t.classes[c].size};
                }
                CHECK(s == CyclotomicNumber(l, x == y ? Rational{t.order} : Rational{0}));
            }
        }
        CHECK(squares == t.order);
        CHECK(t.order == group_order(l, n));
        for (std::size_t c = 0; c < h; ++c) {
            for (std::size_t d = 0; d < h; ++d) {
                CyclotomicNumber s(l);
                for (std::size_t x = 0; x < h; ++x) {
                    s += t.values[x][c] * t.values[x][d].conj();
                }
                const Rational want = c == d ? Rational{centralizer_order(t.classes[c].type, l)} : Rational{0};
                CHECK(s == CyclotomicNumber(l, want));
            }
        }
    }
}

TEST_CASE("central idempotents")
{
    for (auto [l, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 2}}) {
        const auto& t = character_table(l, n);
        CentralElement total = zero_element(l, n, l);
        for (const auto& lambda : t.characters) {
            const auto e = central_idempotent(lambda, l);
            CHECK(multiply(e, e) == e);
            total = total + e;
            for (const auto& other : t.characters) {
                if (other != lambda) {
                    CHECK(multiply(e, central_idempotent(other, l)).is_zero());
                }
            }
        }
        CHECK(total == identity_element(l, n, l));
    }
    // trivial character: coefficient 1/|W| on every class sum
    auto trivial = empty_multipartition(2);
    trivial[0] = Partition{2};
    const auto e = central_idempotent(trivial, 2);
    for (const auto& c : enumerate_classes(2, 2)) {
        CHECK(e.coefficient(c.type) == CyclotomicNumber(2, make_rational(1, 8)));
    }
}

TEST_CASE("class algebra product matches brute force")
{
    for (auto [l, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        const oracle::WreathGroup g(l, n);
        const auto classes = enumerate_classes(l, n);
        for (const auto& a : classes) {
            for (const auto& b : classes) {
                const auto got = multiply(class_sum(a.type, l), class_sum(b.type, l));
                const auto want = oracle::class_product(g, a.type, b.type);
                for (const auto& c : classes) {
                    const auto it = want.find(c.type);
                    const Rational expected = it == want.end() ? Rational{0} : Rational{it->second};
                    CHECK(got.coefficient(c.type) == CyclotomicNumber(l, expected));
                }
            }
        }
    }
}

TEST_CASE("idempotent coordinates round-trip")
{
    std::mt19937_64 rng(testing_support::seed);
    for (auto [l, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        CentralElement z = zero_element(l, n, l);
        for (const auto& c : enumerate_classes(l, n)) {
            z.set(c.type, CyclotomicNumber(l, testing_support::random_rational(rng)) +
                              CyclotomicNumber::root_of_unity(l, 1) * testing_support::random_rational(rng));
        }
        CHECK(from_idempotent_coordinates(l, n, l, idempotent_coordinates(z)) == z);
    }
}

TEST_CASE("filtration degree")
{
    CHECK(filtration_degree(identity_element(2, 3, 2)) == 0);
    CHECK(filtration_degree(zero_element(2, 3, 2)) == 0);
    CHECK(filtration_degree(class_sum(mp({Partition{2, 1}, Partition{}}), 2)) == 1);
    CHECK(filtration_degree(class_sum(mp({Partition{1, 1}, Partition{1}}), 2)) == 1);
    for (const auto& lambda : character_table(2, 2).characters) {
        CHECK(filtration_degree(central_idempotent(lambda, 2)) == 2);
    }
}

TEST_CASE("i_gamma_star")
{
    // identity goes to identity when gamma collects every label
    const auto id = i_gamma_star(identity_element(1, 2, 1), mp({Partition{}}), 2);
    CHECK(id == identity_element(2, 1, 2));

    // idempotents of the wrong core die
    const Multipartition gamma{Partition{1}, Partition{}};
    for (const auto& lambda : character_table(2, 3).characters) {
        const auto image = i_gamma_star(central_idempotent(lambda, 2), gamma, 2);
        if (core_tuple(lambda, 2) != gamma) {
            CHECK(image.is_zero());
        } else {
            CHECK(image == central_idempotent(beta_flat_k_gamma(lambda, 2, gamma), 4));
            CHECK(i_gamma_star(central_idempotent(lambda, 2), gamma, 2, LabelConvention::Quiver) ==
                  central_idempotent(beta_k_gamma(lambda, 2, gamma), 4));
        }
    }

    // algebra morphism on random products
    std::mt19937_64 rng(testing_support::seed + 1);
    for (auto [l, n, k] : std::vector<std::tuple<int, int, int>>{{1, 2, 2}, {2, 2, 2}, {1, 3, 2}}) {
        for (const auto& g : enumerate_core_tuples(k, l, n)) {
            for (int t = 0; t < 3; ++t) {
                CentralElement x = zero_element(l, n, l), y = zero_element(l, n, l);
                for (const auto& c : enumerate_classes(l, n)) {
                    x.set(c.type, CyclotomicNumber(l, testing_support::random_rational(rng)));
                    y.set(c.type, CyclotomicNumber(l, testing_support::random_rational(rng)));
                }
                const auto lhs = i_gamma_star(multiply(x, y), g, k);
                const auto rhs = multiply(i_gamma_star(x, g, k), i_gamma_star(y, g, k));
                CHECK(lhs == rhs);
                CHECK(i_gamma_star(x + y, g, k) == i_gamma_star(x, g, k) + i_gamma_star(y, g, k));
            }
        }
    }
    CHECK_THROWS_AS(i_gamma_star(identity_element(2, 2, 2), mp({Partition{1}, Partition{}}), 2),
                    std::invalid_argument);
}

TEST_CASE("filtration is preserved under both conventions")
{
    for (auto [l, n, k] : std::vector<std::tuple<int, int, int>>{
             {1, 2, 2}, {1, 3, 2}, {1, 4, 2}, {2, 2, 2}, {2, 3, 2}, {3, 2, 2}}) {
        for (const auto& gamma : enumerate_core_tuples(k, l, n)) {
            for (auto conv : {LabelConvention::Gordon, LabelConvention::Quiver}) {
                const auto report = verify_filtration(l, n, k, gamma, conv);
                CHECK(report.pass);
                CHECK(report.certificates.size() == enumerate_classes(l, n).size());
                for (const auto& cert : report.certificates) {
                    CHECK(cert.image_degree <= cert.codim);
                    if (cert.codim == n) {
                        CHECK(cert.ok);
                    }
                }
            }
        }
    }
}

TEST_CASE("filtration check rejects a scrambled labelling")
{
    // l = 1, n = 4, k = 2: all of P[4] lands in P^2[2]; swapping two image labels must break the filtration.
    const Multipartition gamma{Partition{}};
    auto correct = [&](const Multipartition& lam) { return beta_flat_k_gamma(lam, 2, gamma); };
    CHECK(filtration_holds(1, 4, 2, gamma, correct));

    const auto labels = enumerate_multipartitions(1, 4);
    std::vector<Multipartition> images;
    for (const auto& lam : labels) {
        images.push_back(correct(lam));
    }
    int broken = 0;
    int tried = 0;
    for (std::size_t a = 0; a < images.size(); ++a) {
        for (std::size_t b = a + 1; b < images.size(); ++b) {
            auto swapped = [&](const Multipartition& lam) {
                const auto img = correct(lam);
                if (img == images[a]) {
                    return images[b];
                }
                if (img == images[b]) {
                    return images[a];
                }
                return img;
            };
            ++tried;
            broken += filtration_holds(1, 4, 2, gamma, swapped) ? 0 : 1;
        }
    }
    CHECK(tried == 10);
    CHECK(broken > 0);
}

}
