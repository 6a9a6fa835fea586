#include "cmfix/selftest.hpp"

#include "cmfix/fixed_points.hpp"
#include "cmfix/parameters.hpp"
#include "cmfix/quiver.hpp"
#include "cmfix/wreath.hpp"

#include <random>
#include <sstream>

namespace cmfix {

namespace {

struct Grid {
    int l, n, k;
};

const std::vector<Grid> small_grid{{1, 2, 2}, {1, 3, 2}, {1, 4, 2}, {1, 4, 3},
                                   {2, 2, 2}, {2, 3, 2}, {3, 2, 2}, {2, 2, 3}};

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    return make_rational(num(rng), den(rng));
}

ParamSet random_params(int l, std::mt19937_64& rng)
{
    std::vector<Rational> k(static_cast<std::size_t>(l));
    Rational sum = 0;
    for (int i = 0; i + 1 < l; ++i) {
        k[static_cast<std::size_t>(i)] = random_rational(rng);
        sum += k[static_cast<std::size_t>(i)];
    }
    k[static_cast<std::size_t>(l - 1)] = -sum;
    return ParamSet(l, random_rational(rng), std::move(k));
}

CheckResult check_worked_examples()
{
    bool ok = residues(Partition{4, 2, 1}, 3) == ResidueVector(3, {3, 2, 2});
    const auto c = core(Partition{4, 2, 1}, 3);
    ok = ok && c.core == Partition{1} && c.removals == 2;
    const Rational a = make_rational(1), b = make_rational(2);
    const auto t = transport(ParamSet(2, a, {-b, b}), 2, ResidueVector(4));
    ok = ok && t.a == 2 * a &&
         t.k == std::vector<Rational>{-b + a / 2, b - a / 2, -b - a / 2, b + a / 2};
    return {"worked_examples", ok, ""};
}

CheckResult check_pairing(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> entry(-5, 5);
    int failures = 0;
    for (int l = 2; l <= 5; ++l) {
        for (int trial = 0; trial < 200; ++trial) {
            ResidueVector d(l);
            ThetaVector theta(l);
            for (int i = 0; i < l; ++i) {
                d[i] = entry(rng);
                theta[i] = random_rational(rng);
            }
            const int j = trial % l;
            const Rational expected = pairing(d, theta) - (j == 0 ? theta[0] : Rational{0});
            if (pairing(reflect_dim(j, d), reflect_theta(j, theta)) != expected) {
                ++failures;
            }
        }
    }
    return {"pairing", failures == 0, std::to_string(failures) + " failures"};
}

CheckResult check_delta_bijection()
{
    int failures = 0;
    for (const auto& g : small_grid) {
        const auto e = enumerate_E(g.k, g.l, g.n);
        const auto cores = enumerate_core_tuples(g.k, g.l, g.n);
        if (e.size() != cores.size()) {
            ++failures;
        }
        for (const auto& gamma : cores) {
            if (delta_map(delta_inverse(gamma, g.k, g.l, g.n), g.l) != gamma) {
                ++failures;
            }
        }
    }
    return {"delta_bijection", failures == 0, std::to_string(failures) + " failures"};
}

CheckResult check_counting()
{
    int failures = 0;
    for (const auto& g : small_grid) {
        std::size_t total = 0;
        for (const auto& c : component_skeleton(g.l, g.n, g.k)) {
            total += enumerate_multipartitions(g.k * g.l, c.r).size();
            if (c.labels.size() != enumerate_multipartitions(g.k * g.l, c.r).size()) {
                ++failures;
            }
        }
        if (total != enumerate_multipartitions(g.l, g.n).size()) {
            ++failures;
        }
    }
    return {"counting_law", failures == 0, std::to_string(failures) + " failures"};
}

CheckResult check_transport(std::mt19937_64& rng)
{
    int failures = 0;
    for (const auto& g : small_grid) {
        for (const auto& d : enumerate_E(g.k, g.l, g.n)) {
            const auto p = random_params(g.l, rng);
            if (transport(p, g.k, d) != transport_via_theta(p, g.k, d)) {
                ++failures;
            }
        }
    }
    return {"transport_routes", failures == 0, std::to_string(failures) + " failures"};
}

CheckResult check_smoothness(std::mt19937_64& rng)
{
    int failures = 0;
    for (auto [l, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto p = random_params(l, rng);
            if (smooth_gl1n(p, n) != smooth_quiver(theta_from_ak(p), n)) {
                ++failures;
            }
        }
    }
    return {"smoothness_dictionary", failures == 0, std::to_string(failures) + " failures"};
}

CheckResult check_characters()
{
    int failures = 0;
    for (auto [l, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 2}}) {
        const auto& t = character_table(l, n);
        Integer sum = 0;
        for (const auto& lambda : t.characters) {
            const Integer deg = character_degree(lambda);
            sum += deg * deg;
        }
        if (sum != t.order) {
            ++failures;
        }
    }
    return {"character_degrees", failures == 0, std::to_string(failures) + " failures"};
}

CheckResult check_filtration()
{
    int failures = 0;
    std::ostringstream detail;
    for (auto [l, n, k] : std::vector<Grid>{{1, 2, 2}, {1, 3, 2}, {1, 4, 2}, {2, 2, 2}, {2, 3, 2}, {3, 2, 2}}) {
        for (const auto& gamma : enumerate_core_tuples(k, l, n)) {
            if (!verify_filtration(l, n, k, gamma).pass) {
                ++failures;
                detail << "(" << l << "," << n << "," << k << "," << to_string(gamma) << ") ";
            }
        }
    }
    return {"filtration", failures == 0, std::to_string(failures) + " failures " + detail.str()};
}

CheckResult check_block_identity(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> dim(0, 2);
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int l = 1 + trial % 3;
        const int k = 1 + (trial / 3) % 2;
        const int m = k * l;
        ResidueVector d(m);
        for (int i = 0; i < m; ++i) {
            d[i] = dim(rng);
        }
        auto rep = RationalRep::zero(d);
        for (int i = 0; i < m; ++i) {
            for (auto* mat : {&rep.X[static_cast<std::size_t>(i)], &rep.Y[static_cast<std::size_t>(i)]}) {
                for (std::size_t r = 0; r < mat->rows(); ++r) {
                    for (std::size_t c = 0; c < mat->cols(); ++c) {
                        (*mat)(r, c) = entry(rng);
                    }
                }
            }
        }
        const auto big = moment_map(block_immersion(rep, l));
        const auto small = moment_map(rep);
        for (int i = 0; i < l; ++i) {
            std::size_t offset = 0;
            for (int t = 0; t < k; ++t) {
                const int j = i + t * l;
                const auto n = static_cast<std::size_t>(d[j]);
                if (big[static_cast<std::size_t>(i)].block(offset, offset, n, n) != small[static_cast<std::size_t>(j)]) {
                    ++failures;
                }
                offset += n;
            }
        }
    }
    return {"block_identity", failures == 0, std::to_string(failures) + " failures"};
}

CheckResult check_g4(std::mt19937_64& rng)
{
    int failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const Rational k0 = random_rational(rng), k1 = random_rational(rng), k2 = -k0 - k1;
        const auto heart = cyclic_cm_polynomial({Rational{0}, 3 * k0, 3 * k1, 3 * k2});
        const auto spade = cyclic_cm_polynomial({2 * k0, 2 * k1, 2 * k2, -k0, -k1, -k2});
        if (!same_root_multiset(heart.roots, g4_heart_roots(k0, k1, k2)) ||
            !same_root_multiset(spade.roots, g4_spade_roots(k0, k1, k2))) {
            ++failures;
        }
    }
    return {"g4_surfaces", failures == 0, std::to_string(failures) + " failures"};
}

} // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;
    out.push_back(check_worked_examples());
    out.push_back(check_pairing(rng));
    out.push_back(check_delta_bijection());
    out.push_back(check_counting());
    out.push_back(check_transport(rng));
    out.push_back(check_smoothness(rng));
    out.push_back(check_characters());
    out.push_back(check_filtration());
    out.push_back(check_block_identity(rng));
    out.push_back(check_g4(rng));
    return out;
}

} // namespace cmfix
