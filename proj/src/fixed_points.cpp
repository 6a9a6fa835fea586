#include "cmfix/fixed_points.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cmfix {

namespace {

void require_positive(int v, const char* name)
{
    if (v < 1) {
        throw std::invalid_argument(std::string(name) + " must be positive");
    }
}

// Common value of the residue-class sums, or -1 if they differ.
std::int64_t class_sum(const ResidueVector& d, int l)
{
    std::vector<std::int64_t> sums(static_cast<std::size_t>(l), 0);
    for (int j = 0; j < d.modulus; ++j) {
        sums[static_cast<std::size_t>(j % l)] += d[j];
    }
    for (auto s : sums) {
        if (s != sums[0]) {
            return -1;
        }
    }
    return sums[0];
}

} // namespace

bool in_E(const ResidueVector& d, int l, int n)
{
    if (l < 1 || d.modulus % l != 0) {
        return false;
    }
    return class_sum(d, l) == n && is_plus(d);
}

std::vector<ResidueVector> enumerate_E(int k, int l, int n)
{
    require_positive(k, "k");
    require_positive(l, "l");
    std::vector<ResidueVector> out;
    for (const auto& gamma : enumerate_core_tuples(k, l, n)) {
        out.push_back(delta_inverse(gamma, k, l, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Multipartition delta_map(const ResidueVector& d, int l)
{
    require_positive(l, "l");
    if (d.modulus % l != 0) {
        throw std::invalid_argument("delta_map: modulus " + std::to_string(d.modulus) + " is not a multiple of l=" +
                                    std::to_string(l));
    }
    const auto n = class_sum(d, l);
    if (n < 0) {
        throw std::invalid_argument("delta_map: residue-class sums of " + d.to_string() + " are not all equal");
    }
    const auto decomposition = residue_to_core(d);
    if (decomposition.shift < 0) {
        throw std::invalid_argument("delta_map: " + d.to_string() + " is not the residue vector of a partition");
    }
    if (!core(decomposition.core, l).core.empty()) {
        throw std::logic_error("delta_map: core of a vector in E has nontrivial l-core");
    }
    return quotient(decomposition.core, l);
}

ResidueVector delta_inverse(const Multipartition& gamma, int k, int l, int n)
{
    require_positive(k, "k");
    require_positive(l, "l");
    if (gamma.size() != static_cast<std::size_t>(l)) {
        throw std::invalid_argument("delta_inverse: gamma must have l components");
    }
    for (const auto& g : gamma) {
        if (!is_l_core(g, k)) {
            throw std::invalid_argument("delta_inverse: " + g.to_string() + " is not a " + std::to_string(k) + "-core");
        }
    }
    const int size = total_size(gamma);
    if (size > n || (n - size) % k != 0) {
        throw std::invalid_argument("delta_inverse: |gamma|=" + std::to_string(size) +
                                    " must be at most n and congruent to n mod k");
    }
    const int m = k * l;
    const Partition nu = from_core_and_quotient(Partition{}, gamma, l);
    return residues(nu, m) + static_cast<std::int64_t>((n - size) / k) * delta(m);
}

Multipartition core_tuple(const Multipartition& lambda, int k)
{
    Multipartition out;
    for (const auto& p : lambda) {
        out.push_back(core(p, k).core);
    }
    return out;
}

std::vector<ComponentDescriptor> component_skeleton(int l, int n, int k)
{
    require_positive(l, "l");
    require_positive(k, "k");
    const int m = k * l;
    std::map<Multipartition, std::vector<Multipartition>> labels_by_core;
    for (auto& lambda : enumerate_multipartitions(l, n)) {
        labels_by_core[core_tuple(lambda, k)].push_back(std::move(lambda));
    }
    std::vector<ComponentDescriptor> out;
    for (const auto& gamma : enumerate_core_tuples(k, l, n)) {
        ComponentDescriptor c;
        c.l = l;
        c.n = n;
        c.k = k;
        c.m = m;
        c.gamma = gamma;
        c.r = (n - total_size(gamma)) / k;
        c.nu = from_core_and_quotient(Partition{}, gamma, l);
        c.d = delta_inverse(gamma, k, l, n);
        c.labels = labels_by_core[gamma];
        for (const auto& mu : enumerate_multipartitions(m, c.r)) {
            c.injection_gordon.emplace(mu, beta_flat_k_gamma_inverse(mu, k, gamma));
            c.injection_quiver.emplace(mu, beta_k_gamma_inverse(mu, k, gamma));
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ComponentDescriptor> component_catalog(int l, int n, int k, const ParamSet& p)
{
    if (p.l != l) {
        throw std::invalid_argument("component_catalog: parameters are for l=" + std::to_string(p.l) +
                                    ", expected l=" + std::to_string(l));
    }
    if (n < 1 || !smooth_gl1n(p, n)) {
        throw std::invalid_argument("component_catalog: parameters " + p.to_string() + " are not smooth at n=" +
                                    std::to_string(n));
    }
    auto out = component_skeleton(l, n, k);
    for (auto& c : out) {
        c.c_prime = transport(p, k, c.d);
    }
    return out;
}

NestingReport nesting_check(int k1, int k2, int l, int n)
{
    require_positive(k1, "k1");
    require_positive(k2, "k2");
    if (k2 % k1 != 0) {
        throw std::invalid_argument("nesting_check: k1 must divide k2");
    }
    const auto fine = component_skeleton(l, n, k2);
    const auto coarse = component_skeleton(l, n, k1);
    NestingReport report;
    for (const auto& f : fine) {
        const std::set<Multipartition> fine_labels(f.labels.begin(), f.labels.end());
        for (const auto& c : coarse) {
            const std::set<Multipartition> coarse_labels(c.labels.begin(), c.labels.end());
            const bool contained = std::includes(coarse_labels.begin(), coarse_labels.end(), fine_labels.begin(),
                                                 fine_labels.end());
            const bool matches = core_tuple(f.gamma, k1) == c.gamma;
            ++report.pairs_checked;
            if (contained != matches) {
                report.pass = false;
                report.failures.push_back({f.gamma, c.gamma, contained, matches});
            }
        }
    }
    return report;
}

} // namespace cmfix
