#include "cmfix/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cmfix {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const
{
    std::vector<int> out(static_cast<std::size_t>(part(0)), 0);
    for (int p : parts_) {
        for (int c = 0; c < p; ++c) {
            ++out[static_cast<std::size_t>(c)];
        }
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        os << (i ? "," : "") << parts_[i];
    }
    os << ")";
    return os.str();
}

int total_size(const Multipartition& mp)
{
    int s = 0;
    for (const auto& p : mp) {
        s += p.size();
    }
    return s;
}

Multipartition empty_multipartition(int components)
{
    return Multipartition(static_cast<std::size_t>(components));
}

std::string to_string(const Multipartition& mp)
{
    std::string s = "(";
    for (std::size_t i = 0; i < mp.size(); ++i) {
        s += (i ? "," : "") + mp[i].to_string();
    }
    return s + ")";
}

std::int64_t positive_mod(std::int64_t a, std::int64_t m)
{
    auto r = a % m;
    return r < 0 ? r + m : r;
}

ResidueVector::ResidueVector(int l) : modulus(l), entries(static_cast<std::size_t>(l), 0)
{
    if (l < 1) {
        throw std::invalid_argument("residue vector modulus must be positive");
    }
}

ResidueVector::ResidueVector(int l, std::vector<std::int64_t> values) : modulus(l), entries(std::move(values))
{
    if (l < 1 || entries.size() != static_cast<std::size_t>(l)) {
        throw std::invalid_argument("residue vector needs exactly " + std::to_string(l) + " entries");
    }
}

std::int64_t ResidueVector::operator[](std::int64_t i) const
{
    return entries[static_cast<std::size_t>(positive_mod(i, modulus))];
}

std::int64_t& ResidueVector::operator[](std::int64_t i)
{
    return entries[static_cast<std::size_t>(positive_mod(i, modulus))];
}

std::int64_t ResidueVector::total() const { return std::accumulate(entries.begin(), entries.end(), std::int64_t{0}); }

bool ResidueVector::is_nonnegative() const
{
    return std::all_of(entries.begin(), entries.end(), [](std::int64_t x) { return x >= 0; });
}

ResidueVector& ResidueVector::operator+=(const ResidueVector& rhs)
{
    if (modulus != rhs.modulus) {
        throw std::invalid_argument("residue vector modulus mismatch");
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        entries[i] += rhs.entries[i];
    }
    return *this;
}

ResidueVector& ResidueVector::operator-=(const ResidueVector& rhs)
{
    if (modulus != rhs.modulus) {
        throw std::invalid_argument("residue vector modulus mismatch");
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        entries[i] -= rhs.entries[i];
    }
    return *this;
}

ResidueVector operator*(std::int64_t s, ResidueVector v)
{
    for (auto& x : v.entries) {
        x *= s;
    }
    return v;
}

std::string ResidueVector::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        os << (i ? "," : "") << entries[i];
    }
    os << ")";
    return os.str();
}

ResidueVector delta(int l) { return ResidueVector(l, std::vector<std::int64_t>(static_cast<std::size_t>(l), 1)); }

ResidueVector residues(const Partition& lambda, int l)
{
    ResidueVector out(l);
    for (int row = 0; row < lambda.length(); ++row) {
        for (int col = 0; col < lambda.part(row); ++col) {
            ++out[col - row];
        }
    }
    return out;
}

std::map<std::int64_t, std::int64_t> infinite_residues(const Partition& lambda)
{
    std::map<std::int64_t, std::int64_t> out;
    for (int row = 0; row < lambda.length(); ++row) {
        for (int col = 0; col < lambda.part(row); ++col) {
            ++out[col - row];
        }
    }
    return out;
}

namespace {

void require_modulus(int l)
{
    if (l < 1) {
        throw std::invalid_argument("modulus must be positive, got " + std::to_string(l));
    }
}

// Bead levels per runner, each sorted descending. bead_count must be a
// multiple of l and at least the length of lambda.
std::vector<std::vector<int>> abacus(const Partition& lambda, int l, int bead_count)
{
    std::vector<std::vector<int>> runners(static_cast<std::size_t>(l));
    for (int i = 0; i < bead_count; ++i) {
        int pos = lambda.part(i) - (i + 1) + bead_count;
        runners[static_cast<std::size_t>(pos % l)].push_back(pos / l);
    }
    return runners;
}

Partition from_abacus(const std::vector<std::vector<int>>& runners)
{
    const int l = static_cast<int>(runners.size());
    std::vector<int> positions;
    for (int j = 0; j < l; ++j) {
        for (int level : runners[static_cast<std::size_t>(j)]) {
            positions.push_back(j + l * level);
        }
    }
    std::sort(positions.rbegin(), positions.rend());
    const int n = static_cast<int>(positions.size());
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
        parts.push_back(positions[static_cast<std::size_t>(i)] - (n - 1 - i));
    }
    return Partition(std::move(parts));
}

int beads_for(const Partition& lambda, int l)
{
    return l * ((lambda.length() + l - 1) / l);
}

Partition runner_partition(const std::vector<int>& levels)
{
    const int s = static_cast<int>(levels.size());
    std::vector<int> parts;
    for (int t = 0; t < s; ++t) {
        parts.push_back(levels[static_cast<std::size_t>(t)] - (s - 1 - t));
    }
    return Partition(std::move(parts));
}

void require_components(const Multipartition& mp, std::size_t count, const char* what)
{
    if (mp.size() != count) {
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(count) +
                                    " components, got " + std::to_string(mp.size()));
    }
}

} // namespace

CoreResult core(const Partition& lambda, int l)
{
    require_modulus(l);
    auto runners = abacus(lambda, l, beads_for(lambda, l));
    int removals = 0;
    for (auto& levels : runners) {
        removals += runner_partition(levels).size();
        const int s = static_cast<int>(levels.size());
        for (int t = 0; t < s; ++t) {
            levels[static_cast<std::size_t>(t)] = s - 1 - t;
        }
    }
    return {from_abacus(runners), removals};
}

bool is_l_core(const Partition& lambda, int l) { return core(lambda, l).removals == 0; }

Multipartition quotient(const Partition& lambda, int l)
{
    require_modulus(l);
    auto runners = abacus(lambda, l, beads_for(lambda, l));
    Multipartition out;
    for (const auto& levels : runners) {
        out.push_back(runner_partition(levels));
    }
    return out;
}

Partition from_core_and_quotient(const Partition& nu, const Multipartition& mu, int l)
{
    require_modulus(l);
    require_components(mu, static_cast<std::size_t>(l), "from_core_and_quotient");
    if (!is_l_core(nu, l)) {
        throw std::invalid_argument(nu.to_string() + " is not a " + std::to_string(l) + "-core");
    }
    int longest = 0;
    for (const auto& p : mu) {
        longest = std::max(longest, p.length());
    }
    // one extra bead per runner for every level of headroom
    const int bead_count = beads_for(nu, l) + l * longest;
    auto runners = abacus(nu, l, bead_count);
    for (int j = 0; j < l; ++j) {
        auto& levels = runners[static_cast<std::size_t>(j)];
        const int s = static_cast<int>(levels.size());
        const auto& q = mu[static_cast<std::size_t>(j)];
        for (int t = 0; t < s; ++t) {
            levels[static_cast<std::size_t>(t)] = q.part(t) + (s - 1 - t);
        }
    }
    return from_abacus(runners);
}

CoreDecomposition residue_to_core(const ResidueVector& d)
{
    const int l = d.modulus;
    // Runner i carries (base + d_i - d_{i+1}) beads packed at the bottom.
    std::vector<std::int64_t> charge(static_cast<std::size_t>(l));
    std::int64_t lowest = 0;
    for (int i = 0; i < l; ++i) {
        charge[static_cast<std::size_t>(i)] = d[i] - d[i + 1];
        lowest = std::min(lowest, charge[static_cast<std::size_t>(i)]);
    }
    const std::int64_t base = 1 - lowest;
    std::vector<std::vector<int>> runners(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        const auto count = base + charge[static_cast<std::size_t>(i)];
        for (std::int64_t t = count - 1; t >= 0; --t) {
            runners[static_cast<std::size_t>(i)].push_back(static_cast<int>(t));
        }
    }
    Partition nu = from_abacus(runners);
    const std::int64_t excess = d.total() - nu.size();
    if (excess % l != 0) {
        throw std::logic_error("residue_to_core: size defect not divisible by l");
    }
    CoreDecomposition out{nu, excess / l};
    if (residues(nu, l) + out.shift * delta(l) != d) {
        throw std::logic_error("residue_to_core: decomposition does not reproduce " + d.to_string());
    }
    return out;
}

Multipartition flip(const Multipartition& lambda) { return Multipartition(lambda.rbegin(), lambda.rend()); }

namespace {

Multipartition interleave(const Multipartition& lambda, int k, const Multipartition& gamma, bool reversed)
{
    require_modulus(k);
    const int l = static_cast<int>(lambda.size());
    require_components(gamma, lambda.size(), "beta_k_gamma core tuple");
    Multipartition mu(static_cast<std::size_t>(k * l));
    for (int i = 0; i < l; ++i) {
        const auto& part = lambda[static_cast<std::size_t>(i)];
        if (core(part, k).core != gamma[static_cast<std::size_t>(i)]) {
            throw std::invalid_argument("component " + std::to_string(i) + " " + part.to_string() +
                                        " does not have " + std::to_string(k) + "-core " +
                                        gamma[static_cast<std::size_t>(i)].to_string());
        }
        auto q = quotient(part, k);
        for (int j = 0; j < k; ++j) {
            const int slot = reversed ? k - 1 - j : j;
            mu[static_cast<std::size_t>(i + slot * l)] = q[static_cast<std::size_t>(j)];
        }
    }
    return mu;
}

Multipartition deinterleave(const Multipartition& mu, int k, const Multipartition& gamma, bool reversed)
{
    require_modulus(k);
    const int l = static_cast<int>(gamma.size());
    require_components(mu, static_cast<std::size_t>(k * l), "beta_k_gamma inverse");
    Multipartition lambda;
    for (int i = 0; i < l; ++i) {
        Multipartition q(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            const int slot = reversed ? k - 1 - j : j;
            q[static_cast<std::size_t>(j)] = mu[static_cast<std::size_t>(i + slot * l)];
        }
        lambda.push_back(from_core_and_quotient(gamma[static_cast<std::size_t>(i)], q, k));
    }
    return lambda;
}

} // namespace

Multipartition beta_k_gamma(const Multipartition& lambda, int k, const Multipartition& gamma)
{
    return interleave(lambda, k, gamma, false);
}

Multipartition beta_k_gamma_inverse(const Multipartition& mu, int k, const Multipartition& gamma)
{
    return deinterleave(mu, k, gamma, false);
}

Multipartition beta_flat_k_gamma(const Multipartition& lambda, int k, const Multipartition& gamma)
{
    return interleave(lambda, k, gamma, true);
}

Multipartition beta_flat_k_gamma_inverse(const Multipartition& mu, int k, const Multipartition& gamma)
{
    return deinterleave(mu, k, gamma, true);
}

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0) {
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Multipartition> enumerate_multipartitions(int l, int n)
{
    require_modulus(l);
    if (n < 0) {
        throw std::invalid_argument("cannot enumerate multipartitions of a negative integer");
    }
    std::vector<std::vector<Partition>> by_size;
    for (int s = 0; s <= n; ++s) {
        by_size.push_back(enumerate_partitions(s));
    }
    std::vector<Multipartition> out;
    Multipartition current;
    std::function<void(int, int)> rec = [&](int index, int remaining) {
        if (index == l - 1) {
            for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
                current.push_back(p);
                out.push_back(current);
                current.pop_back();
            }
            return;
        }
        for (int s = remaining; s >= 0; --s) {
            for (const auto& p : by_size[static_cast<std::size_t>(s)]) {
                current.push_back(p);
                rec(index + 1, remaining - s);
                current.pop_back();
            }
        }
    };
    rec(0, n);
    return out;
}

std::vector<Multipartition> enumerate_core_tuples(int k, int l, int n)
{
    require_modulus(k);
    require_modulus(l);
    if (n < 0) {
        throw std::invalid_argument("cannot enumerate core tuples of negative size");
    }
    std::vector<Multipartition> out;
    for (int s = n % k; s <= n; s += k) {
        for (auto& mp : enumerate_multipartitions(l, s)) {
            if (std::all_of(mp.begin(), mp.end(), [k](const Partition& p) { return is_l_core(p, k); })) {
                out.push_back(std::move(mp));
            }
        }
    }
    return out;
}

Integer factorial(int n)
{
    Integer out = 1;
    for (int i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

Integer count_standard_tableaux(const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    Integer hooks = 1;
    for (int row = 0; row < lambda.length(); ++row) {
        for (int col = 0; col < lambda.part(row); ++col) {
            hooks *= (lambda.part(row) - col) + (conj.part(col) - row) - 1;
        }
    }
    return factorial(lambda.size()) / hooks;
}

} // namespace cmfix
