#pragma once

#include "cmfix/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cmfix {

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction; anything else out of order throws.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    /// Part i (0-based), zero past the end.
    int part(int i) const noexcept { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    Partition conjugate() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

using Multipartition = std::vector<Partition>;

int total_size(const Multipartition& mp);
Multipartition empty_multipartition(int components);
std::string to_string(const Multipartition& mp);

/// Integer vector indexed by Z/lZ. Also used for dimension vectors.
struct ResidueVector {
    int modulus = 1;
    std::vector<std::int64_t> entries;

    ResidueVector() : entries(1, 0) {}
    explicit ResidueVector(int l);
    ResidueVector(int l, std::vector<std::int64_t> values);

    std::int64_t operator[](std::int64_t i) const;
    std::int64_t& operator[](std::int64_t i);
    std::int64_t total() const;
    bool is_nonnegative() const;

    ResidueVector& operator+=(const ResidueVector& rhs);
    ResidueVector& operator-=(const ResidueVector& rhs);
    friend ResidueVector operator+(ResidueVector a, const ResidueVector& b) { return a += b; }
    friend ResidueVector operator-(ResidueVector a, const ResidueVector& b) { return a -= b; }
    friend ResidueVector operator*(std::int64_t s, ResidueVector v);

    friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
    friend auto operator<=>(const ResidueVector& a, const ResidueVector& b)
    {
        if (auto c = a.modulus <=> b.modulus; c != 0) {
            return c;
        }
        return a.entries <=> b.entries;
    }

    std::string to_string() const;
};

/// The all-ones vector on Z/lZ.
ResidueVector delta(int l);

std::int64_t positive_mod(std::int64_t a, std::int64_t m);

ResidueVector residues(const Partition& lambda, int l);

/// Box counts by content (column - row) with no reduction.
std::map<std::int64_t, std::int64_t> infinite_residues(const Partition& lambda);

struct CoreResult {
    Partition core;
    int removals = 0;
};

CoreResult core(const Partition& lambda, int l);
bool is_l_core(const Partition& lambda, int l);

/// Quotient read from an abacus with a multiple of l beads; component j
/// comes from the runner of positions congruent to j mod l.
Multipartition quotient(const Partition& lambda, int l);

/// Inverse of (core, quotient). Throws std::invalid_argument if nu is not an l-core.
Partition from_core_and_quotient(const Partition& nu, const Multipartition& mu, int l);

struct CoreDecomposition {
    Partition core;
    std::int64_t shift = 0; // d = Res_l(core) + shift * delta_l
};

CoreDecomposition residue_to_core(const ResidueVector& d);

Multipartition flip(const Multipartition& lambda);

/// Interleaves the k-quotients of the components: quotient slot j of
/// component i goes to position i + j*l. Throws on core mismatch.
Multipartition beta_k_gamma(const Multipartition& lambda, int k, const Multipartition& gamma);
Multipartition beta_k_gamma_inverse(const Multipartition& mu, int k, const Multipartition& gamma);

/// As beta_k_gamma with the quotient slots reversed: slot j goes to i + (k-1-j)*l.
Multipartition beta_flat_k_gamma(const Multipartition& lambda, int k, const Multipartition& gamma);
Multipartition beta_flat_k_gamma_inverse(const Multipartition& mu, int k, const Multipartition& gamma);

/// Partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> enumerate_partitions(int n);

/// All l-multipartitions of n. Component 0 runs through sizes n..0, each in
/// reverse lexicographic order, then component 1 likewise, and so on.
std::vector<Multipartition> enumerate_multipartitions(int l, int n);

/// l-tuples of k-cores with total size at most n and congruent to n mod k,
/// ordered by total size and then as enumerate_multipartitions.
std::vector<Multipartition> enumerate_core_tuples(int k, int l, int n);

Integer count_standard_tableaux(const Partition& lambda);
Integer factorial(int n);

} // namespace cmfix
