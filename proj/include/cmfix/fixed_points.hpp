#pragma once

#include "cmfix/parameters.hpp"
#include "cmfix/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace cmfix {

/// Dimension vectors on Z/klZ with every residue-class sum mod l equal to n
/// that are residues of partitions. Sorted.
std::vector<ResidueVector> enumerate_E(int k, int l, int n);

bool in_E(const ResidueVector& d, int l, int n);

/// The l-quotient of the core of d. Throws std::invalid_argument unless d lies in E(k,l,n).
Multipartition delta_map(const ResidueVector& d, int l);

ResidueVector delta_inverse(const Multipartition& gamma, int k, int l, int n);

enum class LabelConvention { Gordon, Quiver };

struct ComponentDescriptor {
    int l = 1;
    int n = 0;
    int k = 1;
    int m = 1;
    Multipartition gamma;
    int r = 0;
    Partition nu; // m-core with trivial l-core and l-quotient gamma
    ResidueVector d;
    ParamSet c_prime;
    std::vector<Multipartition> labels;
    // P^m[r] -> labels, keyed by the m-multipartition
    std::map<Multipartition, Multipartition> injection_gordon;
    std::map<Multipartition, Multipartition> injection_quiver;

    const std::map<Multipartition, Multipartition>& injection(LabelConvention c) const
    {
        return c == LabelConvention::Gordon ? injection_gordon : injection_quiver;
    }
};

/// One descriptor per gamma in enumerate_core_tuples(k, l, n). Throws
/// std::invalid_argument if p is not smooth at n.
std::vector<ComponentDescriptor> component_catalog(int l, int n, int k, const ParamSet& p);

/// Combinatorial part of the catalog; c_prime is left at its default.
std::vector<ComponentDescriptor> component_skeleton(int l, int n, int k);

/// The k-core of every component.
Multipartition core_tuple(const Multipartition& lambda, int k);

struct NestingFailure {
    Multipartition gamma_fine;   // k2-core tuple
    Multipartition gamma_coarse; // k1-core tuple
    bool contained = false;
    bool core_matches = false;
};

struct NestingReport {
    bool pass = true;
    int pairs_checked = 0;
    std::vector<NestingFailure> failures;
};

NestingReport nesting_check(int k1, int k2, int l, int n);

} // namespace cmfix
