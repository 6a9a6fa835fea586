#pragma once

// Slow, independent reference implementations used only by tests.

#include "cmfix/cyclotomic.hpp"
#include "cmfix/partition.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using cmfix::CyclotomicNumber;
using cmfix::Integer;
using cmfix::Multipartition;
using cmfix::Partition;
using cmfix::ResidueVector;

/// Every core reachable by repeatedly deleting l boxes of l distinct residues
/// that leave a partition. The literature says this set is a singleton.
std::set<Partition> cores_by_removal(const Partition& lambda, int l);

/// Subpartitions mu of lambda with |lambda| - |mu| = l whose skew diagram
/// has l distinct residues.
std::vector<Partition> single_removals(const Partition& lambda, int l);

/// Decompose d by greedily applying simple reflections that shrink the total,
/// then undoing the word on 0 and searching for the core with that residue.
struct GreedyDecomposition {
    Partition core;
    std::int64_t shift = 0;
    int steps = 0;
};
GreedyDecomposition greedy_residue_to_core(const ResidueVector& d);

/// E(k,l,n) as the set of Res_{kl}(lambda) over partitions of size n*l that
/// have all residue-class sums mod l equal to n.
std::set<ResidueVector> brute_force_E(int k, int l, int n);

/// Direct search for E(k,l,n): vectors with entries in [0,n], class sums n,
/// that are residues of some partition.
std::set<ResidueVector> box_search_E(int k, int l, int n);

/// Element of G(l,1,n): e_i -> zeta^{exps[i]} e_{perm[i]}.
struct Monomial {
    std::vector<int> perm;
    std::vector<int> exps;
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        return std::tie(a.perm, a.exps) < std::tie(b.perm, b.exps);
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.perm == b.perm && a.exps == b.exps; }
};

class WreathGroup {
public:
    WreathGroup(int l, int n);

    int l() const { return l_; }
    int n() const { return n_; }
    const std::vector<Monomial>& elements() const { return elements_; }

    Monomial multiply(const Monomial& g, const Monomial& h) const;
    Monomial inverse(const Monomial& g) const;
    Monomial identity() const;

    /// Class label read from cycles: component j lists cycle lengths with
    /// exponent sum j mod l.
    Multipartition class_type(const Monomial& g) const;

    /// Conjugacy classes found by orbit computation, keyed by class type.
    std::map<Multipartition, std::vector<Monomial>> conjugacy_classes() const;

    /// dim ker(g - 1) over Q(zeta_l) by exact elimination.
    int fixed_space_dim(const Monomial& g) const;

    /// Induced-character value of the irreducible labelled lambda at g.
    CyclotomicNumber induced_character(const Multipartition& lambda, const Monomial& g) const;

private:
    int l_;
    int n_;
    std::vector<Monomial> elements_;
};

/// Irreducible character of S_n by Frobenius' formula: coefficient of
/// x^{lambda + delta} in a_delta * p_mu.
Integer frobenius_character(const Partition& lambda, const Partition& mu);

/// Structure constants of the class algebra: z_A z_B = sum_C c[C] z_C.
std::map<Multipartition, Integer> class_product(const WreathGroup& g, const Multipartition& a,
                                                const Multipartition& b);

} // namespace oracle
