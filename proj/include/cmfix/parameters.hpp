#pragma once

#include "cmfix/affine_weyl.hpp"
#include "cmfix/partition.hpp"
#include "cmfix/rational.hpp"

#include <string>
#include <vector>

namespace cmfix {

/// Calogero-Moser parameters (a, k_0..k_{l-1}) with sum k = 0.
struct ParamSet {
    int l = 1;
    Rational a;
    std::vector<Rational> k{Rational{0}};

    ParamSet() = default;
    /// Throws std::invalid_argument unless k has l entries summing to zero.
    ParamSet(int l, Rational a, std::vector<Rational> k);

    friend bool operator==(const ParamSet&, const ParamSet&) = default;
    std::string to_string() const;
};

ParamSet operator+(const ParamSet& p, const ParamSet& q);
ParamSet operator*(const Rational& s, const ParamSet& p);

ThetaVector theta_from_ak(const ParamSet& p);
ParamSet ak_from_theta(const ThetaVector& theta);

/// Generator s_r acting on (a, k). For r != 0 it swaps k_{-r} and k_{1-r};
/// s_0 sends (a, k_0, k_1, ...) to (a, k_1 + a, k_0 - a, ...).
ParamSet weyl_on_ak(std::int64_t r, const ParamSet& p);

bool smooth_quiver(const ThetaVector& theta, int n);

/// With drop_a_factor the leading factor a is omitted; this is the n = 1
/// reading where the variety does not depend on a.
bool smooth_gl1n(const ParamSet& p, int n, bool drop_a_factor = false);

bool smooth_cyclic(const std::vector<Rational>& k);
bool smooth_g4(const Rational& k0, const Rational& k1, const Rational& k2);

/// Parameters of the component attached to d in Z^{Z/mZ}, m = k_factor * l:
/// a' = k a and k'_j = k_{j mod l} + a(floor((j-1)/l) - (k-1)/2 + k(d_{1-j} - d_{-j})).
ParamSet transport(const ParamSet& p, int k_factor, const ResidueVector& d);

/// Same parameters computed by repeating theta k times, translating by d and
/// converting back through the dictionary.
ParamSet transport_via_theta(const ParamSet& p, int k_factor, const ResidueVector& d);

/// k repeated copies of theta on Z/klZ.
ThetaVector repeat_theta(const ThetaVector& theta, int k_factor);

/// prod_i (e - roots_i) = xy with C^x weight on x.
struct CyclicCMSurface {
    int l = 1;
    std::vector<Rational> roots;
    int weight = 1;
};

CyclicCMSurface cyclic_cm_polynomial(const std::vector<Rational>& k, int weight = 1);

/// Coefficients of prod_i (e - roots_i), constant term first.
std::vector<Rational> expand_roots(const std::vector<Rational>& roots);

bool same_root_multiset(std::vector<Rational> a, std::vector<Rational> b);

/// The two-dimensional fixed components of the exceptional group G4.
std::vector<Rational> g4_heart_roots(const Rational& k0, const Rational& k1, const Rational& k2);
std::vector<Rational> g4_spade_roots(const Rational& k0, const Rational& k1, const Rational& k2);

} // namespace cmfix
