#pragma once

#include "cmfix/partition.hpp"
#include "cmfix/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cmfix {

struct ThetaVector {
    int modulus = 1;
    std::vector<Rational> entries;

    ThetaVector() : entries(1) {}
    explicit ThetaVector(int l);
    ThetaVector(int l, std::vector<Rational> values);

    const Rational& operator[](std::int64_t i) const;
    Rational& operator[](std::int64_t i);
    Rational sum() const;

    ThetaVector& operator+=(const ThetaVector& rhs);
    friend ThetaVector operator+(ThetaVector a, const ThetaVector& b) { return a += b; }
    friend ThetaVector operator*(const Rational& s, ThetaVector v);
    friend bool operator==(const ThetaVector&, const ThetaVector&) = default;

    std::string to_string() const;
};

/// Integer combination of simple roots alpha_0..alpha_{l-1}, by coefficient.
using RootLatticeElement = ResidueVector;

/// s_j on dimension vectors: entry j becomes [j==0] + d_{j+1} + d_{j-1} - d_j.
/// At l = 2 both neighbours are the same index and are counted twice.
ResidueVector reflect_dim(std::int64_t j, const ResidueVector& d);

/// s_j on parameters: theta_j -> -theta_j and each neighbour slot j-1, j+1
/// gains theta_j. At l = 2 the single neighbour gains 2*theta_j.
ThetaVector reflect_theta(std::int64_t j, const ThetaVector& theta);

Rational pairing(const ResidueVector& d, const ThetaVector& theta);

/// Linear map with bar(alpha_r)_i = 2[i==r] - [i==r+1] - [i==r-1].
ThetaVector bar(const RootLatticeElement& alpha);

ThetaVector translate_theta(const RootLatticeElement& alpha, const ThetaVector& theta);

struct OrbitNormalForm {
    std::int64_t n = 0;         // d lies in the orbit of n * delta
    RootLatticeElement witness; // d - d_0 * delta
};

OrbitNormalForm orbit_normalize(const ResidueVector& d);

/// True iff d is the residue vector of some partition.
bool is_plus(const ResidueVector& d);

} // namespace cmfix
