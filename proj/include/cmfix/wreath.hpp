#pragma once

#include "cmfix/cyclotomic.hpp"
#include "cmfix/fixed_points.hpp"
#include "cmfix/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace cmfix {

// Conjugacy classes of G(l,1,n) are l-multipartitions of n: component j
// collects the lengths of the cycles whose product of diagonal entries is zeta^j.
// Irreducible characters are l-multipartitions too; component i carries the
// linear character t -> zeta^i of mu_l.

struct ConjugacyClass {
    Multipartition type;
    Integer size;
    int codim = 0;
};

Integer group_order(int l, int n);
Integer centralizer_order(const Multipartition& type, int l);
std::vector<ConjugacyClass> enumerate_classes(int l, int n);

/// n minus the number of cycles with trivial product.
int codim(const Multipartition& type);

/// Class of the inverse elements: component j moves to -j mod l.
Multipartition inverse_class(const Multipartition& type);

/// Exact value in Q(zeta_l), by the wreath Murnaghan-Nakayama rule.
CyclotomicNumber character_value(const Multipartition& lambda, const Multipartition& type);

Integer character_degree(const Multipartition& lambda);

struct CharacterTable {
    int l = 1;
    int n = 0;
    Integer order;
    std::vector<Multipartition> characters;
    std::vector<ConjugacyClass> classes;
    std::vector<std::vector<CyclotomicNumber>> values; // [character][class]
    std::map<Multipartition, std::size_t> class_index;
    std::map<Multipartition, std::size_t> character_index;
};

/// Built once per (l, n) and cached.
const CharacterTable& character_table(int l, int n);

/// Element of the centre of C G(l,1,n) in the class-sum basis, with
/// coefficients in Q(zeta_field).
struct CentralElement {
    int l = 1;
    int n = 0;
    int field = 1;
    std::map<Multipartition, CyclotomicNumber> coeffs; // zero coefficients are not stored

    void set(const Multipartition& type, const CyclotomicNumber& value);
    CyclotomicNumber coefficient(const Multipartition& type) const;
    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const CentralElement&, const CentralElement&) = default;
};

CentralElement zero_element(int l, int n, int field);
CentralElement identity_element(int l, int n, int field);
CentralElement class_sum(const Multipartition& type, int field);
/// Primitive central idempotent of the character labelled lambda.
CentralElement central_idempotent(const Multipartition& lambda, int field);

CentralElement operator+(const CentralElement& x, const CentralElement& y);
CentralElement operator*(const CyclotomicNumber& s, const CentralElement& x);
/// Product in the centre of the group algebra.
CentralElement multiply(const CentralElement& x, const CentralElement& y);

/// Coordinates in the basis of central idempotents.
std::map<Multipartition, CyclotomicNumber> idempotent_coordinates(const CentralElement& z);
CentralElement from_idempotent_coordinates(int l, int n, int field,
                                           const std::map<Multipartition, CyclotomicNumber>& coords);

/// Max codim over the support; 0 for the zero element.
int filtration_degree(const CentralElement& z);

/// Labelling of the image idempotent. Gordon sends lambda to beta_flat_k_gamma(lambda),
/// Quiver to beta_k_gamma(lambda).
CentralElement i_gamma_star(const CentralElement& z, const Multipartition& gamma, int k,
                            LabelConvention convention = LabelConvention::Gordon);

struct FiltrationCertificate {
    Multipartition source_class;
    int codim = 0;
    int image_degree = 0;
    Multipartition worst_class; // support class of the image with the largest codim
    bool ok = true;
};

struct FiltrationReport {
    int l = 1;
    int n = 0;
    int k = 1;
    Multipartition gamma;
    int r = 0;
    LabelConvention convention = LabelConvention::Gordon;
    bool pass = true;
    std::vector<FiltrationCertificate> certificates;
};

FiltrationReport verify_filtration(int l, int n, int k, const Multipartition& gamma,
                                   LabelConvention convention = LabelConvention::Gordon);

} // namespace cmfix
