#pragma once

#include "cmfix/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cmfix {

int euler_phi(int m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(int m);

namespace detail {
struct CyclotomicField;
}

/// An exact element of Q(zeta_m), stored in the power basis 1, z, ..., z^(phi(m)-1)
/// reduced modulo the m-th cyclotomic polynomial. Two values of the same order
/// are equal iff their coefficient vectors are equal.
///
/// Binary arithmetic requires equal orders; use embed() to move a value into a
/// larger field first. Comparison is the only operation that embeds implicitly.
class CyclotomicNumber {
public:
    /// Rational zero (order 1).
    CyclotomicNumber();
    explicit CyclotomicNumber(int order);
    CyclotomicNumber(int order, const Rational& value);

    static CyclotomicNumber root_of_unity(int order, std::int64_t exponent);
    /// Throws std::invalid_argument unless coeffs has exactly phi(order) entries.
    static CyclotomicNumber from_coefficients(int order, std::vector<Rational> coeffs);

    int order() const noexcept;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const;
    std::optional<Rational> as_rational() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const Rational& rhs);
    CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& b) { return a *= b; }
    friend CyclotomicNumber operator*(const Rational& a, CyclotomicNumber b) { return b *= a; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    CyclotomicNumber operator-() const;

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    /// Image under z_order -> z_target^(target/order). Throws unless order | target.
    CyclotomicNumber embed(int target) const;

    /// Field automorphism z -> z^a, gcd(a, order) == 1.
    CyclotomicNumber galois(std::int64_t a) const;
    CyclotomicNumber conj() const { return galois(-1); }

    /// Throws std::domain_error on zero.
    CyclotomicNumber inverse() const;
    CyclotomicNumber pow(std::int64_t e) const;

    std::string to_string() const;

private:
    CyclotomicNumber(std::shared_ptr<const detail::CyclotomicField> field, std::vector<Rational> coeffs);
    void require_same_field(const CyclotomicNumber& other, const char* op) const;

    std::shared_ptr<const detail::CyclotomicField> field_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x);

CyclotomicNumber embed(const CyclotomicNumber& x, int target);

inline bool is_zero(const CyclotomicNumber& x) { return x.is_zero(); }

/// Exact product; throws std::invalid_argument when the orders differ.
CyclotomicNumber cyclotomic_mul(const CyclotomicNumber& x, const CyclotomicNumber& y);

} // namespace cmfix
