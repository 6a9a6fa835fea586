#include "cmfix/affine_weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace cmfix {

ThetaVector::ThetaVector(int l) : modulus(l), entries(static_cast<std::size_t>(l))
{
    if (l < 1) {
        throw std::invalid_argument("theta modulus must be positive");
    }
}

ThetaVector::ThetaVector(int l, std::vector<Rational> values) : modulus(l), entries(std::move(values))
{
    if (l < 1 || entries.size() != static_cast<std::size_t>(l)) {
        throw std::invalid_argument("theta vector needs exactly " + std::to_string(l) + " entries");
    }
}

const Rational& ThetaVector::operator[](std::int64_t i) const
{
    return entries[static_cast<std::size_t>(positive_mod(i, modulus))];
}

Rational& ThetaVector::operator[](std::int64_t i) { return entries[static_cast<std::size_t>(positive_mod(i, modulus))]; }

Rational ThetaVector::sum() const
{
    Rational s = 0;
    for (const auto& x : entries) {
        s += x;
    }
    return s;
}

ThetaVector& ThetaVector::operator+=(const ThetaVector& rhs)
{
    if (modulus != rhs.modulus) {
        throw std::invalid_argument("theta modulus mismatch");
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        entries[i] += rhs.entries[i];
    }
    return *this;
}

ThetaVector operator*(const Rational& s, ThetaVector v)
{
    for (auto& x : v.entries) {
        x *= s;
    }
    return v;
}

std::string ThetaVector::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        os << (i ? "," : "") << cmfix::to_string(entries[i]);
    }
    os << ")";
    return os.str();
}

ResidueVector reflect_dim(std::int64_t j, const ResidueVector& d)
{
    if (d.modulus == 1) {
        return d;
    }
    ResidueVector out = d;
    out[j] = (positive_mod(j, d.modulus) == 0 ? 1 : 0) + d[j + 1] + d[j - 1] - d[j];
    return out;
}

ThetaVector reflect_theta(std::int64_t j, const ThetaVector& theta)
{
    if (theta.modulus == 1) {
        return theta;
    }
    ThetaVector out = theta;
    const Rational t = theta[j];
    out[j] = -t;
    out[j - 1] += t;
    out[j + 1] += t;
    return out;
}

Rational pairing(const ResidueVector& d, const ThetaVector& theta)
{
    if (d.modulus != theta.modulus) {
        throw std::invalid_argument("pairing: modulus mismatch");
    }
    Rational s = 0;
    for (int i = 0; i < d.modulus; ++i) {
        s += theta[i] * static_cast<long>(d[i]);
    }
    return s;
}

ThetaVector bar(const RootLatticeElement& alpha)
{
    ThetaVector out(alpha.modulus);
    for (int i = 0; i < alpha.modulus; ++i) {
        out[i] = static_cast<long>(2 * alpha[i] - alpha[i - 1] - alpha[i + 1]);
    }
    return out;
}

ThetaVector translate_theta(const RootLatticeElement& alpha, const ThetaVector& theta)
{
    if (alpha.modulus != theta.modulus) {
        throw std::invalid_argument("translate_theta: modulus mismatch");
    }
    return theta + theta.sum() * bar(alpha);
}

OrbitNormalForm orbit_normalize(const ResidueVector& d)
{
    const auto decomposition = residue_to_core(d);
    return {decomposition.shift, d - d[0] * delta(d.modulus)};
}

bool is_plus(const ResidueVector& d) { return residue_to_core(d).shift >= 0; }

} // namespace cmfix
