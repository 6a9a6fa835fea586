#include "cmfix/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cmfix {

namespace detail {

struct CyclotomicField {
    int order = 1;
    int phi = 1;
    // power_basis[j] = coordinates of z^j, 0 <= j < order
    std::vector<std::vector<Integer>> power_basis;
};

} // namespace detail

namespace {

using Poly = std::vector<Integer>;

// Exact division of a by a monic b over Z.
Poly divide_monic(Poly a, const Poly& b)
{
    const std::size_t db = b.size() - 1;
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        q[i - db] = c;
        if (c != 0) {
            for (std::size_t j = 0; j <= db; ++j) {
                a[i - db + j] -= c * b[j];
            }
        }
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (a[i] != 0) {
            throw std::logic_error("cyclotomic polynomial division left a remainder");
        }
    }
    return q;
}

Poly compute_cyclotomic_polynomial(int m)
{
    Poly p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) {
            p = divide_monic(std::move(p), cyclotomic_polynomial(d));
        }
    }
    return p;
}

std::shared_ptr<const detail::CyclotomicField> build_field(int m)
{
    auto field = std::make_shared<detail::CyclotomicField>();
    field->order = m;
    field->phi = euler_phi(m);
    const auto& cyclo = cyclotomic_polynomial(m);
    const auto phi = static_cast<std::size_t>(field->phi);

    std::vector<Integer> current(phi, 0);
    current[0] = 1;
    field->power_basis.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        field->power_basis.push_back(current);
        // multiply by z, then reduce the overflow coefficient
        Integer top = current[phi - 1];
        for (std::size_t i = phi - 1; i > 0; --i) {
            current[i] = current[i - 1];
        }
        current[0] = 0;
        if (top != 0) {
            for (std::size_t i = 0; i < phi; ++i) {
                current[i] -= top * cyclo[i];
            }
        }
    }
    return field;
}

std::shared_ptr<const detail::CyclotomicField> field_of(int m)
{
    if (m < 1) {
        throw std::invalid_argument("cyclotomic order must be positive, got " + std::to_string(m));
    }
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const detail::CyclotomicField>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) {
            return it->second;
        }
    }
    auto field = build_field(m);
    std::lock_guard lock(mutex);
    return cache.emplace(m, std::move(field)).first->second;
}

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    auto r = a % m;
    return r < 0 ? r + m : r;
}

// Adds c * z^j to coeffs.
void accumulate_power(std::vector<Rational>& coeffs, const detail::CyclotomicField& field, std::int64_t j,
                      const Rational& c)
{
    const auto& basis = field.power_basis[static_cast<std::size_t>(mod(j, field.order))];
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] != 0) {
            coeffs[i] += c * basis[i];
        }
    }
}

} // namespace

int euler_phi(int m)
{
    if (m < 1) {
        throw std::invalid_argument("euler_phi needs a positive argument");
    }
    int result = m;
    int x = m;
    for (int p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            while (x % p == 0) {
                x /= p;
            }
            result -= result / p;
        }
    }
    if (x > 1) {
        result -= result / x;
    }
    return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int m)
{
    if (m < 1) {
        throw std::invalid_argument("cyclotomic polynomial index must be positive");
    }
    static std::recursive_mutex mutex;
    static std::map<int, Poly> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) {
        return it->second;
    }
    Poly p = compute_cyclotomic_polynomial(m);
    return cache.emplace(m, std::move(p)).first->second;
}

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(1) {}

CyclotomicNumber::CyclotomicNumber(int order)
    : field_(field_of(order)), coeffs_(static_cast<std::size_t>(field_->phi), Rational{0})
{
}

CyclotomicNumber::CyclotomicNumber(int order, const Rational& value) : CyclotomicNumber(order)
{
    coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const detail::CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
}

CyclotomicNumber CyclotomicNumber::root_of_unity(int order, std::int64_t exponent)
{
    CyclotomicNumber x(order);
    accumulate_power(x.coeffs_, *x.field_, exponent, Rational{1});
    return x;
}

CyclotomicNumber CyclotomicNumber::from_coefficients(int order, std::vector<Rational> coeffs)
{
    auto field = field_of(order);
    if (coeffs.size() != static_cast<std::size_t>(field->phi)) {
        throw std::invalid_argument("Q(zeta_" + std::to_string(order) + ") needs " + std::to_string(field->phi) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    }
    return CyclotomicNumber(std::move(field), std::move(coeffs));
}

int CyclotomicNumber::order() const noexcept { return field_->order; }

bool CyclotomicNumber::is_zero() const
{
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

std::optional<Rational> CyclotomicNumber::as_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) {
            return std::nullopt;
        }
    }
    return coeffs_[0];
}

void CyclotomicNumber::require_same_field(const CyclotomicNumber& other, const char* op) const
{
    if (order() != other.order()) {
        throw std::invalid_argument(std::string("cyclotomic ") + op + ": order mismatch (" +
                                    std::to_string(order()) + " vs " + std::to_string(other.order()) + ")");
    }
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs)
{
    require_same_field(rhs, "addition");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs)
{
    require_same_field(rhs, "subtraction");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs)
{
    require_same_field(rhs, "multiplication");
    const std::size_t phi = coeffs_.size();
    std::vector<Rational> product(phi, Rational{0});
    for (std::size_t i = 0; i < phi; ++i) {
        if (sgn(coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < phi; ++j) {
            if (sgn(rhs.coeffs_[j]) == 0) {
                continue;
            }
            Rational c = coeffs_[i] * rhs.coeffs_[j];
            if (i + j < phi) {
                product[i + j] += c;
            } else {
                accumulate_power(product, *field_, static_cast<std::int64_t>(i + j), c);
            }
        }
    }
    coeffs_ = std::move(product);
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& rhs)
{
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs)
{
    require_same_field(rhs, "division");
    return *this *= rhs.inverse();
}

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.order() == b.order()) {
        return a.coeffs_ == b.coeffs_;
    }
    const int common = std::lcm(a.order(), b.order());
    return a.embed(common).coeffs_ == b.embed(common).coeffs_;
}

CyclotomicNumber CyclotomicNumber::embed(int target) const
{
    if (target < 1 || target % order() != 0) {
        throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(order()) + ") into Q(zeta_" +
                                    std::to_string(target) + ")");
    }
    if (target == order()) {
        return *this;
    }
    CyclotomicNumber out(target);
    const std::int64_t step = target / order();
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (sgn(coeffs_[j]) != 0) {
            accumulate_power(out.coeffs_, *out.field_, static_cast<std::int64_t>(j) * step, coeffs_[j]);
        }
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::galois(std::int64_t a) const
{
    const int m = order();
    if (std::gcd(mod(a, m), static_cast<std::int64_t>(m)) != 1) {
        throw std::invalid_argument("galois exponent must be a unit modulo the order");
    }
    CyclotomicNumber out(m);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (sgn(coeffs_[j]) != 0) {
            accumulate_power(out.coeffs_, *field_, static_cast<std::int64_t>(j) * a, coeffs_[j]);
        }
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
    }
    // x^-1 = (product of the other conjugates) / norm(x)
    const int m = order();
    CyclotomicNumber others(m, Rational{1});
    for (int a = 2; a < m; ++a) {
        if (std::gcd(a, m) == 1) {
            others *= galois(a);
        }
    }
    auto norm = (*this * others).as_rational();
    if (!norm || sgn(*norm) == 0) {
        throw std::logic_error("field norm is not a nonzero rational");
    }
    return others * Rational{1 / *norm};
}

CyclotomicNumber CyclotomicNumber::pow(std::int64_t e) const
{
    CyclotomicNumber base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    CyclotomicNumber result(order(), Rational{1});
    while (n != 0) {
        if (n & 1U) {
            result *= base;
        }
        base *= base;
        n >>= 1U;
    }
    return result;
}

std::string CyclotomicNumber::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (sgn(coeffs_[j]) == 0) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << cmfix::to_string(coeffs_[j]);
        if (j > 0) {
            os << "*z" << order() << "^" << j;
        }
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) { return os << x.to_string(); }

CyclotomicNumber embed(const CyclotomicNumber& x, int target) { return x.embed(target); }

CyclotomicNumber cyclotomic_mul(const CyclotomicNumber& x, const CyclotomicNumber& y) { return x * y; }

} // namespace cmfix
