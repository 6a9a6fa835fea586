#include "cmfix/parameters.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cmfix {

namespace {

Rational sum_of(const std::vector<Rational>& v)
{
    Rational s = 0;
    for (const auto& x : v) {
        s += x;
    }
    return s;
}

} // namespace

ParamSet::ParamSet(int l_, Rational a_, std::vector<Rational> k_) : l(l_), a(std::move(a_)), k(std::move(k_))
{
    if (l < 1 || k.size() != static_cast<std::size_t>(l)) {
        throw std::invalid_argument("parameter set for l=" + std::to_string(l) + " needs " + std::to_string(l) +
                                    " k-values, got " + std::to_string(k.size()));
    }
    if (sgn(sum_of(k)) != 0) {
        throw std::invalid_argument("k-parameters must sum to zero, got sum " + cmfix::to_string(sum_of(k)));
    }
}

std::string ParamSet::to_string() const
{
    std::ostringstream os;
    os << "a=" << cmfix::to_string(a) << " k=(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        os << (i ? "," : "") << cmfix::to_string(k[i]);
    }
    os << ")";
    return os.str();
}

ParamSet operator+(const ParamSet& p, const ParamSet& q)
{
    if (p.l != q.l) {
        throw std::invalid_argument("parameter sets of different rank");
    }
    std::vector<Rational> k(p.k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        k[i] = p.k[i] + q.k[i];
    }
    return ParamSet(p.l, p.a + q.a, std::move(k));
}

ParamSet operator*(const Rational& s, const ParamSet& p)
{
    std::vector<Rational> k(p.k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        k[i] = s * p.k[i];
    }
    return ParamSet(p.l, s * p.a, std::move(k));
}

ThetaVector theta_from_ak(const ParamSet& p)
{
    const int l = p.l;
    auto kk = [&](std::int64_t j) -> const Rational& { return p.k[static_cast<std::size_t>(positive_mod(j, l))]; };
    ThetaVector theta(l);
    theta[0] = -p.a + kk(0) - kk(1);
    for (int i = 1; i < l; ++i) {
        theta[i] = kk(-i) - kk(1 - i);
    }
    return theta;
}

ParamSet ak_from_theta(const ThetaVector& theta)
{
    const int l = theta.modulus;
    // k_{j+1} = k_j - theta_{-j} for j = 1..l-1, starting from k_1 = 0,
    // then shift everything so that the k's sum to zero.
    std::vector<Rational> k(static_cast<std::size_t>(l));
    Rational current = 0;
    for (int j = 1; j <= l; ++j) {
        k[static_cast<std::size_t>(j % l)] = current;
        current -= theta[-j];
    }
    const Rational shift = sum_of(k) / l;
    for (auto& x : k) {
        x -= shift;
    }
    return ParamSet(l, -theta.sum(), std::move(k));
}

ParamSet weyl_on_ak(std::int64_t r, const ParamSet& p)
{
    const int l = p.l;
    if (l == 1) {
        return p;
    }
    ParamSet out = p;
    auto idx = [l](std::int64_t j) { return static_cast<std::size_t>(positive_mod(j, l)); };
    if (positive_mod(r, l) == 0) {
        out.k[0] = p.k[1] + p.a;
        out.k[1] = p.k[0] - p.a;
    } else {
        std::swap(out.k[idx(-r)], out.k[idx(1 - r)]);
    }
    return out;
}

bool smooth_quiver(const ThetaVector& theta, int n)
{
    const Rational total = theta.sum();
    if (sgn(total) == 0) {
        return false;
    }
    const int l = theta.modulus;
    for (int i = 1; i < l; ++i) {
        Rational partial = 0;
        for (int j = i; j < l; ++j) {
            partial += theta[j];
            for (int s = -(n - 1); s <= n - 1; ++s) {
                if (sgn(partial + s * total) == 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool smooth_gl1n(const ParamSet& p, int n, bool drop_a_factor)
{
    if (n < 1) {
        throw std::invalid_argument("smooth_gl1n needs n >= 1");
    }
    if (!drop_a_factor && sgn(p.a) == 0) {
        return false;
    }
    for (int i = 0; i < p.l; ++i) {
        for (int j = 0; j < p.l; ++j) {
            if (i == j) {
                continue;
            }
            for (int r = 0; r < n; ++r) {
                if (sgn(p.k[static_cast<std::size_t>(i)] - p.k[static_cast<std::size_t>(j)] - r * p.a) == 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool smooth_cyclic(const std::vector<Rational>& k)
{
    if (sgn(sum_of(k)) != 0) {
        throw std::invalid_argument("smooth_cyclic: k-parameters must sum to zero");
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
        for (std::size_t j = i + 1; j < k.size(); ++j) {
            if (k[i] == k[j]) {
                return false;
            }
        }
    }
    return true;
}

bool smooth_g4(const Rational& k0, const Rational& k1, const Rational& k2)
{
    if (sgn(k0 + k1 + k2) != 0) {
        throw std::invalid_argument("smooth_g4: k0 + k1 + k2 must be zero");
    }
    const Rational product = k0 * k1 * k2 * (k0 - k1) * (k0 - k2) * (k1 - k2);
    return sgn(product) != 0;
}

namespace {

void check_transport_input(const ParamSet& p, int k_factor, const ResidueVector& d)
{
    if (k_factor < 1) {
        throw std::invalid_argument("transport: k must be positive");
    }
    if (d.modulus != k_factor * p.l) {
        throw std::invalid_argument("transport: d must live on Z/" + std::to_string(k_factor * p.l) + "Z, got Z/" +
                                    std::to_string(d.modulus) + "Z");
    }
}

Rational floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return Rational{static_cast<long>(q)};
}

} // namespace

ParamSet transport(const ParamSet& p, int k_factor, const ResidueVector& d)
{
    check_transport_input(p, k_factor, d);
    const int l = p.l;
    const int m = k_factor * l;
    const Rational centre = make_rational(k_factor - 1, 2);
    std::vector<Rational> kp(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        Rational bracket = floor_div(j - 1, l) - centre + Rational{static_cast<long>(k_factor * (d[1 - j] - d[-j]))};
        kp[static_cast<std::size_t>(j % m)] = p.k[static_cast<std::size_t>(j % l)] + p.a * bracket;
    }
    if (sgn(sum_of(kp)) != 0) {
        throw std::logic_error("transport produced k' with nonzero sum; index convention broken");
    }
    return ParamSet(m, k_factor * p.a, std::move(kp));
}

ThetaVector repeat_theta(const ThetaVector& theta, int k_factor)
{
    const int m = k_factor * theta.modulus;
    ThetaVector out(m);
    for (int j = 0; j < m; ++j) {
        out[j] = theta[j];
    }
    return out;
}

ParamSet transport_via_theta(const ParamSet& p, int k_factor, const ResidueVector& d)
{
    check_transport_input(p, k_factor, d);
    const ThetaVector repeated = repeat_theta(theta_from_ak(p), k_factor);
    const RootLatticeElement witness = orbit_normalize(d).witness;
    return ak_from_theta(translate_theta(witness, repeated));
}

CyclicCMSurface cyclic_cm_polynomial(const std::vector<Rational>& k, int weight)
{
    if (sgn(sum_of(k)) != 0) {
        throw std::invalid_argument("cyclic_cm_polynomial: k-parameters must sum to zero");
    }
    CyclicCMSurface s;
    s.l = static_cast<int>(k.size());
    s.weight = weight;
    for (const auto& x : k) {
        s.roots.push_back(s.l * x);
    }
    return s;
}

std::vector<Rational> expand_roots(const std::vector<Rational>& roots)
{
    std::vector<Rational> poly{Rational{1}};
    for (const auto& r : roots) {
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= r * poly[i];
        }
        poly = std::move(next);
    }
    return poly;
}

bool same_root_multiset(std::vector<Rational> a, std::vector<Rational> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<Rational> g4_heart_roots(const Rational& k0, const Rational& k1, const Rational& k2)
{
    return {Rational{0}, 12 * k0, 12 * k1, 12 * k2};
}

std::vector<Rational> g4_spade_roots(const Rational& k0, const Rational& k1, const Rational& k2)
{
    return {-6 * k0, -6 * k1, -6 * k2, 12 * k0, 12 * k1, 12 * k2};
}

} // namespace cmfix
