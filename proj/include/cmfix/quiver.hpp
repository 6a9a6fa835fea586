#pragma once

#include "cmfix/affine_weyl.hpp"
#include "cmfix/matrix.hpp"
#include "cmfix/partition.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmfix {

/// Representation of the doubled cyclic quiver on Z/lZ with dimension vector d.
/// X[i] maps vertex i+1 to vertex i (d_i x d_{i+1}); Y[i] maps vertex i to
/// vertex i+1 (d_{i+1} x d_i).
template <class T>
struct QuiverRep {
    int l = 1;
    ResidueVector d;
    std::vector<Matrix<T>> X;
    std::vector<Matrix<T>> Y;

    std::size_t dim(std::int64_t i) const { return static_cast<std::size_t>(d[i]); }

    void validate() const
    {
        if (d.modulus != l || X.size() != static_cast<std::size_t>(l) || Y.size() != static_cast<std::size_t>(l)) {
            throw std::invalid_argument("quiver representation needs l X-maps, l Y-maps and d on Z/lZ");
        }
        if (!d.is_nonnegative()) {
            throw std::invalid_argument("dimension vector must be nonnegative");
        }
        for (int i = 0; i < l; ++i) {
            const auto& x = X[static_cast<std::size_t>(i)];
            const auto& y = Y[static_cast<std::size_t>(i)];
            if (x.rows() != dim(i) || x.cols() != dim(i + 1)) {
                throw std::invalid_argument("X_" + std::to_string(i) + " has shape " + x.shape() + ", expected " +
                                            std::to_string(dim(i)) + "x" + std::to_string(dim(i + 1)));
            }
            if (y.rows() != dim(i + 1) || y.cols() != dim(i)) {
                throw std::invalid_argument("Y_" + std::to_string(i) + " has shape " + y.shape() + ", expected " +
                                            std::to_string(dim(i + 1)) + "x" + std::to_string(dim(i)));
            }
        }
    }

    static QuiverRep zero(const ResidueVector& d, const T& zero_scalar = T{})
    {
        QuiverRep rep;
        rep.l = d.modulus;
        rep.d = d;
        for (int i = 0; i < rep.l; ++i) {
            rep.X.emplace_back(rep.dim(i), rep.dim(i + 1), zero_scalar);
            rep.Y.emplace_back(rep.dim(i + 1), rep.dim(i), zero_scalar);
        }
        return rep;
    }

    friend bool operator==(const QuiverRep& a, const QuiverRep& b)
    {
        return a.l == b.l && a.d == b.d && a.X == b.X && a.Y == b.Y;
    }
};

using RationalRep = QuiverRep<Rational>;
using CyclotomicRep = QuiverRep<CyclotomicNumber>;

/// Entry i is X_i Y_i - Y_{i-1} X_{i-1}.
template <class T>
std::vector<Matrix<T>> moment_map(const QuiverRep<T>& rep)
{
    rep.validate();
    std::vector<Matrix<T>> out;
    for (int i = 0; i < rep.l; ++i) {
        const auto prev = static_cast<std::size_t>(positive_mod(i - 1, rep.l));
        out.push_back(rep.X[static_cast<std::size_t>(i)] * rep.Y[static_cast<std::size_t>(i)] -
                      rep.Y[prev] * rep.X[prev]);
    }
    return out;
}

template <class T>
T scalar_zero(const QuiverRep<T>& rep)
{
    for (const auto& m : rep.X) {
        return m.zero();
    }
    return T{};
}

/// Off vertex 0 the moment map must be theta_i Id; at vertex 0 it must differ
/// from theta_0 Id by a matrix of rank at most 1 and trace -sum theta_i d_i.
template <class T>
bool in_deformed_fiber(const QuiverRep<T>& rep, const ThetaVector& theta)
{
    if (theta.modulus != rep.l) {
        throw std::invalid_argument("in_deformed_fiber: theta and representation live on different quivers");
    }
    const auto moments = moment_map(rep);
    const T zero = scalar_zero(rep);
    for (int i = 0; i < rep.l; ++i) {
        const auto n = rep.dim(i);
        Matrix<T> shifted = moments[static_cast<std::size_t>(i)] -
                            scalar_like(zero, theta[i]) * Matrix<T>::identity(n, zero);
        if (i != 0) {
            if (!shifted.is_zero_matrix()) {
                return false;
            }
            continue;
        }
        if (shifted.rank() > 1) {
            return false;
        }
        if (shifted.trace() != scalar_like(zero, -pairing(rep.d, theta))) {
            return false;
        }
    }
    return true;
}

/// Pushes a representation of the m-cyclic quiver to the l-cyclic quiver,
/// m = k l: vertex i collects the vertices i, i+l, ..., i+(k-1)l in that order.
template <class T>
QuiverRep<T> block_immersion(const QuiverRep<T>& rep, int l)
{
    rep.validate();
    const int m = rep.l;
    if (l < 1 || m % l != 0) {
        throw std::invalid_argument("block_immersion: target size must divide the source size");
    }
    const int k = m / l;
    ResidueVector target(l);
    std::vector<std::size_t> offset(static_cast<std::size_t>(m));
    for (int t = 0; t < k; ++t) {
        for (int i = 0; i < l; ++i) {
            const int j = i + t * l;
            offset[static_cast<std::size_t>(j)] = static_cast<std::size_t>(target[i]);
            target[i] += rep.d[j];
        }
    }
    auto out = QuiverRep<T>::zero(target, scalar_zero(rep));
    for (int j = 0; j < m; ++j) {
        const int i = j % l;
        const int next = (j + 1) % m;
        const auto row = offset[static_cast<std::size_t>(j)];
        const auto col = offset[static_cast<std::size_t>(next)];
        out.X[static_cast<std::size_t>(i)].set_block(row, col, rep.X[static_cast<std::size_t>(j)]);
        out.Y[static_cast<std::size_t>(i)].set_block(col, row, rep.Y[static_cast<std::size_t>(j)]);
    }
    return out;
}

/// xi . (X, Y) = (xi^{-1} X, xi Y). Throws std::invalid_argument on xi = 0.
template <class T>
QuiverRep<T> scale_action(const T& xi, const QuiverRep<T>& rep)
{
    if (is_zero(xi)) {
        throw std::invalid_argument("scale_action: xi must be invertible");
    }
    const T inv = field_inverse(xi);
    QuiverRep<T> out = rep;
    for (auto& x : out.X) {
        x = inv * x;
    }
    for (auto& y : out.Y) {
        y = xi * y;
    }
    return out;
}

/// g . (X, Y) with X_i -> g_i X_i g_{i+1}^{-1} and Y_i -> g_{i+1} Y_i g_i^{-1}.
template <class T>
QuiverRep<T> conjugate(const std::vector<Matrix<T>>& g, const QuiverRep<T>& rep)
{
    rep.validate();
    if (g.size() != static_cast<std::size_t>(rep.l)) {
        throw std::invalid_argument("conjugate: need one matrix per vertex");
    }
    std::vector<Matrix<T>> inv;
    for (const auto& gi : g) {
        inv.push_back(gi.inverse());
    }
    QuiverRep<T> out = rep;
    for (int i = 0; i < rep.l; ++i) {
        const auto a = static_cast<std::size_t>(i);
        const auto b = static_cast<std::size_t>((i + 1) % rep.l);
        out.X[a] = g[a] * rep.X[a] * inv[b];
        out.Y[a] = g[b] * rep.Y[a] * inv[a];
    }
    return out;
}

/// The element acting on vertex i by zeta^i Id, with zeta = zeta_order^power.
std::vector<Matrix<CyclotomicNumber>> root_of_unity_gauge(const ResidueVector& d, int order, std::int64_t power = 1);

CyclotomicRep to_cyclotomic(const RationalRep& rep, int order);

enum class Simplicity { Simple, NotSimple, Unknown };

std::string to_string(Simplicity s);

struct SimplicityResult {
    Simplicity verdict = Simplicity::Unknown;
    /// For NotSimple with a witness: a basis of a proper nonzero
    /// subrepresentation, one list of column vectors per vertex.
    std::vector<std::vector<std::vector<Rational>>> witness;
    int trials = 0;
};

/// Randomised irreducibility test: spin-up on basis and random vectors in the
/// representation and its dual, then Norton's criterion with vertex-local
/// random elements. One-sided; reports Unknown when the budget runs out.
SimplicityResult norton_simplicity(const RationalRep& rep, std::uint64_t seed, int budget = 32);

/// Smallest subrepresentation containing the given vectors (one per vertex,
/// possibly empty). Returns a basis per vertex.
std::vector<std::vector<std::vector<Rational>>> spin_up(const RationalRep& rep,
                                                        const std::vector<std::vector<std::vector<Rational>>>& seeds);

/// Whether the per-vertex subspaces are stable under every arrow.
bool is_subrepresentation(const RationalRep& rep, const std::vector<std::vector<std::vector<Rational>>>& basis);

/// Same vertices, X' = Y^T and Y' = X^T.
RationalRep dual_rep(const RationalRep& rep);

} // namespace cmfix
