#include "cmfix/quiver.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace cmfix {

std::size_t bareiss_rank(const Matrix<Rational>& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer denom = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            a[i][j] = m(i, j).get_num() * (denom / m(i, j).get_den());
        }
    }
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<Matrix<CyclotomicNumber>> root_of_unity_gauge(const ResidueVector& d, int order, std::int64_t power)
{
    const CyclotomicNumber zero(order);
    std::vector<Matrix<CyclotomicNumber>> g;
    for (int i = 0; i < d.modulus; ++i) {
        const auto n = static_cast<std::size_t>(d[i]);
        g.push_back(CyclotomicNumber::root_of_unity(order, power * i) * Matrix<CyclotomicNumber>::identity(n, zero));
    }
    return g;
}

CyclotomicRep to_cyclotomic(const RationalRep& rep, int order)
{
    rep.validate();
    const CyclotomicNumber zero(order);
    auto convert = [&](const Matrix<Rational>& m) {
        Matrix<CyclotomicNumber> out(m.rows(), m.cols(), zero);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                out(i, j) = CyclotomicNumber(order, m(i, j));
            }
        }
        return out;
    };
    CyclotomicRep out;
    out.l = rep.l;
    out.d = rep.d;
    for (int i = 0; i < rep.l; ++i) {
        out.X.push_back(convert(rep.X[static_cast<std::size_t>(i)]));
        out.Y.push_back(convert(rep.Y[static_cast<std::size_t>(i)]));
    }
    return out;
}

std::string to_string(Simplicity s)
{
    switch (s) {
    case Simplicity::Simple:
        return "simple";
    case Simplicity::NotSimple:
        return "not_simple";
    case Simplicity::Unknown:
        break;
    }
    return "unknown";
}

RationalRep dual_rep(const RationalRep& rep)
{
    rep.validate();
    RationalRep out;
    out.l = rep.l;
    out.d = rep.d;
    for (int i = 0; i < rep.l; ++i) {
        out.X.push_back(rep.Y[static_cast<std::size_t>(i)].transpose());
        out.Y.push_back(rep.X[static_cast<std::size_t>(i)].transpose());
    }
    return out;
}

namespace {

using Vec = std::vector<Rational>;
using VertexBasis = std::vector<std::vector<Vec>>;

// Incrementally maintained echelon basis of a subspace.
class Span {
public:
    explicit Span(std::size_t dim) : dim_(dim) {}

    // Adds v if it is independent; returns whether it was added.
    bool add(const Vec& v)
    {
        Vec r = v;
        for (std::size_t t = 0; t < echelon_.size(); ++t) {
            const auto p = pivots_[t];
            if (sgn(r[p]) != 0) {
                const Rational f = r[p];
                for (std::size_t j = 0; j < dim_; ++j) {
                    r[j] -= f * echelon_[t][j];
                }
            }
        }
        std::size_t p = 0;
        while (p < dim_ && sgn(r[p]) == 0) {
            ++p;
        }
        if (p == dim_) {
            return false;
        }
        const Rational inv = 1 / r[p];
        for (auto& x : r) {
            x *= inv;
        }
        for (std::size_t t = 0; t < echelon_.size(); ++t) {
            if (sgn(echelon_[t][p]) != 0) {
                const Rational f = echelon_[t][p];
                for (std::size_t j = 0; j < dim_; ++j) {
                    echelon_[t][j] -= f * r[j];
                }
            }
        }
        echelon_.push_back(std::move(r));
        pivots_.push_back(p);
        original_.push_back(v);
        return true;
    }

    std::size_t size() const { return echelon_.size(); }
    const std::vector<Vec>& basis() const { return original_; }

private:
    std::size_t dim_;
    std::vector<Vec> echelon_;
    std::vector<std::size_t> pivots_;
    std::vector<Vec> original_;
};

std::size_t total_dim(const VertexBasis& b)
{
    std::size_t s = 0;
    for (const auto& v : b) {
        s += v.size();
    }
    return s;
}

std::size_t total_dim(const RationalRep& rep) { return static_cast<std::size_t>(rep.d.total()); }

VertexBasis annihilator(const RationalRep& rep, const VertexBasis& dual_basis)
{
    VertexBasis out(static_cast<std::size_t>(rep.l));
    for (int v = 0; v < rep.l; ++v) {
        const auto& rows = dual_basis[static_cast<std::size_t>(v)];
        const auto n = rep.dim(v);
        if (rows.empty()) {
            for (std::size_t t = 0; t < n; ++t) {
                Vec e(n, Rational{0});
                e[t] = 1;
                out[static_cast<std::size_t>(v)].push_back(std::move(e));
            }
            continue;
        }
        out[static_cast<std::size_t>(v)] = Matrix<Rational>::from_rows(rows, n).nullspace();
    }
    return out;
}

// The two full cycles through the vertex and the two back-and-forth steps.
std::vector<Matrix<Rational>> basic_loops(const RationalRep& rep, int vertex)
{
    const int l = rep.l;
    auto at = [l](int i) { return static_cast<std::size_t>(positive_mod(i, l)); };
    std::vector<Matrix<Rational>> out;
    Matrix<Rational> right = Matrix<Rational>::identity(rep.dim(vertex));
    Matrix<Rational> left = right;
    for (int s = 0; s < l; ++s) {
        right = rep.Y[at(vertex + s)] * right;
        left = rep.X[at(vertex - s - 1)] * left;
    }
    out.push_back(std::move(right));
    out.push_back(std::move(left));
    if (l > 1) {
        out.push_back(rep.X[at(vertex)] * rep.Y[at(vertex)]);
        out.push_back(rep.Y[at(vertex - 1)] * rep.X[at(vertex - 1)]);
    }
    return out;
}

Matrix<Rational> random_loop(const RationalRep& rep, int vertex, std::mt19937_64& rng)
{
    const int l = rep.l;
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> length(1, 2 * l + 2);
    Matrix<Rational> op = Matrix<Rational>::identity(rep.dim(vertex));
    int position = vertex;
    int displacement = 0;
    auto step = [&](int dir) {
        const int from = static_cast<int>(positive_mod(position, l));
        const int to = static_cast<int>(positive_mod(position + dir, l));
        if (dir > 0) {
            op = rep.Y[static_cast<std::size_t>(from)] * op;
        } else {
            op = rep.X[static_cast<std::size_t>(to)] * op;
        }
        position += dir;
        displacement += dir;
    };
    const int steps = length(rng);
    for (int s = 0; s < steps; ++s) {
        step(coin(rng) ? 1 : -1);
    }
    if (coin(rng) && displacement > 0) {
        while (positive_mod(displacement, l) != 0) {
            step(1);
        }
    } else {
        while (displacement != 0) {
            step(displacement > 0 ? -1 : 1);
        }
    }
    return op;
}

std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& a)
{
    // Faddeev-LeVerrier; coefficients constant term first.
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix<Rational> m(n, n);
    const auto id = Matrix<Rational>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + c[n - k + 1] * id;
        c[n - k] = -(a * m).trace() / static_cast<long>(k);
    }
    return c;
}

Rational evaluate(const std::vector<Rational>& poly, const Rational& x)
{
    Rational acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = acc * x + poly[i];
    }
    return acc;
}

std::vector<Integer> small_divisors(Integer n)
{
    n = abs(n);
    std::vector<Integer> out;
    if (n == 0 || n > Integer{"10000000000"}) {
        return out;
    }
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) {
                out.push_back(n / d);
            }
        }
    }
    return out;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& poly)
{
    std::vector<Rational> roots;
    std::size_t low = 0;
    while (low < poly.size() && sgn(poly[low]) == 0) {
        ++low;
    }
    if (low > 0) {
        roots.push_back(Rational{0});
    }
    if (low + 1 >= poly.size()) {
        return roots;
    }
    Integer denom = 1;
    for (const auto& c : poly) {
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
    }
    const Integer lead = Rational{poly.back() * denom}.get_num();
    const Integer constant = Rational{poly[low] * denom}.get_num();
    for (const auto& p : small_divisors(constant)) {
        for (const auto& q : small_divisors(lead)) {
            for (int s : {1, -1}) {
                Rational x{Integer{p * s}, q};
                x.canonicalize();
                if (sgn(evaluate(poly, x)) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) {
                    roots.push_back(x);
                }
            }
        }
    }
    return roots;
}

VertexBasis single_vector(const RationalRep& rep, int vertex, const Vec& v)
{
    VertexBasis seeds(static_cast<std::size_t>(rep.l));
    seeds[static_cast<std::size_t>(vertex)].push_back(v);
    return seeds;
}

} // namespace

VertexBasis spin_up(const RationalRep& rep, const VertexBasis& seeds)
{
    rep.validate();
    const int l = rep.l;
    std::vector<Span> spans;
    for (int v = 0; v < l; ++v) {
        spans.emplace_back(rep.dim(v));
    }
    std::deque<std::pair<int, Vec>> queue;
    auto push = [&](int v, const Vec& x) {
        if (spans[static_cast<std::size_t>(v)].add(x)) {
            queue.emplace_back(v, x);
        }
    };
    for (int v = 0; v < l && v < static_cast<int>(seeds.size()); ++v) {
        for (const auto& x : seeds[static_cast<std::size_t>(v)]) {
            if (x.size() != rep.dim(v)) {
                throw std::invalid_argument("spin_up: seed vector has the wrong length");
            }
            push(v, x);
        }
    }
    while (!queue.empty()) {
        auto [v, x] = std::move(queue.front());
        queue.pop_front();
        const int right = static_cast<int>(positive_mod(v + 1, l));
        const int left = static_cast<int>(positive_mod(v - 1, l));
        if (rep.dim(right) > 0) {
            push(right, rep.Y[static_cast<std::size_t>(v)].apply(x));
        }
        if (rep.dim(left) > 0) {
            push(left, rep.X[static_cast<std::size_t>(left)].apply(x));
        }
    }
    VertexBasis out;
    for (const auto& s : spans) {
        out.push_back(s.basis());
    }
    return out;
}

bool is_subrepresentation(const RationalRep& rep, const VertexBasis& basis)
{
    rep.validate();
    const int l = rep.l;
    if (basis.size() != static_cast<std::size_t>(l)) {
        return false;
    }
    auto contains = [&](int v, const Vec& x) {
        const auto& b = basis[static_cast<std::size_t>(v)];
        const auto n = rep.dim(v);
        if (n == 0) {
            return true;
        }
        Matrix<Rational> m(b.size() + 1, n);
        for (std::size_t t = 0; t < b.size(); ++t) {
            for (std::size_t j = 0; j < n; ++j) {
                m(t, j) = b[t][j];
            }
        }
        const auto before = m.block(0, 0, b.size(), n).rank();
        for (std::size_t j = 0; j < n; ++j) {
            m(b.size(), j) = x[j];
        }
        return m.rank() == before;
    };
    for (int v = 0; v < l; ++v) {
        const int right = static_cast<int>(positive_mod(v + 1, l));
        const int left = static_cast<int>(positive_mod(v - 1, l));
        for (const auto& x : basis[static_cast<std::size_t>(v)]) {
            if (!contains(right, rep.Y[static_cast<std::size_t>(v)].apply(x)) ||
                !contains(left, rep.X[static_cast<std::size_t>(left)].apply(x))) {
                return false;
            }
        }
    }
    return true;
}

SimplicityResult norton_simplicity(const RationalRep& rep, std::uint64_t seed, int budget)
{
    rep.validate();
    SimplicityResult result;
    const auto dim = total_dim(rep);
    if (dim == 0) {
        result.verdict = Simplicity::NotSimple;
        return result;
    }
    if (dim == 1) {
        result.verdict = Simplicity::Simple;
        return result;
    }
    const RationalRep dual = dual_rep(rep);

    // Returns true when the closure in the representation (or its dual) is proper.
    auto proper_in_rep = [&](const VertexBasis& seeds) {
        auto closure = spin_up(rep, seeds);
        if (total_dim(closure) < dim && total_dim(closure) > 0) {
            result.verdict = Simplicity::NotSimple;
            result.witness = std::move(closure);
            return true;
        }
        return false;
    };
    auto proper_in_dual = [&](const VertexBasis& seeds) {
        auto closure = spin_up(dual, seeds);
        if (total_dim(closure) < dim && total_dim(closure) > 0) {
            result.verdict = Simplicity::NotSimple;
            result.witness = annihilator(rep, closure);
            return true;
        }
        return false;
    };

    std::vector<int> vertices;
    for (int v = 0; v < rep.l; ++v) {
        if (rep.dim(v) > 0) {
            vertices.push_back(v);
        }
    }
    std::stable_sort(vertices.begin(), vertices.end(), [&](int a, int b) { return rep.dim(a) < rep.dim(b); });

    for (int v : vertices) {
        for (std::size_t t = 0; t < rep.dim(v); ++t) {
            Vec e(rep.dim(v), Rational{0});
            e[t] = 1;
            if (proper_in_rep(single_vector(rep, v, e)) || proper_in_dual(single_vector(rep, v, e))) {
                return result;
            }
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-3, 3);
    auto random_vec = [&](std::size_t n) {
        Vec x(n);
        for (auto& c : x) {
            c = small(rng);
        }
        return x;
    };

    // Norton: an eigenvalue of b with one-dimensional kernel decides simplicity once the kernel
    // vector generates the representation and a cokernel vector generates the dual.
    auto decide_with = [&](int v, const Matrix<Rational>& b) {
        const auto n = rep.dim(v);
        std::vector<Rational> candidates;
        if (n == 1) {
            candidates.push_back(b(0, 0));
        } else {
            candidates = rational_roots(characteristic_polynomial(b));
        }
        for (const auto& lambda : candidates) {
            const Matrix<Rational> a = b - lambda * Matrix<Rational>::identity(n);
            const auto kernel = a.nullspace();
            if (kernel.size() != 1) {
                continue;
            }
            const auto cokernel = a.transpose().nullspace();
            if (!proper_in_rep(single_vector(rep, v, kernel[0])) &&
                !proper_in_dual(single_vector(rep, v, cokernel[0]))) {
                result.verdict = Simplicity::Simple;
            }
            return true;
        }
        return false;
    };

    for (int v : vertices) {
        for (const auto& b : basic_loops(rep, v)) {
            if (decide_with(v, b)) {
                return result;
            }
        }
    }

    for (int trial = 0; trial < budget; ++trial) {
        result.trials = trial + 1;
        const int v = vertices[static_cast<std::size_t>(trial) % vertices.size()];
        const auto n = rep.dim(v);
        if (proper_in_rep(single_vector(rep, v, random_vec(n))) ||
            proper_in_dual(single_vector(rep, v, random_vec(n)))) {
            return result;
        }
        Matrix<Rational> b = Rational{small(rng)} * Matrix<Rational>::identity(n);
        for (int s = 0; s < 3; ++s) {
            b += Rational{small(rng)} * random_loop(rep, v, rng);
        }
        if (decide_with(v, b)) {
            return result;
        }
    }
    result.verdict = Simplicity::Unknown;
    return result;
}

} // namespace cmfix
