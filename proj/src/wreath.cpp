#include "cmfix/wreath.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cmfix {

Integer group_order(int l, int n)
{
    Integer out = factorial(n);
    for (int i = 0; i < n; ++i) {
        out *= l;
    }
    return out;
}

Integer centralizer_order(const Multipartition& type, int l)
{
    Integer out = 1;
    for (const auto& comp : type) {
        std::map<int, int> multiplicity;
        for (int a : comp.parts()) {
            ++multiplicity[a];
        }
        for (auto [a, count] : multiplicity) {
            for (int t = 0; t < count; ++t) {
                out *= a * l;
            }
            out *= factorial(count);
        }
    }
    return out;
}

int codim(const Multipartition& type)
{
    if (type.empty()) {
        return 0;
    }
    return total_size(type) - type[0].length();
}

Multipartition inverse_class(const Multipartition& type)
{
    const auto l = type.size();
    Multipartition out(l);
    for (std::size_t j = 0; j < l; ++j) {
        out[(l - j) % l] = type[j];
    }
    return out;
}

std::vector<ConjugacyClass> enumerate_classes(int l, int n)
{
    const Integer order = group_order(l, n);
    std::vector<ConjugacyClass> out;
    for (auto& type : enumerate_multipartitions(l, n)) {
        Integer size = order / centralizer_order(type, l);
        int c = codim(type);
        out.push_back({std::move(type), std::move(size), c});
    }
    return out;
}

Integer character_degree(const Multipartition& lambda)
{
    Integer out = factorial(total_size(lambda));
    for (const auto& p : lambda) {
        out /= factorial(p.size());
        out *= count_standard_tableaux(p);
    }
    return out;
}

namespace {

struct RimHook {
    Partition rest;
    int sign = 1;
};

// All ways to remove a rim hook of size a, via bead moves on a beta-set.
std::vector<RimHook> rim_hooks(const Partition& p, int a)
{
    const int beads = p.length() + a;
    std::set<int> positions;
    for (int i = 0; i < beads; ++i) {
        positions.insert(p.part(i) - i + beads - 1);
    }
    std::vector<RimHook> out;
    for (int b : positions) {
        const int target = b - a;
        if (target < 0 || positions.count(target)) {
            continue;
        }
        int between = 0;
        for (int x = target + 1; x < b; ++x) {
            between += static_cast<int>(positions.count(x));
        }
        std::set<int> moved = positions;
        moved.erase(b);
        moved.insert(target);
        std::vector<int> parts;
        int i = 0;
        for (auto it = moved.rbegin(); it != moved.rend(); ++it, ++i) {
            parts.push_back(*it - (beads - 1 - i));
        }
        out.push_back({Partition(std::move(parts)), between % 2 == 0 ? 1 : -1});
    }
    return out;
}

using Memo = std::map<std::pair<Multipartition, Multipartition>, CyclotomicNumber>;

CyclotomicNumber murnaghan_nakayama(const Multipartition& lambda, const Multipartition& type, int l, Memo& memo)
{
    if (total_size(type) == 0) {
        return CyclotomicNumber(l, Rational{1});
    }
    auto key = std::make_pair(lambda, type);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    std::size_t color = 0;
    while (type[color].empty()) {
        ++color;
    }
    const int a = type[color].part(0);
    Multipartition rest_type = type;
    {
        auto parts = type[color].parts();
        parts.erase(parts.begin());
        rest_type[color] = Partition(std::move(parts));
    }
    CyclotomicNumber value(l);
    for (int i = 0; i < l; ++i) {
        const auto& comp = lambda[static_cast<std::size_t>(i)];
        if (comp.size() < a) {
            continue;
        }
        const auto phase = CyclotomicNumber::root_of_unity(l, static_cast<std::int64_t>(i) * static_cast<std::int64_t>(color));
        for (auto& hook : rim_hooks(comp, a)) {
            Multipartition rest = lambda;
            rest[static_cast<std::size_t>(i)] = std::move(hook.rest);
            value += phase * murnaghan_nakayama(rest, rest_type, l, memo) * Rational{hook.sign};
        }
    }
    memo.emplace(std::move(key), value);
    return value;
}

void check_shapes(const Multipartition& lambda, const Multipartition& type)
{
    if (lambda.empty() || lambda.size() != type.size()) {
        throw std::invalid_argument("character and class must have the same number of components");
    }
    if (total_size(lambda) != total_size(type)) {
        throw std::invalid_argument("character and class must have the same size");
    }
}

CyclotomicNumber lift(const CyclotomicNumber& x, int field)
{
    return x.order() == field ? x : x.embed(field);
}

} // namespace

CyclotomicNumber character_value(const Multipartition& lambda, const Multipartition& type)
{
    check_shapes(lambda, type);
    Memo memo;
    return murnaghan_nakayama(lambda, type, static_cast<int>(lambda.size()), memo);
}

const CharacterTable& character_table(int l, int n)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{l, n}];
    if (slot) {
        return *slot;
    }
    if (l < 1 || n < 0) {
        throw std::invalid_argument("character_table needs l >= 1 and n >= 0");
    }
    auto table = std::make_unique<CharacterTable>();
    table->l = l;
    table->n = n;
    table->order = group_order(l, n);
    table->classes = enumerate_classes(l, n);
    table->characters = enumerate_multipartitions(l, n);
    Memo memo;
    for (std::size_t c = 0; c < table->classes.size(); ++c) {
        table->class_index[table->classes[c].type] = c;
    }
    for (std::size_t x = 0; x < table->characters.size(); ++x) {
        table->character_index[table->characters[x]] = x;
        std::vector<CyclotomicNumber> row;
        for (const auto& cls : table->classes) {
            row.push_back(murnaghan_nakayama(table->characters[x], cls.type, l, memo));
        }
        table->values.push_back(std::move(row));
    }
    slot = std::move(table);
    return *slot;
}

void CentralElement::set(const Multipartition& type, const CyclotomicNumber& value)
{
    if (value.is_zero()) {
        coeffs.erase(type);
    } else {
        coeffs[type] = lift(value, field);
    }
}

CyclotomicNumber CentralElement::coefficient(const Multipartition& type) const
{
    auto it = coeffs.find(type);
    return it == coeffs.end() ? CyclotomicNumber(field) : it->second;
}

CentralElement zero_element(int l, int n, int field)
{
    CentralElement z;
    z.l = l;
    z.n = n;
    z.field = field;
    return z;
}

CentralElement identity_element(int l, int n, int field)
{
    CentralElement z = zero_element(l, n, field);
    Multipartition identity(static_cast<std::size_t>(l));
    identity[0] = Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
    z.set(identity, CyclotomicNumber(field, Rational{1}));
    return z;
}

CentralElement class_sum(const Multipartition& type, int field)
{
    const int l = static_cast<int>(type.size());
    CentralElement z = zero_element(l, total_size(type), field);
    z.set(type, CyclotomicNumber(field, Rational{1}));
    return z;
}

CentralElement central_idempotent(const Multipartition& lambda, int field)
{
    const int l = static_cast<int>(lambda.size());
    const int n = total_size(lambda);
    if (field % l != 0) {
        throw std::invalid_argument("central_idempotent: field must contain the l-th roots of unity");
    }
    const auto& table = character_table(l, n);
    const auto& row = table.values[table.character_index.at(lambda)];
    const Rational scale = Rational{character_degree(lambda)} / Rational{table.order};
    CentralElement e = zero_element(l, n, field);
    for (const auto& cls : table.classes) {
        const auto& inverse_value = row[table.class_index.at(inverse_class(cls.type))];
        e.set(cls.type, lift(inverse_value, field) * scale);
    }
    return e;
}

CentralElement operator+(const CentralElement& x, const CentralElement& y)
{
    if (x.l != y.l || x.n != y.n || x.field != y.field) {
        throw std::invalid_argument("central elements of different algebras");
    }
    CentralElement out = x;
    for (const auto& [type, value] : y.coeffs) {
        out.set(type, out.coefficient(type) + value);
    }
    return out;
}

CentralElement operator*(const CyclotomicNumber& s, const CentralElement& x)
{
    CentralElement out = zero_element(x.l, x.n, x.field);
    const auto scalar = lift(s, x.field);
    for (const auto& [type, value] : x.coeffs) {
        out.set(type, scalar * value);
    }
    return out;
}

std::map<Multipartition, CyclotomicNumber> idempotent_coordinates(const CentralElement& z)
{
    const auto& table = character_table(z.l, z.n);
    std::map<Multipartition, CyclotomicNumber> out;
    for (std::size_t x = 0; x < table.characters.size(); ++x) {
        const Rational inv_degree = 1 / Rational{character_degree(table.characters[x])};
        CyclotomicNumber w(z.field);
        for (const auto& [type, coeff] : z.coeffs) {
            const auto c = table.class_index.at(type);
            w += coeff * lift(table.values[x][c], z.field) * Rational{table.classes[c].size};
        }
        w *= inv_degree;
        out.emplace(table.characters[x], std::move(w));
    }
    return out;
}

CentralElement from_idempotent_coordinates(int l, int n, int field,
                                           const std::map<Multipartition, CyclotomicNumber>& coords)
{
    CentralElement out = zero_element(l, n, field);
    for (const auto& [lambda, w] : coords) {
        if (w.is_zero()) {
            continue;
        }
        out = out + lift(w, field) * central_idempotent(lambda, field);
    }
    return out;
}

CentralElement multiply(const CentralElement& x, const CentralElement& y)
{
    if (x.l != y.l || x.n != y.n || x.field != y.field) {
        throw std::invalid_argument("central elements of different algebras");
    }
    auto cx = idempotent_coordinates(x);
    const auto cy = idempotent_coordinates(y);
    for (auto& [lambda, w] : cx) {
        w *= cy.at(lambda);
    }
    return from_idempotent_coordinates(x.l, x.n, x.field, cx);
}

int filtration_degree(const CentralElement& z)
{
    int degree = 0;
    for (const auto& [type, value] : z.coeffs) {
        degree = std::max(degree, codim(type));
    }
    return degree;
}

CentralElement i_gamma_star(const CentralElement& z, const Multipartition& gamma, int k, LabelConvention convention)
{
    if (gamma.size() != static_cast<std::size_t>(z.l)) {
        throw std::invalid_argument("i_gamma_star: gamma must have l components");
    }
    const int size = total_size(gamma);
    if (size > z.n || (z.n - size) % k != 0) {
        throw std::invalid_argument("i_gamma_star: |gamma| must be at most n and congruent to n mod k");
    }
    const int m = k * z.l;
    const int r = (z.n - size) / k;
    const int field = std::lcm(z.field, m);
    std::map<Multipartition, CyclotomicNumber> image;
    for (const auto& [lambda, w] : idempotent_coordinates(z)) {
        if (w.is_zero() || core_tuple(lambda, k) != gamma) {
            continue;
        }
        auto mu = convention == LabelConvention::Gordon ? beta_flat_k_gamma(lambda, k, gamma)
                                                        : beta_k_gamma(lambda, k, gamma);
        image.emplace(std::move(mu), lift(w, field));
    }
    return from_idempotent_coordinates(m, r, field, image);
}

FiltrationReport verify_filtration(int l, int n, int k, const Multipartition& gamma, LabelConvention convention)
{
    FiltrationReport report;
    report.l = l;
    report.n = n;
    report.k = k;
    report.gamma = gamma;
    report.convention = convention;
    report.r = (n - total_size(gamma)) / k;
    for (const auto& cls : character_table(l, n).classes) {
        const auto image = i_gamma_star(class_sum(cls.type, l), gamma, k, convention);
        FiltrationCertificate cert;
        cert.source_class = cls.type;
        cert.codim = cls.codim;
        cert.image_degree = filtration_degree(image);
        for (const auto& [type, value] : image.coeffs) {
            if (cert.worst_class.empty() || codim(type) > codim(cert.worst_class)) {
                cert.worst_class = type;
            }
        }
        cert.ok = cert.image_degree <= cert.codim;
        report.pass = report.pass && cert.ok;
        report.certificates.push_back(std::move(cert));
    }
    return report;
}

} // namespace cmfix
