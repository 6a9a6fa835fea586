#include "cmfix/serialize.hpp"

#include <stdexcept>

namespace cmfix {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const CyclotomicNumber& x)
{
    Json coeffs = Json::array();
    for (const auto& c : x.coefficients()) {
        coeffs.push_back(to_string(c));
    }
    return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Multipartition& mp)
{
    Json out = Json::array();
    for (const auto& p : mp) {
        out.push_back(to_json(p));
    }
    return out;
}

Json to_json(const ResidueVector& d) { return Json{{"modulus", d.modulus}, {"entries", d.entries}}; }

Json to_json(const ThetaVector& theta)
{
    Json entries = Json::array();
    for (const auto& x : theta.entries) {
        entries.push_back(to_string(x));
    }
    return Json{{"modulus", theta.modulus}, {"entries", entries}};
}

Json to_json(const ParamSet& p)
{
    Json k = Json::array();
    for (const auto& x : p.k) {
        k.push_back(to_string(x));
    }
    return Json{{"l", p.l}, {"a", to_string(p.a)}, {"k", k}};
}

Json to_json(const CyclicCMSurface& s)
{
    Json roots = Json::array();
    for (const auto& x : s.roots) {
        roots.push_back(to_string(x));
    }
    return Json{{"l", s.l}, {"roots", roots}};
}

std::string to_string(LabelConvention c) { return c == LabelConvention::Gordon ? "gordon" : "quiver"; }

Json to_json(const ComponentDescriptor& c, LabelConvention convention)
{
    Json labels = Json::array();
    for (const auto& lambda : c.labels) {
        labels.push_back(to_json(lambda));
    }
    Json injection = Json::array();
    for (const auto& [mu, lambda] : c.injection(convention)) {
        injection.push_back(Json{{"from", to_json(mu)}, {"to", to_json(lambda)}});
    }
    return Json{{"l", c.l},
                {"n", c.n},
                {"k", c.k},
                {"m", c.m},
                {"gamma", to_json(c.gamma)},
                {"r", c.r},
                {"nu", to_json(c.nu)},
                {"d", to_json(c.d)},
                {"reflection_group", Json{{"l", c.m}, {"n", c.r}}},
                {"c_prime", to_json(c.c_prime)},
                {"labels", labels},
                {"convention", to_string(convention)},
                {"label_injection", injection}};
}

Json to_json(const CharacterTable& t)
{
    Json classes = Json::array();
    for (const auto& c : t.classes) {
        classes.push_back(Json{{"type", to_json(c.type)}, {"size", c.size.get_str()}, {"codim", c.codim}});
    }
    Json characters = Json::array();
    for (std::size_t x = 0; x < t.characters.size(); ++x) {
        Json values = Json::array();
        for (const auto& v : t.values[x]) {
            values.push_back(to_json(v));
        }
        characters.push_back(Json{{"label", to_json(t.characters[x])}, {"values", values}});
    }
    return Json{{"l", t.l}, {"n", t.n}, {"order", t.order.get_str()}, {"classes", classes}, {"characters", characters}};
}

Json to_json(const FiltrationReport& r)
{
    Json certs = Json::array();
    for (const auto& c : r.certificates) {
        certs.push_back(Json{{"class", to_json(c.source_class)},
                             {"codim", c.codim},
                             {"image_degree", c.image_degree},
                             {"worst_class", c.worst_class.empty() ? Json(nullptr) : to_json(c.worst_class)},
                             {"ok", c.ok}});
    }
    return Json{{"l", r.l},
                {"n", r.n},
                {"k", r.k},
                {"gamma", to_json(r.gamma)},
                {"r", r.r},
                {"convention", to_string(r.convention)},
                {"pass", r.pass},
                {"certificates", certs}};
}

Json to_json(const NestingReport& r)
{
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back(Json{{"gamma_fine", to_json(f.gamma_fine)},
                                {"gamma_coarse", to_json(f.gamma_coarse)},
                                {"contained", f.contained},
                                {"core_matches", f.core_matches}});
    }
    return Json{{"pass", r.pass}, {"pairs_checked", r.pairs_checked}, {"failures", failures}};
}

namespace {

Json matrix_json(const Matrix<Rational>& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(to_string(m(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

Matrix<Rational> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& name)
{
    if (!j.is_array() || j.size() != rows) {
        throw std::invalid_argument(name + ": expected " + std::to_string(rows) + " rows");
    }
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw std::invalid_argument(name + ": row " + std::to_string(i) + " must have " + std::to_string(cols) +
                                        " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(i, c) = rational_from_json(j[i][c]);
        }
    }
    return m;
}

} // namespace

Json to_json(const RationalRep& rep)
{
    Json X = Json::array();
    Json Y = Json::array();
    for (int i = 0; i < rep.l; ++i) {
        X.push_back(matrix_json(rep.X[static_cast<std::size_t>(i)]));
        Y.push_back(matrix_json(rep.Y[static_cast<std::size_t>(i)]));
    }
    return Json{{"l", rep.l}, {"d", rep.d.entries}, {"X", X}, {"Y", Y}};
}

Json to_json(const SimplicityResult& r)
{
    Json out{{"verdict", to_string(r.verdict)}, {"trials", r.trials}};
    if (!r.witness.empty()) {
        Json w = Json::array();
        for (const auto& vertex : r.witness) {
            Json vecs = Json::array();
            for (const auto& v : vertex) {
                Json vec = Json::array();
                for (const auto& x : v) {
                    vec.push_back(to_string(x));
                }
                vecs.push_back(vec);
            }
            w.push_back(vecs);
        }
        out["witness"] = w;
    }
    return out;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational{static_cast<long>(j.get<std::int64_t>())};
    }
    throw std::invalid_argument("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

CyclotomicNumber cyclotomic_from_json(const Json& j)
{
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
        coeffs.push_back(rational_from_json(c));
    }
    return CyclotomicNumber::from_coefficients(j.at("order").get<int>(), std::move(coeffs));
}

Partition partition_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("partition must be a JSON array");
    }
    return Partition(j.get<std::vector<int>>());
}

Multipartition multipartition_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("multipartition must be a JSON array of arrays");
    }
    Multipartition out;
    for (const auto& p : j) {
        out.push_back(partition_from_json(p));
    }
    return out;
}

ResidueVector residue_vector_from_json(const Json& j)
{
    if (j.is_array()) {
        auto entries = j.get<std::vector<std::int64_t>>();
        const int l = static_cast<int>(entries.size());
        return ResidueVector(l, std::move(entries));
    }
    return ResidueVector(j.at("modulus").get<int>(), j.at("entries").get<std::vector<std::int64_t>>());
}

ParamSet param_set_from_json(const Json& j)
{
    std::vector<Rational> k;
    for (const auto& x : j.at("k")) {
        k.push_back(rational_from_json(x));
    }
    return ParamSet(j.at("l").get<int>(), rational_from_json(j.at("a")), std::move(k));
}

RationalRep rational_rep_from_json(const Json& j)
{
    RationalRep rep;
    rep.l = j.at("l").get<int>();
    rep.d = residue_vector_from_json(j.at("d"));
    if (rep.d.modulus != rep.l) {
        throw std::invalid_argument("dimension vector modulus does not match l");
    }
    const auto& X = j.at("X");
    const auto& Y = j.at("Y");
    if (!X.is_array() || !Y.is_array() || X.size() != static_cast<std::size_t>(rep.l) ||
        Y.size() != static_cast<std::size_t>(rep.l)) {
        throw std::invalid_argument("representation needs l matrices in each of X and Y");
    }
    for (int i = 0; i < rep.l; ++i) {
        const auto a = rep.dim(i);
        const auto b = rep.dim(i + 1);
        rep.X.push_back(matrix_from_json(X[static_cast<std::size_t>(i)], a, b, "X_" + std::to_string(i)));
        rep.Y.push_back(matrix_from_json(Y[static_cast<std::size_t>(i)], b, a, "Y_" + std::to_string(i)));
    }
    rep.validate();
    return rep;
}

} // namespace cmfix
