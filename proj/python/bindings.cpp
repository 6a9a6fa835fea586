#include "cmfix/cli.hpp"
#include "cmfix/fixed_points.hpp"
#include "cmfix/parameters.hpp"
#include "cmfix/partition.hpp"
#include "cmfix/serialize.hpp"
#include "cmfix/wreath.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace cmfix;

namespace {

// Results cross the boundary as plain Python containers; rationals stay exact as "p/q" strings.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& obj) { return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>()); }

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

Multipartition to_multipartition(const std::vector<std::vector<int>>& parts)
{
    Multipartition out;
    for (const auto& p : parts) {
        out.push_back(Partition(p));
    }
    return out;
}

std::vector<Rational> to_rationals(const std::vector<std::string>& xs)
{
    std::vector<Rational> out;
    for (const auto& x : xs) {
        out.push_back(parse_rational(x));
    }
    return out;
}

LabelConvention to_convention(const std::string& name)
{
    if (name == "gordon") {
        return LabelConvention::Gordon;
    }
    if (name == "quiver") {
        return LabelConvention::Quiver;
    }
    throw std::invalid_argument("convention must be 'gordon' or 'quiver'");
}

ParamSet to_params(const std::string& a, const std::vector<std::string>& k)
{
    return ParamSet(static_cast<int>(k.size()), parse_rational(a), to_rationals(k));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact combinatorics of C*-fixed points in cyclotomic Calogero-Moser spaces";

    m.def("residues", [](const std::vector<int>& partition, int l) { return residues(to_partition(partition), l).entries; },
          py::arg("partition"), py::arg("l"));
    m.def(
        "core",
        [](const std::vector<int>& partition, int l) {
            const auto c = core(to_partition(partition), l);
            return py::make_tuple(to_py(to_json(c.core)), c.removals);
        },
        py::arg("partition"), py::arg("l"));
    m.def(
        "quotient", [](const std::vector<int>& partition, int l) { return to_py(to_json(quotient(to_partition(partition), l))); },
        py::arg("partition"), py::arg("l"));
    m.def(
        "residue_to_core",
        [](const std::vector<std::int64_t>& d) {
            const auto dec = residue_to_core(ResidueVector(static_cast<int>(d.size()), d));
            return py::make_tuple(to_py(to_json(dec.core)), dec.shift);
        },
        py::arg("d"));
    m.def(
        "enumerate_e",
        [](int k, int l, int n) {
            std::vector<std::vector<std::int64_t>> out;
            for (const auto& d : enumerate_E(k, l, n)) {
                out.push_back(d.entries);
            }
            return out;
        },
        py::arg("k"), py::arg("l"), py::arg("n"));
    m.def(
        "delta_map",
        [](const std::vector<std::int64_t>& d, int l) {
            return to_py(to_json(delta_map(ResidueVector(static_cast<int>(d.size()), d), l)));
        },
        py::arg("d"), py::arg("l"));
    m.def(
        "transport",
        [](const std::string& a, const std::vector<std::string>& k, int k_factor, const std::vector<std::int64_t>& d) {
            const auto p = to_params(a, k);
            const ResidueVector dv(p.l * k_factor, d.empty() ? std::vector<std::int64_t>(static_cast<std::size_t>(p.l * k_factor)) : d);
            return to_py(to_json(transport(p, k_factor, dv)));
        },
        py::arg("a"), py::arg("k"), py::arg("k_factor"), py::arg("d") = std::vector<std::int64_t>{});
    m.def(
        "components",
        [](int n, int k_factor, const std::string& a, const std::vector<std::string>& k, const std::string& convention) {
            const auto p = to_params(a, k);
            Json out = Json::array();
            for (const auto& c : component_catalog(p.l, n, k_factor, p)) {
                out.push_back(to_json(c, to_convention(convention)));
            }
            return to_py(out);
        },
        py::arg("n"), py::arg("k_factor"), py::arg("a"), py::arg("k"), py::arg("convention") = "gordon");
    m.def(
        "smooth_gl1n",
        [](const std::string& a, const std::vector<std::string>& k, int n) { return smooth_gl1n(to_params(a, k), n); },
        py::arg("a"), py::arg("k"), py::arg("n"));
    m.def(
        "smooth_quiver",
        [](const std::vector<std::string>& theta, int n) {
            return smooth_quiver(ThetaVector(static_cast<int>(theta.size()), to_rationals(theta)), n);
        },
        py::arg("theta"), py::arg("n"));
    m.def(
        "character_table", [](int l, int n) { return to_py(to_json(character_table(l, n))); }, py::arg("l"), py::arg("n"));
    m.def(
        "verify_filtration",
        [](int l, int n, int k, const std::vector<std::vector<int>>& gamma, const std::string& convention) {
            return to_py(to_json(verify_filtration(l, n, k, to_multipartition(gamma), to_convention(convention))));
        },
        py::arg("l"), py::arg("n"), py::arg("k"), py::arg("gamma"), py::arg("convention") = "gordon");
    m.def(
        "quiver_rep_roundtrip", [](const py::object& rep) { return to_py(to_json(rational_rep_from_json(from_py(rep)))); },
        py::arg("rep"));
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
