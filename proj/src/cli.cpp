#include "cmfix/cli.hpp"

#include "cmfix/selftest.hpp"
#include "cmfix/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace cmfix::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    std::string partition;
    std::string d;
    std::string a = "0";
    std::string kparams;
    std::string theta;
    std::string gamma;
    std::string convention = "gordon";
    std::string input;
    int l = 0;
    int n = 0;
    int k = 0;
    int budget = 32;
    bool via_theta = false;
    bool drop_a = false;
    bool g4 = false;
    std::uint64_t seed = default_seed;
};

std::string join(const std::vector<std::string>& items, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
        s += (i ? sep : "") + items[i];
    }
    return s;
}

std::string cell(const Partition& p)
{
    std::vector<std::string> parts;
    for (int x : p.parts()) {
        parts.push_back(std::to_string(x));
    }
    return join(parts, " ");
}

std::string cell(const Multipartition& mp)
{
    std::vector<std::string> parts;
    for (const auto& p : mp) {
        parts.push_back(cell(p));
    }
    return join(parts, "|");
}

std::string cell(const ResidueVector& d)
{
    std::vector<std::string> parts;
    for (auto x : d.entries) {
        parts.push_back(std::to_string(x));
    }
    return join(parts, " ");
}

Partition parse_partition(const std::string& text)
{
    if (text.empty()) {
        return Partition{};
    }
    std::vector<int> parts;
    for (auto x : parse_int_list(text)) {
        parts.push_back(static_cast<int>(x));
    }
    return Partition(std::move(parts));
}

ParamSet parse_params(const Options& o)
{
    const Rational a = parse_rational(o.a);
    std::vector<Rational> k = o.kparams.empty() ? std::vector<Rational>(static_cast<std::size_t>(o.l), Rational{0})
                                                : parse_rational_list(o.kparams);
    return ParamSet(o.l, a, std::move(k));
}

LabelConvention parse_convention(const std::string& s)
{
    if (s == "gordon") {
        return LabelConvention::Gordon;
    }
    if (s == "quiver") {
        return LabelConvention::Quiver;
    }
    throw UsageError("--convention must be gordon or quiver");
}

void require_positive(int v, const char* flag)
{
    if (v < 1) {
        throw UsageError(std::string(flag) + " must be a positive integer");
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

int cmd_cores(const Options& o, std::ostream& out)
{
    require_positive(o.l, "--l");
    const auto result = core(parse_partition(o.partition), o.l);
    if (o.format == "csv") {
        out << "core,removals\n" << cell(result.core) << "," << result.removals << "\n";
        return 0;
    }
    emit(out, Json{{"core", to_json(result.core)}, {"removals", result.removals}});
    return 0;
}

int cmd_quotient(const Options& o, std::ostream& out)
{
    require_positive(o.l, "--l");
    const auto lambda = parse_partition(o.partition);
    const auto q = quotient(lambda, o.l);
    const auto c = core(lambda, o.l);
    if (o.format == "csv") {
        out << "core,quotient\n" << cell(c.core) << "," << cell(q) << "\n";
        return 0;
    }
    emit(out, Json{{"core", to_json(c.core)}, {"quotient", to_json(q)}});
    return 0;
}

int cmd_residues(const Options& o, std::ostream& out)
{
    require_positive(o.l, "--l");
    if (o.d.empty() && o.partition.empty()) {
        throw UsageError("residues needs --partition or --d");
    }
    if (!o.d.empty()) {
        const ResidueVector d(o.l, parse_int_list(o.d));
        const auto dec = residue_to_core(d);
        if (o.format == "csv") {
            out << "core,shift\n" << cell(dec.core) << "," << dec.shift << "\n";
            return 0;
        }
        emit(out, Json{{"core", to_json(dec.core)}, {"shift", dec.shift}, {"is_plus", dec.shift >= 0}});
        return 0;
    }
    const auto r = residues(parse_partition(o.partition), o.l);
    if (o.format == "csv") {
        out << "residue,count\n";
        for (int i = 0; i < o.l; ++i) {
            out << i << "," << r[i] << "\n";
        }
        return 0;
    }
    emit(out, to_json(r));
    return 0;
}

int cmd_enumerate_e(const Options& o, std::ostream& out)
{
    require_positive(o.l, "--l");
    require_positive(o.k, "--k");
    if (o.n < 0) {
        throw UsageError("--n must be nonnegative");
    }
    const auto all = enumerate_E(o.k, o.l, o.n);
    if (o.format == "csv") {
        out << "d,gamma\n";
        for (const auto& d : all) {
            out << cell(d) << "," << cell(delta_map(d, o.l)) << "\n";
        }
        return 0;
    }
    Json arr = Json::array();
    for (const auto& d : all) {
        arr.push_back(Json{{"d", to_json(d)}, {"gamma", to_json(delta_map(d, o.l))}});
    }
    emit(out, arr);
    return 0;
}

int cmd_components(const Options& o, std::ostream& out)
{
    require_positive(o.l, "--l");
    require_positive(o.k, "--k");
    require_positive(o.n, "--n");
    const auto p = parse_params(o);
    const auto convention = parse_convention(o.convention);
    const auto catalog = component_catalog(o.l, o.n, o.k, p);
    if (o.format == "csv") {
        out << "gamma,r,a_prime";
        for (int j = 0; j < o.k * o.l; ++j) {
            out << ",k_prime_" << j;
        }
        out << "\n";
        for (const auto& c : catalog) {
            out << cell(c.gamma) << "," << c.r << "," << to_string(c.c_prime.a);
            for (const auto& x : c.c_prime.k) {
                out << "," << to_string(x);
            }
            out << "\n";
        }
        return 0;
    }
    Json arr = Json::array();
    for (const auto& c : catalog) {
        arr.push_back(to_json(c, convention));
    }
    emit(out, arr);
    return 0;
}

int cmd_transport(const Options& o, std::ostream& out)
{
    require_positive(o.l, "--l");
    require_positive(o.k, "--k");
    const auto p = parse_params(o);
    const int m = o.k * o.l;
    const ResidueVector d = o.d.empty() ? ResidueVector(m) : ResidueVector(m, parse_int_list(o.d));
    const auto closed = transport(p, o.k, d);
    const auto via = transport_via_theta(p, o.k, d);
    const auto& shown = o.via_theta ? via : closed;
    const bool agree = closed == via;
    if (o.format == "csv") {
        out << "a_prime";
        for (int j = 0; j < m; ++j) {
            out << ",k_prime_" << j;
        }
        out << "\n" << to_string(shown.a);
        for (const auto& x : shown.k) {
            out << "," << to_string(x);
        }
        out << "\n";
    } else {
        Json k = Json::array();
        for (const auto& x : shown.k) {
            k.push_back(to_string(x));
        }
        emit(out, Json{{"l", m}, {"a_prime", to_string(shown.a)}, {"k_prime", k}, {"routes_agree", agree}});
    }
    return agree ? 0 : 1;
}

int cmd_chartable(const Options& o, std::ostream& out)
{
    require_positive(o.l, "--l");
    if (o.n < 0) {
        throw UsageError("--n must be nonnegative");
    }
    const auto& table = character_table(o.l, o.n);
    if (o.format == "csv") {
        out << "character";
        for (const auto& c : table.classes) {
            out << "," << cell(c.type);
        }
        out << "\n";
        for (std::size_t x = 0; x < table.characters.size(); ++x) {
            out << cell(table.characters[x]);
            for (const auto& v : table.values[x]) {
                out << "," << v.to_string();
            }
            out << "\n";
        }
        return 0;
    }
    emit(out, to_json(table));
    return 0;
}

int cmd_verify_filtration(const Options& o, std::ostream& out)
{
    require_positive(o.l, "--l");
    require_positive(o.k, "--k");
    if (o.n < 0) {
        throw UsageError("--n must be nonnegative");
    }
    const auto convention = parse_convention(o.convention);
    std::vector<Multipartition> gammas;
    if (o.gamma.empty()) {
        gammas = enumerate_core_tuples(o.k, o.l, o.n);
    } else {
        Json parsed;
        try {
            parsed = Json::parse(o.gamma);
        } catch (const Json::exception&) {
            throw UsageError("--gamma must be a JSON array of arrays, e.g. [[1],[]]");
        }
        gammas.push_back(multipartition_from_json(parsed));
        const auto valid = enumerate_core_tuples(o.k, o.l, o.n);
        if (std::find(valid.begin(), valid.end(), gammas.back()) == valid.end()) {
            throw UsageError("--gamma is not a tuple of " + std::to_string(o.k) + "-cores of admissible size");
        }
    }
    bool all_pass = true;
    Json arr = Json::array();
    if (o.format == "csv") {
        out << "gamma,r,pass,violations\n";
    }
    for (const auto& g : gammas) {
        const auto report = verify_filtration(o.l, o.n, o.k, g, convention);
        all_pass = all_pass && report.pass;
        if (o.format == "csv") {
            int bad = 0;
            for (const auto& c : report.certificates) {
                bad += c.ok ? 0 : 1;
            }
            out << cell(g) << "," << report.r << "," << (report.pass ? "true" : "false") << "," << bad << "\n";
        } else {
            arr.push_back(to_json(report));
        }
    }
    if (o.format != "csv") {
        emit(out, arr);
    }
    return all_pass ? 0 : 1;
}

int cmd_smooth(const Options& o, std::ostream& out)
{
    require_positive(o.l, "--l");
    Json result;
    if (o.g4) {
        const auto k = parse_rational_list(o.kparams);
        if (k.size() != 3) {
            throw UsageError("--g4 needs --kparams k0,k1,k2");
        }
        result["smooth_g4"] = smooth_g4(k[0], k[1], k[2]);
        emit(out, result);
        return 0;
    }
    if (!o.theta.empty()) {
        const ThetaVector theta(o.l, parse_rational_list(o.theta));
        result["theta"] = to_json(theta);
        result["smooth_quiver"] = smooth_quiver(theta, o.n);
        result["params"] = to_json(ak_from_theta(theta));
        emit(out, result);
        return 0;
    }
    require_positive(o.n, "--n");
    const auto p = parse_params(o);
    const auto theta = theta_from_ak(p);
    const bool gl = smooth_gl1n(p, o.n, o.drop_a);
    const bool quiver = smooth_quiver(theta, o.n);
    result["params"] = to_json(p);
    result["theta"] = to_json(theta);
    result["smooth_gl1n"] = gl;
    result["smooth_quiver"] = quiver;
    result["smooth_cyclic"] = smooth_cyclic(p.k);
    if (o.format == "csv") {
        out << "smooth_gl1n,smooth_quiver,smooth_cyclic\n"
            << (gl ? "true" : "false") << "," << (quiver ? "true" : "false") << ","
            << (result["smooth_cyclic"].get<bool>() ? "true" : "false") << "\n";
    } else {
        emit(out, result);
    }
    // Without --drop-a the two criteria describe the same variety and must agree.
    return (o.drop_a || gl == quiver) ? 0 : 1;
}

int cmd_quiver_check(const Options& o, std::ostream& out)
{
    if (o.input.empty()) {
        throw UsageError("--input is required (a JSON file, or - for stdin)");
    }
    std::string text;
    if (o.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream file(o.input);
        if (!file) {
            throw UsageError("cannot open " + o.input);
        }
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    Json parsed;
    try {
        parsed = Json::parse(text);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("input is not valid JSON: ") + e.what());
    }
    const auto rep = rational_rep_from_json(parsed);
    Json moments = Json::array();
    for (const auto& mm : moment_map(rep)) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < mm.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < mm.cols(); ++j) {
                row.push_back(to_string(mm(i, j)));
            }
            rows.push_back(row);
        }
        moments.push_back(rows);
    }
    Json result{{"moment_map", moments}};
    int status = 0;
    if (!o.theta.empty()) {
        const ThetaVector theta(rep.l, parse_rational_list(o.theta));
        const bool member = in_deformed_fiber(rep, theta);
        result["in_deformed_fiber"] = member;
        status = member ? 0 : 1;
    }
    result["simplicity"] = to_json(norton_simplicity(rep, o.seed, o.budget));
    emit(out, result);
    return status;
}

int cmd_selftest(const Options& o, std::ostream& out)
{
    const auto checks = run_selftest(o.seed);
    bool all = true;
    Json arr = Json::array();
    if (o.format == "csv") {
        out << "check,pass,detail\n";
    }
    for (const auto& c : checks) {
        all = all && c.pass;
        if (o.format == "csv") {
            out << c.name << "," << (c.pass ? "true" : "false") << "," << c.detail << "\n";
        } else {
            arr.push_back(Json{{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
    }
    if (o.format != "csv") {
        emit(out, Json{{"pass", all}, {"checks", arr}});
    }
    return all ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    if (const char* env = std::getenv("CM_SEED")) {
        try {
            o.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: CM_SEED must be a nonnegative integer\n";
            return 2;
        }
    }

    CLI::App app{"Fixed points of cyclic groups on Calogero-Moser spaces of type G(l,1,n)", "cmfix"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--a", o.a, "Parameter a as p/q");
        sub->add_option("--kparams", o.kparams, "k_0,...,k_{l-1} as p/q values summing to zero");
    };

    struct Entry {
        CLI::App* app;
        int (*handler)(const Options&, std::ostream&);
    };
    std::vector<Entry> entries;

    auto* cores = app.add_subcommand("cores", "l-core of a partition and the number of l-rim-hook removals");
    cores->add_option("--partition", o.partition, "Parts, comma separated")->required();
    cores->add_option("--l", o.l, "Modulus")->required();
    add_format(cores);
    entries.push_back({cores, cmd_cores});

    auto* quot = app.add_subcommand("quotient", "l-core and l-quotient of a partition");
    quot->add_option("--partition", o.partition, "Parts, comma separated")->required();
    quot->add_option("--l", o.l, "Modulus")->required();
    add_format(quot);
    entries.push_back({quot, cmd_quotient});

    auto* res = app.add_subcommand("residues", "Residue vector of a partition, or core decomposition of a vector");
    auto* res_part = res->add_option("--partition", o.partition, "Parts, comma separated");
    auto* res_d = res->add_option("--d", o.d, "Integer vector on Z/lZ to decompose as Res(core) + r delta");
    res_part->excludes(res_d);
    res->add_option("--l", o.l, "Modulus")->required();
    add_format(res);
    entries.push_back({res, cmd_residues});

    auto* ee = app.add_subcommand("enumerate-e", "Dimension vectors E(k,l,n) with their core tuples");
    ee->add_option("--k", o.k, "Refinement factor")->required();
    ee->add_option("--l", o.l, "Rank of the cyclic group")->required();
    ee->add_option("--n", o.n, "Size")->required();
    add_format(ee);
    entries.push_back({ee, cmd_enumerate_e});

    auto* comp = app.add_subcommand("components", "Irreducible components of the mu_kl-fixed locus");
    comp->add_option("--l", o.l, "Rank of the cyclic group")->required();
    comp->add_option("--n", o.n, "Size")->required();
    comp->add_option("--k", o.k, "Refinement factor")->required();
    add_params(comp);
    comp->add_option("--convention", o.convention, "Label convention: gordon or quiver");
    add_format(comp);
    entries.push_back({comp, cmd_components});

    auto* tr = app.add_subcommand("transport", "Parameters c' of the component attached to d");
    tr->add_option("--l", o.l, "Rank of the cyclic group")->required();
    tr->add_option("--k", o.k, "Refinement factor")->required();
    tr->add_option("--d", o.d, "Dimension vector on Z/klZ, comma separated (default 0)");
    add_params(tr);
    tr->add_flag("--via-theta", o.via_theta, "Print the result of the theta route instead of the closed form");
    add_format(tr);
    entries.push_back({tr, cmd_transport});

    auto* ct = app.add_subcommand("chartable", "Character table of G(l,1,n)");
    ct->add_option("--l", o.l, "Rank of the cyclic group")->required();
    ct->add_option("--n", o.n, "Size")->required();
    add_format(ct);
    entries.push_back({ct, cmd_chartable});

    auto* vf = app.add_subcommand("verify-filtration", "Check that i_gamma^* respects the codimension filtration");
    vf->add_option("--l", o.l, "Rank of the cyclic group")->required();
    vf->add_option("--n", o.n, "Size")->required();
    vf->add_option("--k", o.k, "Refinement factor")->required();
    vf->add_option("--gamma", o.gamma, "Core tuple as JSON, e.g. [[1],[]] (default: all)");
    vf->add_option("--convention", o.convention, "Label convention: gordon or quiver");
    add_format(vf);
    entries.push_back({vf, cmd_verify_filtration});

    auto* sm = app.add_subcommand("smooth", "Smoothness predicates");
    sm->add_option("--l", o.l, "Rank of the cyclic group")->required();
    sm->add_option("--n", o.n, "Size");
    add_params(sm);
    sm->add_option("--theta", o.theta, "Quiver parameter theta_0,...,theta_{l-1}");
    sm->add_flag("--drop-a", o.drop_a, "Omit the factor a (the n = 1 reading)");
    sm->add_flag("--g4", o.g4, "Evaluate the G4 criterion on --kparams k0,k1,k2");
    add_format(sm);
    entries.push_back({sm, cmd_smooth});

    auto* qc = app.add_subcommand("quiver-check", "Moment map, deformed-fibre membership and simplicity of a representation");
    qc->add_option("--input", o.input, "Representation JSON file, or - for stdin")->required();
    qc->add_option("--theta", o.theta, "Quiver parameter for the membership test");
    qc->add_option("--seed", o.seed, "Random seed for the simplicity test");
    qc->add_option("--budget", o.budget, "Random trials for the simplicity test");
    add_format(qc);
    entries.push_back({qc, cmd_quiver_check});

    auto* st = app.add_subcommand("selftest", "Run the invariant suite");
    st->add_option("--seed", o.seed, "Random seed");
    add_format(st);
    entries.push_back({st, cmd_selftest});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        for (const auto& entry : entries) {
            if (entry.app->parsed()) {
                return entry.handler(o, out);
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: malformed JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n";
    return 2;
}

} // namespace cmfix::cli
