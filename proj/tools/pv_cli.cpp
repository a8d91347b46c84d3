// pv: exact difference-differential algebra toolkit command line.
//
// Subcommands: prolong, verify, compose, jets, check-invariance, components,
// exact-seq, selftest. JSON in, JSON out; field elements are expression
// strings. Exit codes: 0 success, 1 mathematical check failed, 2 bad input,
// 3 resource budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pv/ideal.hpp"
#include "pv/json_io.hpp"
#include "pv/prolong.hpp"
#include "pv/selftest.hpp"
#include "pv/structure.hpp"

namespace {

using pv::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
    std::string input;
    std::string output;
    unsigned order = 4;
    unsigned long budget = 200000;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

Json read_input(const CommonOpts& opts) {
    if (opts.input.empty() || opts.input == "-") return Json::parse(std::cin);
    std::ifstream in(opts.input);
    if (!in) throw std::runtime_error("cannot open input file: " + opts.input);
    return Json::parse(in);
}

void write_output(const CommonOpts& opts, const Json& report) {
    std::string text = report.dump(2);
    text += "\n";
    if (opts.output.empty() || opts.output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(opts.output);
        if (!out) throw std::runtime_error("cannot open output file: " + opts.output);
        out << text;
    }
}

Json make_report(const Json& inputs, Json result, Json checks) {
    Json rep;
    rep["inputs_echo"] = inputs;
    rep["result"] = std::move(result);
    rep["checks"] = std::move(checks);
    return rep;
}

Json check_entry(const std::string& name, bool pass) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    return c;
}

pv::OperatorSpec spec_of(const Json& in) {
    return pv::OperatorSpec::from_name(in.value("spec", std::string("shift")));
}

int run_prolong(const CommonOpts& opts) {
    Json in = read_input(opts);
    pv::OperatorSpec spec = spec_of(in);
    pv::Matrix a = pv::matrix_from_json(spec, in.at("A"));
    unsigned n = in.at("n").get<unsigned>();
    if (n > opts.order)
        throw std::runtime_error("requested order exceeds --order bound");

    if (pv::mat_det(a).is_zero()) {
        Json checks = Json::array();
        checks.push_back(check_entry("A_invertible", false));
        write_output(opts, make_report(in, Json(), checks));
        return kExitCheckFailed;
    }
    pv::ProlongedSystem sys = pv::prolong_system(spec, a, n);

    Json result;
    result["A_n"] = pv::block_to_json(sys.blocks);
    pv::Scalar det = pv::mat_det(sys.blocks.flatten());
    pv::Scalar expected = pv::scalar_from_int(1);
    pv::Scalar da = pv::mat_det(a);
    for (unsigned k = 0; k <= n; ++k) expected = expected * da;
    bool det_ok = det == expected;

    Json checks = Json::array();
    checks.push_back(check_entry("A_invertible", true));
    checks.push_back(check_entry("det_is_detA_power", det_ok));
    write_output(opts, make_report(in, result, checks));
    return det_ok ? kExitOk : kExitCheckFailed;
}

int run_verify(const CommonOpts& opts) {
    Json in = read_input(opts);
    pv::OperatorSpec spec = spec_of(in);
    pv::Matrix a = pv::matrix_from_json(spec, in.at("A"));
    unsigned n = in.at("n").get<unsigned>();
    if (n > opts.order)
        throw std::runtime_error("requested order exceeds --order bound");

    pv::BlockMatrix blocks = pv::prolong_system(spec, a, n).blocks;
    if (in.contains("corrupt_block")) {
        unsigned r = in["corrupt_block"].at(0).get<unsigned>();
        unsigned c = in["corrupt_block"].at(1).get<unsigned>();
        blocks.block(r, c) = pv::Matrix::zero(a.dim());
    }
    bool fundamental = pv::verify_fundamental_against(spec, a, n, blocks);

    Json orders = Json::array();
    bool leibniz_ok = true;
    for (unsigned j = 0; j <= std::min(n + 1, opts.order); ++j) {
        leibniz_ok = leibniz_ok && pv::eq2_from_leibniz(spec, a, j);
        orders.push_back(j);
    }

    Json result;
    result["fundamental"] = fundamental;
    result["leibniz_orders_checked"] = orders;
    Json checks = Json::array();
    checks.push_back(check_entry("fundamental_identity", fundamental));
    checks.push_back(check_entry("eq2_from_leibniz", leibniz_ok));
    write_output(opts, make_report(in, result, checks));
    return fundamental && leibniz_ok ? kExitOk : kExitCheckFailed;
}

int run_compose(const CommonOpts& opts) {
    Json in = read_input(opts);
    pv::OperatorSpec spec = spec_of(in);
    pv::Matrix a = pv::matrix_from_json(spec, in.at("A"));
    unsigned l = in.at("l").get<unsigned>();
    pv::Matrix al = pv::sigma_power_product(spec, a, l);

    bool cocycle_ok = true;
    for (unsigned pa = 1; pa < l; ++pa)
        cocycle_ok = cocycle_ok && pv::cocycle_check(spec, a, pa, l - pa);

    Json result;
    result["A_l"] = pv::matrix_to_json(al);
    Json checks = Json::array();
    checks.push_back(check_entry("cocycle_law", cocycle_ok));
    write_output(opts, make_report(in, result, checks));
    return cocycle_ok ? kExitOk : kExitCheckFailed;
}

int run_jets(const CommonOpts& opts) {
    Json in = read_input(opts);
    pv::OperatorSpec spec = spec_of(in);
    std::string op = in.at("op").get<std::string>();

    Json result;
    Json checks = Json::array();
    if (op == "mul") {
        pv::Jet b = pv::jet_from_json(spec, in.at("jets").at(0));
        pv::Jet c = pv::jet_from_json(spec, in.at("jets").at(1));
        result["jet"] = pv::jet_to_json(pv::jet_mul(b, c));
    } else if (op == "inv") {
        pv::Jet b = pv::jet_from_json(spec, in.at("jets").at(0));
        pv::Jet binv = pv::jet_inv(b);
        result["jet"] = pv::jet_to_json(binv);
        checks.push_back(check_entry(
            "inverse_roundtrip", pv::jet_mul(b, binv) == pv::Jet::unit(b.order(), b.dim())));
    } else if (op == "block") {
        pv::Jet b = pv::jet_from_json(spec, in.at("jets").at(0));
        result["block"] = pv::block_to_json(pv::jet_to_block(b));
    } else {
        throw std::runtime_error("unknown jets op: " + op);
    }
    write_output(opts, make_report(in, result, checks));
    for (const auto& c : checks)
        if (!c.at("pass").get<bool>()) return kExitCheckFailed;
    return kExitOk;
}

int run_check_invariance(const CommonOpts& opts) {
    Json in = read_input(opts);
    pv::OperatorSpec spec = spec_of(in);
    unsigned order = in.at("order").get<unsigned>();
    unsigned m = in.at("m").get<unsigned>();
    pv::VarSpace vs{order, m};

    std::vector<pv::MPoly> gens;
    for (const Json& g : in.at("generators"))
        gens.push_back(pv::parse_jetpoly(spec, vs, g.get<std::string>()));
    pv::IdealGens ideal(vs, std::move(gens), pv::GroebnerOptions{opts.budget});
    pv::Jet jet = pv::jet_from_json(spec, in.at("jet"));

    std::optional<size_t> failing;
    bool invariant = pv::invariance_check(ideal, jet, &failing);

    Json result;
    result["invariant"] = invariant;
    if (failing) result["failing_generator"] = *failing;
    Json checks = Json::array();
    checks.push_back(check_entry("ideal_invariant_under_jet", invariant));
    write_output(opts, make_report(in, result, checks));
    return invariant ? kExitOk : kExitCheckFailed;
}

std::vector<unsigned> exponents_of(const Json& in) {
    std::vector<unsigned> r;
    for (const Json& v : in.at("r")) r.push_back(v.get<unsigned>());
    return r;
}

int run_components(const CommonOpts& opts) {
    Json in = read_input(opts);
    pv::MonomialModel model(exponents_of(in));
    pv::DecompositionReport rep = pv::sigma_orbits(model);

    Json result;
    result["l"] = rep.l;
    result["num_idempotents"] = rep.num_idempotents;
    result["single_orbit"] = rep.single_orbit;
    Json orbits = Json::array();
    for (const auto& orbit : rep.orbits) {
        Json o = Json::array();
        for (size_t i : orbit) o.push_back(i);
        orbits.push_back(std::move(o));
    }
    result["orbits"] = std::move(orbits);
    result["sigma_l_fixes_all"] = rep.sigma_l_fixes_all;
    result["automorphism_group_order"] = rep.automorphism_group_order;

    Json checks = Json::array();
    checks.push_back(check_entry("sigma_permutes_idempotents", true));
    if (rep.single_orbit)
        checks.push_back(check_entry("sigma_l_fixes_idempotents", rep.sigma_l_fixes_all));
    write_output(opts, make_report(in, result, checks));
    return kExitOk;
}

int run_exact_seq(const CommonOpts& opts) {
    Json in = read_input(opts);
    pv::MonomialModel model(exponents_of(in));
    pv::ExactSequenceReport rep = pv::exact_sequence_check(model);

    Json result;
    result["exact"] = rep.exact;
    result["l"] = rep.l;
    result["group_order"] = rep.group_order;
    result["kernel_order"] = rep.kernel_order;
    result["component_aut_order"] = rep.component_aut_order;

    Json checks = Json::array();
    checks.push_back(check_entry("delta_homomorphism", rep.homomorphism));
    checks.push_back(check_entry("delta_surjective", rep.surjective));
    checks.push_back(check_entry("order_factorization", rep.group_order == rep.kernel_order * rep.l));
    checks.push_back(check_entry("exact_sequence", rep.exact));
    write_output(opts, make_report(in, result, checks));
    return rep.exact ? kExitOk : kExitCheckFailed;
}

int run_selftest(const CommonOpts& opts) {
    pv::SelftestOptions sopts;
    sopts.seed = opts.seed;
    sopts.budget = opts.budget;
    sopts.jobs = opts.jobs;
    sopts.max_order = opts.order;
    pv::SelftestReport rep = pv::run_selftest(sopts);

    Json inputs;
    inputs["seed"] = sopts.seed;
    inputs["budget"] = sopts.budget;
    Json checks = Json::array();
    unsigned passed = 0;
    for (const auto& c : rep.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.status == pv::CheckStatus::pass;
        if (c.status == pv::CheckStatus::budget_exceeded) e["budget_exceeded"] = true;
        checks.push_back(std::move(e));
        if (c.status == pv::CheckStatus::pass) ++passed;
    }
    Json result;
    result["total"] = rep.checks.size();
    result["passed"] = passed;
    result["all_pass"] = rep.all_pass;
    write_output(opts, make_report(inputs, result, checks));
    if (rep.any_budget_exceeded) return kExitBudget;
    return rep.all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact difference-differential algebra toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--input", opts.input, "input JSON file ('-' or empty for stdin)")
        ->envname("PVP_INPUT");
    app.add_option("--output", opts.output, "output JSON file ('-' or empty for stdout)")
        ->envname("PVP_OUTPUT");
    app.add_option("--order", opts.order, "maximum prolongation order")->envname("PVP_ORDER");
    app.add_option("--budget", opts.budget, "Groebner reduction budget")->envname("PVP_BUDGET");
    app.add_option("--seed", opts.seed, "random seed for sampled checks")->envname("PVP_SEED");
    app.add_option("--jobs", opts.jobs, "worker threads for independent checks")
        ->envname("PVP_JOBS");

    std::string cmd;
    for (const char* name : {"prolong", "verify", "compose", "jets", "check-invariance",
                             "components", "exact-seq", "selftest"}) {
        auto* sub = app.add_subcommand(name);
        sub->fallthrough();  // accept the global flags after the subcommand too
        sub->callback([&cmd, name] { cmd = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd == "prolong") return run_prolong(opts);
        if (cmd == "verify") return run_verify(opts);
        if (cmd == "compose") return run_compose(opts);
        if (cmd == "jets") return run_jets(opts);
        if (cmd == "check-invariance") return run_check_invariance(opts);
        if (cmd == "components") return run_components(opts);
        if (cmd == "exact-seq") return run_exact_seq(opts);
        if (cmd == "selftest") return run_selftest(opts);
        std::cerr << "unknown subcommand\n";
        return kExitBadInput;
    } catch (const pv::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const pv::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
