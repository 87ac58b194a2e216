#include "ionbound/cli.hpp"

#include "ionbound/constants.hpp"
#include "ionbound/errors.hpp"
#include "ionbound/excess.hpp"
#include "ionbound/multipole.hpp"
#include "ionbound/radial.hpp"
#include "ionbound/variational.hpp"
#include "ionbound/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ionbound::cli {

using nlohmann::json;

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void emit(const std::string& text, const RunConfig& cfg) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(cfg.out_path, std::ios::binary);
    if (!os) throw computation_error("cannot open output file: " + cfg.out_path);
    os << text;
}

variational::MinimizeOptions minimize_opts(const RunConfig& cfg) {
    variational::MinimizeOptions opts;
    opts.n_starts = cfg.n_starts;
    opts.seed = cfg.seed;
    opts.tol_grad = cfg.tol_grad;
    opts.max_iter = cfg.max_iter;
    opts.require_convergence = false; // the s = 1 column never meets the gradient tolerance
    return opts;
}

} // namespace

void load_config(const std::string& path, RunConfig& cfg) {
    std::ifstream is(path);
    if (!is) throw computation_error("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw computation_error("config line " + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "n_starts") cfg.n_starts = std::stoi(value);
        else if (key == "max_iter") cfg.max_iter = std::stoi(value);
        else if (key == "tol_grad") cfg.tol_grad = std::stod(value);
        else if (key == "grid_resolution") cfg.grid_resolution = std::stoi(value);
        else if (key == "random_samples") cfg.random_samples = std::stol(value);
        else if (key == "format") cfg.format = value == "csv" ? OutputFormat::csv : OutputFormat::json;
        else if (key == "out") cfg.out_path = value;
        else throw computation_error("config: unknown key '" + key + "'");
        if (cfg.n_starts < 0 || cfg.max_iter <= 0 || cfg.tol_grad <= 0 || cfg.grid_resolution <= 0 ||
            cfg.random_samples <= 0)
            throw computation_error("config: budgets must be positive");
    }
}

void write_figure1(std::ostream& os, const RunConfig& cfg, num::Exec exec) {
    os << "N,s,alpha\n";
    for (int n : variational::kFigure1N) {
        for (double s : variational::kFigure1S) {
            auto opts = minimize_opts(cfg);
            const auto res = variational::minimize_alpha(n, s, opts, exec);
            os << n << "," << fixed6(s) << "," << fixed6(res.value) << "\n";
        }
    }
}

void write_figure2(std::ostream& os, const RunConfig& cfg, num::Exec exec) {
    os << "s,b,b_num\n";
    for (double s : radial::figure2_grid()) {
        const auto bs = radial::b_of_s(s);
        const auto up = radial::beta_upper_bound(s, {}, exec);
        os << fixed6(s) << "," << fixed6(bs.b) << "," << fixed6(up.b_num) << "\n";
    }
}

namespace {

json breakdown_to_json(const excess::BoundBreakdown& b) {
    json terms = json::array();
    for (const auto& [power, coeff] : b.terms) terms.push_back({{"power", power}, {"coeff", coeff}});
    return {{"Z", b.Z},          {"s", b.s},
            {"leading_coeff", b.leading_coeff}, {"terms", terms},
            {"total", b.total},  {"valid_from_Z", b.valid_from_Z},
            {"lieb", b.lieb},    {"nam", b.nam}};
}

json report_to_json(const verify::InequalityReport& r) {
    json j = {{"name", r.name},
              {"grid", r.grid},
              {"n_points", r.n_points},
              {"max_slack_violation", r.max_slack_violation},
              {"pass", r.passed()}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

} // namespace

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"excess-charge bounds: variational constants, radial bounds, "
                 "multipole machinery and the final ionization inequalities"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path, format_str = "json";
    app.add_option("--seed", cfg.seed, "global RNG seed");
    app.add_option("--format", format_str, "output format (json|csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", cfg.out_path, "output path (default stdout)");
    app.add_option("--config", config_path, "flat key=value config file");

    // alpha
    int alpha_n = 2;
    double alpha_s = 2.0;
    int alpha_starts = 0;
    auto* alpha_cmd = app.add_subcommand("alpha", "minimize the N-point quotient");
    alpha_cmd->add_option("--n", alpha_n, "number of points")->required()->check(CLI::Range(2, 100));
    alpha_cmd->add_option("--s", alpha_s, "weight exponent s >= 1")->required();
    alpha_cmd->add_option("--starts", alpha_starts, "number of restarts");

    // bvalue / beta-num
    double bv_s = 2.0;
    auto* bvalue_cmd = app.add_subcommand("bvalue", "b(s) from the quotient-minimum root");
    bvalue_cmd->add_option("--s", bv_s, "s in (1,3]")->required();
    double bn_s = 2.0;
    auto* betanum_cmd = app.add_subcommand("beta-num", "numeric upper bound on beta_s");
    betanum_cmd->add_option("--s", bn_s, "s in (1,3]")->required();

    // moments / tails
    double mo_s = 2.0, mo_r = 0.5;
    int mo_lmax = 20;
    auto* moments_cmd = app.add_subcommand("moments", "multipole moments and the C_s tail");
    moments_cmd->add_option("--s", mo_s)->required();
    moments_cmd->add_option("--r", mo_r)->required();
    moments_cmd->add_option("--lmax", mo_lmax);
    double ta_s = 3.0;
    int ta_k = 2001;
    auto* tails_cmd = app.add_subcommand("tails", "certified tail sums of the A_k series");
    tails_cmd->add_option("--s", ta_s)->required();
    tails_cmd->add_option("--k", ta_k);

    // constants
    double co_p = 2.0;
    int co_u = 2;
    auto* constants_cmd = app.add_subcommand("constants", "explicit constants report");
    constants_cmd->add_option("--p", co_p);
    constants_cmd->add_option("--u", co_u);

    // bound / compare / crossovers
    double bo_z = 10.0, bo_s = 0.0;
    std::string bo_prop;
    auto* bound_cmd = app.add_subcommand("bound", "ionization bound for a nuclear charge");
    bound_cmd->add_option("--z", bo_z)->required();
    bound_cmd->add_option("--s", bo_s, "general-s proof bound");
    bound_cmd->add_option("--prop", bo_prop, "explicit proposition (s2|s3)")
        ->check(CLI::IsMember({"s2", "s3"}));
    double cm_z = 10.0;
    auto* compare_cmd = app.add_subcommand("compare", "compare against the classic bounds");
    compare_cmd->add_option("--z", cm_z)->required();
    auto* crossovers_cmd = app.add_subcommand("crossovers", "bound crossover charges");

    // verify
    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "grid-certify the scalar inequalities");
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "power-chain", "prefactor", "taylor", "gf", "positivity"}));

    auto* figure1_cmd = app.add_subcommand("figure1", "alpha_{N,s} table as CSV");
    auto* figure2_cmd = app.add_subcommand("figure2", "b(s)/b_num(s) table as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) load_config(config_path, cfg);
        cfg.format = format_str == "csv" ? OutputFormat::csv : OutputFormat::json;

        if (*alpha_cmd) {
            auto opts = minimize_opts(cfg);
            if (alpha_starts > 0) opts.n_starts = alpha_starts;
            const auto res = variational::minimize_alpha(alpha_n, alpha_s, opts);
            emit(json{{"n", res.n_particles},
                      {"s", res.s},
                      {"value", res.value},
                      {"grad_norm", res.best_gradient_norm},
                      {"starts_converged", res.n_converged},
                      {"corroborated", res.corroborated}}
                     .dump(2) + "\n",
                 cfg);
        } else if (*bvalue_cmd) {
            const auto b = radial::b_of_s(bv_s);
            emit(json{{"s", b.s}, {"t0", b.t0}, {"b", b.b}, {"beta_lower", b.beta_lower}}.dump(2) + "\n",
                 cfg);
        } else if (*betanum_cmd) {
            const auto up = radial::beta_upper_bound(bn_s);
            emit(json{{"s", up.s}, {"beta_up", up.beta_up}, {"b_num", up.b_num}, {"p", up.p}, {"n", up.n}}
                     .dump(2) + "\n",
                 cfg);
        } else if (*moments_cmd) {
            const auto series = multipole::compute_moments(mo_s, mo_r, mo_lmax);
            const auto cs = multipole::cs_tail_vs_bound(
                std::min(std::max(mo_s, 2.0), 3.0), mo_r, std::max(mo_lmax, 10));
            emit(json{{"s", series.s},
                      {"r", series.r},
                      {"q", series.q},
                      {"moments", series.moments},
                      {"tail_bound", series.tail_bound},
                      {"cs_direct", cs.direct},
                      {"cs_bound", cs.bound}}
                     .dump(2) + "\n",
                 cfg);
        } else if (*tails_cmd) {
            const auto t = multipole::tail_sum(ta_s, ta_k);
            emit(json{{"partial_even", t.partial_even},
                      {"partial_odd", t.partial_odd},
                      {"delta", t.delta},
                      {"certified_total", t.certified_total},
                      {"bound", t.prefactor * 448.0 / 10000.0}}
                     .dump(2) + "\n",
                 cfg);
        } else if (*constants_cmd) {
            const auto rep = constants::constants_report(co_p, co_u);
            emit(json{{"p", rep.p},
                      {"C_p", rep.C_p},
                      {"C_p_inv_root", rep.C_p_inv_root},
                      {"kappa", rep.kappa},
                      {"K3", rep.K3},
                      {"A_hyd", rep.A_hyd},
                      {"c_composite", rep.c_composite}}
                     .dump(2) + "\n",
                 cfg);
        } else if (*bound_cmd) {
            json j;
            if (bo_prop == "s2") j = breakdown_to_json(excess::bound_s2(bo_z));
            else if (bo_prop == "s3") j = breakdown_to_json(excess::bound_s3(bo_z));
            else if (bo_s > 0.0) {
                const auto g = excess::bound_general(bo_z, bo_s);
                j = json{{"Z", g.Z},          {"s", g.s},
                         {"b", g.b},          {"lambda", g.lambda},
                         {"A", g.A},          {"n_bound", g.n_bound},
                         {"r_at_bound", g.r_at_bound}, {"r_below_one", g.r_below_one},
                         {"r_below_half", g.r_below_half}};
            } else {
                j = breakdown_to_json(bo_z >= 4.0 ? excess::bound_s3(bo_z) : excess::bound_s2(bo_z));
            }
            emit(j.dump(2) + "\n", cfg);
        } else if (*compare_cmd) {
            const auto c = excess::compare_bounds(cm_z);
            json j{{"Z", c.Z}, {"lieb", c.lieb}, {"nam", c.nam}, {"argmin", c.argmin}};
            if (c.ours_s2) j["ours_s2"] = *c.ours_s2;
            if (c.ours_s3) j["ours_s3"] = *c.ours_s3;
            emit(j.dump(2) + "\n", cfg);
        } else if (*crossovers_cmd) {
            const auto c = excess::crossovers();
            emit(json{{"s2_vs_lieb", c.s2_vs_lieb}, {"s3_vs_s2", c.s3_vs_s2}}.dump(2) + "\n", cfg);
        } else if (*verify_cmd) {
            verify::GridOptions gopts;
            gopts.resolution = cfg.grid_resolution;
            gopts.random_samples = cfg.random_samples;
            gopts.seed = cfg.seed;
            const auto reports = verify::run_suite_named(suite, gopts);
            json j = json::array();
            bool all_pass = true;
            for (const auto& r : reports) {
                j.push_back(report_to_json(r));
                all_pass = all_pass && r.passed();
            }
            emit(j.dump(2) + "\n", cfg);
            if (!all_pass) return 3;
        } else if (*figure1_cmd) {
            std::ostringstream os;
            write_figure1(os, cfg);
            emit(os.str(), cfg);
        } else if (*figure2_cmd) {
            std::ostringstream os;
            write_figure2(os, cfg);
            emit(os.str(), cfg);
        }
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace ionbound::cli
