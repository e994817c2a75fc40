// cubehit: hitting probabilities of the simple random walk on the n-cube.
//
// Subcommands: formula, solve, chain, mc, dist, compare. Every command is
// deterministic given its flags; see --help per command.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cubehit/chain.hpp"
#include "cubehit/closed_form.hpp"
#include "cubehit/mc.hpp"
#include "cubehit/network.hpp"
#include "cubehit/occupation.hpp"
#include "cubehit/rational.hpp"
#include "cubehit/vertex.hpp"

using json = nlohmann::ordered_json;
using namespace cubehit;

namespace {

struct GlobalOpts {
    std::string format = "text";  // text | csv | json
    std::string output;           // default stdout
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CUBEHIT_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output);
    if (!out) throw CLI::RuntimeError("cannot open output file " + g.output, 4);
    out << text;
}

std::string render_value(const Rat& v, bool exact) {
    return exact ? to_fraction_string(v) : to_decimal_string(v);
}

json value_json(const Rat& v, bool exact) {
    if (exact) return to_fraction_string(v);
    return to_double(v);
}

std::string csv_escape_free(const std::string& s) {
    return s;  // all our fields are [0-9a-z/.-], never need quoting
}

std::string envelope_json(const std::string& command, const json& parameters,
                          bool exact, const json& results) {
    json env;
    env["command"] = command;
    env["parameters"] = parameters;
    env["exact"] = exact;
    env["results"] = results;
    return env.dump(2) + "\n";
}

Vertex parse_vertex_flag(const std::string& s, int n, const std::string& flag) {
    try {
        return Vertex::parse(s, n);
    } catch (const std::invalid_argument& e) {
        throw CLI::RuntimeError(std::string(flag) + ": " + e.what(), 2);
    }
}

// ---------------------------------------------------------------- formula

void run_formula(const GlobalOpts& g, int n, const std::string& xs,
                 const std::string& target, bool exact) {
    Vertex x = parse_vertex_flag(xs, n, "-x");
    Rat p;
    if (target == "adjacent")
        p = adjacent_hitting_probability(n, x);
    else if (target == "antipodal")
        p = antipodal_hitting_probability(n, x);
    else
        throw CLI::RuntimeError("--target must be adjacent or antipodal", 2);

    if (g.format == "json") {
        json params = {{"n", n}, {"x", xs}, {"target", target}};
        emit(g, envelope_json("formula", params, exact,
                              json{{"probability", value_json(p, exact)}}));
    } else if (g.format == "csv") {
        emit(g, "n,x,target,probability\n" + std::to_string(n) + "," + xs +
                    "," + target + "," + render_value(p, exact) + "\n");
    } else {
        emit(g, render_value(p, exact) + "\n");
    }
}

// ------------------------------------------------------------------ solve

void run_solve(const GlobalOpts& g, int n, const std::string& as,
               const std::string& bs, const std::string& xs,
               const std::string& method, double tol, int max_sweeps,
               bool exact) {
    if (method == "exact" && n > kExactSolveMaxDimension)
        throw CLI::RuntimeError("exact cap is n <= 12", 2);
    if (method == "float" && n > kFloatSolveMaxDimension)
        throw CLI::RuntimeError("float cap is n <= 20", 2);
    if (method == "float" && exact)
        throw CLI::RuntimeError("--exact requires --method exact", 2);
    Vertex a = parse_vertex_flag(as, n, "-a");
    Vertex b = parse_vertex_flag(bs, n, "-b");
    if (a == b) throw CLI::RuntimeError("-a and -b must be distinct", 2);
    HittingProblem problem(a, b);
    HarmonicSolution sol = method == "exact"
                               ? solve_exact(problem)
                               : solve_float(problem, tol, max_sweeps);

    json params = {{"n", n},   {"a", as},     {"b", bs},
                   {"method", method}, {"tolerance", tol}};
    if (!xs.empty()) {
        Vertex x = parse_vertex_flag(xs, n, "-x");
        params["x"] = xs;
        std::string text;
        json result;
        if (sol.exact) {
            text = render_value(sol.at(x), exact);
            result = value_json(sol.at(x), exact);
        } else {
            text = to_decimal_string(Rat(sol.value_of(x)));
            result = sol.value_of(x);
        }
        if (g.format == "json")
            emit(g, envelope_json("solve", params, exact,
                                  json{{"probability", result}}));
        else if (g.format == "csv")
            emit(g, "vertex,probability\n" + xs + "," + text + "\n");
        else
            emit(g, text + "\n");
        return;
    }

    // full table, sorted by vertex numeric value
    std::string csv = "vertex,exact,decimal\n";
    json rows = json::array();
    std::string text;
    const std::uint64_t V = 1ull << n;
    for (std::uint64_t v = 0; v < V; ++v) {
        Vertex vert(n, v);
        std::string frac =
            sol.exact ? to_fraction_string(sol.values[v]) : std::string();
        std::string dec = sol.exact ? to_decimal_string(sol.values[v])
                                    : to_decimal_string(Rat(sol.value_of(vert)));
        csv += vert.str() + "," + frac + "," + dec + "\n";
        json row = {{"vertex", vert.str()}};
        if (sol.exact)
            row["probability"] = value_json(sol.values[v], exact);
        else
            row["probability"] = sol.value_of(vert);
        rows.push_back(row);
        text += vert.str() + " " +
                (exact && sol.exact ? frac : dec) + "\n";
    }
    if (g.format == "json")
        emit(g, envelope_json("solve", params, exact, json{{"table", rows}}));
    else if (g.format == "csv")
        emit(g, csv);
    else
        emit(g, text);
}

// ------------------------------------------------------------------ chain

void run_chain(const GlobalOpts& g, int n, const std::string& kind,
               const std::string& show, bool exact) {
    std::vector<Rat> seq;
    if (kind == "antipodal") {
        if (show != "w")
            throw CLI::RuntimeError(
                "--show " + show + " applies to the adjacent kind only", 2);
        seq = solve_chain(build_antipodal_chain(n)).w;
    } else if (kind == "adjacent") {
        LevelProfile profile = solve_chain(build_adjacent_chain(n));
        if (show == "w") {
            seq = profile.w;
        } else if (show == "u") {
            seq = u_transform(profile).u;
        } else if (show == "z") {
            if (n < 2) throw CLI::RuntimeError("--show z requires n >= 2", 2);
            seq = z_sequence(n);
        } else if (show == "residuals") {
            seq = induction_identity_residuals(u_transform(profile));
        } else {
            throw CLI::RuntimeError("--show must be one of w|u|z|residuals", 2);
        }
    } else {
        throw CLI::RuntimeError("--kind must be adjacent or antipodal", 2);
    }

    if (g.format == "json") {
        json values = json::array();
        for (const Rat& v : seq) values.push_back(value_json(v, exact));
        json params = {{"n", n}, {"kind", kind}, {"show", show}};
        emit(g, envelope_json("chain", params, exact, json{{show, values}}));
    } else if (g.format == "csv") {
        std::string csv = "level,exact,decimal\n";
        for (std::size_t k = 0; k < seq.size(); ++k)
            csv += std::to_string(k) + "," + to_fraction_string(seq[k]) + "," +
                   to_decimal_string(seq[k]) + "\n";
        emit(g, csv);
    } else {
        std::string text;
        for (std::size_t k = 0; k < seq.size(); ++k)
            text += (k ? ", " : "") + render_value(seq[k], exact);
        emit(g, text + "\n");
    }
}

// --------------------------------------------------------------------- mc

void run_mc(const GlobalOpts& g, int n, const std::string& as,
            const std::string& bs, const std::string& xs, std::uint64_t trials,
            std::uint64_t seed) {
    Vertex a = parse_vertex_flag(as, n, "-a");
    Vertex b = parse_vertex_flag(bs, n, "-b");
    Vertex x = parse_vertex_flag(xs, n, "-x");
    if (a == b) throw CLI::RuntimeError("-a and -b must be distinct", 2);
    MCEstimate est = simulate_hitting(HittingProblem(a, b), x, trials, seed);

    json results = {{"trials", est.trials},   {"hits_b", est.hits_b},
                    {"p_hat", est.p_hat},     {"std_err", est.std_err},
                    {"seed", est.seed},       {"max_steps_hit", est.max_steps_hit}};
    if (g.format == "csv") {
        emit(g, "trials,hits_b,p_hat,std_err,seed,max_steps_hit\n" +
                    std::to_string(est.trials) + "," +
                    std::to_string(est.hits_b) + "," +
                    to_decimal_string(Rat(est.p_hat)) + "," +
                    to_decimal_string(Rat(est.std_err)) + "," +
                    std::to_string(est.seed) + "," +
                    std::to_string(est.max_steps_hit) + "\n");
    } else {
        json params = {{"n", n}, {"a", as}, {"b", bs}, {"x", xs}};
        emit(g, envelope_json("mc", params, false, results));
    }
}

// ------------------------------------------------------------------- dist

void run_dist(const GlobalOpts& g, int n, long N, const std::string& variant_s,
              const std::string& source, std::uint64_t trials,
              std::uint64_t seed, bool exact) {
    WalkVariant variant = parse_walk_variant(variant_s);
    OccupationDistribution dist;
    if (source == "matrix") {
        dist = occupation_matrix_power(n, N, variant);
    } else if (source == "formula") {
        dist.n = n;
        dist.N = N;
        dist.variant = variant;
        for (int k = 0; k <= n; ++k)
            dist.probs.push_back(occupation_formula_exact(n, N, k, variant));
    } else if (source == "empirical") {
        if (exact)
            throw CLI::RuntimeError("--exact does not apply to --source empirical", 2);
        dist = empirical_occupation(n, N, variant, trials, seed);
    } else {
        throw CLI::RuntimeError("--source must be formula|matrix|empirical", 2);
    }

    json params = {{"n", n},
                   {"N", N},
                   {"variant", variant_s},
                   {"source", source}};
    if (source == "empirical") {
        params["trials"] = trials;
        params["seed"] = seed;
    }
    if (g.format == "json") {
        json rows = json::array();
        for (int k = 0; k <= n; ++k)
            rows.push_back(json{{"level", k},
                                {"vertices", binomial(n, k).get_str()},
                                {"probability", value_json(dist.probs[k], exact)}});
        emit(g, envelope_json("dist", params, exact, json{{"levels", rows}}));
    } else if (g.format == "csv") {
        std::string csv = "level,vertices,exact,decimal\n";
        for (int k = 0; k <= n; ++k)
            csv += std::to_string(k) + "," + binomial(n, k).get_str() + "," +
                   to_fraction_string(dist.probs[k]) + "," +
                   to_decimal_string(dist.probs[k]) + "\n";
        emit(g, csv);
    } else {
        std::string text;
        for (int k = 0; k <= n; ++k)
            text += std::to_string(k) + " " + render_value(dist.probs[k], exact) +
                    "\n";
        emit(g, text);
    }
}

// ---------------------------------------------------------------- compare

int run_compare(const GlobalOpts& g, int n, const std::string& suite,
                long max_time) {
    std::string report;
    bool ok = true;
    if (suite == "adjacent") {
        if (n > kExactSolveMaxDimension)
            throw CLI::RuntimeError("exact cap is n <= 12", 2);
        HittingProblem problem(all_zeros(n), Vertex(n, 1ull << (n - 1)));
        HarmonicSolution sol = solve_exact(problem);
        Rat max_disc = 0;
        std::string worst;
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            Vertex x(n, v);
            Rat diff = abs(adjacent_hitting_probability(n, x) - sol.values[v]);
            if (diff > max_disc) {
                max_disc = diff;
                worst = x.str();
            }
        }
        ok = max_disc == 0;
        report = "max discrepancy " + to_fraction_string(max_disc) + "/1; " +
                 std::to_string(1ull << n) + " vertices " + (ok ? "OK" : ("MISMATCH at " + worst)) + "\n";
    } else if (suite == "antipodal") {
        if (n > kExactSolveMaxDimension)
            throw CLI::RuntimeError("exact cap is n <= 12", 2);
        HittingProblem problem(all_zeros(n), all_ones(n));
        HarmonicSolution sol = solve_exact(problem);
        Rat max_disc = 0;
        std::string worst;
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            Vertex x(n, v);
            Rat diff = abs(antipodal_hitting_probability(n, x) - sol.values[v]);
            if (diff > max_disc) {
                max_disc = diff;
                worst = x.str();
            }
        }
        ok = max_disc == 0;
        report = "max discrepancy " + to_fraction_string(max_disc) + "/1; " +
                 std::to_string(1ull << n) + " vertices " + (ok ? "OK" : ("MISMATCH at " + worst)) + "\n";
    } else if (suite == "occupation") {
        double max_disc = 0;
        std::string worst;
        for (WalkVariant variant :
             {WalkVariant::as_printed, WalkVariant::simple}) {
            for (long N = 0; N <= max_time; ++N) {
                OccupationDistribution oracle =
                    occupation_matrix_power(n, N, variant);
                for (int k = 0; k <= n; ++k) {
                    double diff =
                        std::abs(occupation_formula(n, N, k, variant) -
                                 to_double(oracle.probs[k]));
                    if (diff > max_disc) {
                        max_disc = diff;
                        worst = to_string(variant) + " N=" + std::to_string(N) +
                                " k=" + std::to_string(k);
                    }
                }
            }
        }
        ok = max_disc <= 1e-10;
        report = "both variants: max discrepancy " +
                 to_decimal_string(Rat(max_disc), 3) + " (tolerance 1e-10, N <= " +
                 std::to_string(max_time) + ") " +
                 (ok ? "OK" : ("MISMATCH at " + worst)) + "\n";
    } else {
        throw CLI::RuntimeError("--suite must be adjacent|antipodal|occupation", 2);
    }
    emit(g, report);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hitting probabilities of the simple random walk on the n-cube"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", g.output, "Write output to a file instead of stdout");
    app.fallthrough();

    int n = 1;
    long N = 0;
    std::string xs, as, bs;
    std::string target = "adjacent", method = "exact", kind = "adjacent";
    std::string show = "w", variant = "simple", source = "matrix", suite;
    double tol = 1e-12;
    int max_sweeps = 1000000;
    long max_time = 100;
    std::uint64_t trials = 100000, seed = default_seed();
    bool exact_on = true, exact_off = false;

    auto* formula = app.add_subcommand("formula", "Closed-form hitting probability");
    formula->add_option("-n", n, "Dimension")->required()->check(CLI::Range(1, 64));
    formula->add_option("-x", xs, "Start vertex (bit-string)")->required();
    formula->add_option("--target", target, "adjacent (a=0..00, b=0..01) or antipodal (a=0..0, b=1..1)")
        ->check(CLI::IsMember({"adjacent", "antipodal"}));
    formula->add_flag("--exact,!--no-exact", exact_on, "Render as exact fraction (default on)");

    auto* solve = app.add_subcommand("solve", "Full-graph Dirichlet solve for arbitrary a, b");
    solve->add_option("-n", n, "Dimension")->required()->check(CLI::Range(1, 20));
    solve->add_option("-a", as, "Absorbing vertex with value 0")->required();
    solve->add_option("-b", bs, "Absorbing vertex with value 1")->required();
    solve->add_option("-x", xs, "Query vertex (omit for the full table)");
    solve->add_option("--method", method, "exact (n <= 12) or float (n <= 20)")
        ->check(CLI::IsMember({"exact", "float"}));
    solve->add_option("--tol", tol, "Float-solver residual tolerance")->check(CLI::PositiveNumber);
    solve->add_option("--max-sweeps", max_sweeps, "Float-solver sweep cap");
    solve->add_flag("--exact", exact_off, "Render exact fractions (exact method only)");

    auto* chain = app.add_subcommand("chain", "Lumped level-chain sequences");
    chain->add_option("-n", n, "Dimension")->required()->check(CLI::Range(1, 64));
    chain->add_option("--kind", kind, "adjacent or antipodal")
        ->check(CLI::IsMember({"adjacent", "antipodal"}));
    chain->add_option("--show", show, "w, u, z or residuals")
        ->check(CLI::IsMember({"w", "u", "z", "residuals"}));
    chain->add_flag("--exact,!--no-exact", exact_on, "Render as exact fractions (default on)");

    auto* mc = app.add_subcommand("mc", "Monte Carlo hitting-probability estimate");
    mc->add_option("-n", n, "Dimension")->required()->check(CLI::Range(1, 64));
    mc->add_option("-a", as, "Absorbing vertex with value 0")->required();
    mc->add_option("-b", bs, "Absorbing vertex with value 1")->required();
    mc->add_option("-x", xs, "Start vertex")->required();
    mc->add_option("--trials", trials, "Number of walks")->check(CLI::PositiveNumber);
    mc->add_option("--seed", seed, "Master seed (default $CUBEHIT_SEED or 0)");

    auto* dist = app.add_subcommand("dist", "Time-N occupation distribution by level");
    dist->add_option("-n", n, "Dimension")->required()
        ->check(CLI::Range(1, kOccupationMaxDimension));
    dist->add_option("-N", N, "Number of steps")->required()
        ->check(CLI::Range(0l, kOccupationMaxTime));
    dist->add_option("--variant", variant, "as-printed (lazy, hold 1/(n+1)) or simple")
        ->check(CLI::IsMember({"as-printed", "simple"}));
    dist->add_option("--source", source, "formula, matrix or empirical")
        ->check(CLI::IsMember({"formula", "matrix", "empirical"}));
    dist->add_option("--trials", trials, "Walks for --source empirical")->check(CLI::PositiveNumber);
    dist->add_option("--seed", seed, "Master seed (default $CUBEHIT_SEED or 0)");
    dist->add_flag("--exact", exact_off, "Render exact fractions");

    auto* compare = app.add_subcommand("compare", "Formula-vs-oracle agreement report");
    compare->add_option("-n", n, "Dimension")->required()->check(CLI::Range(1, 12));
    compare->add_option("--suite", suite, "adjacent, antipodal or occupation")->required()
        ->check(CLI::IsMember({"adjacent", "antipodal", "occupation"}));
    compare->add_option("--max-time", max_time, "Largest N for the occupation suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (formula->parsed())
            run_formula(g, n, xs, target, exact_on);
        else if (solve->parsed())
            run_solve(g, n, as, bs, xs, method, tol, max_sweeps, exact_off);
        else if (chain->parsed())
            run_chain(g, n, kind, show, exact_on);
        else if (mc->parsed())
            run_mc(g, n, as, bs, xs, trials, seed);
        else if (dist->parsed())
            run_dist(g, n, N, variant, source, trials, seed, exact_off);
        else if (compare->parsed())
            return run_compare(g, n, suite, max_time);
    } catch (const CLI::RuntimeError& e) {
        std::cerr << "cubehit: " << e.what() << "\n";
        return e.get_exit_code();
    } catch (const std::exception& e) {
        std::cerr << "cubehit: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
