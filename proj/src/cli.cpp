#include "dynchrome/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dynchrome/constructions.hpp"
#include "dynchrome/dimacs.hpp"
#include "dynchrome/errors.hpp"
#include "dynchrome/experiment.hpp"
#include "dynchrome/oracles.hpp"
#include "dynchrome/pipelines.hpp"

namespace dynchrome {

namespace {

using nlohmann::json;

OracleBudget budget_from_env() {
    OracleBudget budget;
    if (const char* raw = std::getenv("DYNCHROME_BUDGET_NODES")) {
        try {
            size_t used = 0;
            long long nodes = std::stoll(raw, &used);
            if (used != std::string(raw).size() || nodes < 1)
                throw InputError("");
            budget.max_nodes = nodes;
        } catch (const InputError&) {
            throw InputError(std::string("DYNCHROME_BUDGET_NODES is not a positive integer: ") +
                             raw);
        } catch (const std::exception&) {
            throw InputError(std::string("DYNCHROME_BUDGET_NODES is not a positive integer: ") +
                             raw);
        }
    }
    return budget;
}

void deliver(const json& j, const std::string& out_path, std::ostream& out) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (out_path.empty())
        out << text;
    else
        write_text_file(out_path, text);
}

json input_summary(const Graph& g) {
    json j = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
    if (g.vertex_count() > 0) {
        auto [lo, hi] = min_max_degree(g);
        j["min_degree"] = lo;
        j["max_degree"] = hi;
    }
    return j;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dynamic-coloring workbench"};
    app.require_subcommand(1);

    std::string input_path, out_path, algo, family, spec_path, name;
    uint64_t seed = 0;
    bool timing = false;
    int gen_n = 0, gen_r = 0, gen_a = 0, gen_b = 0;
    uint64_t gen_seed = 0;
    long long budget_nodes = 0;
    int budget_vertices = 0;

    auto add_budget_flags = [&](CLI::App* cmd) {
        cmd->add_option("--budget-nodes", budget_nodes, "search node budget override");
        cmd->add_option("--budget-vertices", budget_vertices, "oracle vertex cap override");
    };

    CLI::App* exact = app.add_subcommand("exact", "exact chromatic quantities of a graph");
    exact->add_option("--input", input_path, "DIMACS .col file")->required();
    exact->add_option("--out", out_path, "write the JSON report here instead of stdout");
    add_budget_flags(exact);

    CLI::App* color = app.add_subcommand("color", "run a coloring algorithm");
    color->add_option("--algo", algo, "algorithm name")->required();
    color->add_option("--input", input_path, "DIMACS .col file")->required();
    color->add_option("--seed", seed, "random seed");
    color->add_option("--out", out_path, "write the JSON report here instead of stdout");
    color->add_flag("--timing", timing, "include wall-clock time in the report");
    add_budget_flags(color);

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate all applicable bound formulas");
    bounds->add_option("--input", input_path, "DIMACS .col file")->required();
    bounds->add_option("--out", out_path, "write the JSON report here instead of stdout");
    bounds->add_flag("--timing", timing, "include wall-clock time in the report");
    add_budget_flags(bounds);

    CLI::App* gen = app.add_subcommand("gen", "emit a generated graph as DIMACS");
    gen->add_option("--family", family,
                    "cycle|path|complete|complete-bipartite|petersen|cube|random-regular|"
                    "gab|prop2|matching-example|two-subdivision-complete")
        ->required();
    gen->add_option("--n", gen_n, "vertex count parameter");
    gen->add_option("--r", gen_r, "degree parameter");
    gen->add_option("--a", gen_a, "first family parameter");
    gen->add_option("--b", gen_b, "second family parameter");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", out_path, "write DIMACS here instead of stdout");

    CLI::App* experiment = app.add_subcommand("experiment", "run a batch experiment");
    experiment->add_option("--spec", spec_path, "experiment spec JSON file")->required();
    experiment->add_option("--out", out_path, "write the JSON report here instead of stdout");
    add_budget_flags(experiment);

    std::vector<char*> argv;
    std::string program = "dynchrome";
    argv.push_back(program.data());
    std::vector<std::string> owned = args;
    for (auto& a : owned) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }

    try {
        OracleBudget budget = budget_from_env();
        if (budget_nodes > 0) budget.max_nodes = budget_nodes;
        if (budget_vertices > 0) budget.max_vertices = budget_vertices;

        if (app.got_subcommand(exact)) {
            Graph g = read_graph_file(input_path, &err);
            json j;
            j["schema_version"] = 1;
            j["input"] = input_summary(g);
            long long chi = chromatic_number(g, budget);
            long long chi2 = dynamic_chromatic_number(g, budget);
            j["values"] = {{"chi", chi},
                           {"chi2", chi2},
                           {"alpha", independence_number(g, budget)},
                           {"matching", matching_number(g, budget)},
                           {"omega", clique_number(g, budget)}};
            j["difference"] = chi2 - chi;
            deliver(j, out_path, out);
            return 0;
        }
        if (app.got_subcommand(color)) {
            Graph g = read_graph_file(input_path, &err);
            ResampleConfig cfg;
            cfg.seed = seed;
            PipelineResult res = run_split(algo, g, cfg, budget);
            deliver(report_to_json(res.report, timing), out_path, out);
            if (!res.report.proper || !res.report.dynamic) {
                err << "internal error: output coloring failed validation\n";
                return 4;
            }
            return 0;
        }
        if (app.got_subcommand(bounds)) {
            Graph g = read_graph_file(input_path, &err);
            deliver(report_to_json(bound_report(g, budget), timing), out_path, out);
            return 0;
        }
        if (app.got_subcommand(gen)) {
            Graph g;
            if (family == "cycle") {
                g = cycle(gen_n);
            } else if (family == "path") {
                g = path(gen_n);
            } else if (family == "complete") {
                g = complete(gen_n);
            } else if (family == "complete-bipartite") {
                g = complete_bipartite(gen_a, gen_b);
            } else if (family == "petersen") {
                g = petersen();
            } else if (family == "cube") {
                g = cube_q3();
            } else if (family == "random-regular") {
                g = random_regular(gen_n, gen_r, gen_seed);
            } else if (family == "gab") {
                g = gab_graph(gen_a, gen_b);
            } else if (family == "prop2") {
                g = prop2_graph(gen_a, gen_b);
            } else if (family == "matching-example") {
                g = matching_lower_bound_graph(gen_a);
            } else if (family == "two-subdivision-complete") {
                g = two_subdivision(complete(gen_n));
            } else {
                throw InputError("unknown generator family: " + family);
            }
            std::string text = emit_dimacs(g);
            if (out_path.empty())
                out << text;
            else
                write_text_file(out_path, text);
            return 0;
        }
        if (app.got_subcommand(experiment)) {
            std::ifstream in(spec_path, std::ios::binary);
            if (!in) throw InputError("cannot open " + spec_path);
            json spec_json;
            try {
                in >> spec_json;
            } catch (const json::exception& e) {
                throw InputError("bad spec JSON: " + std::string(e.what()));
            }
            ExperimentSpec spec = parse_experiment_spec(spec_json, budget);
            deliver(run_experiment(spec), out_path, out);
            return 0;
        }
        throw InputError("no subcommand selected");
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace dynchrome
