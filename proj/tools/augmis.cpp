// augmis command-line front end.

#include "augmis/instances.hpp"
#include "augmis/io.hpp"
#include "augmis/irreducible.hpp"
#include "augmis/solver.hpp"
#include "augmis/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#ifndef AUGMIS_VERSION
#define AUGMIS_VERSION "0.0.0"
#endif

using namespace augmis;
using json = nlohmann::ordered_json;

namespace {

// Error that maps to exit code 1.
struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph named_graph(const std::string& name) {
    std::smatch m;
    auto num = [&](int i) { return std::stoi(m[i].str()); };
    auto path = [](int n) {
        std::vector<Edge> e;
        for (int i = 1; i < n; ++i) e.emplace_back(i - 1, i);
        return Graph(n, e);
    };
    if (name == "Petersen") {
        std::vector<Edge> e;
        for (int i = 0; i < 5; ++i) {
            e.emplace_back(i, (i + 1) % 5);
            e.emplace_back(i, i + 5);
            e.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph(10, e);
    }
    if (std::regex_match(name, m, std::regex(R"(K(\d+))"))) {
        std::vector<Edge> e;
        for (int i = 0; i < num(1); ++i)
            for (int j = i + 1; j < num(1); ++j) e.emplace_back(i, j);
        return Graph(num(1), e);
    }
    if (std::regex_match(name, m, std::regex(R"(C(\d+))")) && num(1) >= 3) {
        std::vector<Edge> e;
        for (int i = 0; i < num(1); ++i) e.emplace_back(i, (i + 1) % num(1));
        return Graph(num(1), e);
    }
    if (std::regex_match(name, m, std::regex(R"(P(\d+))")) && num(1) >= 1) return path(num(1));
    if (std::regex_match(name, m, std::regex(R"(T(\d+))")) && num(1) >= 1)
        return Pattern::simple_tree(num(1)).graph();
    if (std::regex_match(name, m, std::regex(R"(K(\d+),(\d+))")) && num(1) >= 1 && num(2) >= 1)
        return Pattern::biclique(num(1), num(2)).graph();
    if (std::regex_match(name, m, std::regex(R"(S(\d+),(\d+),(\d+))")) && num(1) >= 1 && num(2) >= 1 && num(3) >= 1)
        return Pattern::spider(num(1), num(2), num(3)).graph();
    throw CliError("unknown graph '" + name + "' (not a file or a known name)");
}

// A graph file if one exists at `arg`, else a named graph.
Graph load_graph(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        try {
            return read_graph_file(arg);
        } catch (const FormatError& e) {
            throw CliError(arg + ": " + e.what());
        }
    }
    return named_graph(arg);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliError("cannot write " + out_path);
    out << text;
}

json set_json(const VertexSet& s) { return json(s); }

struct Manifest {
    std::string path;
    json doc = json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void finish(int exit_code) {
        doc["version"] = AUGMIS_VERSION;
        doc["exit_code"] = exit_code;
        doc["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (path.empty()) {
            std::cerr << "manifest: " << doc.dump() << '\n';
        } else {
            std::ofstream out(path, std::ios::binary);
            out << doc.dump(2) << '\n';
        }
    }
};

// --- solve -----------------------------------------------------------------

struct SolveArgs {
    std::string input;
    int p = 3;
    std::string catalog = "9";
    std::optional<int> path_max_len;
    bool validate = false;
    bool as_json = false;
};

int run_solve(const SolveArgs& a, Manifest& man) {
    Graph g = load_graph(a.input);
    SolveConfig cfg;
    cfg.p = a.p;
    cfg.validate_class = a.validate;
    cfg.path_max_len = a.path_max_len;
    if (!a.catalog.empty() && std::all_of(a.catalog.begin(), a.catalog.end(), ::isdigit)) {
        cfg.catalog_n_max = std::stoi(a.catalog);
    } else {
        std::ifstream in(a.catalog, std::ios::binary);
        if (!in) throw CliError("cannot open catalog " + a.catalog);
        try {
            auto cat = std::make_shared<Catalog>(read_catalog(in));
            cfg.catalog_n_max = std::max(3, cat->max_vertices);
            cfg.catalog = cat;
        } catch (const FormatError& e) {
            throw CliError(a.catalog + ": " + e.what());
        }
    }
    man.doc["inputs"] = {a.input};
    man.doc["config"] = {{"p", cfg.p}, {"catalog", a.catalog}, {"validate_class", a.validate}};
    if (a.path_max_len) man.doc["config"]["path_max_len"] = *a.path_max_len;

    SolveResult r;
    try {
        r = solve_mis(g, cfg);
    } catch (const std::invalid_argument& e) {
        throw CliError(e.what());
    }
    json violations = json::array();
    if (r.violation_pattern)
        violations.push_back({{"kind", "forbidden-subgraph"},
                              {"pattern", *r.violation_pattern},
                              {"embedding", *r.class_violation_witness}});
    for (auto [x, y] : r.tree_violations) violations.push_back({{"kind", "adjacent-leaves"}, {"edge", {x, y}}});

    if (a.as_json) {
        json out;
        out["alpha"] = r.alpha;
        out["set"] = set_json(r.independent_set);
        out["iterations"] = r.iterations;
        out["finders"] = {{"path", r.hits.path}, {"tree", r.hits.tree}, {"catalog", r.hits.catalog}};
        out["violations"] = violations;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "alpha " << r.alpha << "\nset";
        for (Vertex v : r.independent_set) std::cout << ' ' << v;
        std::cout << "\niterations " << r.iterations << "\nfinders path=" << r.hits.path << " tree=" << r.hits.tree
                  << " catalog=" << r.hits.catalog << '\n';
        for (const auto& v : violations) std::cout << "violation " << v.dump() << '\n';
    }
    man.doc["result"] = {{"alpha", r.alpha}, {"iterations", r.iterations}, {"violations", violations.size()}};
    if (r.violation_pattern)
        std::cerr << "warning: input contains an induced " << *r.violation_pattern << '\n';
    return a.validate && !violations.empty() ? 2 : 0;
}

// --- atlas -----------------------------------------------------------------

int run_atlas(int n_max, const std::string& filters, int p, const std::string& out, Manifest& man) {
    if (n_max < 1 || n_max > kMaxEnumerationOrder)
        throw CliError("--n-max must be in [1, " + std::to_string(kMaxEnumerationOrder) + "]");
    std::vector<Pattern> pats;
    try {
        pats = filters.empty() ? catalog_filters(p) : Pattern::parse_list(filters);
    } catch (const std::invalid_argument& e) {
        throw CliError(e.what());
    }
    Catalog cat = enumerate_irreducible(n_max, pats);
    std::ostringstream text;
    write_catalog(text, cat);
    emit(text.str(), out);
    man.doc["config"] = {{"n_max", n_max}, {"filters", filters}, {"p", p}};
    json census = json::object();
    for (auto [n, c] : cat.census()) census[std::to_string(n)] = c;
    man.doc["result"] = {{"entries", cat.entries.size()}, {"census", census}};
    if (!out.empty() && out != "-") {
        std::cerr << "census";
        for (auto [n, c] : cat.census()) std::cerr << ' ' << n << ':' << c;
        std::cerr << '\n';
    }
    return 0;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string lemma;
    std::optional<int> n_max;
    int k_min = 3;
    int p = 2;
    int t = 4;
    unsigned threads = 1;
    bool as_json = false;
};

json census_json(const std::map<int, long>& m) {
    json out = json::object();
    for (auto [n, c] : m) out[std::to_string(n)] = c;
    return out;
}

json violations_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back({{"graph", graph_to_string(v.graph)}, {"detail", v.detail}});
    return out;
}

int run_verify(const VerifyArgs& a, Manifest& man) {
    json rep;
    rep["lemma"] = a.lemma;
    std::size_t violations = 0;
    try {
        if (a.lemma == "path-or-cycle") {
            auto r = verify_path_or_cycle(a.n_max.value_or(10), a.threads);
            rep["n_max"] = r.n_max;
            rep["examined"] = census_json(r.examined);
            rep["with_p8"] = census_json(r.with_p8);
            rep["paths"] = census_json(r.paths);
            rep["cycles"] = census_json(r.cycles);
            rep["violations"] = violations_json(r.violations);
            violations = r.violations.size();
        } else if (a.lemma == "anatomy") {
            auto r = verify_anatomy_statements(a.n_max.value_or(11), a.k_min, a.threads);
            rep["n_max"] = r.n_max;
            rep["k_min"] = r.k_min;
            rep["examined"] = census_json(r.examined);
            rep["trees"] = census_json(r.trees);
            rep["violations"] = violations_json(r.violations);
            violations = r.violations.size();
        } else if (a.lemma == "extension") {
            auto r = verify_extension_theorem(a.p, a.n_max.value_or(12), a.threads);
            rep["p"] = r.p;
            rep["n_max"] = r.n_max;
            rep["irreducible"] = census_json(r.irreducible);
            rep["with_tree"] = census_json(r.with_tree);
            rep["violations"] = violations_json(r.violations);
            violations = r.violations.size();
        } else if (a.lemma == "min-classes") {
            auto r = verify_min_classes(a.n_max.value_or(9), a.t, a.threads);
            rep["t"] = r.t;
            rep["n_max"] = r.n_max;
            json levels = json::array();
            for (const auto& l : r.levels)
                levels.push_back({{"n", l.n},
                                  {"irreducible", l.irreducible},
                                  {"census", l.census},
                                  {"with_path", l.with_path},
                                  {"with_biclique", l.with_biclique},
                                  {"with_tree", l.with_tree},
                                  {"misses", l.misses}});
            rep["levels"] = levels;
            violations = static_cast<std::size_t>(r.misses());
            rep["violations"] = violations;
        } else if (a.lemma == "ramsey") {
            auto r = bipartite_ramsey_bound(a.t, a.p);
            rep["t"] = r.t;
            rep["p"] = r.p;
            rep["bound"] = r.bound;
            rep["certified"] = r.certified;
            if (r.witness)
                rep["witness"] = {{"n", r.witness->order()}, {"edges", r.witness->graph().edges()}};
            else
                rep["witness"] = nullptr;
            violations = r.certified > 0 ? 0 : 1;
            rep["violations"] = violations;
        } else {
            throw CliError("unknown lemma '" + a.lemma + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw CliError(e.what());
    }
    if (a.as_json) {
        std::cout << rep.dump(2) << '\n';
    } else {
        for (auto it = rep.begin(); it != rep.end(); ++it) {
            if (it.key() == "violations" && it->is_array()) {
                std::cout << "violations " << it->size() << '\n';
                for (const auto& v : *it) std::cout << "  " << v["detail"].get<std::string>() << '\n';
            } else {
                std::cout << it.key() << ' ' << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
            }
        }
    }
    man.doc["config"] = {{"lemma", a.lemma}, {"n_max", a.n_max ? json(*a.n_max) : json(nullptr)},
                         {"k_min", a.k_min}, {"p", a.p}, {"t", a.t}};
    man.doc["result"] = {{"violations", violations}};
    return violations == 0 ? 0 : 1;
}

// --- gen / oracle ----------------------------------------------------------

PlantSpec parse_plant(const std::string& text) {
    PlantSpec spec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw CliError("bad --plant item '" + item + "'");
        const std::string key = item.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw CliError("bad --plant value in '" + item + "'");
        }
        if (key == "k") spec.k = value;
        else if (key == "p") spec.p = value;
        else if (key == "extras") spec.extras = value;
        else if (key == "noise") spec.noise = value;
        else throw CliError("unknown --plant key '" + key + "'");
    }
    return spec;
}

struct GenArgs {
    std::string line_graph;
    std::optional<int> random_n;
    double density = 0.3;
    std::string filters;
    std::string plant;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int run_gen(const GenArgs& a, Manifest& man) {
    const int modes = !a.line_graph.empty() + a.random_n.has_value() + !a.plant.empty();
    if (modes != 1) throw CliError("gen needs exactly one of --line-graph, --random, --plant");
    std::ostringstream text;
    if (!a.line_graph.empty()) {
        Graph src = load_graph(a.line_graph);
        if (src.size() == 0) throw CliError("line graph of an edgeless graph");
        LineGraph lg = line_graph(src);
        text << "c line graph of " << a.line_graph << '\n';
        write_graph(text, lg.graph);
        man.doc["inputs"] = {a.line_graph};
    } else {
        if (!a.seed) throw CliError("--seed is required for randomized generation");
        man.doc["seed"] = *a.seed;
        if (a.random_n) {
            std::vector<Pattern> pats;
            try {
                if (!a.filters.empty()) pats = Pattern::parse_list(a.filters);
                write_graph(text, gen_free_random(*a.random_n, a.density, pats, *a.seed));
            } catch (const std::invalid_argument& e) {
                throw CliError(e.what());
            }
            man.doc["config"] = {{"random", *a.random_n}, {"density", a.density}, {"filters", a.filters}};
        } else {
            PlantSpec spec = parse_plant(a.plant);
            spec.seed = *a.seed;
            PlantedInstance inst;
            try {
                inst = plant_augmenting_tree(spec);
            } catch (const std::invalid_argument& e) {
                throw CliError(e.what());
            }
            text << "c planted k=" << spec.k << " p=" << spec.p << " extras=" << spec.extras
                 << " noise=" << spec.noise << " seed=" << spec.seed << '\n';
            text << "c S";
            for (Vertex v : inst.s) text << ' ' << v + 1;
            text << '\n';
            write_graph(text, inst.graph);
            man.doc["config"] = {{"plant", a.plant}};
        }
    }
    emit(text.str(), a.out);
    return 0;
}

int run_oracle(const std::string& mis, const std::string& matching, bool as_json, Manifest& man) {
    if (mis.empty() == matching.empty()) throw CliError("oracle needs exactly one of --mis, --matching");
    try {
        if (!mis.empty()) {
            MisResult r = brute_force_mis(load_graph(mis));
            if (as_json)
                std::cout << json{{"alpha", r.alpha}, {"set", set_json(r.witness)}}.dump() << '\n';
            else
                std::cout << r.alpha << '\n';
            man.doc["inputs"] = {mis};
            man.doc["result"] = {{"alpha", r.alpha}};
        } else {
            const int nu = max_matching_size(load_graph(matching));
            if (as_json)
                std::cout << json{{"matching", nu}}.dump() << '\n';
            else
                std::cout << nu << '\n';
            man.doc["inputs"] = {matching};
            man.doc["result"] = {{"matching", nu}};
        }
    } catch (const std::invalid_argument& e) {
        throw CliError(e.what());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum independent sets by augmenting graphs"};
    app.set_version_flag("--version", AUGMIS_VERSION);
    app.require_subcommand(1);
    Manifest man;
    app.add_option("--manifest", man.path, "Write the run manifest here (default: one line on stderr)");

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Maximum independent set of a graph");
    solve->add_option("input", sa.input, "Graph file or name (K4, C5, P7, K3,3, T3, S1,1,3, Petersen)")->required();
    solve->add_option("--p", sa.p, "Class parameter p (graphs free of S(1,1,3) and K(p,p))")->capture_default_str();
    solve->add_option("--catalog", sa.catalog, "Catalog vertex bound, or a catalog file")->capture_default_str();
    solve->add_option("--path-max-len", sa.path_max_len, "Bound on augmenting path length in edges");
    solve->add_flag("--validate-class", sa.validate, "Check class membership; exit 2 on a violation");
    solve->add_flag("--json", sa.as_json, "JSON output");

    int atlas_n = 9, atlas_p = 3;
    std::string atlas_filters, atlas_out;
    auto* atlas = app.add_subcommand("atlas", "Enumerate irreducible graphs into a catalog file");
    atlas->add_option("--n-max", atlas_n, "Vertex bound")->capture_default_str();
    atlas->add_option("--filters", atlas_filters, "Forbidden patterns, e.g. \"P(8),T(5),K(3,3)\"");
    atlas->add_option("--p", atlas_p, "Use the default filters for p when --filters is absent")->capture_default_str();
    atlas->add_option("--out", atlas_out, "Output file (default stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Exhaustive checks of the structure results");
    verify->add_option("--lemma", va.lemma, "path-or-cycle | anatomy | extension | min-classes | ramsey")->required();
    verify->add_option("--n-max", va.n_max, "Vertex bound");
    verify->add_option("--k-min", va.k_min, "Smallest simple tree size (anatomy)")->capture_default_str();
    verify->add_option("--p", va.p, "Class parameter (extension, ramsey)")->capture_default_str();
    verify->add_option("--t", va.t, "Family parameter (min-classes, ramsey)")->capture_default_str();
    verify->add_option("--threads", va.threads, "Worker threads (0 = all cores)")->capture_default_str();
    verify->add_flag("--json", va.as_json, "JSON output");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Generate graph instances");
    gen->add_option("--line-graph", ga.line_graph, "Line graph of a graph file or name");
    gen->add_option("--random", ga.random_n, "Random graph on this many vertices");
    gen->add_option("--density", ga.density, "Edge probability for --random")->capture_default_str();
    gen->add_option("--filters", ga.filters, "Forbidden patterns for --random");
    gen->add_option("--plant", ga.plant, "Planted tree extension, e.g. k=5,p=3,extras=2,noise=1");
    gen->add_option("--seed", ga.seed, "Seed (required for --random and --plant)");
    gen->add_option("--out", ga.out, "Output file (default stdout)");

    std::string oracle_mis, oracle_matching;
    bool oracle_json = false;
    auto* oracle = app.add_subcommand("oracle", "Brute-force reference values");
    oracle->add_option("--mis", oracle_mis, "Independence number of a graph file or name");
    oracle->add_option("--matching", oracle_matching, "Matching number of a graph file or name");
    oracle->add_flag("--json", oracle_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    int rc = 1;
    man.doc["command"] = app.get_subcommands().front()->get_name();
    try {
        if (*solve) rc = run_solve(sa, man);
        else if (*atlas) rc = run_atlas(atlas_n, atlas_filters, atlas_p, atlas_out, man);
        else if (*verify) rc = run_verify(va, man);
        else if (*gen) rc = run_gen(ga, man);
        else if (*oracle) rc = run_oracle(oracle_mis, oracle_matching, oracle_json, man);
    } catch (const CliError& e) {
        std::cerr << "augmis: " << e.what() << '\n';
        rc = 1;
    } catch (const std::exception& e) {
        std::cerr << "augmis: " << e.what() << '\n';
        rc = 1;
    }
    man.finish(rc);
    return rc;
}
