#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "berge/cache.hpp"
#include "berge/canonical.hpp"
#include "berge/constructions.hpp"
#include "berge/detect.hpp"
#include "berge/gstar.hpp"
#include "berge/io.hpp"
#include "berge/patterns.hpp"
#include "berge/ramsey.hpp"
#include "berge/turan.hpp"
#include "berge/types.hpp"

using nlohmann::json;
using namespace berge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

struct GlobalOpts {
    bool as_json = false;
    int threads = 1;
    std::uint64_t budget = 2'000'000'000;
    std::optional<std::string> cache_dir;
    bool no_cache = false;

    CacheConfig cache() const { return cache_config(cache_dir, no_cache); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// pattern argument: builtin name, the k4star family, or a graph file
struct PatternArg {
    std::vector<Graph> graphs;
    std::string tag;
    bool is_family = false;
};

PatternArg load_pattern(const std::string& arg) {
    PatternArg p;
    if (arg == "k4star-family") {
        p.graphs = gstar_family(complete_graph(4), 0);
        p.tag = arg;
        p.is_family = true;
        return p;
    }
    if (auto g = builtin_pattern(arg)) {
        p.graphs = {*g};
        p.tag = arg;
        return p;
    }
    p.graphs = {parse_graph(read_file(arg))};
    p.tag = canonical_code(p.graphs[0]).hex();
    return p;
}

struct Report {
    json body;
    std::string text;
    int exit_code = kExitOk;

    int emit(const GlobalOpts& opts) const {
        if (opts.as_json) std::cout << body.dump(2) << "\n";
        else std::cout << text;
        return exit_code;
    }
};

json report_skeleton(const std::string& command, json inputs) {
    json j;
    j["schema"] = 1;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    return j;
}

json witness_json(const BergeWitness& w) {
    return json{{"phi", w.phi}, {"assignment", w.assignment}};
}

BergeWitness witness_from_json(const json& j) {
    BergeWitness w;
    w.phi = j.at("phi").get<std::vector<int>>();
    w.assignment = j.at("assignment").get<std::vector<int>>();
    return w;
}

json bound_report_json(const BoundReport& rep) {
    json j;
    j["lower"] = rep.lower ? json(*rep.lower) : json(nullptr);
    j["upper"] = rep.upper ? json(*rep.upper) : json(nullptr);
    j["exact"] = rep.exact ? json(*rep.exact) : json(nullptr);
    j["provenance"] = rep.provenance;
    return j;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// ---------------------------------------------------------------- detect --

int run_detect(const GlobalOpts& opts, const std::string& host_path,
               const std::string& pattern_arg, bool use_oracle) {
    auto t0 = std::chrono::steady_clock::now();
    Hypergraph host = parse_hypergraph(read_file(host_path));
    PatternArg pat = load_pattern(pattern_arg);
    if (pat.is_family)
        throw std::runtime_error("detect expects a single pattern graph");
    const Graph& g = pat.graphs[0];

    auto w = use_oracle ? find_berge_oracle(host, g) : find_berge(host, g);
    if (w && !verify_witness(host, g, *w).ok)
        throw std::logic_error("internal: witness failed verification");

    Report rep;
    rep.body = report_skeleton("detect", {{"host", host_path},
                                          {"pattern", pat.tag},
                                          {"oracle", use_oracle}});
    rep.body["result"]["found"] = w.has_value();
    rep.body["result"]["witness"] = w ? witness_json(*w) : json(nullptr);
    rep.body["verified"] = w ? json(true) : json(nullptr);
    rep.body["elapsed_ms"] = elapsed_ms(t0);
    std::ostringstream out;
    if (w) {
        out << "Berge-" << pat.tag << " found\n  phi:";
        for (int v : w->phi) out << " " << v;
        out << "\n  hyperedges:";
        for (int e : w->assignment) out << " " << e;
        out << "\n  verified: yes\n";
    } else {
        out << "no Berge-" << pat.tag << " in host\n";
    }
    rep.text = out.str();
    return rep.emit(opts);
}

// ------------------------------------------------------------- construct --

int run_construct(const GlobalOpts& opts, const std::string& name, int n,
                  int threshold_s, const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    ConstructionOutput c;
    bool is_fixed = false;
    for (const auto& f : fixed_coloring_names())
        if (f == name) is_fixed = true;
    if (is_fixed) c = fixed_coloring(name);
    else if (name == "pair_complement") c = pair_complement_coloring(n);
    else if (name == "quad_class") c = quad_class_coloring(n);
    else if (name == "two_k2") c = two_k2_coloring(n);
    else if (name == "recursive_triangle") c = recursive_triangle_coloring(n);
    else if (name == "tripartite_cover") c = tripartite_cover_coloring(n);
    else if (name == "threshold") {
        int s = threshold_s > 0 ? threshold_s : (n + 1) / 2;
        Hypergraph fam = threshold_family(n, s);
        Report rep;
        rep.body = report_skeleton("construct",
                                   {{"name", name}, {"n", n}, {"s", s}});
        rep.body["result"] = to_json(fam);
        rep.body["elapsed_ms"] = elapsed_ms(t0);
        rep.text = serialize(fam);
        return rep.emit(opts);
    } else {
        throw std::runtime_error("unknown construction '" + name + "'");
    }

    Report rep;
    rep.body = report_skeleton("construct", {{"name", c.family_tag}, {"n", c.n}});
    rep.body["result"]["family_tag"] = c.family_tag;
    rep.body["result"]["declared_colors"] = c.declared_colors;
    rep.body["result"]["used_colors"] = c.used_colors;
    rep.body["result"]["materialized"] = c.coloring.has_value();
    if (c.coloring) rep.body["result"]["coloring"] = to_json(*c.host, *c.coloring);
    rep.body["elapsed_ms"] = elapsed_ms(t0);

    std::ostringstream out;
    out << "# " << c.family_tag << " n=" << c.n
        << " declared_colors=" << c.declared_colors
        << " used_colors=" << c.used_colors << "\n";
    if (c.coloring) out << serialize(*c.host, *c.coloring);
    rep.text = out.str();
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
        if (c.coloring) f << serialize(*c.host, *c.coloring);
        rep.text = "wrote " + out_path + "\n";
    }
    return rep.emit(opts);
}

// ----------------------------------------------------------------- gstar --

int run_gstar(const GlobalOpts& opts, const std::string& graph_arg, int vertex,
              bool whole_union) {
    auto t0 = std::chrono::steady_clock::now();
    PatternArg pat = load_pattern(graph_arg);
    if (pat.is_family) throw std::runtime_error("gstar expects a single graph");
    const Graph& g = pat.graphs[0];
    std::vector<Graph> members =
        whole_union ? gstar_union(g) : gstar_family(g, vertex);

    Report rep;
    rep.body = report_skeleton(
        "gstar", {{"graph", pat.tag},
                  {"vertex", whole_union ? json(nullptr) : json(vertex)},
                  {"union", whole_union}});
    json arr = json::array();
    for (const auto& m : members) arr.push_back(to_json(m));
    rep.body["result"]["members"] = arr;
    rep.body["result"]["count"] = members.size();
    rep.body["elapsed_ms"] = elapsed_ms(t0);

    std::ostringstream out;
    for (std::size_t i = 0; i < members.size(); ++i)
        out << "# member " << i << "\n" << serialize(members[i]);
    out << "# " << members.size() << " member(s) up to isomorphism\n";
    rep.text = out.str();
    return rep.emit(opts);
}

// ----------------------------------------------------------------- turan --

int run_turan(const GlobalOpts& opts, int n, int r, const std::string& pattern_arg) {
    auto t0 = std::chrono::steady_clock::now();
    PatternArg pat = load_pattern(pattern_arg);
    if (pat.is_family) throw std::runtime_error("turan expects a single graph");
    const Graph& g = pat.graphs[0];

    std::string key = "turan_n" + std::to_string(n) + "_r" + std::to_string(r) +
                      "_" + canonical_code(g).hex();
    CacheConfig cache = opts.cache();
    json result;
    std::string provenance = "search";
    if (auto hit = cache_get(cache, key)) {
        result = *hit;
        provenance = "cached";
    } else {
        TuranResult res = turan_exact(n, r, g, opts.budget);
        if (find_berge(res.witness, g))
            throw std::logic_error("internal: Turan witness not pattern-free");
        result["value"] = res.value;
        result["exhausted"] = res.exhausted;
        result["nodes"] = res.nodes;
        result["witness"] = to_json(res.witness);
        cache_put(cache, key, result);
    }

    Report rep;
    rep.body = report_skeleton("turan", {{"n", n}, {"r", r}, {"pattern", pat.tag}});
    rep.body["result"] = result;
    rep.body["result"]["provenance"] = provenance;
    rep.body["verified"] = true;
    rep.body["elapsed_ms"] = elapsed_ms(t0);

    std::ostringstream out;
    out << "ex_" << r << "(" << n << ", Berge-" << pat.tag
        << ") = " << result["value"].get<long long>()
        << (result["exhausted"].get<bool>() ? ""
                                            : "  (budget hit, lower bound only)")
        << "  [" << provenance << "]\n";
    rep.text = out.str();
    rep.exit_code = result["exhausted"].get<bool>() ? kExitOk : kExitUnknown;
    return rep.emit(opts);
}

// ---------------------------------------------------------------- ramsey --

json coloring_search_json(const ColoringSearchResult& res, const Hypergraph& host) {
    json j;
    j["status"] = res.status == SearchStatus::Sat     ? "SAT"
                  : res.status == SearchStatus::Unsat ? "UNSAT"
                                                      : "UNKNOWN";
    j["nodes"] = res.nodes;
    j["coloring"] = res.coloring ? to_json(host, *res.coloring) : json(nullptr);
    return j;
}

int run_ramsey(const GlobalOpts& opts, int r, int k, const std::string& pattern_arg,
               std::optional<int> n) {
    auto t0 = std::chrono::steady_clock::now();
    PatternArg pat = load_pattern(pattern_arg);
    SearchOptions sopts;
    sopts.node_budget = opts.budget;
    sopts.threads = opts.threads;

    CacheConfig cache = opts.cache();
    Report rep;

    if (n) {
        std::string key = "ramsey_r" + std::to_string(r) + "_k" + std::to_string(k) +
                          "_n" + std::to_string(*n) + "_" + pat.tag;
        json result;
        std::string provenance = "search";
        Hypergraph host = complete_hypergraph(*n, r);
        if (auto hit = cache_get(cache, key)) {
            result = *hit;
            provenance = "cached";
        } else {
            auto res = exists_good_coloring(host, k, pat.graphs, sopts);
            if (res.coloring)
                for (const auto& g : pat.graphs)
                    if (mono_berge_in_coloring(host, *res.coloring, g))
                        throw std::logic_error(
                            "internal: SAT coloring has a monochromatic copy");
            result = coloring_search_json(res, host);
            if (result["status"] != "UNKNOWN") cache_put(cache, key, result);
        }
        rep.body = report_skeleton(
            "ramsey", {{"r", r}, {"k", k}, {"pattern", pat.tag}, {"n", *n}});
        rep.body["result"] = result;
        rep.body["result"]["provenance"] = provenance;
        rep.body["verified"] = result["status"] == "SAT" ? json(true) : json(nullptr);
        rep.body["elapsed_ms"] = elapsed_ms(t0);
        std::string status = result["status"].get<std::string>();
        rep.text = status + "  (n=" + std::to_string(*n) + ", r=" +
                   std::to_string(r) + ", k=" + std::to_string(k) + ", pattern " +
                   pat.tag + ", " + provenance + ")\n";
        rep.exit_code = status == "UNKNOWN" ? kExitUnknown : kExitOk;
        return rep.emit(opts);
    }

    // without --n: smallest host with no good coloring; good colorings
    // restrict to subsets, so the first UNSAT size is the Ramsey number
    int start = r;
    for (const auto& g : pat.graphs) start = std::max(start, g.n);
    json steps = json::array();
    for (int m = start;; ++m) {
        Hypergraph host = complete_hypergraph(m, r);
        auto res = exists_good_coloring(host, k, pat.graphs, sopts);
        steps.push_back({{"n", m},
                         {"status", coloring_search_json(res, host)["status"]},
                         {"nodes", res.nodes}});
        rep.body = report_skeleton("ramsey",
                                   {{"r", r}, {"k", k}, {"pattern", pat.tag}});
        if (res.status == SearchStatus::Unknown) {
            rep.body["result"] = {{"status", "UNKNOWN"}, {"steps", steps}};
            rep.body["elapsed_ms"] = elapsed_ms(t0);
            rep.text = "UNKNOWN (budget exhausted at n=" + std::to_string(m) + ")\n";
            rep.exit_code = kExitUnknown;
            return rep.emit(opts);
        }
        if (res.status == SearchStatus::Unsat) {
            rep.body["result"] = {{"status", "EXACT"}, {"value", m}, {"steps", steps}};
            rep.body["elapsed_ms"] = elapsed_ms(t0);
            rep.text = "R_" + std::to_string(r) + "(Berge-" + pat.tag + ", " +
                       std::to_string(k) + ") = " + std::to_string(m) + "\n";
            return rep.emit(opts);
        }
    }
}

// ---------------------------------------------------------------- bounds --

int run_bounds(const GlobalOpts& opts, const std::string& pattern_arg, int k, int r,
               bool nonuniform, std::optional<int> n) {
    auto t0 = std::chrono::steady_clock::now();
    PatternArg pat = load_pattern(pattern_arg);
    if (pat.is_family)
        throw std::runtime_error("bounds expects a single pattern graph");
    const Graph& g = pat.graphs[0];

    BoundReport br;
    json inputs;
    if (nonuniform) {
        if (!n) throw std::runtime_error("--nonuniform needs --n");
        br = dual_f_report(*n, g, FMode::NonUniform);
        inputs = {{"mode", "nonuniform"}, {"pattern", pat.tag}, {"n", *n}};
    } else {
        br = ramsey_bounds(g, k, r);
        inputs = {{"mode", "uniform"}, {"pattern", pat.tag}, {"k", k}, {"r", r}};
    }
    Report rep;
    rep.body = report_skeleton("bounds", inputs);
    rep.body["result"] = bound_report_json(br);
    rep.body["elapsed_ms"] = elapsed_ms(t0);
    std::ostringstream out;
    out << (nonuniform ? "f(" + std::to_string(*n) + ", Berge-" + pat.tag + ")"
                       : "R_" + std::to_string(r) + "(Berge-" + pat.tag + ", " +
                             std::to_string(k) + ")");
    if (br.exact) {
        out << " = " << *br.exact;
    } else {
        out << " in [";
        if (br.lower) out << *br.lower;
        out << ", ";
        if (br.upper) out << *br.upper;
        out << "]";
    }
    out << "\n";
    for (const auto& p : br.provenance) out << "  " << p << "\n";
    rep.text = out.str();
    return rep.emit(opts);
}

// ---------------------------------------------------------------- verify --

int run_verify(const GlobalOpts& opts, const std::string& coloring_path,
               const std::string& witness_path, const std::string& host_path,
               const std::string& pattern_arg) {
    auto t0 = std::chrono::steady_clock::now();
    PatternArg pat = load_pattern(pattern_arg);
    Report rep;

    if (!coloring_path.empty()) {
        auto [host, coloring] = parse_coloring(read_file(coloring_path));
        json hits = json::array();
        bool any = false;
        for (const auto& g : pat.graphs) {
            auto hit = mono_berge_in_coloring(host, coloring, g);
            if (hit) {
                if (!verify_witness(host, g, hit->witness).ok)
                    throw std::logic_error("internal: hit failed verification");
                any = true;
                hits.push_back({{"color", hit->color},
                                {"witness", witness_json(hit->witness)}});
            }
        }
        rep.body = report_skeleton(
            "verify", {{"coloring", coloring_path}, {"pattern", pat.tag}});
        rep.body["result"]["monochromatic_copy"] = any;
        rep.body["result"]["hits"] = hits;
        rep.body["elapsed_ms"] = elapsed_ms(t0);
        rep.text = any ? "monochromatic Berge-" + pat.tag + " found\n"
                       : "no monochromatic Berge-" + pat.tag + "\n";
        return rep.emit(opts);
    }

    if (witness_path.empty() || host_path.empty())
        throw std::runtime_error("verify needs --coloring or --witness with --host");
    Hypergraph host = parse_hypergraph(read_file(host_path));
    BergeWitness w = witness_from_json(json::parse(read_file(witness_path)));
    if (pat.is_family) throw std::runtime_error("verify expects a single pattern");
    auto res = verify_witness(host, pat.graphs[0], w);
    rep.body = report_skeleton("verify", {{"witness", witness_path},
                                          {"host", host_path},
                                          {"pattern", pat.tag}});
    rep.body["result"]["valid"] = res.ok;
    rep.body["result"]["reason"] = res.reason;
    rep.body["elapsed_ms"] = elapsed_ms(t0);
    rep.text = res.ok ? "witness valid\n" : "witness INVALID: " + res.reason + "\n";
    rep.exit_code = res.ok ? kExitOk : kExitError;
    return rep.emit(opts);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berge-G hypergraph Ramsey/Turan toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts opts;
    app.add_flag("--json", opts.as_json, "emit a JSON run report");
    app.add_option("--threads", opts.threads, "worker threads for searches")
        ->default_val(1);
    app.add_option("--budget", opts.budget, "search node budget");
    app.add_option("--cache-dir", opts.cache_dir,
                   "cache directory (default $BERGE_CACHE_DIR or .berge-cache)");
    app.add_flag("--no-cache", opts.no_cache, "bypass the result cache");

    auto* detect = app.add_subcommand("detect", "find a Berge-G subhypergraph");
    std::string host_path, pattern_arg;
    bool use_oracle = false;
    detect->add_option("--host", host_path, "host hypergraph file")->required();
    detect->add_option("--pattern", pattern_arg, "pattern: builtin name or file")
        ->required();
    detect->add_flag("--oracle", use_oracle, "use the brute-force oracle");

    auto* construct = app.add_subcommand("construct", "emit a lower-bound coloring");
    std::string cons_name, out_path;
    int cons_n = 0;
    construct
        ->add_option("name", cons_name,
                     "fixed name or family (pair_complement, quad_class, two_k2, "
                     "recursive_triangle, tripartite_cover, threshold)")
        ->required();
    construct->add_option("--n", cons_n, "host size for family constructions");
    int cons_s = 0;
    construct->add_option("--s", cons_s,
                          "minimum set size for threshold (default (n+1)/2)");
    construct->add_option("--out", out_path, "write the coloring to a file");

    auto* gstar = app.add_subcommand("gstar", "enumerate the extension family");
    std::string gstar_graph;
    int gstar_vertex = 0;
    bool gstar_do_union = false;
    gstar->add_option("--graph", gstar_graph, "base graph: builtin name or file")
        ->required();
    gstar->add_option("--vertex", gstar_vertex, "removed vertex")->default_val(0);
    gstar->add_flag("--union", gstar_do_union, "union over all vertices");

    auto* turan = app.add_subcommand("turan", "exact small Berge Turan numbers");
    int tn = 0, tr = 0;
    std::string tpat;
    turan->add_option("--n", tn)->required();
    turan->add_option("--r", tr)->required();
    turan->add_option("--pattern", tpat)->required();

    auto* ramsey = app.add_subcommand("ramsey", "exhaustive Ramsey decisions");
    int rr = 3, rk = 2;
    std::string rpat;
    ramsey->add_option("--r", rr)->required();
    ramsey->add_option("--k", rk)->required();
    ramsey->add_option("--pattern", rpat)->required();
    int rn_raw = -1;
    ramsey->add_option("--n", rn_raw, "decide this host size only");

    auto* bounds = app.add_subcommand("bounds", "bound report for a pattern");
    std::string bpat;
    int bk = 2, brr = 3;
    bool bnon = false;
    int bn_raw = -1;
    bounds->add_option("--pattern", bpat)->required();
    bounds->add_option("--k", bk);
    bounds->add_option("--r", brr);
    bounds->add_flag("--nonuniform", bnon, "dual f on the powerset 2^[n]");
    bounds->add_option("--n", bn_raw, "set size for --nonuniform");

    auto* verify = app.add_subcommand("verify", "replay stored certificates");
    std::string v_coloring, v_witness, v_host, v_pattern;
    verify->add_option("--coloring", v_coloring, "coloring file to scan");
    verify->add_option("--witness", v_witness, "witness JSON file");
    verify->add_option("--host", v_host, "host hypergraph file");
    verify->add_option("--pattern", v_pattern)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*detect) return run_detect(opts, host_path, pattern_arg, use_oracle);
        if (*construct)
            return run_construct(opts, cons_name, cons_n, cons_s, out_path);
        if (*gstar) return run_gstar(opts, gstar_graph, gstar_vertex, gstar_do_union);
        if (*turan) return run_turan(opts, tn, tr, tpat);
        if (*ramsey)
            return run_ramsey(opts, rr, rk, rpat,
                              rn_raw >= 0 ? std::optional<int>(rn_raw)
                                          : std::nullopt);
        if (*bounds)
            return run_bounds(opts, bpat, bk, brr, bnon,
                              bn_raw >= 0 ? std::optional<int>(bn_raw)
                                          : std::nullopt);
        if (*verify) return run_verify(opts, v_coloring, v_witness, v_host, v_pattern);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
