#include "tct/io.hpp"

#include "tct/gmwct.hpp"
#include "tct/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <random>
#include <sstream>
#include <thread>

namespace tct {

namespace {

Mode parse_mode(const std::string& s, int line)
{
    if (s == "mct") return Mode::mct;
    if (s == "gmwct") return Mode::gmwct;
    if (s == "wgmwct") return Mode::wgmwct;
    throw ParseError(line, "unknown mode '" + s + "'");
}

const char* mode_name(Mode m)
{
    switch (m) {
    case Mode::mct: return "mct";
    case Mode::gmwct: return "gmwct";
    case Mode::wgmwct: return "wgmwct";
    }
    return "?";
}

} // namespace

Instance parse_instance(std::istream& in)
{
    int n = -1;
    Mode mode = Mode::mct;
    std::vector<Edge> edges;
    std::vector<VertexPair> requests;
    std::map<int, std::vector<Vertex>> sets;
    std::optional<int> k;
    bool have_header = false;

    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError(ln, "duplicate header");
            std::string fmt, ms;
            if (!(iss >> fmt >> n >> ms) || fmt != "tct" || n < 1)
                throw ParseError(ln, "expected 'p tct <n> <mode>'");
            mode = parse_mode(ms, ln);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(ln, "record before the header");
        if (tag == "e") {
            long long u, v;
            if (!(iss >> u >> v)) throw ParseError(ln, "expected 'e <u> <v> [<cost>]'");
            Edge e{(Vertex)(u - 1), (Vertex)(v - 1), 1};
            long long cost;
            if (iss >> cost) {
                if (mode != Mode::wgmwct)
                    throw ParseError(ln, "edge cost outside wgmwct mode");
                if (cost < 0) throw ParseError(ln, "negative cost");
                e.cost = (std::uint64_t)cost;
            }
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(ln, "vertex id out of range");
            edges.push_back(e);
        } else if (tag == "q") {
            if (mode != Mode::mct) throw ParseError(ln, "requests outside mct mode");
            long long u, v;
            if (!(iss >> u >> v)) throw ParseError(ln, "expected 'q <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(ln, "vertex id out of range");
            requests.push_back(norm_pair((Vertex)(u - 1), (Vertex)(v - 1)));
        } else if (tag == "t") {
            if (mode == Mode::mct)
                throw ParseError(ln, "terminal sets outside gmwct/wgmwct modes");
            int idx;
            if (!(iss >> idx) || idx < 1) throw ParseError(ln, "expected 't <set> <u>...'");
            long long u;
            while (iss >> u) {
                if (u < 1 || u > n) throw ParseError(ln, "vertex id out of range");
                sets[idx].push_back((Vertex)(u - 1));
            }
        } else if (tag == "k") {
            int kk;
            if (!(iss >> kk) || kk < 0) throw ParseError(ln, "expected 'k <nonneg>'");
            k = kk;
        } else {
            throw ParseError(ln, "unknown record '" + tag + "'");
        }
    }
    if (!have_header) throw ParseError(ln, "missing header");
    if ((int)edges.size() != n - 1)
        throw ParseError(ln, "expected " + std::to_string(n - 1) + " edges, got " +
                                 std::to_string(edges.size()));
    if (mode == Mode::mct) {
        Instance inst = build_instance(n, std::move(edges), std::move(requests), k);
        return inst;
    }
    std::vector<std::vector<Vertex>> tsets;
    for (auto& [idx, vs] : sets) tsets.push_back(std::move(vs));
    Instance inst = build_instance_terminal_sets(n, std::move(edges), std::move(tsets),
                                                 k, mode == Mode::wgmwct);
    return inst;
}

Instance parse_instance_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_instance(in);
}

void print_instance(std::ostream& out, const Instance& inst)
{
    out << "p tct " << inst.n << " " << mode_name(inst.mode) << "\n";
    for (const Edge& e : inst.edges) {
        out << "e " << e.u + 1 << " " << e.v + 1;
        if (inst.mode == Mode::wgmwct) out << " " << e.cost;
        out << "\n";
    }
    if (inst.mode == Mode::mct) {
        for (auto [a, b] : inst.requests) out << "q " << a + 1 << " " << b + 1 << "\n";
    } else {
        for (size_t i = 0; i < inst.terminal_sets.size(); ++i) {
            out << "t " << i + 1;
            for (Vertex v : inst.terminal_sets[i]) out << " " << v + 1;
            out << "\n";
        }
    }
    if (inst.k) out << "k " << *inst.k << "\n";
}

std::vector<EdgeId> parse_cut_file(const std::string& path, const Instance& inst)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::map<VertexPair, EdgeId> lookup;
    for (EdgeId e = 0; e < (int)inst.edges.size(); ++e)
        lookup[norm_pair(inst.edges[e].u, inst.edges[e].v)] = e;
    std::vector<EdgeId> cut;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag) || tag == "c") continue;
        if (tag != "e") throw ParseError(ln, "expected 'e <u> <v>'");
        long long u, v;
        if (!(iss >> u >> v)) throw ParseError(ln, "expected 'e <u> <v>'");
        auto it = lookup.find(norm_pair((Vertex)(u - 1), (Vertex)(v - 1)));
        if (it == lookup.end()) throw ParseError(ln, "not a tree edge");
        cut.push_back(it->second);
    }
    std::sort(cut.begin(), cut.end());
    cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
    return cut;
}

namespace {

using nlohmann::json;

json stats_json(const SearchStats& st)
{
    json rules = json::object();
    for (const auto& [k, v] : st.rules.fired) rules[k] = v;
    return json{{"nodes", st.nodes},
                {"leaves", st.leaves},
                {"max_depth", st.max_depth},
                {"fallbacks", st.fallback_branches},
                {"initial_k", st.initial_k},
                {"rules", rules}};
}

json cut_json(const Instance& inst, const std::vector<EdgeId>& cut)
{
    json out = json::array();
    for (EdgeId e : cut)
        out.push_back(json::array({inst.edges[e].u + 1, inst.edges[e].v + 1}));
    return out;
}

struct Args {
    std::map<std::string, std::string> opts;
    std::vector<std::string> positional;
    bool has(const std::string& k) const { return opts.count(k) != 0; }
    std::string get(const std::string& k, const std::string& dflt = "") const
    {
        auto it = opts.find(k);
        return it == opts.end() ? dflt : it->second;
    }
};

Args parse_args(int argc, const char* const* argv, int from)
{
    Args a;
    for (int i = from; i < argc; ++i) {
        std::string s = argv[i];
        if (s.rfind("--", 0) == 0) {
            std::string key = s.substr(2);
            std::string val = "1";
            auto eq = key.find('=');
            if (eq != std::string::npos) {
                val = key.substr(eq + 1);
                key = key.substr(0, eq);
            } else if (i + 1 < argc && std::string(argv[i + 1]).rfind("--", 0) != 0) {
                // flags that take values consume the next token
                static const std::set<std::string> valued = {
                    "input",  "k",     "cut",   "mode",    "seed",  "threads",
                    "gadget", "n",     "requests", "out",  "q",     "max-cost",
                    "count",  "n-min", "n-max", "requests-max"};
                if (valued.count(key)) val = argv[++i];
            }
            a.opts[key] = val;
        } else {
            a.positional.push_back(s);
        }
    }
    return a;
}

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

int cmd_solve(const Args& args)
{
    if (!args.has("input")) {
        std::cerr << "solve: --input <file> required\n";
        return 2;
    }
    Instance inst = parse_instance_file(args.get("input"));
    bool want_min = args.has("min");
    std::optional<int> k;
    if (args.has("k")) k = std::stoi(args.get("k"));
    else if (inst.k) k = inst.k;
    if (!want_min && !k) {
        std::cerr << "solve: give --k <int> or --min\n";
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    json report;
    int exit_code = 0;
    if (inst.mode == Mode::wgmwct) {
        // the pattern DP answers both forms: the decision compares its cost
        WgmwctResult r = solve_wgmwct(inst);
        if (want_min) {
            report = {{"status", "optimal"},
                      {"cost", r.cost},
                      {"size", r.cut.size()},
                      {"cut", cut_json(inst, r.cut)},
                      {"time_ms", ms_since(t0)}};
            std::cerr << "optimal cost " << r.cost << " with " << r.cut.size()
                      << " edges\n";
        } else {
            bool yes = r.cost <= (std::uint64_t)*k;
            exit_code = yes ? 0 : 1;
            report = {{"status", yes ? "yes" : "no"},
                      {"k", *k},
                      {"cost", r.cost},
                      {"time_ms", ms_since(t0)}};
            if (yes) report["cut"] = cut_json(inst, r.cut);
            std::cerr << (yes ? "yes" : "no") << " at cost budget " << *k << "\n";
        }
    } else if (want_min) {
        SolveResult r = solve_min(inst);
        report = {{"status", "optimal"},
                  {"size", r.cut->size()},
                  {"cut", cut_json(inst, *r.cut)},
                  {"stats", stats_json(r.stats)},
                  {"time_ms", ms_since(t0)}};
        std::cerr << "optimal size " << r.cut->size() << "\n";
    } else {
        SolveResult r = solve_decision(inst, *k);
        bool yes = r.cut.has_value();
        exit_code = yes ? 0 : 1;
        report = {{"status", yes ? "yes" : "no"},
                  {"k", *k},
                  {"stats", stats_json(r.stats)},
                  {"time_ms", ms_since(t0)}};
        if (yes) {
            report["size"] = r.cut->size();
            report["cut"] = cut_json(inst, *r.cut);
        }
        std::cerr << (yes ? "yes" : "no") << " at k = " << *k << "\n";
    }
    std::cout << report.dump(2) << "\n";
    return exit_code;
}

int cmd_reduce(const Args& args)
{
    if (!args.has("input")) {
        std::cerr << "reduce: --input <file> required\n";
        return 2;
    }
    Instance inst = parse_instance_file(args.get("input"));
    long long budget = inst.k ? *inst.k : (long long)inst.edges.size();
    WorkingForest f(inst, budget);
    RuleCounters rc;
    ReduceOutcome out = reduce_to_fixpoint(f, rc);
    if (out == ReduceOutcome::infeasible) {
        std::cerr << "reduction exceeds the budget: no\n";
        std::cout << json{{"status", "no"}}.dump(2) << "\n";
        return 1;
    }
    // renumber the live forest into a fresh instance per component family
    std::vector<Vertex> live = f.live_vertices();
    std::map<Vertex, int> id;
    for (Vertex v : live) id[v] = (int)id.size();
    std::vector<Edge> edges;
    for (Vertex v : live)
        if (f.parent(v) >= 0) edges.push_back({id[v], id[f.parent(v)], 1});
    std::vector<VertexPair> reqs;
    for (auto [a, b] : f.requests()) reqs.push_back(norm_pair(id[a], id[b]));
    std::cout << "c reduced instance; forced cuts so far: "
              << f.committed_cut().size() << "\n";
    std::cout << "c components: a forest is printed as one block per tree\n";
    std::cout << "p tct " << live.size() << " mct\n";
    for (const Edge& e : edges) std::cout << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    for (auto [a, b] : reqs) std::cout << "q " << a + 1 << " " << b + 1 << "\n";
    if (f.budget() < (long long)1 << 40) std::cout << "k " << f.budget() << "\n";
    return 0;
}

int cmd_gen(const Args& args)
{
    GenSpec spec;
    if (args.has("seed")) spec.seed = std::stoull(args.get("seed"));
    if (args.has("n")) spec.edges = std::stoi(args.get("n"));
    if (args.has("requests")) spec.requests = std::stoi(args.get("requests"));
    if (args.has("q")) spec.q = std::stoi(args.get("q"));
    if (args.has("max-cost")) spec.max_cost = std::stoull(args.get("max-cost"));
    if (args.has("weighted")) spec.weighted = true;
    if (args.has("gadget")) {
        spec.mode = "gadget";
        spec.gadget = args.get("gadget");
    } else if (args.has("mode")) {
        spec.mode = args.get("mode");
    }
    Instance inst = generate(spec);
    if (args.has("out")) {
        std::ofstream out(args.get("out"));
        print_instance(out, inst);
    } else {
        print_instance(std::cout, inst);
    }
    return 0;
}

int cmd_verify(const Args& args)
{
    if (!args.has("input") || !args.has("cut")) {
        std::cerr << "verify: --input <file> --cut <file> required\n";
        return 2;
    }
    Instance inst = parse_instance_file(args.get("input"));
    std::vector<EdgeId> cut = parse_cut_file(args.get("cut"), inst);
    bool ok = verify_cut(inst, cut);
    json report{{"valid", ok},
                {"size", cut.size()},
                {"cost", cut_cost(inst, cut)}};
    std::cout << report.dump(2) << "\n";
    std::cerr << (ok ? "valid cut" : "cut misses a request") << "\n";
    return ok ? 0 : 1;
}

int cmd_bench(const Args& args)
{
    std::uint64_t seed = args.has("seed") ? std::stoull(args.get("seed")) : 1;
    int count = args.has("count") ? std::stoi(args.get("count")) : 100;
    int n_min = args.has("n-min") ? std::stoi(args.get("n-min")) : 4;
    int n_max = args.has("n-max") ? std::stoi(args.get("n-max")) : 16;
    int req_max = args.has("requests-max") ? std::stoi(args.get("requests-max")) : 20;
    int threads = args.has("threads") ? std::stoi(args.get("threads")) : 1;

    struct Row {
        int n, r, k;
        std::uint64_t nodes, leaves;
        double bound, ms;
    };
    std::vector<Row> rows(count);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            std::mt19937_64 rng(seed + i);
            GenSpec spec;
            spec.seed = seed + i;
            spec.edges = n_min + (int)(rng() % (n_max - n_min + 1));
            spec.requests = 1 + (int)(rng() % req_max);
            Instance inst = generate(spec);
            auto t0 = std::chrono::steady_clock::now();
            SolveResult r = solve_min(inst);
            rows[i] = {spec.edges,
                       (int)inst.requests.size(),
                       (int)r.cut->size(),
                       r.stats.nodes,
                       r.stats.leaves,
                       std::pow(search_tree_rho(), (double)r.cut->size()),
                       ms_since(t0)};
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::cout << "n,requests,k,nodes,leaves,rho_pow_k,time_ms\n";
    for (const Row& r : rows)
        std::cout << r.n << "," << r.r << "," << r.k << "," << r.nodes << ","
                  << r.leaves << "," << r.bound << "," << r.ms << "\n";
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv)
{
    if (argc < 2) {
        std::cerr << "usage: tct <solve|reduce|gen|verify|bench> [options]\n";
        return 2;
    }
    std::string cmd = argv[1];
    Args args = parse_args(argc, argv, 2);
    try {
        if (cmd == "solve") return cmd_solve(args);
        if (cmd == "reduce") return cmd_reduce(args);
        if (cmd == "gen") return cmd_gen(args);
        if (cmd == "verify") return cmd_verify(args);
        if (cmd == "bench") return cmd_bench(args);
        std::cerr << "unknown subcommand '" << cmd << "'\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BuildError& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace tct
