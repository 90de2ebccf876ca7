#include "turan/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/exactmath.hpp"
#include "turan/family.hpp"
#include "turan/io.hpp"
#include "turan/isomorphism.hpp"
#include "turan/solver.hpp"
#include "turan/subsets.hpp"

namespace turan {

namespace {

using nlohmann::json;

// line-oriented "key: value" report with a trailing machine-readable block
struct Report {
    std::vector<std::pair<std::string, std::string>> lines;
    json machine = json::object();

    void add(const std::string& key, const std::string& value) { lines.emplace_back(key, value); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }

    void add_rational(const std::string& key, const Rational& q) {
        add(key, rational_repr(q));
        Rational c = q;
        c.canonicalize();
        machine["values"][key] = c.get_num().get_str() + "/" + c.get_den().get_str();
    }

    void print(std::ostream& out) const {
        for (const auto& [k, v] : lines) out << k << ": " << v << "\n";
        out << "machine: " << machine.dump() << "\n";
    }
};

Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(BigInt(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        int frac = static_cast<int>(s.size() - dot - 1);
        BigInt den = 1;
        for (int i = 0; i < frac; ++i) den *= 10;
        Rational q(BigInt(digits), den);
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: " + s);
    }
}

std::string join_args(const std::vector<std::string>& args) {
    std::string out = "turan";
    for (const auto& a : args) out += " " + a;
    return out;
}

ForbiddenFamily load_family(int k, const std::vector<std::string>& specs) {
    std::string fam_name;
    ForbiddenFamily fam(k);
    for (const auto& spec : specs) {
        fam.add(graph_from_name_or_file(spec));
        fam_name += (fam_name.empty() ? "" : ",") + spec;
    }
    fam.name = fam_name;
    return fam;
}

int default_workers() {
    if (const char* env = std::getenv("TURAN_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

std::string ratio_repr(const BigInt& num, const BigInt& den) {
    Rational q{Rational(num) / Rational(den)};
    q.canonicalize();
    return rational_repr(q);
}

void add_graph_stats(Report& rep, const Hypergraph& h) {
    rep.add("uniformity", h.k);
    rep.add("vertices", h.n);
    rep.add("edges", static_cast<long long>(h.edge_count()));
    rep.machine["values"]["edges"] = h.edge_count();
    rep.add("edge ratio e/C(n,k) (finite ratio)",
            ratio_repr(BigInt(static_cast<long>(h.edge_count())), binom_big(h.n, h.k)));
}

void emit_artifact(Report& rep, const Hypergraph& h, const std::string& path) {
    write_hypergraph_file(h, path);
    rep.add("artifact", path);
    rep.add("digest " + path, file_digest(path));
    rep.machine["artifacts"].push_back(path);
}

void note_input_digest(Report& rep, const std::string& spec) {
    if (!is_named_graph(spec)) rep.add("digest " + spec, file_digest(spec));
}

std::string edge_list_inline(const Hypergraph& h) {
    std::string out = "{";
    bool first_edge = true;
    for (const VertexSet& e : h.edges) {
        if (!first_edge) out += ", ";
        bool first = true;
        for (int v : e.elements()) {
            if (!first) out += ' ';
            out += std::to_string(v);
            first = false;
        }
        first_edge = false;
    }
    return out + "}";
}

struct CommandContext {
    std::vector<std::string> args;
    std::ostream& out;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    Report start() const {
        Report rep;
        rep.add("tool", tool_version);
        rep.add("command", join_args(args));
        rep.machine["tool"] = tool_version;
        rep.machine["command"] = join_args(args);
        return rep;
    }

    void finish(Report& rep) const {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", secs);
        rep.add("wall_seconds", buf);
        rep.print(out);
    }
};

// ---------------------------------------------------------------- construct

int cmd_construct_b(CommandContext& ctx, int p, int t, int k, int l, const std::string& out_path) {
    Report rep = ctx.start();
    Hypergraph h = build_B(p, t, k, l);
    rep.add("variant", "B");
    rep.machine["values"]["variant"] = "B";
    rep.machine["values"]["parameters"] = {{"p", p}, {"t", t}, {"k", k}, {"l", l}};
    add_graph_stats(rep, h);
    emit_artifact(rep, h, out_path);
    json meta = {{"variant", "B"},
                 {"parameters", {{"p", p}, {"t", t}, {"k", k}, {"l", l}}},
                 {"digest", file_digest(out_path)}};
    std::ofstream ms(out_path + ".meta.json");
    ms << meta.dump(2) << "\n";
    ctx.finish(rep);
    return exit_ok;
}

int cmd_construct_layered(CommandContext& ctx, int k, int l, int a, int b, int t, int p,
                          const std::string& out_path) {
    Report rep = ctx.start();
    Hypergraph h = build_layered(k, l, a, b, t, p);
    rep.add("variant", "Layered");
    rep.machine["values"]["variant"] = "Layered";
    rep.machine["values"]["parameters"] =
        {{"k", k}, {"l", l}, {"a", a}, {"b", b}, {"t", t}, {"p", p}};
    add_graph_stats(rep, h);
    emit_artifact(rep, h, out_path);
    json meta = {{"variant", "Layered"},
                 {"parameters", {{"k", k}, {"l", l}, {"a", a}, {"b", b}, {"t", t}, {"p", p}}},
                 {"digest", file_digest(out_path)}};
    std::ofstream ms(out_path + ".meta.json");
    ms << meta.dump(2) << "\n";
    ctx.finish(rep);
    return exit_ok;
}

BinaryMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    BinaryMatrix m;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (!row.empty()) m.push_back(row);
    }
    return m;
}

int cmd_construct_giraud(CommandContext& ctx, int order, const std::string& matrix_file,
                         const std::string& out_path) {
    Report rep = ctx.start();
    BinaryMatrix m;
    json params;
    if (!matrix_file.empty()) {
        m = read_matrix_file(matrix_file);
        params = {{"matrix_file", matrix_file}};
    } else {
        m = sylvester_hadamard(order);
        params = {{"hadamard_order", order}};
    }
    Hypergraph h = build_giraud(m);
    rep.add("variant", "Giraud");
    rep.machine["values"]["variant"] = "Giraud";
    rep.machine["values"]["parameters"] = params;
    add_graph_stats(rep, h);
    emit_artifact(rep, h, out_path);
    json meta = {{"variant", "Giraud"}, {"parameters", params}, {"digest", file_digest(out_path)}};
    std::ofstream ms(out_path + ".meta.json");
    ms << meta.dump(2) << "\n";
    ctx.finish(rep);
    return exit_ok;
}

int cmd_construct_random_link(CommandContext& ctx, const std::string& base_spec, int n, int k,
                              int l, std::uint64_t seed, const std::string& out_path) {
    Report rep = ctx.start();
    Hypergraph base = graph_from_name_or_file(base_spec);
    note_input_digest(rep, base_spec);
    Hypergraph h = build_random_link(base, n, k, l, seed);
    rep.add("variant", "RandomLink");
    rep.add("seed", static_cast<long long>(seed));
    rep.machine["values"]["variant"] = "RandomLink";
    rep.machine["values"]["parameters"] =
        {{"base", base_spec}, {"n", n}, {"k", k}, {"l", l}, {"seed", seed}};
    add_graph_stats(rep, h);
    emit_artifact(rep, h, out_path);
    json meta = {{"variant", "RandomLink"},
                 {"parameters", {{"base", base_spec}, {"n", n}, {"k", k}, {"l", l}, {"seed", seed}}},
                 {"digest", file_digest(out_path)}};
    std::ofstream ms(out_path + ".meta.json");
    ms << meta.dump(2) << "\n";
    ctx.finish(rep);
    return exit_ok;
}

// --------------------------------------------------------------- other cmds

int cmd_stats(CommandContext& ctx, const std::string& file, int l) {
    Report rep = ctx.start();
    Hypergraph h = graph_from_name_or_file(file);
    rep.add("digest " + file, is_named_graph(file) ? "builtin" : file_digest(file));
    add_graph_stats(rep, h);
    MinDegree md = min_l_degree(h, l);
    rep.add("l", l);
    rep.add("delta_l", md.value);
    rep.machine["values"]["delta_l"] = md.value;
    std::string witness;
    for (int v : md.witness.elements()) witness += (witness.empty() ? "" : " ") + std::to_string(v);
    rep.add("argmin l-set", "{" + witness + "}");
    rep.add("delta_l ratio delta_l/C(n,k-l) (finite ratio)",
            ratio_repr(BigInt(static_cast<long>(md.value)), binom_big(h.n, h.k - l)));
    ctx.finish(rep);
    return exit_ok;
}

int cmd_check_free(CommandContext& ctx, const std::string& file,
                   const std::vector<std::string>& forbidden) {
    Report rep = ctx.start();
    Hypergraph h = graph_from_name_or_file(file);
    note_input_digest(rep, file);
    for (const auto& spec : forbidden) note_input_digest(rep, spec);
    ForbiddenFamily fam = load_family(h.k, forbidden);
    bool free = is_family_free(h, fam);
    rep.add("family", fam.name);
    rep.add("family members after deduplication", static_cast<long long>(fam.members.size()));
    rep.add("free", free ? "true" : "false");
    rep.machine["values"]["free"] = free;
    ctx.finish(rep);
    return exit_ok;
}

int cmd_count_copies(CommandContext& ctx, const std::string& file, const std::string& pattern) {
    Report rep = ctx.start();
    Hypergraph h = graph_from_name_or_file(file);
    Hypergraph f = graph_from_name_or_file(pattern);
    note_input_digest(rep, file);
    note_input_digest(rep, pattern);
    std::uint64_t copies = count_copies(h, f);
    rep.add("pattern", pattern);
    rep.add("copies", static_cast<long long>(copies));
    rep.machine["values"]["copies"] = copies;
    ctx.finish(rep);
    return exit_ok;
}

int cmd_link_family(CommandContext& ctx, const std::string& graph_spec, int l,
                    const std::string& out_prefix) {
    Report rep = ctx.start();
    Hypergraph f = graph_from_name_or_file(graph_spec);
    note_input_digest(rep, graph_spec);
    std::vector<Hypergraph> links = link_family(f, l);
    rep.add("members", static_cast<long long>(links.size()));
    rep.machine["values"]["members"] = links.size();
    for (std::size_t i = 0; i < links.size(); ++i) {
        rep.add("member " + std::to_string(i),
                describe(links[i]) + " " + edge_list_inline(links[i]));
        if (!out_prefix.empty())
            emit_artifact(rep, links[i], out_prefix + "_" + std::to_string(i) + ".hg");
    }
    ctx.finish(rep);
    return exit_ok;
}

int cmd_solve(CommandContext& ctx, int n, int k, int l, const std::vector<std::string>& forbidden,
              const std::string& mode, const SolverConfig& cfg, const std::string& witness_out) {
    Report rep = ctx.start();
    for (const auto& spec : forbidden) note_input_digest(rep, spec);
    SearchProblem prob(n, k, l, load_family(k, forbidden));
    rep.add("problem", "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                           " l=" + std::to_string(l) + " forbidden=" + prob.family.name);
    rep.add("seed", static_cast<long long>(cfg.seed));

    SearchResult res;
    if (mode == "oracle") {
        res = oracle_ex(prob);
    } else if (mode == "exact") {
        res = exact_ex(prob, cfg);
    } else if (mode == "heuristic") {
        res = heuristic_lower_bound(prob, cfg);
    } else if (mode.rfind("decision:", 0) == 0) {
        long long d = std::stoll(mode.substr(9));
        res = exists_with_min_degree(prob, d, cfg);
    } else {
        throw CLI::ValidationError("--mode", "expected oracle|exact|decision:<d>|heuristic");
    }

    rep.add("status", to_string(res.status));
    rep.machine["values"]["status"] = to_string(res.status);
    if (res.exact()) {
        rep.add("value", res.value_lo);
        rep.machine["values"]["value"] = res.value_lo;
    } else {
        rep.add("value interval",
                "[" + std::to_string(res.value_lo) + ", " + std::to_string(res.value_hi) + "]");
        rep.machine["values"]["value_lo"] = res.value_lo;
        rep.machine["values"]["value_hi"] = res.value_hi;
    }
    rep.add("nodes", res.nodes);
    if (res.witness) {
        rep.add("witness delta_l", min_l_degree(*res.witness, l).value);
        rep.add("witness ratio delta_l/C(n,k-l) (finite ratio)",
                ratio_repr(BigInt(static_cast<long>(min_l_degree(*res.witness, l).value)),
                           binom_big(n, k - l)));
        if (!witness_out.empty()) emit_artifact(rep, *res.witness, witness_out);
    }
    ctx.finish(rep);
    return res.status == SearchStatus::budget_exhausted ? exit_budget : exit_ok;
}

int cmd_params(CommandContext& ctx, int k, int l, const std::string& delta_s,
               const std::string& q_s) {
    Report rep = ctx.start();
    Rational delta = parse_rational(delta_s);
    JumpParams p = q_s.empty() ? jump_parameters(k, l, delta)
                               : layered_parameters(k, l, delta, parse_rational(q_s));
    rep.add("k", k);
    rep.add("l", l);
    rep.add_rational("delta", p.delta);
    rep.add_rational("epsilon0^(k-l)", p.epsilon0_pow);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", p.epsilon0);
    rep.add("epsilon0 (approx)", buf);
    rep.add("t", p.t);
    rep.machine["values"]["t"] = p.t;
    rep.add("M0", p.m0);
    rep.machine["values"]["M0"] = p.m0;
    if (p.has_layered) {
        rep.add_rational("q", p.q);
        rep.add("a", p.a);
        rep.add("b", p.b);
        rep.machine["values"]["a"] = p.a;
        rep.machine["values"]["b"] = p.b;
        rep.add_rational("epsilon", p.epsilon);
        rep.add("M", p.m_big.get_str());
        rep.machine["values"]["M"] = p.m_big.get_str();
        rep.add("N0", p.n0_bound);
    }
    ctx.finish(rep);
    return exit_ok;
}

int cmd_count_good_subsets(CommandContext& ctx, const std::string& file, int l, int m,
                           const std::string& alpha_s, bool exact, long samples,
                           std::uint64_t seed, long budget) {
    Report rep = ctx.start();
    Hypergraph h = graph_from_name_or_file(file);
    Rational alpha = parse_rational(alpha_s);
    GoodSubsetCount res = count_good_subsets(h, l, m, alpha, exact, budget, samples, seed);
    rep.add("l", l);
    rep.add("m", m);
    rep.add_rational("alpha", alpha);
    rep.add("total m-sets C(n,m)", res.total.get_str());
    if (res.exact) {
        rep.add("mode", "exact");
        rep.add("good m-sets", res.count.get_str());
        rep.machine["values"]["count"] = res.count.get_str();
    } else {
        rep.add("mode", "sampling");
        rep.add("samples", res.samples);
        rep.add("seed", static_cast<long long>(seed));
        rep.add("hits", res.hits);
        rep.add_rational("estimated good m-sets", res.estimate);
        rep.add_rational("ci95 low", res.ci_low);
        rep.add_rational("ci95 high", res.ci_high);
        rep.add("confidence", "0.95 (Wilson)");
    }
    ctx.finish(rep);
    return exit_ok;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandContext ctx{args, out};

    CLI::App app{"minimum l-degree Turan toolkit"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "generate a named construction");
    construct->require_subcommand(1);
    int p = 1, t = 3, k = 3, l = 2, a = 1, b = 5, order = 4, n = 10;
    std::uint64_t seed = 1;
    std::string out_path = "out.hg", matrix_file, base_spec;

    auto* cb = construct->add_subcommand("b", "t parts of size p");
    cb->add_option("--p", p)->required();
    cb->add_option("--t", t)->required();
    cb->add_option("--k", k)->required();
    cb->add_option("--l", l)->required();
    cb->add_option("--out", out_path)->required();

    auto* cl = construct->add_subcommand("layered", "b blocks carrying copies of B(p,t,k,l)");
    cl->add_option("--k", k)->required();
    cl->add_option("--l", l)->required();
    cl->add_option("--a", a)->required();
    cl->add_option("--b", b)->required();
    cl->add_option("--t", t)->required();
    cl->add_option("--p", p)->required();
    cl->add_option("--out", out_path)->required();

    auto* cg = construct->add_subcommand("giraud", "4-graph over matrix rows and columns");
    cg->add_option("--hadamard-order", order);
    cg->add_option("--matrix-file", matrix_file);
    cg->add_option("--out", out_path)->required();

    auto* cr = construct->add_subcommand("random-link", "seeded link-coloring construction");
    cr->add_option("--base", base_spec)->required();
    cr->add_option("--n", n)->required();
    cr->add_option("--k", k)->required();
    cr->add_option("--l", l)->required();
    cr->add_option("--seed", seed)->required();
    cr->add_option("--out", out_path)->required();

    // stats
    auto* stats = app.add_subcommand("stats", "degree statistics of a hypergraph");
    std::string file;
    int stat_l = 1;
    stats->add_option("--file", file)->required();
    stats->add_option("--l", stat_l)->required();

    // check-free
    auto* check = app.add_subcommand("check-free", "forbidden-family freeness");
    std::vector<std::string> forbidden;
    check->add_option("--file", file)->required();
    check->add_option("--forbidden", forbidden)->required();

    // count-copies
    auto* copies = app.add_subcommand("count-copies", "unlabeled copies of a pattern");
    std::string pattern;
    copies->add_option("--file", file)->required();
    copies->add_option("--pattern", pattern)->required();

    // link-family
    auto* linkfam = app.add_subcommand("link-family", "canonical links of all l-sets");
    std::string out_prefix;
    linkfam->add_option("--graph", file)->required();
    linkfam->add_option("--l", stat_l)->required();
    linkfam->add_option("--out-prefix", out_prefix);

    // solve
    auto* solve = app.add_subcommand("solve", "l-degree Turan number search");
    std::string mode = "exact", witness_out;
    SolverConfig cfg;
    cfg.parallel_workers = default_workers();
    bool no_symmetry = false;
    solve->add_option("--n", n)->required();
    solve->add_option("--k", k)->required();
    solve->add_option("--l", l)->required();
    solve->add_option("--forbidden", forbidden)->required();
    solve->add_option("--mode", mode);
    solve->add_option("--time-budget", cfg.time_budget);
    solve->add_option("--nodes", cfg.node_budget);
    solve->add_option("--workers", cfg.parallel_workers);
    solve->add_option("--seed", cfg.seed);
    solve->add_option("--restarts", cfg.restarts);
    solve->add_flag("--no-symmetry", no_symmetry);
    solve->add_option("--witness-out", witness_out);

    // params
    auto* params = app.add_subcommand("params", "derived jump constants");
    std::string delta_s, q_s;
    params->add_option("--k", k)->required();
    params->add_option("--l", l)->required();
    params->add_option("--delta", delta_s)->required();
    params->add_option("--q", q_s);

    // count
    auto* count = app.add_subcommand("count", "counting operations");
    count->require_subcommand(1);
    auto* good = count->add_subcommand("good-subsets", "m-sets with large induced min degree");
    std::string alpha_s;
    int good_m = 5;
    bool exact_mode = false;
    long samples = 10000, budget = 2'000'000;
    good->add_option("--file", file)->required();
    good->add_option("--l", stat_l)->required();
    good->add_option("--m", good_m)->required();
    good->add_option("--alpha", alpha_s)->required();
    good->add_flag("--exact", exact_mode);
    good->add_option("--samples", samples);
    good->add_option("--seed", seed);
    good->add_option("--budget", budget);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (cb->parsed()) return cmd_construct_b(ctx, p, t, k, l, out_path);
        if (cl->parsed()) return cmd_construct_layered(ctx, k, l, a, b, t, p, out_path);
        if (cg->parsed()) return cmd_construct_giraud(ctx, order, matrix_file, out_path);
        if (cr->parsed()) return cmd_construct_random_link(ctx, base_spec, n, k, l, seed, out_path);
        if (stats->parsed()) return cmd_stats(ctx, file, stat_l);
        if (check->parsed()) return cmd_check_free(ctx, file, forbidden);
        if (copies->parsed()) return cmd_count_copies(ctx, file, pattern);
        if (linkfam->parsed()) return cmd_link_family(ctx, file, stat_l, out_prefix);
        if (solve->parsed()) {
            cfg.symmetry_breaking = !no_symmetry;
            return cmd_solve(ctx, n, k, l, forbidden, mode, cfg, witness_out);
        }
        if (params->parsed()) return cmd_params(ctx, k, l, delta_s, q_s);
        if (good->parsed())
            return cmd_count_good_subsets(ctx, file, stat_l, good_m, alpha_s, exact_mode, samples,
                                          seed, budget);
        err << "no subcommand\n";
        return exit_usage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const unsupported_size& e) {
        err << "error: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const resource_limit& e) {
        err << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_data;
    }
}

} // namespace turan
