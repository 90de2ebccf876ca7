#include "turan/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <stdexcept>

#include "turan/errors.hpp"
#include "turan/subsets.hpp"

namespace turan {

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    int k = -1, n = -1;
    std::vector<std::vector<int>> lists;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<long> vals;
        long v;
        while (ls >> v) vals.push_back(v);
        if (!ls.eof()) throw parse_error(lineno, "unexpected token");
        if (vals.empty()) {
            if (k < 0) continue; // leading blank lines only
            throw parse_error(lineno, "blank line inside edge list");
        }
        if (k < 0) {
            if (vals.size() != 2) throw parse_error(lineno, "header must be \"k n\"");
            if (vals[0] < 1 || vals[0] > VertexSet::max_vertices)
                throw parse_error(lineno, "uniformity out of range");
            if (vals[1] < 0 || vals[1] > VertexSet::max_vertices)
                throw parse_error(lineno, "vertex count out of range");
            k = static_cast<int>(vals[0]);
            n = static_cast<int>(vals[1]);
            continue;
        }
        if (static_cast<int>(vals.size()) != k)
            throw parse_error(lineno, "edge must list exactly k vertices");
        std::vector<int> edge;
        for (long x : vals) {
            if (x < 0 || x >= n) throw parse_error(lineno, "vertex index out of range");
            edge.push_back(static_cast<int>(x));
        }
        VertexSet s = VertexSet::of(edge);
        if (s.size() != k) throw parse_error(lineno, "repeated vertex in edge");
        if (!seen.insert(s).second) throw parse_error(lineno, "duplicate edge");
        lists.push_back(edge);
    }
    if (k < 0) throw parse_error(lineno, "missing \"k n\" header");
    return Hypergraph::from_vertex_lists(k, n, lists);
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hypergraph(buf.str());
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.k << ' ' << h.n << '\n';
    for (const VertexSet& e : h.edges) {
        bool first = true;
        for (int v : e.elements()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

void write_hypergraph_file(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << format_hypergraph(h);
}

namespace {

Hypergraph k4_3_minus_e() {
    return Hypergraph::from_vertex_lists(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
}

} // namespace

bool is_named_graph(const std::string& name) {
    try {
        named_graph(name);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

Hypergraph named_graph(const std::string& name) {
    if (name == "K4_3_minus_e") return k4_3_minus_e();
    if (name == "P3") return Hypergraph::from_vertex_lists(2, 3, {{0, 1}, {1, 2}});
    if (name.rfind("edgeless(", 0) == 0 && name.back() == ')') {
        std::string inner = name.substr(9, name.size() - 10);
        auto comma = inner.find(',');
        if (comma != std::string::npos) {
            int n = std::stoi(inner.substr(0, comma));
            int k = std::stoi(inner.substr(comma + 1));
            if (n >= 0 && n <= VertexSet::max_vertices && k >= 1) return Hypergraph::edgeless(n, k);
        }
        throw std::invalid_argument("bad edgeless(n,k) spec: " + name);
    }
    // complete graphs K{t}_{k}, t <= 8, k <= 5
    if (name.size() >= 4 && name[0] == 'K') {
        auto us = name.find('_');
        if (us != std::string::npos) {
            try {
                int t = std::stoi(name.substr(1, us - 1));
                int k = std::stoi(name.substr(us + 1));
                if (t >= 1 && t <= 8 && k >= 1 && k <= 5 && k <= t)
                    return Hypergraph::complete(t, k);
            } catch (const std::exception&) {
            }
        }
    }
    throw std::invalid_argument("unknown graph name: " + name);
}

Hypergraph graph_from_name_or_file(const std::string& spec) {
    if (is_named_graph(spec)) return named_graph(spec);
    return read_hypergraph_file(spec);
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    char hex[32];
    std::snprintf(hex, sizeof hex, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(buf.str())));
    return hex;
}

} // namespace turan
