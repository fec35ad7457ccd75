#include "dynchrome/dimacs.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dynchrome/errors.hpp"

namespace dynchrome {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_dimacs(const std::string& text, std::ostream* warnings) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long n = 0, claimed_m = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) fail(line_no, "second problem line");
            std::string format;
            if (!(ls >> format >> n >> claimed_m)) fail(line_no, "malformed problem line");
            if (format != "edge") fail(line_no, "unsupported format '" + format + "'");
            if (n < 0 || n > 1'000'000) fail(line_no, "vertex count out of range");
            std::string extra;
            if (ls >> extra) fail(line_no, "trailing tokens on problem line");
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) fail(line_no, "edge before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) fail(line_no, "malformed edge line");
            std::string extra;
            if (ls >> extra) fail(line_no, "trailing tokens on edge line");
            if (u < 1 || u > n || v < 1 || v > n) fail(line_no, "vertex out of range");
            if (u == v) fail(line_no, "self-loop");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        fail(line_no, "unrecognized line tag '" + tag + "'");
    }
    if (!have_header) throw InputError("missing problem line");

    Graph g = Graph::from_edges(static_cast<int>(n), edges);
    if (warnings && g.edge_count() != claimed_m)
        *warnings << "warning: header claims " << claimed_m << " edges, graph has "
                  << g.edge_count() << "\n";
    return g;
}

std::string emit_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

Graph read_graph_file(const std::string& path, std::ostream* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dimacs(buf.str(), warnings);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

}  // namespace dynchrome
