#include "acr/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace acr {

FeaturedGraph::FeaturedGraph(Mode mode, int n, int d,
                             std::vector<std::pair<int, int>> edges,
                             std::vector<FeatureVector> features)
    : mode_(mode), n_(n), d_(d) {
    if (n < 1) throw GraphError("graph needs a non-empty vertex set");
    if (d < 0) throw GraphError("negative feature dimension");

    if (features.empty()) features.assign(n, FeatureVector(d, 0));
    if ((int)features.size() != n) throw GraphError("feature map must cover every vertex");
    for (auto& f : features) {
        if ((int)f.size() != d) throw GraphError("feature vector length != d");
        for (auto b : f)
            if (b > 1) throw GraphError("feature bits must be 0/1");
    }
    feat_ = std::move(features);

    std::set<std::pair<int, int>> es;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw GraphError("edge endpoint out of range");
        es.insert({u, v});
        if (mode_ == Mode::Undirected) es.insert({v, u});
    }
    out_.assign(n, {});
    in_.assign(n, {});
    for (auto [u, v] : es) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    // insertion order from the set is already sorted
}

bool FeaturedGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

long long FeaturedGraph::edge_count() const {
    long long ordered = 0;
    for (auto& o : out_) ordered += (long long)o.size();
    if (mode_ == Mode::Directed) return ordered;
    long long loops = 0;
    for (int v = 0; v < n_; ++v)
        if (has_edge(v, v)) ++loops;
    return (ordered - loops) / 2 + loops;
}

std::vector<std::pair<int, int>> FeaturedGraph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u])
            if (mode_ == Mode::Directed || u <= v) es.push_back({u, v});
    return es;
}

std::vector<std::pair<int, int>> FeaturedGraph::directed_edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) es.push_back({u, v});
    return es;
}

bool FeaturedGraph::operator==(const FeaturedGraph& o) const {
    return mode_ == o.mode_ && n_ == o.n_ && d_ == o.d_ && feat_ == o.feat_ && out_ == o.out_;
}

FeaturedGraph with_edges(const FeaturedGraph& g, std::vector<std::pair<int, int>> edges) {
    return FeaturedGraph(g.mode(), g.n(), g.d(), std::move(edges), g.features());
}

std::pair<std::vector<int>, std::vector<int>> neighbourhoods(const FeaturedGraph& g, int v) {
    g.check_vertex(v);
    return {g.out_neighbours(v), g.in_neighbours(v)};
}

namespace {

struct Line {
    int no;
    std::vector<std::string> tok;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line l{no, {}};
        std::string t;
        while (ls >> t) l.tok.push_back(t);
        if (!l.tok.empty()) lines.push_back(std::move(l));
    }
    return lines;
}

[[noreturn]] void fail(const Line& l, const std::string& msg) {
    throw GraphError("fgr line " + std::to_string(l.no) + ": " + msg);
}

int parse_int(const Line& l, const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) fail(l, "bad integer '" + s + "'");
        return v;
    } catch (const GraphError&) {
        throw;
    } catch (...) {
        fail(l, "bad integer '" + s + "'");
    }
}

}  // namespace

FeaturedGraph read_graph(const std::string& text) {
    auto lines = tokenize(text);
    size_t i = 0;
    auto need = [&](const char* what) -> const Line& {
        if (i >= lines.size()) throw GraphError(std::string("fgr: missing ") + what);
        return lines[i];
    };

    const Line& hdr = need("header");
    if (hdr.tok.size() != 2 || hdr.tok[0] != "fgr" || hdr.tok[1] != "1")
        fail(hdr, "expected 'fgr 1' header");
    ++i;

    const Line& ml = need("mode line");
    if (ml.tok.size() != 2 || ml.tok[0] != "mode" ||
        (ml.tok[1] != "directed" && ml.tok[1] != "undirected"))
        fail(ml, "expected 'mode directed|undirected'");
    Mode mode = ml.tok[1] == "directed" ? Mode::Directed : Mode::Undirected;
    ++i;

    const Line& nl = need("n line");
    if (nl.tok.size() != 2 || nl.tok[0] != "n") fail(nl, "expected 'n <int>'");
    int n = parse_int(nl, nl.tok[1]);
    if (n < 1) fail(nl, "n must be >= 1");
    ++i;

    const Line& dl = need("d line");
    if (dl.tok.size() != 2 || dl.tok[0] != "d") fail(dl, "expected 'd <int>'");
    int d = parse_int(dl, dl.tok[1]);
    if (d < 0) fail(dl, "d must be >= 0");
    ++i;

    std::vector<FeatureVector> feats(n, FeatureVector(d, 0));
    std::vector<bool> seen(n, false);
    if (d > 0) {
        for (int k = 0; k < n; ++k) {
            const Line& fl = need("feature line");
            if (fl.tok.size() != 3 || fl.tok[0] != "f") fail(fl, "expected 'f <vertex> <bits>'");
            int v = parse_int(fl, fl.tok[1]);
            if (v < 0 || v >= n) fail(fl, "feature vertex out of range");
            if (seen[v]) fail(fl, "duplicate feature line for vertex " + std::to_string(v));
            seen[v] = true;
            const std::string& bits = fl.tok[2];
            if ((int)bits.size() != d) fail(fl, "feature bitstring length != d");
            for (int b = 0; b < d; ++b) {
                if (bits[b] != '0' && bits[b] != '1') fail(fl, "feature bits must be 0/1");
                feats[v][b] = bits[b] == '1';
            }
            ++i;
        }
    }

    std::set<std::pair<int, int>> es;
    std::vector<std::pair<int, int>> edges;
    for (; i < lines.size(); ++i) {
        const Line& el = lines[i];
        if (el.tok.size() != 3 || el.tok[0] != "e") fail(el, "expected 'e <u> <v>'");
        int u = parse_int(el, el.tok[1]);
        int v = parse_int(el, el.tok[2]);
        if (u < 0 || u >= n || v < 0 || v >= n) fail(el, "edge endpoint out of range");
        if (mode == Mode::Undirected && u > v)
            fail(el, "undirected edges must be written with u <= v");
        if (!es.insert({u, v}).second) fail(el, "duplicate edge");
        edges.push_back({u, v});
    }

    return FeaturedGraph(mode, n, d, std::move(edges), std::move(feats));
}

std::string write_graph(const FeaturedGraph& g) {
    std::ostringstream out;
    out << "fgr 1\n";
    out << "mode " << (g.directed() ? "directed" : "undirected") << "\n";
    out << "n " << g.n() << "\n";
    out << "d " << g.d() << "\n";
    if (g.d() > 0) {
        for (int v = 0; v < g.n(); ++v) {
            out << "f " << v << " ";
            for (auto b : g.feature(v)) out << (b ? '1' : '0');
            out << "\n";
        }
    }
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

FeaturedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_graph(ss.str());
}

void save_graph_file(const FeaturedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot write graph file: " + path);
    out << write_graph(g);
}

}  // namespace acr
