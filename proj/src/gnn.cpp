#include "acr/gnn.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace acr {

AggregationSpec AggregationSpec::bounded_sum(int c) {
    if (c < 1) throw std::invalid_argument("bounded sum needs c >= 1");
    return {Kind::BoundedSum, c};
}

int AcrGnn::output_dim() const {
    return layers.empty() ? input_dim : (int)layers.back().comb.b.size();
}

namespace {

int mat_out_dim(const Mat& m, int in_dim, const char* name) {
    if ((int)m.size() != in_dim)
        throw std::invalid_argument(std::string("matrix ") + name + " has wrong input dim");
    if (in_dim == 0) return -1;  // width unconstrained, bias decides
    size_t w = m[0].size();
    for (auto& row : m)
        if (row.size() != w)
            throw std::invalid_argument(std::string("matrix ") + name + " is ragged");
    return (int)w;
}

}  // namespace

void AcrGnn::validate() const {
    if (layers.empty()) throw std::invalid_argument("a network needs at least one layer");
    int dim = input_dim;
    for (size_t i = 0; i < layers.size(); ++i) {
        const CombineSpec& cs = layers[i].comb;
        int out = (int)cs.b.size();
        for (auto [m, name] : {std::pair{&cs.A, "A"}, {&cs.C, "C"}, {&cs.R, "R"}}) {
            int w = mat_out_dim(*m, dim, name);
            if (w >= 0 && w != out)
                throw std::invalid_argument("layer " + std::to_string(i) +
                                            ": matrix width != bias length");
        }
        dim = out;
    }
    if ((int)cls.w.size() != dim)
        throw std::invalid_argument("classifier dimension != final layer dimension");
}

namespace {

void add_scaled_row(Vec& acc, const Mat& m, int row, const Rat& x) {
    if (sgn(x) == 0) return;
    const auto& r = m[row];
    for (size_t j = 0; j < acc.size(); ++j)
        if (sgn(r[j]) != 0) acc[j] += x * r[j];
}

Vec combine(const CombineSpec& cs, const Vec& x1, const Vec& x2, const Vec& x3) {
    Vec y = cs.b;
    for (size_t i = 0; i < x1.size(); ++i) add_scaled_row(y, cs.A, (int)i, x1[i]);
    for (size_t i = 0; i < x2.size(); ++i) add_scaled_row(y, cs.C, (int)i, x2[i]);
    for (size_t i = 0; i < x3.size(); ++i) add_scaled_row(y, cs.R, (int)i, x3[i]);
    switch (cs.act) {
        case Activation::ReLU:
            for (auto& v : y)
                if (sgn(v) < 0) v = 0;
            break;
        case Activation::Clamp01:
            for (auto& v : y) {
                if (sgn(v) < 0) v = 0;
                else if (v > 1) v = 1;
            }
            break;
        case Activation::Identity: break;
    }
    return y;
}

}  // namespace

Vec apply_aggregation(const AggregationSpec& spec, const std::vector<const Vec*>& items,
                      int dim) {
    Vec out(dim, Rat(0));
    switch (spec.kind) {
        case AggregationSpec::Kind::ConstantZero: break;
        case AggregationSpec::Kind::SumAll:
            for (const Vec* v : items)
                for (int j = 0; j < dim; ++j)
                    if (sgn((*v)[j]) != 0) out[j] += (*v)[j];
            break;
        case AggregationSpec::Kind::BoundedSum: {
            std::map<Vec, long long> groups;
            for (const Vec* v : items) ++groups[*v];
            for (auto& [vec, mult] : groups) {
                long long m = std::min(mult, (long long)spec.c);
                for (int j = 0; j < dim; ++j)
                    if (sgn(vec[j]) != 0) out[j] += Rat((long)m) * vec[j];
            }
            break;
        }
    }
    return out;
}

Vec apply_aggregation(const AggregationSpec& spec, const Multiset<Vec>& m, int dim) {
    std::vector<const Vec*> items;
    std::vector<Vec> storage;
    storage.reserve(m.entries().size() * 2);
    for (auto& [v, mult] : m.entries())
        for (long long i = 0; i < mult; ++i) storage.push_back(v);
    for (auto& v : storage) items.push_back(&v);
    return apply_aggregation(spec, items, dim);
}

namespace {

bool all_zero(const Mat& m) {
    for (auto& row : m)
        for (auto& cell : row)
            if (sgn(cell) != 0) return false;
    return true;
}

}  // namespace

EmbeddingTrace run_trace(const AcrGnn& net, const FeaturedGraph& g) {
    net.validate();
    if (g.d() != net.input_dim)
        throw GraphError("graph feature dimension != network input dimension");
    int n = g.n();

    EmbeddingTrace trace;
    trace.layer.resize(net.layers.size() + 1);
    trace.layer[0].resize(n);
    for (int v = 0; v < n; ++v) {
        Vec f(net.input_dim);
        for (int j = 0; j < net.input_dim; ++j) f[j] = Rat((int)g.feature(v)[j]);
        trace.layer[0][v] = std::move(f);
    }

    for (size_t i = 0; i < net.layers.size(); ++i) {
        const Layer& layer = net.layers[i];
        const std::vector<Vec>& prev = trace.layer[i];
        int in_dim = i == 0 ? net.input_dim : (int)net.layers[i - 1].comb.b.size();
        // layers that ignore the aggregate or readout skip its computation
        bool need_agg = !all_zero(layer.comb.C);
        bool need_read = !all_zero(layer.comb.R);

        Vec readout(in_dim, Rat(0));
        if (need_read) {
            std::vector<const Vec*> everyone;
            everyone.reserve(n);
            for (int v = 0; v < n; ++v) everyone.push_back(&prev[v]);
            readout = apply_aggregation(layer.read, everyone, in_dim);
        }

        std::vector<Vec>& next = trace.layer[i + 1];
        next.resize(n);
        Vec zero_agg(in_dim, Rat(0));
        for (int v = 0; v < n; ++v) {
            if (need_agg) {
                std::vector<const Vec*> nbrs;
                nbrs.reserve(g.out_neighbours(v).size());
                for (int u : g.out_neighbours(v)) nbrs.push_back(&prev[u]);
                Vec agg = apply_aggregation(layer.agg, nbrs, in_dim);
                next[v] = combine(layer.comb, prev[v], agg, readout);
            } else {
                next[v] = combine(layer.comb, prev[v], zero_agg, readout);
            }
        }
    }
    return trace;
}

bool classify(const Classifier& cls, const Vec& embedding) {
    if (cls.w.size() != embedding.size())
        throw std::invalid_argument("classifier dimension mismatch");
    Rat dot(0);
    for (size_t j = 0; j < cls.w.size(); ++j)
        if (sgn(cls.w[j]) != 0) dot += cls.w[j] * embedding[j];
    return cls.dir == Classifier::Dir::GE ? dot >= cls.threshold : dot <= cls.threshold;
}

int run(const AcrGnn& net, const FeaturedGraph& g, int v) {
    g.check_vertex(v);
    EmbeddingTrace trace = run_trace(net, g);
    return classify(net.cls, trace.layer.back()[v]) ? 1 : 0;
}

std::vector<int> run_all(const AcrGnn& net, const FeaturedGraph& g) {
    EmbeddingTrace trace = run_trace(net, g);
    std::vector<int> out(g.n());
    for (int v = 0; v < g.n(); ++v) out[v] = classify(net.cls, trace.layer.back()[v]) ? 1 : 0;
    return out;
}

bool is_simple(const AcrGnn& net) {
    for (const Layer& l : net.layers) {
        if (l.agg.kind != AggregationSpec::Kind::SumAll) return false;
        if (l.read.kind != AggregationSpec::Kind::SumAll) return false;
        if (l.comb.act != Activation::ReLU) return false;
    }
    return true;
}

std::string trace_to_text(const EmbeddingTrace& trace) {
    std::ostringstream out;
    for (size_t i = 0; i < trace.layer.size(); ++i) {
        for (size_t v = 0; v < trace.layer[i].size(); ++v) {
            out << "v" << v << " layer " << i << ":";
            for (const Rat& q : trace.layer[i][v]) out << " " << rat_str(q);
            out << "\n";
        }
    }
    return out.str();
}

namespace {

void write_mat(std::ostream& out, const char* name, const Mat& m) {
    out << name << "\n";
    for (auto& row : m) {
        for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << rat_str(row[j]);
        out << "\n";
    }
}

const char* agg_name(const AggregationSpec& a) {
    switch (a.kind) {
        case AggregationSpec::Kind::SumAll: return "sumall";
        case AggregationSpec::Kind::BoundedSum: return "boundedsum";
        case AggregationSpec::Kind::ConstantZero: return "zero";
    }
    return "?";
}

const char* act_name(Activation a) {
    switch (a) {
        case Activation::ReLU: return "relu";
        case Activation::Clamp01: return "clamp01";
        case Activation::Identity: return "identity";
    }
    return "?";
}

}  // namespace

std::string write_network(const AcrGnn& net) {
    net.validate();
    std::ostringstream out;
    out << "acrnet 1\n";
    out << "input_dim " << net.input_dim << "\n";
    out << "layers " << net.layers.size() << "\n";
    int in_dim = net.input_dim;
    for (size_t i = 0; i < net.layers.size(); ++i) {
        const Layer& l = net.layers[i];
        int out_dim = (int)l.comb.b.size();
        out << "layer " << i << " " << in_dim << " " << out_dim << "\n";
        out << "agg " << agg_name(l.agg);
        if (l.agg.kind == AggregationSpec::Kind::BoundedSum) out << " " << l.agg.c;
        out << "\n";
        out << "read " << agg_name(l.read);
        if (l.read.kind == AggregationSpec::Kind::BoundedSum) out << " " << l.read.c;
        out << "\n";
        out << "act " << act_name(l.comb.act) << "\n";
        write_mat(out, "A", l.comb.A);
        write_mat(out, "C", l.comb.C);
        write_mat(out, "R", l.comb.R);
        out << "b\n";
        for (size_t j = 0; j < l.comb.b.size(); ++j) out << (j ? " " : "") << rat_str(l.comb.b[j]);
        out << "\n";
        in_dim = out_dim;
    }
    out << "classifier " << (net.cls.dir == Classifier::Dir::GE ? "ge" : "le") << " "
        << rat_str(net.cls.threshold) << "\n";
    for (size_t j = 0; j < net.cls.w.size(); ++j) out << (j ? " " : "") << rat_str(net.cls.w[j]);
    out << "\n";
    return out.str();
}

namespace {

struct NetReader {
    std::istringstream in;
    explicit NetReader(const std::string& text) : in(text) {}

    std::string line() {
        std::string l;
        while (std::getline(in, l)) {
            auto hash = l.find('#');
            if (hash != std::string::npos) l.erase(hash);
            bool blank = l.find_first_not_of(" \t\r") == std::string::npos;
            if (!blank) return l;
        }
        throw std::invalid_argument("acrnet: unexpected end of file");
    }

    std::vector<std::string> tokens() {
        std::istringstream ls(line());
        std::vector<std::string> t;
        std::string w;
        while (ls >> w) t.push_back(w);
        return t;
    }

    Vec rats(int count) {
        Vec v;
        auto t = tokens();
        if ((int)t.size() != count) throw std::invalid_argument("acrnet: wrong row width");
        for (auto& s : t) v.push_back(rat_parse(s));
        return v;
    }
};

AggregationSpec parse_agg(const std::vector<std::string>& t) {
    if (t.size() < 2) throw std::invalid_argument("acrnet: bad aggregation line");
    if (t[1] == "sumall") return AggregationSpec::sum_all();
    if (t[1] == "zero") return AggregationSpec::constant_zero();
    if (t[1] == "boundedsum") {
        if (t.size() != 3) throw std::invalid_argument("acrnet: boundedsum needs a bound");
        return AggregationSpec::bounded_sum(std::stoi(t[2]));
    }
    throw std::invalid_argument("acrnet: unknown aggregation " + t[1]);
}

}  // namespace

AcrGnn read_network(const std::string& text) {
    NetReader r(text);
    auto hdr = r.tokens();
    if (hdr.size() != 2 || hdr[0] != "acrnet" || hdr[1] != "1")
        throw std::invalid_argument("acrnet: bad header");

    AcrGnn net;
    auto idim = r.tokens();
    if (idim.size() != 2 || idim[0] != "input_dim")
        throw std::invalid_argument("acrnet: expected input_dim");
    net.input_dim = std::stoi(idim[1]);

    auto nl = r.tokens();
    if (nl.size() != 2 || nl[0] != "layers") throw std::invalid_argument("acrnet: expected layers");
    int num_layers = std::stoi(nl[1]);

    for (int i = 0; i < num_layers; ++i) {
        auto ll = r.tokens();
        if (ll.size() != 4 || ll[0] != "layer") throw std::invalid_argument("acrnet: expected layer");
        int in_dim = std::stoi(ll[2]), out_dim = std::stoi(ll[3]);

        Layer layer;
        layer.agg = parse_agg(r.tokens());
        auto rd = r.tokens();
        rd[0] = "agg";  // same shape
        layer.read = parse_agg(rd);
        auto act = r.tokens();
        if (act.size() != 2 || act[0] != "act") throw std::invalid_argument("acrnet: expected act");
        if (act[1] == "relu") layer.comb.act = Activation::ReLU;
        else if (act[1] == "clamp01") layer.comb.act = Activation::Clamp01;
        else if (act[1] == "identity") layer.comb.act = Activation::Identity;
        else throw std::invalid_argument("acrnet: unknown activation " + act[1]);

        for (Mat* m : {&layer.comb.A, &layer.comb.C, &layer.comb.R}) {
            auto name = r.tokens();
            if (name.size() != 1) throw std::invalid_argument("acrnet: expected matrix name");
            for (int row = 0; row < in_dim; ++row) m->push_back(r.rats(out_dim));
        }
        auto bname = r.tokens();
        if (bname.size() != 1 || bname[0] != "b") throw std::invalid_argument("acrnet: expected b");
        layer.comb.b = r.rats(out_dim);
        net.layers.push_back(std::move(layer));
    }

    auto cl = r.tokens();
    if (cl.size() != 3 || cl[0] != "classifier")
        throw std::invalid_argument("acrnet: expected classifier");
    net.cls.dir = cl[1] == "ge" ? Classifier::Dir::GE : Classifier::Dir::LE;
    net.cls.threshold = rat_parse(cl[2]);
    net.cls.w = r.rats(net.layers.empty() ? net.input_dim : (int)net.layers.back().comb.b.size());
    net.validate();
    return net;
}

AcrGnn load_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open network file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_network(ss.str());
}

void save_network_file(const AcrGnn& net, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write network file: " + path);
    out << write_network(net);
}

}  // namespace acr
