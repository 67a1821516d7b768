#include "acr/compiler.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace acr {

namespace {

void collect(const Formula& f, SubformulaTable& t, std::map<std::string, int>& by_print) {
    if (t.index.count(f.get())) return;
    if (f->left) collect(f->left, t, by_print);
    if (f->right) collect(f->right, t, by_print);
    std::string key = print_formula(f);
    auto it = by_print.find(key);
    if (it != by_print.end()) {
        t.index[f.get()] = it->second;  // structural duplicate, reuse the dimension
        return;
    }
    int dim = (int)t.formulas.size();
    t.formulas.push_back(f);
    t.index[f.get()] = dim;
    by_print[key] = dim;
}

}  // namespace

SubformulaTable enumerate_subformulas(const Formula& root) {
    SubformulaTable t;
    std::map<std::string, int> by_print;
    collect(root, t, by_print);

    t.settle_layer.resize(t.formulas.size());
    for (size_t i = 0; i < t.formulas.size(); ++i) {
        const Formula& f = t.formulas[i];
        switch (f->kind) {
            case GmlFormula::Kind::Top:
            case GmlFormula::Kind::Prop: t.settle_layer[i] = 1; break;
            case GmlFormula::Kind::Not:
            case GmlFormula::Kind::Diamond:
            case GmlFormula::Kind::GlobalExists:
                t.settle_layer[i] = 1 + t.settle_layer[t.dim(f->left)];
                break;
            case GmlFormula::Kind::And:
                t.settle_layer[i] =
                    1 + std::max(t.settle_layer[t.dim(f->left)], t.settle_layer[t.dim(f->right)]);
                break;
        }
    }
    return t;
}

AcrGnn compile(const Formula& f, int d) {
    if (d < 0) throw std::invalid_argument("compile: negative dimension");
    SubformulaTable table = enumerate_subformulas(f);
    FormulaStats st = stats(f);
    for (const Formula& sub : table.formulas)
        if (sub->kind == GmlFormula::Kind::Prop && sub->arg > d)
            throw std::invalid_argument("compile: proposition p" + std::to_string(sub->arg) +
                                        " exceeds dimension " + std::to_string(d));

    int m = table.size();
    int num_layers = *std::max_element(table.settle_layer.begin(), table.settle_layer.end());
    AggregationSpec agg = AggregationSpec::bounded_sum(std::max(1, st.max_grading));

    AcrGnn net;
    net.input_dim = d;
    for (int layer = 1; layer <= num_layers; ++layer) {
        int in_dim = layer == 1 ? d : m;
        CombineSpec cs;
        cs.act = Activation::Clamp01;
        cs.A.assign(in_dim, Vec(m, Rat(0)));
        cs.C.assign(in_dim, Vec(m, Rat(0)));
        cs.R.assign(in_dim, Vec(m, Rat(0)));
        cs.b.assign(m, Rat(0));

        for (int i = 0; i < m; ++i) {
            const Formula& sub = table.formulas[i];
            int settle = table.settle_layer[i];
            if (settle < layer) {
                cs.A[i][i] = 1;  // value settled earlier, carry it
                continue;
            }
            if (settle > layer) continue;  // stays 0 until its inputs exist
            switch (sub->kind) {
                case GmlFormula::Kind::Top: cs.b[i] = 1; break;
                case GmlFormula::Kind::Prop:
                    cs.A[sub->arg - 1][i] = 1;  // layer 1 input is the feature vector
                    break;
                case GmlFormula::Kind::Not:
                    cs.b[i] = 1;
                    cs.A[table.dim(sub->left)][i] = -1;
                    break;
                case GmlFormula::Kind::And:
                    cs.A[table.dim(sub->left)][i] += 1;
                    cs.A[table.dim(sub->right)][i] += 1;
                    cs.b[i] = -1;
                    break;
                case GmlFormula::Kind::Diamond:
                    cs.C[table.dim(sub->left)][i] = 1;
                    cs.b[i] = -(sub->arg - 1);
                    break;
                case GmlFormula::Kind::GlobalExists:
                    cs.R[table.dim(sub->left)][i] = 1;
                    cs.b[i] = -(sub->arg - 1);
                    break;
            }
        }
        net.layers.push_back(Layer{std::move(cs), agg, AggregationSpec::sum_all()});
    }

    net.cls.w.assign(m, Rat(0));
    net.cls.w[table.dim(f)] = 1;
    net.cls.threshold = 1;
    net.cls.dir = Classifier::Dir::GE;
    net.validate();
    return net;
}

AcrGnn compile(const Formula& f) {
    int d = 0;
    SubformulaTable table = enumerate_subformulas(f);
    for (const Formula& sub : table.formulas)
        if (sub->kind == GmlFormula::Kind::Prop) d = std::max(d, sub->arg);
    return compile(f, d);
}

}  // namespace acr
