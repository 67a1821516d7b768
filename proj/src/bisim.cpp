#include "acr/bisim.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace acr {

namespace {

void check_family(const std::vector<const FeaturedGraph*>& graphs) {
    if (graphs.empty()) throw std::invalid_argument("no graphs given");
    for (auto* g : graphs) {
        if (g->mode() != graphs[0]->mode()) throw GraphError("mode mismatch between graphs");
        if (g->d() != graphs[0]->d()) throw GraphError("feature dimension mismatch");
    }
}

// first-occurrence-stable id assignment
template <typename Key>
std::pair<std::vector<int>, int> assign_ids(const std::vector<Key>& keys) {
    std::map<Key, int> ids;
    std::vector<int> out(keys.size());
    int next = 0;
    for (size_t i = 0; i < keys.size(); ++i) {
        auto [it, inserted] = ids.insert({keys[i], next});
        if (inserted) ++next;
        out[i] = it->second;
    }
    return {out, next};
}

}  // namespace

TypeAssignment graded_types(const std::vector<const FeaturedGraph*>& graphs, int L, int c) {
    check_family(graphs);
    if (L < 0 || c < 1) throw std::invalid_argument("graded types need L >= 0, c >= 1");

    TypeAssignment t;
    t.L = L;
    t.c = c;
    for (auto* g : graphs) {
        t.offset.push_back(t.total);
        t.total += g->n();
    }

    std::vector<FeatureVector> feats(t.total);
    for (size_t gi = 0; gi < graphs.size(); ++gi)
        for (int v = 0; v < graphs[gi]->n(); ++v) feats[t.offset[gi] + v] = graphs[gi]->feature(v);
    auto [round0, n0] = assign_ids(feats);
    t.round.push_back(std::move(round0));
    t.classes_per_round.push_back(n0);

    for (int k = 1; k <= L; ++k) {
        const std::vector<int>& prev = t.round.back();
        using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
        std::vector<Sig> sigs(t.total);
        for (size_t gi = 0; gi < graphs.size(); ++gi) {
            const FeaturedGraph& g = *graphs[gi];
            for (int v = 0; v < g.n(); ++v) {
                std::map<int, int> counts;
                for (int u : g.out_neighbours(v)) {
                    int& m = counts[prev[t.offset[gi] + u]];
                    if (m < c) ++m;
                }
                Sig s{prev[t.offset[gi] + v], {counts.begin(), counts.end()}};
                sigs[t.offset[gi] + v] = std::move(s);
            }
        }
        auto [ids, nk] = assign_ids(sigs);
        t.round.push_back(std::move(ids));
        t.classes_per_round.push_back(nk);
    }
    return t;
}

GlobalMode GlobalMode::capped(int q) {
    if (q < 1) throw std::invalid_argument("capped global mode needs q' >= 1");
    return {Kind::Capped, q};
}

bool bisimilar(const FeaturedGraph& g1, int v1, const FeaturedGraph& g2, int v2, int L, int c,
               GlobalMode mode) {
    g1.check_vertex(v1);
    g2.check_vertex(v2);
    TypeAssignment t = graded_types({&g1, &g2}, L, c);
    if (t.final_cls(0, v1) != t.final_cls(1, v2)) return false;
    if (mode.kind == GlobalMode::Kind::None) return true;

    std::vector<long long> count1(t.num_classes(L), 0), count2(t.num_classes(L), 0);
    for (int v = 0; v < g1.n(); ++v) ++count1[t.final_cls(0, v)];
    for (int v = 0; v < g2.n(); ++v) ++count2[t.final_cls(1, v)];
    for (int cls = 0; cls < t.num_classes(L); ++cls) {
        long long a = count1[cls], b = count2[cls];
        if (mode.kind == GlobalMode::Kind::Capped) {
            a = std::min(a, (long long)mode.q);
            b = std::min(b, (long long)mode.q);
        }
        if (a != b) return false;
    }
    return true;
}

C2Refinement c2_refine(const std::vector<const FeaturedGraph*>& graphs, int L, int c) {
    check_family(graphs);
    if (L < 0 || c < 1) throw std::invalid_argument("c2 refinement needs L >= 0, c >= 1");

    C2Refinement t;
    t.L = L;
    t.c = c;
    for (auto* g : graphs) {
        t.offset.push_back(t.total);
        t.total += g->n();
    }

    std::vector<FeatureVector> feats(t.total);
    for (size_t gi = 0; gi < graphs.size(); ++gi)
        for (int v = 0; v < graphs[gi]->n(); ++v) feats[t.offset[gi] + v] = graphs[gi]->feature(v);
    auto [round0, n0] = assign_ids(feats);
    t.round.push_back(std::move(round0));
    t.classes_per_round.push_back(n0);

    // bucket key: (round-k class of w, edge v->w, edge w->v, w == v)
    using Bucket = std::tuple<int, bool, bool, bool>;
    for (int k = 1; k <= L; ++k) {
        const std::vector<int>& prev = t.round.back();
        using Sig = std::pair<int, std::vector<std::pair<Bucket, int>>>;
        std::vector<Sig> sigs(t.total);
        for (size_t gi = 0; gi < graphs.size(); ++gi) {
            const FeaturedGraph& g = *graphs[gi];
            for (int v = 0; v < g.n(); ++v) {
                std::map<Bucket, int> counts;
                for (int w = 0; w < g.n(); ++w) {
                    Bucket key{prev[t.offset[gi] + w], g.has_edge(v, w), g.has_edge(w, v),
                               w == v};
                    int& m = counts[key];
                    if (m < c) ++m;
                }
                sigs[t.offset[gi] + v] = {prev[t.offset[gi] + v], {counts.begin(), counts.end()}};
            }
        }
        auto [ids, nk] = assign_ids(sigs);
        t.round.push_back(std::move(ids));
        t.classes_per_round.push_back(nk);
    }
    return t;
}

bool c2_equivalent(const FeaturedGraph& g1, int v1, const FeaturedGraph& g2, int v2, int L,
                   int c) {
    g1.check_vertex(v1);
    g2.check_vertex(v2);
    if (g1.mode() != g2.mode()) throw GraphError("mode mismatch between graphs");
    return c2_refine({&g1, &g2}, L, c).same_class(0, v1, 1, v2);
}

namespace {

bool partial_iso(const FeaturedGraph& g1, const std::vector<int>& t1, const FeaturedGraph& g2,
                 const std::vector<int>& t2) {
    size_t k = t1.size();
    for (size_t i = 0; i < k; ++i) {
        if (g1.feature(t1[i]) != g2.feature(t2[i])) return false;
        for (size_t j = 0; j <= i; ++j) {
            if ((t1[i] == t1[j]) != (t2[i] == t2[j])) return false;
            if (g1.has_edge(t1[i], t1[j]) != g2.has_edge(t2[i], t2[j])) return false;
            if (g1.has_edge(t1[j], t1[i]) != g2.has_edge(t2[j], t2[i])) return false;
        }
    }
    return true;
}

struct EfSearch {
    const FeaturedGraph& g1;
    const FeaturedGraph& g2;
    std::map<std::tuple<std::vector<int>, std::vector<int>, int>, bool> memo;

    bool win(std::vector<int>& t1, std::vector<int>& t2, int q) {
        if (!partial_iso(g1, t1, g2, t2)) return false;
        if (q == 0) return true;
        auto key = std::make_tuple(t1, t2, q);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        bool ok = true;
        for (int v = 0; v < g1.n() && ok; ++v) {  // spoiler plays in g1
            bool answered = false;
            for (int w = 0; w < g2.n() && !answered; ++w) {
                t1.push_back(v);
                t2.push_back(w);
                answered = win(t1, t2, q - 1);
                t1.pop_back();
                t2.pop_back();
            }
            ok = answered;
        }
        for (int w = 0; w < g2.n() && ok; ++w) {  // spoiler plays in g2
            bool answered = false;
            for (int v = 0; v < g1.n() && !answered; ++v) {
                t1.push_back(v);
                t2.push_back(w);
                answered = win(t1, t2, q - 1);
                t1.pop_back();
                t2.pop_back();
            }
            ok = answered;
        }
        memo[key] = ok;
        return ok;
    }
};

}  // namespace

bool ef_equivalent(const FeaturedGraph& g1, const std::vector<int>& tuple1,
                   const FeaturedGraph& g2, const std::vector<int>& tuple2, int q) {
    if (g1.n() > 10 || g2.n() > 10 || q > 3)
        throw std::invalid_argument("EF game capped at n <= 10, q <= 3");
    if (q < 0) throw std::invalid_argument("EF game needs q >= 0");
    if (tuple1.size() != tuple2.size())
        throw std::invalid_argument("EF game needs equal-length tuples");
    if (g1.mode() != g2.mode() || g1.d() != g2.d()) return false;
    for (int v : tuple1) g1.check_vertex(v);
    for (int v : tuple2) g2.check_vertex(v);

    EfSearch search{g1, g2, {}};
    std::vector<int> t1 = tuple1, t2 = tuple2;
    return search.win(t1, t2, q);
}

std::vector<int> canonical_enumeration(const FeaturedGraph& g, int v, int L, int c) {
    g.check_vertex(v);
    TypeAssignment t = graded_types({&g}, L, c);
    std::vector<std::vector<int>> members(t.num_classes(L));
    for (int u = 0; u < g.n(); ++u) members[t.final_cls(0, u)].push_back(u);

    std::vector<int> num(g.n(), 0);
    for (auto& cls : members) {
        auto self = std::find(cls.begin(), cls.end(), v);
        if (self != cls.end()) {
            cls.erase(self);
            cls.insert(cls.begin(), v);
        }
        for (size_t i = 0; i < cls.size(); ++i) num[cls[i]] = (int)i + 1;
    }
    return num;
}

std::string types_to_text(const TypeAssignment& t, const std::vector<std::string>& graph_names) {
    std::ostringstream out;
    for (int k = 0; k <= t.L; ++k) {
        out << "round " << k << " (" << t.num_classes(k) << " classes):";
        for (size_t gi = 0; gi < t.offset.size(); ++gi) {
            int end = gi + 1 < t.offset.size() ? t.offset[gi + 1] : t.total;
            out << " " << (gi < graph_names.size() ? graph_names[gi] : "g" + std::to_string(gi))
                << "=[";
            for (int g = t.offset[gi]; g < end; ++g) {
                if (g > t.offset[gi]) out << " ";
                out << t.round[k][g];
            }
            out << "]";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace acr
