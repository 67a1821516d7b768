#include "acr/gml.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <random>
#include <sstream>
#include <unordered_map>

namespace acr {

namespace {

Formula node(GmlFormula::Kind kind, int arg, Formula l, Formula r) {
    auto f = std::make_shared<GmlFormula>();
    f->kind = kind;
    f->arg = arg;
    f->left = std::move(l);
    f->right = std::move(r);
    return f;
}

}  // namespace

Formula top() {
    static const Formula t = node(GmlFormula::Kind::Top, 0, nullptr, nullptr);
    return t;
}

Formula prop(int i) {
    if (i < 1) throw std::invalid_argument("proposition index must be >= 1");
    return node(GmlFormula::Kind::Prop, i, nullptr, nullptr);
}

Formula lnot(Formula f) { return node(GmlFormula::Kind::Not, 0, std::move(f), nullptr); }

Formula land(Formula a, Formula b) {
    return node(GmlFormula::Kind::And, 0, std::move(a), std::move(b));
}

Formula lor(Formula a, Formula b) { return lnot(land(lnot(std::move(a)), lnot(std::move(b)))); }

Formula diamond(int k, Formula f) {
    if (k < 1) throw std::invalid_argument("diamond grading must be >= 1");
    return node(GmlFormula::Kind::Diamond, k, std::move(f), nullptr);
}

Formula global_exists(int k, Formula f) {
    if (k < 1) throw std::invalid_argument("global grading must be >= 1");
    return node(GmlFormula::Kind::GlobalExists, k, std::move(f), nullptr);
}

Formula conj(const std::vector<Formula>& fs) {
    if (fs.empty()) return top();
    Formula acc = fs[0];
    for (size_t i = 1; i < fs.size(); ++i) acc = land(acc, fs[i]);
    return acc;
}

Formula disj(const std::vector<Formula>& fs) {
    if (fs.empty()) return lnot(top());
    Formula acc = fs[0];
    for (size_t i = 1; i < fs.size(); ++i) acc = lor(acc, fs[i]);
    return acc;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, (int)pos); }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool eat_str(const char* lit) {
        skip_ws();
        size_t len = std::strlen(lit);
        if (s.compare(pos, len, lit) == 0) {
            pos += len;
            return true;
        }
        return false;
    }

    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected integer");
        long v = std::stol(s.substr(start, pos - start));
        if (v > 1'000'000) fail("integer too large");
        return (int)v;
    }

    Formula formula() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of formula");
        char c = s[pos];
        if (c == 'T') {
            ++pos;
            return top();
        }
        if (c == 'p') {
            ++pos;
            int i = integer();
            if (i < 1) fail("proposition index must be >= 1");
            return prop(i);
        }
        if (c == '!') {
            ++pos;
            return lnot(formula());
        }
        if (eat_str("<>=")) {
            int k = integer();
            if (k < 1) fail("diamond grading must be >= 1");
            return diamond(k, formula());
        }
        if (c == 'E') {
            if (!eat_str("E>=")) fail("expected 'E>='");
            int k = integer();
            if (k < 1) fail("global grading must be >= 1");
            return global_exists(k, formula());
        }
        if (c == '(') {
            ++pos;
            Formula a = formula();
            skip_ws();
            if (pos >= s.size()) fail("expected '&' or '|'");
            char op = s[pos];
            if (op != '&' && op != '|') fail("expected '&' or '|'");
            ++pos;
            Formula b = formula();
            if (!eat(')')) fail("expected ')'");
            return op == '&' ? land(a, b) : lor(a, b);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Formula parse_formula(const std::string& text) {
    Parser p{text};
    Formula f = p.formula();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return f;
}

namespace {

void print_rec(const Formula& f, std::ostream& out) {
    switch (f->kind) {
        case GmlFormula::Kind::Top: out << "T"; break;
        case GmlFormula::Kind::Prop: out << "p" << f->arg; break;
        case GmlFormula::Kind::Not:
            out << "!";
            print_rec(f->left, out);
            break;
        case GmlFormula::Kind::And:
            out << "(";
            print_rec(f->left, out);
            out << " & ";
            print_rec(f->right, out);
            out << ")";
            break;
        case GmlFormula::Kind::Diamond:
            out << "<>=" << f->arg << " ";
            print_rec(f->left, out);
            break;
        case GmlFormula::Kind::GlobalExists:
            out << "E>=" << f->arg << " ";
            print_rec(f->left, out);
            break;
    }
}

// truth[node][v]; nodes evaluated in dependency order, shared nodes once
struct Evaluator {
    const FeaturedGraph& g;
    std::unordered_map<const GmlFormula*, std::vector<char>> truth;

    const std::vector<char>& eval(const Formula& f) {
        auto it = truth.find(f.get());
        if (it != truth.end()) return it->second;
        int n = g.n();
        std::vector<char> val(n, 0);
        switch (f->kind) {
            case GmlFormula::Kind::Top:
                std::fill(val.begin(), val.end(), 1);
                break;
            case GmlFormula::Kind::Prop:
                if (f->arg > g.d())
                    throw GraphError("proposition p" + std::to_string(f->arg) +
                                     " out of range for d=" + std::to_string(g.d()));
                for (int v = 0; v < n; ++v) val[v] = g.feature(v)[f->arg - 1];
                break;
            case GmlFormula::Kind::Not: {
                const auto& a = eval(f->left);
                for (int v = 0; v < n; ++v) val[v] = !a[v];
                break;
            }
            case GmlFormula::Kind::And: {
                const auto& a = eval(f->left);
                const auto& b = eval(f->right);
                for (int v = 0; v < n; ++v) val[v] = a[v] && b[v];
                break;
            }
            case GmlFormula::Kind::Diamond: {
                const auto& a = eval(f->left);
                for (int v = 0; v < n; ++v) {
                    int cnt = 0;
                    for (int u : g.out_neighbours(v)) cnt += a[u];
                    val[v] = cnt >= f->arg;
                }
                break;
            }
            case GmlFormula::Kind::GlobalExists: {
                const auto& a = eval(f->left);
                int cnt = 0;
                for (int v = 0; v < n; ++v) cnt += a[v];
                std::fill(val.begin(), val.end(), cnt >= f->arg);
                break;
            }
        }
        return truth.emplace(f.get(), std::move(val)).first->second;
    }
};

}  // namespace

std::string print_formula(const Formula& f) {
    std::ostringstream out;
    print_rec(f, out);
    return out.str();
}

bool evaluate(const Formula& f, const FeaturedGraph& g, int v) {
    g.check_vertex(v);
    Evaluator e{g, {}};
    return e.eval(f)[v];
}

std::vector<bool> evaluate_all(const Formula& f, const FeaturedGraph& g) {
    Evaluator e{g, {}};
    const auto& val = e.eval(f);
    return std::vector<bool>(val.begin(), val.end());
}

namespace {

// bottom-up over the shared DAG: modal depth memoized per node
struct StatsWalk {
    FormulaStats& st;
    std::unordered_map<const GmlFormula*, int> depth;

    int go(const Formula& f) {
        auto it = depth.find(f.get());
        if (it != depth.end()) return it->second;
        int d = 0;
        switch (f->kind) {
            case GmlFormula::Kind::Top:
            case GmlFormula::Kind::Prop: d = 0; break;
            case GmlFormula::Kind::Not: d = go(f->left); break;
            case GmlFormula::Kind::And: d = std::max(go(f->left), go(f->right)); break;
            case GmlFormula::Kind::Diamond:
                st.max_grading = std::max(st.max_grading, f->arg);
                d = 1 + go(f->left);
                break;
            case GmlFormula::Kind::GlobalExists:
                st.uses_global = true;
                st.max_global_grading = std::max(st.max_global_grading, f->arg);
                d = go(f->left);
                break;
        }
        depth[f.get()] = d;
        return d;
    }
};

}  // namespace

FormulaStats stats(const Formula& f) {
    FormulaStats st;
    StatsWalk walk{st, {}};
    st.modal_depth = walk.go(f);
    return st;
}

Formula build_degree_bound_formula(int c) {
    if (c < 0) throw std::invalid_argument("degree bound needs c >= 0");
    return lnot(global_exists(1, diamond(c + 1, top())));
}

namespace {

Formula random_rec(std::mt19937_64& rng, int depth, const RandomFormulaOptions& opt) {
    auto pick = [&](int n) { return (int)(rng() % n); };
    if (depth == 0) {
        if (opt.d == 0 || pick(3) == 0) return top();
        return prop(1 + pick(opt.d));
    }
    switch (pick(5)) {
        case 0: return lnot(random_rec(rng, depth - 1, opt));
        case 1: return land(random_rec(rng, depth - 1, opt), random_rec(rng, depth - 1, opt));
        case 2: return diamond(1 + pick(opt.max_grading), random_rec(rng, depth - 1, opt));
        case 3:
            if (opt.allow_global)
                return global_exists(1 + pick(opt.max_grading), random_rec(rng, depth - 1, opt));
            return diamond(1 + pick(opt.max_grading), random_rec(rng, depth - 1, opt));
        default: return random_rec(rng, depth - 1, opt);
    }
}

}  // namespace

Formula random_formula(const RandomFormulaOptions& opt) {
    if (opt.depth < 0 || opt.d < 0 || opt.max_grading < 1)
        throw std::invalid_argument("bad random formula options");
    std::mt19937_64 rng(opt.seed);
    return random_rec(rng, opt.depth, opt);
}

}  // namespace acr
