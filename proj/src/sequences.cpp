#include "acr/sequences.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace acr {

IntSequence conjugate(const IntSequence& a) {
    int n = (int)a.size();
    IntSequence c(n, 0);
    for (int i = 1; i <= n; ++i) {
        Int cnt = 0;
        for (auto& x : a)
            if (x >= i) ++cnt;
        c[i - 1] = cnt;
    }
    return c;
}

bool is_non_increasing(const IntSequence& a) {
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i - 1] < a[i]) return false;
    return true;
}

bool gale_ryser_feasible(IntSequence r, const IntSequence& c, bool* sorted_warning) {
    if (r.size() != c.size()) throw std::invalid_argument("gale-ryser: length mismatch");
    if (sorted_warning) *sorted_warning = false;
    for (auto& x : r)
        if (x < 0) return false;
    for (auto& x : c)
        if (x < 0) return false;
    if (!is_non_increasing(r)) {
        if (sorted_warning) *sorted_warning = true;
        std::sort(r.begin(), r.end(), [](const Int& x, const Int& y) { return x > y; });
    }

    Int sr = 0, sc = 0;
    for (auto& x : r) sr += x;
    for (auto& x : c) sc += x;
    if (sr != sc) return false;

    IntSequence cc = conjugate(c);
    Int pr = 0, pc = 0;
    for (size_t k = 0; k < r.size(); ++k) {
        pr += r[k];
        pc += cc[k];
        if (pr > pc) return false;
    }
    return true;
}

Int order_functional(const IntSequence& a) {
    if (!is_non_increasing(a)) throw std::invalid_argument("order functional: not non-increasing");
    for (auto& x : a)
        if (x < 0) throw std::invalid_argument("order functional: negative entry");
    IntSequence c = conjugate(a);
    int n = (int)a.size();
    Int s = 0;
    for (int i = 1; i <= n; ++i) s += a[i - 1] * c[n - i];
    return s;
}

namespace {

void extend(IntSequence& cur, const Int& remaining, const Int& bound, int slots,
            std::vector<IntSequence>& out) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    Int hi = remaining < bound ? remaining : bound;
    // remaining must fit into the slots left even at the current ceiling
    for (Int v = hi; v >= 0; --v) {
        if (v * slots < remaining) break;
        cur.push_back(v);
        extend(cur, remaining - v, v, slots - 1, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<IntSequence> enumerate_partition_sequences(int n, const Int& sum,
                                                       const Int& max_entry) {
    std::vector<IntSequence> out;
    if (n <= 0) return out;
    IntSequence cur;
    extend(cur, sum, max_entry, n, out);
    return out;
}

SequenceLemmaReport verify_sequence_lemma(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("sequence lemma verification capped at n <= 6");
    SequenceLemmaReport rep;
    rep.n = n;
    Int target = binomial(n, 3);
    IntSequence staircase(n);
    for (int i = 0; i < n; ++i) staircase[i] = n - 1 - i;

    for (auto& seq : enumerate_partition_sequences(n, binomial(n, 2), binomial(n, 2))) {
        ++rep.all_sequences_checked;
        bool degree_feasible = seq[0] <= n;  // out-degrees never exceed n
        if (degree_feasible) ++rep.degree_sequences_checked;
        Int f = order_functional(seq);
        if (f < target) {
            if (degree_feasible) {
                ++rep.degree_below_bound;
                if (rep.offenders.size() < 10) rep.offenders.push_back(seq);
            } else {
                ++rep.unbounded_below_bound;
            }
        } else if (f == target && seq != staircase) {
            if (degree_feasible) {
                ++rep.degree_extra_equalities;
                if (rep.offenders.size() < 10) rep.offenders.push_back(seq);
            } else {
                ++rep.unbounded_extra_equalities;
            }
        } else if (f == target) {
            rep.staircase_hits_bound = true;
        }
    }
    return rep;
}

std::string SequenceLemmaReport::to_text() const {
    std::ostringstream out;
    out << "sequence lemma, n=" << n << "\n";
    out << "  sequences checked: " << all_sequences_checked << " (" << degree_sequences_checked
        << " with entries <= n)\n";
    out << "  degree regime: " << degree_below_bound << " below C(n,3), "
        << degree_extra_equalities << " non-staircase equalities, staircase at the bound: "
        << (staircase_hits_bound ? "yes" : "NO") << "\n";
    out << "  beyond the degree bound (informational): " << unbounded_below_bound
        << " below C(n,3), " << unbounded_extra_equalities << " extra equalities\n";
    for (auto& s : offenders) {
        out << "  offender:";
        for (auto& x : s) out << " " << x.get_str();
        out << "\n";
    }
    return out.str();
}

}  // namespace acr
