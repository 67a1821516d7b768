#pragma once

#include <string>
#include <vector>

#include "acr/rational.hpp"

namespace acr {

using IntSequence = std::vector<Int>;

// a'_i = |{j : a_j >= i}| for i = 1..n; preserves the total sum.
IntSequence conjugate(const IntSequence& a);

// Gale-Ryser feasibility: r and c are realizable as row and column sums of an
// n x n binary matrix iff sum r = sum c and every prefix of r is dominated by
// the matching prefix of conjugate(c). r is sorted non-increasing internally;
// *sorted_warning is set when that reordering was needed.
bool gale_ryser_feasible(IntSequence r, const IntSequence& c, bool* sorted_warning = nullptr);

// sum_i a_i * a'_{n+1-i} for non-increasing non-negative a.
Int order_functional(const IntSequence& a);

bool is_non_increasing(const IntSequence& a);

// All non-increasing sequences of length n over 0..max_entry with the given
// sum, lexicographically decreasing first element outermost.
std::vector<IntSequence> enumerate_partition_sequences(int n, const Int& sum,
                                                       const Int& max_entry);

struct SequenceLemmaReport {
    int n = 0;
    long long degree_sequences_checked = 0;    // entries bounded by n
    long long all_sequences_checked = 0;       // entries unbounded
    long long degree_below_bound = 0;          // functional < binomial(n,3), entries <= n
    long long degree_extra_equalities = 0;     // non-staircase equality, entries <= n
    long long unbounded_below_bound = 0;       // first entry > n (informational)
    long long unbounded_extra_equalities = 0;  // first entry > n (informational)
    bool staircase_hits_bound = false;
    std::vector<IntSequence> offenders;        // first few degree-bounded offenders
    bool ok() const {
        return degree_below_bound == 0 && degree_extra_equalities == 0 && staircase_hits_bound;
    }
    std::string to_text() const;
};

// Exhaustive check of the order-functional bound over non-increasing
// non-negative sequences of length n summing to binomial(n,2), capped at
// n <= 6. On the out-degree regime (entries <= n, which is all a vertex can
// reach counting a loop) the functional is at least binomial(n,3) with
// equality exactly at the staircase (n-1, ..., 0). Without the entry bound
// both claims break: (10,0,0,0,0) hits the bound at n = 5 and
// (15,0,0,0,0,0) falls below it at n = 6. Those sequences are not degree
// sequences of any graph; they are tallied separately as informational.
SequenceLemmaReport verify_sequence_lemma(int n);

}  // namespace acr
