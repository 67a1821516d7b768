#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acr/graph.hpp"

namespace acr {

struct SuiteResult {
    std::string name;
    std::string params;
    long long checks = 0;
    long long violations = 0;
    double seconds = 0.0;
    std::string first_counterexample;  // empty when clean
    std::vector<std::string> notes;

    bool ok() const { return violations == 0; }
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int jobs = 1;

    int lemma32_max_n = 4;        // exhaustive part
    int lemma32_random = 10000;   // random digraphs n in 5..8
    int order_gnn_max_order = 200;
    int appendix_a_max_n = 6;
    int gadget_random = 100;
    int gadget_order_max_n = 50;
    int gadget_negatives = 1000;
    int compiler_cases = 1000;
    int charformula_pairs = 500;
    int companion_graphs = 100;
    int invariance_pairs = 200;
    int invariance_nets = 20;
    int game_graphs = 200;
};

// Exhaustive + random sweep: characterization_holds iff is_strict_linear_order.
SuiteResult verify_lemma32(const VerifyOptions& opt);

// Sequence lemma for n <= cap plus Gale-Ryser against brute-force matrix
// existence for all pairs with n <= 3 and entries <= 3.
SuiteResult verify_appendix_a(const VerifyOptions& opt);

// The 6-layer network accepts iff strict linear order on the lemma32 corpus;
// layer-4 trace on order(n) equals (|E|, C(n,2), hom, C(n,3)) exactly.
SuiteResult verify_order_gnn(const VerifyOptions& opt);

// Gadget pipeline: degadgetise o gadgetise ~ id, count_gadget_p2 = count_p2,
// the gadget network accepts order gadgets and rejects structured negatives.
SuiteResult verify_gadget_gnn(const VerifyOptions& opt);

// Appendix C family report for one (L, c).
SuiteResult verify_family(const VerifyOptions& opt, int L, int c);

// compile(f) agrees with evaluate on random formulas x random graphs, and
// compiled aggregations are insensitive to k-restriction of their inputs.
SuiteResult verify_compiler(const VerifyOptions& opt);

// chi-satisfaction iff graded bisimilarity, gamma iff capped-global variant.
SuiteResult verify_charformulas(const VerifyOptions& opt);

// Surgery certificates and structural conditions on random graphs; saturate
// idempotent; free edge transfer / witness on found valid applications.
SuiteResult verify_companion(const VerifyOptions& opt);

// Certified saturate pairs get identical embeddings from random bounded nets.
SuiteResult verify_invariance(const VerifyOptions& opt);

// Partition refinement agrees with the literal recursive games.
SuiteResult verify_refinement_games(const VerifyOptions& opt);

std::vector<SuiteResult> verify_all(const VerifyOptions& opt);

// Brute-force game oracles used by the cross-check suites (exponential).
bool oracle_graded_game(const FeaturedGraph& g1, int v1, const FeaturedGraph& g2, int v2, int L,
                        int c);
bool oracle_c2_game(const FeaturedGraph& g1, int v1, const FeaturedGraph& g2, int v2, int L,
                    int c);

// format: "text" (aligned report) or "tsv"
std::string format_results(const std::vector<SuiteResult>& results, const std::string& format);

}  // namespace acr
