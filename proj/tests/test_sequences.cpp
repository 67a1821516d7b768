#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acr/sequences.hpp"

using namespace acr;

namespace {

// independent oracle: does any n x n binary matrix have these row/col sums?
bool matrix_exists(const IntSequence& r, const IntSequence& c) {
    int n = (int)r.size();
    for (long long mask = 0; mask < (1ll << (n * n)); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            long row = 0;
            for (int j = 0; j < n; ++j) row += mask >> (i * n + j) & 1;
            if (r[i] != row) ok = false;
        }
        for (int j = 0; j < n && ok; ++j) {
            long col = 0;
            for (int i = 0; i < n; ++i) col += mask >> (i * n + j) & 1;
            if (c[j] != col) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

IntSequence seq(std::initializer_list<long> xs) {
    IntSequence s;
    for (long x : xs) s.push_back(x);
    return s;
}

}  // namespace

TEST_CASE("conjugate sequences") {
    CHECK(conjugate(seq({2, 1, 1})) == seq({3, 1, 0}));
    CHECK(conjugate(seq({3, 2, 1, 0})) == seq({3, 2, 1, 0}));  // staircase is self-conjugate
    CHECK(conjugate(seq({0, 0})) == seq({0, 0}));

    SUBCASE("sum is preserved for entries within the length") {
        // the conjugate has length n, so entries above n would be truncated
        std::mt19937_64 rng(7);
        for (int t = 0; t < 100; ++t) {
            int n = 1 + (int)(rng() % 8);
            IntSequence a;
            for (int i = 0; i < n; ++i) a.push_back((long)(rng() % (n + 1)));
            Int sa = 0, sc = 0;
            for (auto& x : a) sa += x;
            for (auto& x : conjugate(a)) sc += x;
            CHECK(sa == sc);
        }
    }
}

TEST_CASE("gale-ryser feasibility") {
    CHECK(gale_ryser_feasible(seq({1, 1}), seq({1, 1})));       // identity matrix exists
    CHECK_FALSE(gale_ryser_feasible(seq({2, 0}), seq({1, 0})));  // sums differ
    CHECK(gale_ryser_feasible(seq({2, 2, 0}), seq({2, 1, 1})));
    CHECK_THROWS(gale_ryser_feasible(seq({1}), seq({1, 0})));

    SUBCASE("unsorted rows are sorted with a warning") {
        bool warned = false;
        CHECK(gale_ryser_feasible(seq({0, 2, 2}), seq({2, 1, 1}), &warned));
        CHECK(warned);
    }

    SUBCASE("agrees with brute-force matrix existence, n <= 3, entries <= 3") {
        for (int n = 1; n <= 3; ++n) {
            long long total = 1;
            for (int i = 0; i < n; ++i) total *= 4;
            for (long long rc = 0; rc < total; ++rc)
                for (long long cc = 0; cc < total; ++cc) {
                    IntSequence r(n), c(n);
                    long long x = rc, y = cc;
                    for (int i = 0; i < n; ++i, x /= 4, y /= 4) {
                        r[i] = (long)(x % 4);
                        c[i] = (long)(y % 4);
                    }
                    REQUIRE(gale_ryser_feasible(r, c) == matrix_exists(r, c));
                }
        }
    }
}

TEST_CASE("order functional") {
    CHECK(order_functional(seq({2, 1, 0})) == 1);  // = C(3,3)
    CHECK(order_functional(seq({1, 1, 1})) == 3);  // conjugate (3,0,0)
    CHECK(order_functional(seq({3, 0, 0})) == 3);  // conjugate (1,1,1)
    CHECK_THROWS(order_functional(seq({1, 2})));
    CHECK_THROWS(order_functional(seq({1, -1})));
}

TEST_CASE("sequence lemma verification") {
    SequenceLemmaReport r3 = verify_sequence_lemma(3);
    CHECK(r3.ok());
    CHECK(r3.degree_below_bound == 0);

    SequenceLemmaReport r1 = verify_sequence_lemma(1);
    CHECK(r1.ok());
    CHECK(r1.all_sequences_checked == 1);  // only (0); functional 0 = C(1,3)
    CHECK(r1.staircase_hits_bound);

    SequenceLemmaReport r4 = verify_sequence_lemma(4);
    CHECK(r4.ok());
    CHECK(r4.degree_extra_equalities == 0);  // unique equality witness (3,2,1,0)

    SUBCASE("known breakdown beyond the degree regime") {
        // (10,0,0,0,0) hits C(5,3) and (15,...) dips below C(6,3)
        CHECK(order_functional(seq({10, 0, 0, 0, 0})) == 10);
        CHECK(order_functional(seq({15, 0, 0, 0, 0, 0})) == 15);
        CHECK(verify_sequence_lemma(5).unbounded_extra_equalities > 0);
        CHECK(verify_sequence_lemma(6).unbounded_below_bound > 0);
    }

    CHECK_THROWS(verify_sequence_lemma(7));
}

TEST_CASE("summation by parts identity") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + (int)(rng() % 8);
        IntSequence a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a[i] = (long)(rng() % 21) - 10;
            b[i] = (long)(rng() % 21) - 10;
        }
        Int lhs = 0;
        for (int i = 0; i < n; ++i) lhs += a[i] * b[i];
        IntSequence prefix(n);
        Int acc = 0;
        for (int i = 0; i < n; ++i) {
            acc += b[i];
            prefix[i] = acc;
        }
        Int rhs = a[n - 1] * prefix[n - 1];
        for (int i = 0; i + 1 < n; ++i) rhs += (a[i + 1] - a[i]) * (-prefix[i]);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rearrangement bound") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + (int)(rng() % 8);
        IntSequence x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = (long)(rng() % 15);
            y[i] = (long)(rng() % 15);
        }
        std::sort(x.rbegin(), x.rend());
        std::sort(y.rbegin(), y.rend());
        std::vector<int> sigma(n);
        for (int i = 0; i < n; ++i) sigma[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(sigma[i], sigma[rng() % (i + 1)]);

        Int reversed = 0, permuted = 0;
        for (int i = 0; i < n; ++i) {
            reversed += x[i] * y[n - 1 - i];
            permuted += x[i] * y[sigma[i]];
        }
        CHECK(reversed <= permuted);
    }
}
