#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace acr {

// Arbitrary-precision integers and rationals. Rationals are kept canonical
// (positive denominator, gcd(num, den) = 1); gmp arithmetic preserves this
// as long as every value is canonicalized at construction, which rat() does.
using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;
using Mat = std::vector<std::vector<Rat>>;  // row-major, row = input dim

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_canonical(const Rat& q) {
    if (sgn(q.get_den()) <= 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return g == 1 || (q.get_num() == 0 && q.get_den() == 1);
}

inline Int binomial(const Int& n, unsigned k) {
    if (n < 0) throw std::invalid_argument("binomial of negative n");
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(long n, unsigned k) { return binomial(Int(n), k); }

// "num" or "num/den", matching the trace and network file formats.
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

}  // namespace acr
