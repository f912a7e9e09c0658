#pragma once

// Exact arithmetic helpers on top of GMP's C++ classes. Everything in the
// library that is not explicitly Monte Carlo runs on mpz_class / mpq_class.

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqg {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    bool neg = e < 0;
    unsigned long ue = neg ? (unsigned long)(-e) : (unsigned long)e;
    Rat r = 1;
    Rat b = base;
    while (ue) {
        if (ue & 1) r *= b;
        b *= b;
        ue >>= 1;
    }
    if (neg) {
        if (r == 0) throw std::domain_error("rat_pow: zero to a negative power");
        r = 1 / r;
    }
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int factorial(const Int& n) {
    if (n < 0) throw std::domain_error("factorial of a negative number");
    return factorial(n.get_ui());
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

// N(N-1)...(N-m+1), exact, possibly zero or negative N.
inline Int falling(const Int& N, unsigned long m) {
    Int r = 1;
    for (unsigned long i = 0; i < m; ++i) r *= N - (long)i;
    return r;
}

// "p/q" (or plain "p") <-> Rat; the wire format used for exact rationals.
inline std::string rat_str(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace eqg
