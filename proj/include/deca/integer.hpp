#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace deca {

// All arithmetic in this project is exact. Int/Rat are the only numeric
// carriers; nothing is ever rounded.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an operation's stated precondition is violated.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an internal invariant fails (a bug, or impossible input that
// slipped past validation). Tests treat any such throw as a failure.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

// Mathematical mod: result in [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline unsigned long mod_ui(const Int& a, unsigned long m) {
    return mpz_fdiv_ui(a.get_mpz_t(), m);
}

inline bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; throws internal_error if d does not divide a.
inline Int exact_div(const Int& a, const Int& d) {
    if (sign(d) == 0 || !divides(d, a)) {
        throw internal_error("exact_div: inexact division");
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow2(const Int& x) { return x * x; }
inline Int pow3(const Int& x) { return x * x * x; }

inline bool fits_long(const Int& x) { return x.fits_slong_p(); }

inline long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw internal_error("to_long: out of range");
    return x.get_si();
}

inline std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace deca
