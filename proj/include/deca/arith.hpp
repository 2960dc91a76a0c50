#pragma once

#include <utility>
#include <vector>

#include "deca/integer.hpp"

namespace deca::arith {

// n = q^exponent * unit with q not dividing unit.
struct ValuationResult {
    unsigned exponent = 0;
    Int unit;
};

struct RootResult {
    Int root;
    bool exact = false;
};

struct PowerPair {
    Int y;
    unsigned m;
    bool operator==(const PowerPair&) const = default;
};

// q-adic valuation of n != 0 at a prime q.
ValuationResult v_adic(const Int& n, const Int& q);

// floor d-th root, sign-symmetric for odd d; exact iff root^d == N.
// Binary search on exact integers, no floating point anywhere.
RootResult iroot(const Int& N, unsigned d);

// All (y, m) with y^m == N and 2 <= m <= maxM. For even m only y > 0 is
// reported (−y is derivable). N in {0, 1, −1} yields the degenerate family.
std::vector<PowerPair> perfect_power_exponents(const Int& N, unsigned maxM);

// Every ordered integer pair (d1, d2), negatives included, with d1*d2 == N.
std::vector<std::pair<Int, Int>> divisor_pairs(const Int& N);

// Deterministic primality: trial division below 2^16, then strong
// pseudoprime tests on a base set proven complete far past 64 bits.
bool is_prime(const Int& n);

// --- shared helpers used across modules ---

// Largest e with N = core^e (|N| >= 2); returns {core, e}.
std::pair<Int, unsigned> power_core(const Int& N);

// Primes below limit, ascending.
std::vector<long> primes_below(long limit);

// Kronecker symbol (a|n).
int kronecker(const Int& a, const Int& n);

// Prime factorization of |n| (n != 0) as (prime, exponent) pairs, ascending.
// Trial division plus Pollard rho for stubborn cofactors.
std::vector<std::pair<Int, unsigned>> factor(const Int& n);

inline bool is_squarefree(const Int& n) {
    if (sign(n) == 0) return false;
    for (const auto& [p, e] : factor(n)) {
        if (e > 1) return false;
    }
    return true;
}

}  // namespace deca::arith
