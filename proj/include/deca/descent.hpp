#pragma once

#include <string>
#include <utility>
#include <vector>

#include "deca/arith.hpp"
#include "deca/integer.hpp"

namespace deca::descent {

// The three-way split of n(4n-3) = y^p by the 3-adic valuation of n.
enum class CaseTag { Case1, Case2, Case3 };

std::string to_string(CaseTag c);

// Coprime-factor witness for one descent case at exponent p.
//   Case1: n = a^p, 4n-3 = b^p            (pair = (a, b))
//   Case2: n = 3t^p, 4n-3 = 3^(p-1) u^p   (pair = (t, u))
//   Case3: n = 3^(p-1) v^p, 4n-3 = 3w^p   (pair = (v, w))
struct DescentWitness {
    unsigned p = 0;
    CaseTag tag = CaseTag::Case1;
    Int first;
    Int second;
};

// One binary-form equation c1 x^d + c2 y^d = c3 with its provenance.
struct ThueInstance {
    Int c1, c2, c3;
    unsigned degree = 0;
    CaseTag provenance_case = CaseTag::Case1;
    unsigned provenance_p = 0;
};

struct EquationSolution {
    Int n;
    Int y;
    unsigned m = 0;
    bool operator==(const EquationSolution&) const = default;
};

// P_s(n) = ((s-2)n^2 - (s-4)n)/2; always integral.
Int polygonal(long s, const Int& n);

CaseTag classify_case(const Int& n);

// Extract the coprime-factor witness for n(4n-3) = y^p. Throws domain_error
// on bad input and internal_error("descent violation: ...") if an exact root
// demanded by the case does not exist.
DescentWitness descend(const Int& n, const Int& y, unsigned p);

// Checks every structural invariant of a witness (coprimality, the ternary
// equation, reconstruction of y). Used by tests and the pipeline.
void check_witness(const DescentWitness& w, const Int& n, const Int& y);

// The three ternary equations with 3-powers substituted, for p in {3, 5}.
std::vector<ThueInstance> thue_instances(unsigned p);

// All integer solutions of the p = 2 factorization identity for the case:
// Case1: (2a-b)(2a+b) = 3; Case2/Case3: (2s-r)(2s+r) = 1.
std::vector<std::pair<Int, Int>> solve_p2(CaseTag tag);

struct OracleOptions {
    bool use_residue_filter = true;
    int workers = 0;  // 0 = one block per hardware thread
};

// Independent brute-force oracle for Theorem 1: every (n, y, m) with
// |n| <= maxAbsN, 2 <= m <= maxM and P10(n) = y^m. For even m both y and -y
// are reported. Sorted by (n, m, y).
std::vector<EquationSolution> enumerate_solutions(const Int& maxAbsN, unsigned maxM,
                                                  const OracleOptions& opts = {});

}  // namespace deca::descent
