#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deca/descent.hpp"
#include "deca/integer.hpp"

namespace deca::ec {

// Integral Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassModel {
    Int a1, a2, a3, a4, a6;
    bool operator==(const WeierstrassModel&) const = default;
};

struct CurveInvariants {
    Int b2, b4, b6, b8;
    Int c4, c6;
    Int disc;
    Rat j;  // c4^3 / disc, canonicalized
};

// Exact b/c-invariants and discriminant; throws on a singular model.
CurveInvariants invariants(const WeierstrassModel& m);

// Same, but permits disc == 0 (used by enumeration before filtering).
CurveInvariants invariants_unchecked(const WeierstrassModel& m);

enum class KodairaKind { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

struct Kodaira {
    KodairaKind kind = KodairaKind::I0;
    unsigned n = 0;  // the n of In / In*
};

std::string to_string(const Kodaira& k);

enum class Reduction { Good, MultiplicativeSplit, MultiplicativeNonsplit, Additive };

std::string to_string(Reduction r);

// Tate output at one prime of a (minimal) model.
struct LocalData {
    Int q;
    int cond_exp = 0;   // v_q(N)
    int disc_val = 0;   // v_q(D_min)
    Kodaira kodaira;
    Reduction reduction = Reduction::Good;
};

struct MinimalModelResult {
    WeierstrassModel model;
    Int scale;  // u with (c4, c6) -> (c4/u^4, c6/u^6)
};

// Global minimal model by Laska–Kraus–Connell reduction.
MinimalModelResult minimal_model(const WeierstrassModel& m);

struct ConductorResult {
    Int N;
    std::vector<LocalData> local;  // one entry per prime dividing D_min
    Int disc_min;
    WeierstrassModel minimal;
};

// Minimal model first, then Tate's algorithm at every bad prime.
ConductorResult conductor(const WeierstrassModel& m);

// Frey curve attached to a descent witness, p >= 7. Returns the model and
// its label ("E1".."E5").
std::pair<WeierstrassModel, std::string> frey_curve(const descent::DescentWitness& w, unsigned p);

struct FrobeniusTrace {
    Int q;
    Int a_q;
};

// a_q = q + 1 - #E(F_q) by exact point counting on the minimal model.
// Requires good reduction at q and q <= 10^6; throws otherwise.
FrobeniusTrace trace_of_frobenius(const WeierstrassModel& m, const Int& q);

// Flagged variant for bad primes: good -> a_q; multiplicative -> +-1;
// additive -> 0. `good` tells which case applied.
struct LocalTrace {
    Int q;
    Int value;
    bool good = false;
};
LocalTrace local_trace(const WeierstrassModel& m, const Int& q);

// Short-model quadratic twist by squarefree d: y^2 = x^3 + A d^2 x + B d^3.
WeierstrassModel quadratic_twist(const WeierstrassModel& m, const Int& d);

// A rational point in lowest terms: x = rx/dx, y = ry/dy.
struct RationalPoint {
    Rat x, y;
    bool is_torsion = false;
    bool operator==(const RationalPoint& o) const { return x == o.x && y == o.y; }
};

struct PointSearchOptions {
    int workers = 0;
};

// All affine points with x = r/e^2, |r| <= heightBound, e <= ceil(sqrt(H)),
// deduplicated, torsion-flagged via torsion_bound, sorted by (x, y).
std::vector<RationalPoint> search_points(const WeierstrassModel& m, const Int& heightBound,
                                         const PointSearchOptions& opts = {});

// gcd of #E(F_q) over the first sampleCount good primes q > 3; an upper
// bound for (and multiple of) the rational torsion order.
Int torsion_bound(const WeierstrassModel& m, unsigned sampleCount);

// Group law over Q (empty optional = point at infinity).
using GroupPoint = std::optional<std::pair<Rat, Rat>>;
GroupPoint add_points(const WeierstrassModel& m, const GroupPoint& P, const GroupPoint& Q);
GroupPoint negate_point(const WeierstrassModel& m, const GroupPoint& P);
GroupPoint multiply_point(const WeierstrassModel& m, const Int& k, const GroupPoint& P);
bool on_curve(const WeierstrassModel& m, const GroupPoint& P);

struct CurveSearchOptions {
    int workers = 0;
};

// Reduced-form enumeration (a1,a3 in {0,1}, a2 in {-1,0,1},
// |a4|,|a6| <= min(coeffBound^3, 10^4)) keeping nonsingular models of
// conductor N, deduplicated by minimal-model (c4, c6). Returns minimal
// models sorted by (c4, c6).
std::vector<WeierstrassModel> find_curves_by_conductor(const Int& N, const Int& coeffBound,
                                                       const CurveSearchOptions& opts = {});

// x-coordinates of the rational 2-torsion (roots of 4x^3+b2x^2+2b4x+b6).
std::vector<Rat> two_torsion_x(const WeierstrassModel& m);

}  // namespace deca::ec
