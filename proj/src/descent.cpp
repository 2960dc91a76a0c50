#include "deca/descent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <tuple>

namespace deca::descent {

using arith::iroot;
using arith::perfect_power_exponents;

std::string to_string(CaseTag c) {
    switch (c) {
        case CaseTag::Case1: return "case1";
        case CaseTag::Case2: return "case2";
        case CaseTag::Case3: return "case3";
    }
    throw internal_error("bad case tag");
}

Int polygonal(long s, const Int& n) {
    if (s < 3) throw domain_error("polygonal: s must be >= 3");
    return exact_div(Int(s - 2) * n * n - Int(s - 4) * n, 2);
}

CaseTag classify_case(const Int& n) {
    if (sign(n) == 0) throw domain_error("classify_case: n must be nonzero");
    auto v = arith::v_adic(n, 3);
    if (v.exponent == 0) return CaseTag::Case1;
    if (v.exponent == 1) return CaseTag::Case2;
    return CaseTag::Case3;
}

namespace {

Int exact_root_or_violation(const Int& N, unsigned p, const char* what) {
    auto r = iroot(N, p);
    if (!r.exact) {
        throw internal_error(std::string("descent violation: ") + what +
                             " is not an exact p-th power");
    }
    return r.root;
}

}  // namespace

DescentWitness descend(const Int& n, const Int& y, unsigned p) {
    if (sign(n) == 0) throw domain_error("descend: n must be nonzero");
    if (!arith::is_prime(Int(p))) throw domain_error("descend: p must be prime");
    Int rhs = n * (4 * n - 3);
    if (pow_ui(y, p) != rhs) {
        throw domain_error("descend: n(4n-3) != y^p");
    }
    CaseTag tag = classify_case(n);
    if (p == 2 && tag != CaseTag::Case1) {
        throw domain_error("descend: p = 2 has no Case2/Case3 solutions");
    }
    DescentWitness w;
    w.p = p;
    w.tag = tag;
    Int m = 4 * n - 3;
    switch (tag) {
        case CaseTag::Case1:
            w.first = exact_root_or_violation(n, p, "n");
            w.second = exact_root_or_violation(m, p, "4n-3");
            break;
        case CaseTag::Case2: {
            Int tp = exact_div(n, 3);
            Int q = pow_ui(Int(3), p - 1);
            if (!divides(q, m)) {
                throw internal_error("descent violation: 3^(p-1) does not divide 4n-3");
            }
            w.first = exact_root_or_violation(tp, p, "n/3");
            w.second = exact_root_or_violation(exact_div(m, q), p, "(4n-3)/3^(p-1)");
            break;
        }
        case CaseTag::Case3: {
            Int q = pow_ui(Int(3), p - 1);
            if (!divides(q, n)) {
                throw internal_error("descent violation: 3^(p-1) does not divide n");
            }
            if (!divides(3, m)) {
                throw internal_error("descent violation: 3 does not divide 4n-3");
            }
            w.first = exact_root_or_violation(exact_div(n, q), p, "n/3^(p-1)");
            w.second = exact_root_or_violation(exact_div(m, 3), p, "(4n-3)/3");
            break;
        }
    }
    check_witness(w, n, y);
    return w;
}

void check_witness(const DescentWitness& w, const Int& n, const Int& y) {
    const Int& A = w.first;
    const Int& B = w.second;
    unsigned p = w.p;
    if (gcd(A, B) != 1) throw internal_error("witness: pair not coprime");
    Int recon_y;
    switch (w.tag) {
        case CaseTag::Case1:
            if (pow_ui(A, p) != n) throw internal_error("witness: n != a^p");
            if (pow_ui(B, p) != 4 * n - 3) throw internal_error("witness: 4n-3 != b^p");
            if (4 * pow_ui(A, p) - pow_ui(B, p) != 3) {
                throw internal_error("witness: 4a^p - b^p != 3");
            }
            recon_y = A * B;
            break;
        case CaseTag::Case2:
            if (divides(3, A)) throw internal_error("witness: 3 | t");
            if (3 * pow_ui(A, p) != n) throw internal_error("witness: n != 3t^p");
            if (pow_ui(Int(3), p - 1) * pow_ui(B, p) != 4 * n - 3) {
                throw internal_error("witness: 4n-3 != 3^(p-1) u^p");
            }
            if (4 * pow_ui(A, p) - pow_ui(Int(3), p - 2) * pow_ui(B, p) != 1) {
                throw internal_error("witness: 4t^p - 3^(p-2) u^p != 1");
            }
            recon_y = 3 * A * B;
            break;
        case CaseTag::Case3:
            if (divides(3, B)) throw internal_error("witness: 3 | w");
            if (pow_ui(Int(3), p - 1) * pow_ui(A, p) != n) {
                throw internal_error("witness: n != 3^(p-1) v^p");
            }
            if (3 * pow_ui(B, p) != 4 * n - 3) throw internal_error("witness: 4n-3 != 3w^p");
            if (4 * pow_ui(Int(3), p - 2) * pow_ui(A, p) - pow_ui(B, p) != 1) {
                throw internal_error("witness: 4*3^(p-2) v^p - w^p != 1");
            }
            recon_y = 3 * A * B;
            break;
    }
    bool ok = (p % 2 == 0) ? pow_ui(recon_y, p) == pow_ui(y, p) : recon_y == y;
    if (!ok) throw internal_error("witness: y reconstruction failed");
}

std::vector<ThueInstance> thue_instances(unsigned p) {
    if (p != 3 && p != 5) {
        throw domain_error("thue_instances: p must be 3 or 5 (p >= 7 goes to the modular track)");
    }
    Int q = pow_ui(Int(3), p - 2);
    return {
        {4, -1, 3, p, CaseTag::Case1, p},
        {4, -q, 1, p, CaseTag::Case2, p},
        {4 * q, -1, 1, p, CaseTag::Case3, p},
    };
}

std::vector<std::pair<Int, Int>> solve_p2(CaseTag tag) {
    // Case1: (2a-b)(2a+b) = 3. Case2/3: (2s-r)(2s+r) = 1.
    Int rhs = (tag == CaseTag::Case1) ? 3 : 1;
    std::vector<std::pair<Int, Int>> out;
    for (const auto& [d1, d2] : arith::divisor_pairs(rhs)) {
        Int four_a = d1 + d2;
        Int two_b = d2 - d1;
        if (!divides(4, four_a) || !divides(2, two_b)) continue;
        out.emplace_back(exact_div(four_a, 4), exact_div(two_b, 2));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Squares mod 720720 = 2^4 * 3^2 * 5 * 7 * 11 * 13; ~1.1% of residues pass.
constexpr uint32_t kFilterMod = 720720;

const std::vector<bool>& square_residue_table() {
    static const std::vector<bool> table = [] {
        std::vector<bool> t(kFilterMod, false);
        for (uint64_t x = 0; x < kFilterMod; ++x) t[x * x % kFilterMod] = true;
        return t;
    }();
    return table;
}

bool int64_is_square(uint64_t v) {
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(v)));
    for (uint64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c) {
        if (c * c == v) return true;
    }
    return false;
}

// Sorted distinct values y^m <= limit with y >= 2, 3 <= m <= maxM.
std::vector<uint64_t> power_table(uint64_t limit, unsigned maxM) {
    std::vector<uint64_t> vals;
    for (uint64_t y = 2;; ++y) {
        uint64_t v = y * y * y;
        if (v > limit) break;
        for (unsigned m = 3; m <= maxM && v <= limit; ++m) {
            vals.push_back(v);
            if (v > limit / y) break;
            v *= y;
        }
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

void emit_solutions(const Int& n, const Int& N, unsigned maxM,
                    std::vector<EquationSolution>& out) {
    for (const auto& [y, m] : perfect_power_exponents(N, maxM)) {
        if (m % 2 == 0 && sign(y) != 0) {
            out.push_back({n, -y, m});
            out.push_back({n, y, m});
        } else {
            out.push_back({n, y, m});
        }
    }
}

}  // namespace

std::vector<EquationSolution> enumerate_solutions(const Int& maxAbsN, unsigned maxM,
                                                  const OracleOptions& opts) {
    if (sign(maxAbsN) < 0) throw domain_error("enumerate_solutions: maxAbsN must be >= 0");
    if (maxM < 2) throw domain_error("enumerate_solutions: maxM must be >= 2");

    std::vector<EquationSolution> out;

    // n = 0 and n = 1 are the only n with |P10(n)| <= 1; handle them here so
    // the scan below only sees |N| >= 2.
    if (maxAbsN >= 0) emit_solutions(0, 0, maxM, out);
    if (maxAbsN >= 1) emit_solutions(1, 1, maxM, out);

    if (!maxAbsN.fits_slong_p() || maxAbsN > 1000000000L) {
        // mpz fallback, no windowed tables. Correct for any size, slower.
        for (Int n = -maxAbsN; n <= maxAbsN; ++n) {
            if (n == 0 || n == 1) continue;
            emit_solutions(n, n * (4 * n - 3), maxM, out);
        }
        std::sort(out.begin(), out.end(), [](const EquationSolution& a, const EquationSolution& b) {
            return std::tie(a.n, a.m, a.y) < std::tie(b.n, b.m, b.y);
        });
        return out;
    }

    const int64_t W = to_long(maxAbsN);
    // P10(n) = n(4n-3) > 0 for every n != 0, maximal at n = -W.
    const uint64_t Nmax =
        static_cast<uint64_t>(W) * (4 * static_cast<uint64_t>(W) + 3);
    const auto powers = power_table(Nmax, maxM);
    const auto& sqtab = square_residue_table();
    const bool use_filter = opts.use_residue_filter;

    auto scan_block = [&](int64_t lo, int64_t hi) {
        // [lo, hi) over a linear index i mapped to n = i - W.
        std::vector<EquationSolution> local;
        for (int64_t i = lo; i < hi; ++i) {
            int64_t n = i - W;
            if (n == 0 || n == 1) continue;
            uint64_t N;
            if (n > 0) {
                N = static_cast<uint64_t>(n) * (4 * static_cast<uint64_t>(n) - 3);
            } else {
                uint64_t a = static_cast<uint64_t>(-n);
                N = a * (4 * a + 3);
            }
            bool hit = false;
            if (maxM >= 2 && (!use_filter || sqtab[N % kFilterMod])) {
                hit = int64_is_square(N);
            }
            if (!hit && maxM >= 3) {
                hit = std::binary_search(powers.begin(), powers.end(), N);
            }
            if (hit) emit_solutions(n, Int(static_cast<long>(n)) * (4 * Int(static_cast<long>(n)) - 3), maxM, local);
        }
        return local;
    };

    int workers = opts.workers;
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }
    const int64_t total = 2 * W + 1;
    if (workers == 1 || total < 4 * workers) {
        auto local = scan_block(0, total);
        out.insert(out.end(), local.begin(), local.end());
    } else {
        std::vector<std::vector<EquationSolution>> results(static_cast<size_t>(workers));
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            int64_t lo = total * w / workers;
            int64_t hi = total * (w + 1) / workers;
            threads.emplace_back([&, w, lo, hi] { results[static_cast<size_t>(w)] = scan_block(lo, hi); });
        }
        for (auto& t : threads) t.join();
        for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    }

    std::sort(out.begin(), out.end(), [](const EquationSolution& a, const EquationSolution& b) {
        return std::tie(a.n, a.m, a.y) < std::tie(b.n, b.m, b.y);
    });
    return out;
}

}  // namespace deca::descent
