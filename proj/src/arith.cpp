#include "deca/arith.hpp"

#include <algorithm>

namespace deca::arith {

ValuationResult v_adic(const Int& n, const Int& q) {
    if (sign(n) == 0) throw domain_error("v_adic: n must be nonzero");
    if (q < 2 || !is_prime(q)) throw domain_error("v_adic: q must be prime");
    ValuationResult r;
    r.unit = n;
    while (divides(q, r.unit)) {
        r.unit = exact_div(r.unit, q);
        ++r.exponent;
    }
    return r;
}

RootResult iroot(const Int& N, unsigned d) {
    if (d < 2) throw domain_error("iroot: d must be >= 2");
    if (d % 2 == 0 && sign(N) < 0) {
        throw domain_error("iroot: even degree of a negative number");
    }
    if (sign(N) < 0) {
        RootResult r = iroot(-N, d);
        // floor symmetry: for odd d and N < 0, root(N) = -root(-N) when
        // exact; otherwise the floor is -(root(-N)+1). The descent code only
        // consumes exact roots, but keep the floor contract honest.
        if (r.exact) return {-r.root, true};
        return {-(r.root + 1), false};
    }
    if (sign(N) == 0) return {0, true};
    // root has ceil(bits(N)/d) bits; binary search that window.
    size_t bits = mpz_sizeinbase(N.get_mpz_t(), 2);
    Int lo = 1;
    Int hi = Int(1) << static_cast<unsigned>(bits / d + 1);
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (pow_ui(mid, d) <= N) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return {lo, pow_ui(lo, d) == N};
}

std::pair<Int, unsigned> power_core(const Int& N) {
    Int core = N;
    unsigned e = 1;
    auto abs_ge_2 = [](const Int& x) { return x >= 2 || x <= -2; };
    if (!abs_ge_2(core)) throw internal_error("power_core: |N| must be >= 2");
    bool changed = true;
    while (changed) {
        changed = false;
        size_t bits = mpz_sizeinbase(core.get_mpz_t(), 2);
        for (long q : primes_below(static_cast<long>(bits) + 1)) {
            if (q % 2 == 0 && sign(core) < 0) continue;
            if (pow_ui(2, static_cast<unsigned>(q)) > abs(core)) break;
            auto r = iroot(core, static_cast<unsigned>(q));
            if (r.exact) {
                core = r.root;
                e *= static_cast<unsigned>(q);
                changed = true;
                break;
            }
        }
    }
    return {core, e};
}

std::vector<PowerPair> perfect_power_exponents(const Int& N, unsigned maxM) {
    if (maxM < 2) throw domain_error("perfect_power_exponents: maxM must be >= 2");
    std::vector<PowerPair> out;
    if (sign(N) == 0) {
        for (unsigned m = 2; m <= maxM; ++m) out.push_back({0, m});
        return out;
    }
    if (N == 1) {
        for (unsigned m = 2; m <= maxM; ++m) out.push_back({1, m});
        return out;
    }
    if (N == -1) {
        for (unsigned m = 3; m <= maxM; m += 2) out.push_back({-1, m});
        return out;
    }
    auto [core, e] = power_core(N);
    for (unsigned m = 2; m <= maxM; ++m) {
        if (e % m != 0) continue;
        out.push_back({pow_ui(core, e / m), m});
    }
    return out;
}

std::vector<std::pair<Int, Int>> divisor_pairs(const Int& N) {
    if (sign(N) == 0) throw domain_error("divisor_pairs: N must be nonzero");
    Int A = abs(N);
    std::vector<Int> divs;
    for (Int d = 1; d * d <= A; ++d) {
        if (divides(d, A)) {
            divs.push_back(d);
            if (d * d != A) divs.push_back(exact_div(A, d));
        }
    }
    std::sort(divs.begin(), divs.end());
    std::vector<std::pair<Int, Int>> out;
    out.reserve(2 * divs.size());
    for (const Int& d : divs) out.emplace_back(d, exact_div(N, d));
    for (const Int& d : divs) out.emplace_back(-d, exact_div(N, -d));
    return out;
}

namespace {

Int powmod(Int base, Int e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Strong pseudoprime test to the given base.
bool strong_probable_prime(const Int& n, const Int& base) {
    Int d = n - 1;
    unsigned s = 0;
    while (divides(2, d)) {
        d = exact_div(d, 2);
        ++s;
    }
    Int x = powmod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const Int& n) {
    if (sign(n) < 0) throw domain_error("is_prime: n must be >= 0");
    if (n < 2) return false;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n == p) return true;
        if (mod_ui(n, static_cast<unsigned long>(p)) == 0) return false;
    }
    if (n < 65536) {
        for (long d = 41; d * d <= n; d += 2) {
            if (mod_ui(n, static_cast<unsigned long>(d)) == 0) return false;
        }
        return true;
    }
    // Deterministic for n < 3.3e24 (covers everything the pipeline produces).
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (!strong_probable_prime(n, a)) return false;
    }
    return true;
}

std::vector<long> primes_below(long limit) {
    std::vector<long> ps;
    if (limit <= 2) return ps;
    std::vector<bool> sieve(static_cast<size_t>(limit), true);
    for (long i = 2; i < limit; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        ps.push_back(i);
        for (long j = i * i; j < limit; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return ps;
}

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

Int pollard_rho(const Int& n) {
    // n odd composite, no factor below 10^6.
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::vector<std::pair<Int, unsigned>>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(exact_div(n, d), out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factor(const Int& n) {
    if (sign(n) == 0) throw domain_error("factor: n must be nonzero");
    Int m = abs(n);
    std::vector<std::pair<Int, unsigned>> out;
    for (long p = 2; p < 1000000 && Int(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        if (mod_ui(m, static_cast<unsigned long>(p)) != 0) continue;
        unsigned e = 0;
        while (mod_ui(m, static_cast<unsigned long>(p)) == 0) {
            m = exact_div(m, p);
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (m > 1) {
        std::vector<std::pair<Int, unsigned>> rest;
        factor_into(m, rest);
        std::sort(rest.begin(), rest.end());
        for (size_t i = 0; i < rest.size();) {
            size_t j = i;
            unsigned e = 0;
            while (j < rest.size() && rest[j].first == rest[i].first) {
                e += rest[j].second;
                ++j;
            }
            out.emplace_back(rest[i].first, e);
            i = j;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace deca::arith
