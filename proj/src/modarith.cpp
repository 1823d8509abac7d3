#include "pfv/modarith.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace pfv::modarith {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
    // extended Euclid on signed 128-bit intermediates
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (t < 0) t += m;
    return static_cast<uint64_t>(t);
}

Montgomery64::Montgomery64(uint64_t modulus) : m(modulus) {
    assert(m & 1);
    uint64_t inv = m; // Newton iteration for m^{-1} mod 2^64
    for (int i = 0; i < 5; i++) inv *= 2 - m * inv;
    minv = ~inv + 1; // -m^{-1}
    __uint128_t r = (~static_cast<__uint128_t>(0)) % m + 1; // 2^64 mod m
    r2 = static_cast<uint64_t>((r * r) % m);                // 2^128 mod m
}

uint64_t Montgomery64::pow(uint64_t a_mont, uint64_t e) const {
    uint64_t r = one();
    while (e) {
        if (e & 1) r = mul(r, a_mont);
        a_mont = mul(a_mont, a_mont);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        s++;
    }
    Montgomery64 mg(n);
    const uint64_t n1 = mg.to(n - 1);
    const uint64_t one = mg.one();
    // bases covering all n < 2^64 (Sinclair's seven-base set)
    for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        uint64_t am = mg.to(a % n);
        if (am == 0) continue;
        uint64_t x = mg.pow(am, d);
        if (x == one || x == n1) continue;
        bool witness = true;
        for (int i = 1; i < s; i++) {
            x = mg.mul(x, x);
            if (x == n1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t brent_rho_u64(uint64_t n, uint64_t seed) {
    if (!(n & 1)) return 2;
    Montgomery64 mg(n);
    for (uint64_t attempt = 0;; attempt++) {
        uint64_t c = splitmix64(seed + attempt) % (n - 2) + 1;
        uint64_t cm = mg.to(c);
        uint64_t y = mg.to(splitmix64(seed ^ (attempt + 0x1234)) % n);
        uint64_t g = 1, r = 1, q = mg.one();
        uint64_t x = 0, ys = 0;
        const uint64_t batch = 128;
        while (g == 1) {
            x = y;
            for (uint64_t i = 0; i < r; i++) y = mg.add(mg.mul(y, y), cm);
            for (uint64_t k = 0; k < r && g == 1; k += batch) {
                ys = y;
                uint64_t lim = std::min(batch, r - k);
                for (uint64_t i = 0; i < lim; i++) {
                    y = mg.add(mg.mul(y, y), cm);
                    q = mg.mul(q, x > y ? x - y : y - x);
                }
                g = std::gcd(mg.from(q), n);
            }
            r <<= 1;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = mg.add(mg.mul(ys, ys), cm);
                uint64_t d = x > ys ? x - ys : ys - x;
                g = std::gcd(mg.from(d), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

namespace fppoly {

void normalize(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

uint64_t eval(const Poly& f, uint64_t x, const Montgomery64& mg) {
    uint64_t xm = mg.to(x % mg.m);
    uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = mg.add(mg.mul(acc, xm), mg.to(f[i]));
    }
    return mg.from(acc);
}

Poly mul(const Poly& a, const Poly& b, const Montgomery64& mg) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    // operands in plain domain: convert once
    Poly am(a.size()), bm(b.size());
    for (std::size_t i = 0; i < a.size(); i++) am[i] = mg.to(a[i]);
    for (std::size_t i = 0; i < b.size(); i++) bm[i] = mg.to(b[i]);
    std::vector<uint64_t> cm(c.size(), 0);
    for (std::size_t i = 0; i < am.size(); i++) {
        if (am[i] == 0) continue;
        for (std::size_t j = 0; j < bm.size(); j++) {
            cm[i + j] = mg.add(cm[i + j], mg.mul(am[i], bm[j]));
        }
    }
    for (std::size_t i = 0; i < c.size(); i++) c[i] = mg.from(cm[i]);
    normalize(c);
    return c;
}

Poly rem(Poly a, const Poly& b, const Montgomery64& mg) {
    normalize(a);
    int db = degree(b);
    assert(db >= 0);
    if (db == 0) return {};
    uint64_t lcinv = invmod(b[db], mg.m);
    while (degree(a) >= db) {
        int da = degree(a);
        uint64_t factor = mulmod(a[da], lcinv, mg.m);
        if (factor != 0) {
            for (int i = 0; i <= db; i++) {
                uint64_t sub = mulmod(factor, b[i], mg.m);
                a[da - db + i] = submod(a[da - db + i], sub, mg.m);
            }
        }
        a.pop_back();
        normalize(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b, const Montgomery64& mg) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        Poly r = rem(a, b, mg);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        uint64_t inv = invmod(a.back(), mg.m);
        for (auto& c : a) c = mulmod(c, inv, mg.m);
    }
    return a;
}

Poly derivative(const Poly& f, const Montgomery64& mg) {
    if (f.size() <= 1) return {};
    Poly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); i++) d[i - 1] = mulmod(f[i], i % mg.m, mg.m);
    normalize(d);
    return d;
}

namespace {

Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f, const Montgomery64& mg) {
    return rem(mul(a, b, mg), f, mg);
}

} // namespace

Poly pow_x_mod(uint64_t e, const Poly& f, const Montgomery64& mg) {
    return pow_linear_mod(0, e, f, mg);
}

Poly pow_linear_mod(uint64_t a, uint64_t e, const Poly& f, const Montgomery64& mg) {
    Poly base = rem(Poly{a % mg.m, 1}, f, mg);
    Poly acc{1};
    while (e) {
        if (e & 1) acc = mulmod_poly(acc, base, f, mg);
        base = mulmod_poly(base, base, f, mg);
        e >>= 1;
    }
    return acc;
}

namespace {

// Roots by brute scan, for tiny p or tiny degree leftovers.
std::vector<uint64_t> roots_scan(const Poly& f, uint64_t p) {
    std::vector<uint64_t> out;
    if (f.empty()) return out;
    // incremental evaluation not worth it here; p is small
    for (uint64_t x = 0; x < p; x++) {
        uint64_t acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = (mulmod(acc, x, p) + f[i]) % p;
        if (acc == 0) out.push_back(x);
    }
    return out;
}

// g is a monic product of distinct linear factors; split off all roots.
void split_linear(const Poly& g, uint64_t p, const Montgomery64& mg, uint64_t seed,
                  std::vector<uint64_t>& out) {
    int d = degree(g);
    if (d <= 0) return;
    if (d == 1) {
        // monic: x + g[0]
        out.push_back(g[0] == 0 ? 0 : p - g[0]);
        return;
    }
    for (uint64_t attempt = 0;; attempt++) {
        uint64_t a = splitmix64(seed + attempt) % p;
        // gcd(g, (x+a)^((p-1)/2) - 1) separates roots r with chi(r+a) = 1
        Poly h = pow_linear_mod(a, (p - 1) / 2, g, mg);
        if (h.empty()) continue;
        h[0] = submod(h[0], 1, p);
        normalize(h);
        Poly d1 = gcd(h, g, mg);
        int dd = degree(d1);
        if (dd <= 0 || dd >= d) continue;
        // complementary factor
        Poly d2 = g;
        {
            // exact division d2 / d1 via repeated remainder-free elimination
            Poly q;
            Poly r = d2;
            int deg1 = degree(d1);
            q.assign(degree(r) - deg1 + 1, 0);
            while (degree(r) >= deg1) {
                int dr = degree(r);
                uint64_t factor = r[dr]; // d1 monic
                q[dr - deg1] = factor;
                for (int i = 0; i <= deg1; i++) {
                    r[dr - deg1 + i] = submod(r[dr - deg1 + i], mulmod(factor, d1[i], p), p);
                }
                normalize(r);
            }
            d2 = q;
        }
        split_linear(d1, p, mg, splitmix64(seed ^ 0x517cc1b727220a95ULL), out);
        split_linear(d2, p, mg, splitmix64(seed + 0x2545f4914f6cdd1dULL), out);
        return;
    }
}

} // namespace

uint32_t count_roots(const Poly& f, uint64_t p) {
    if (f.empty()) return 0; // caller handles the zero polynomial
    if (degree(f) == 0) return 0;
    if (p <= 64 || degree(f) >= static_cast<int>(p)) {
        return static_cast<uint32_t>(roots_scan(f, p).size());
    }
    Montgomery64 mg(p);
    Poly xp = pow_x_mod(p, f, mg);
    // xp - x
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = submod(xp[1], 1, p);
    normalize(xp);
    Poly g = gcd(xp, f, mg);
    int d = degree(g);
    return d < 0 ? 0 : static_cast<uint32_t>(d);
}

std::vector<uint64_t> roots(const Poly& f, uint64_t p) {
    std::vector<uint64_t> out;
    if (f.empty() || degree(f) == 0) return out;
    if (p <= 64 || degree(f) >= static_cast<int>(p)) {
        out = roots_scan(f, p);
        return out;
    }
    Montgomery64 mg(p);
    Poly xp = pow_x_mod(p, f, mg);
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = submod(xp[1], 1, p);
    normalize(xp);
    Poly g = gcd(xp, f, mg);
    if (degree(g) <= 0) return out;
    uint64_t seed = splitmix64(p ^ (static_cast<uint64_t>(degree(f)) << 32));
    split_linear(g, p, mg, seed, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fppoly

} // namespace pfv::modarith
