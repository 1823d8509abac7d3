#pragma once

#include <cstdint>
#include <vector>

namespace pfv::modarith {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
    a += b;
    if (a >= m || a < b) a -= m;
    return a;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);

// Modular inverse of a mod m, gcd(a, m) must be 1.
uint64_t invmod(uint64_t a, uint64_t m);

// Montgomery multiplication for odd moduli < 2^63.
struct Montgomery64 {
    uint64_t m = 0;
    uint64_t minv = 0; // -m^{-1} mod 2^64
    uint64_t r2 = 0;   // 2^128 mod m

    Montgomery64() = default;
    explicit Montgomery64(uint64_t modulus);

    uint64_t reduce(__uint128_t t) const {
        uint64_t u = static_cast<uint64_t>(t) * minv;
        uint64_t r = static_cast<uint64_t>((t + static_cast<__uint128_t>(u) * m) >> 64);
        return r >= m ? r - m : r;
    }
    uint64_t to(uint64_t x) const { return reduce(static_cast<__uint128_t>(x) * r2); }
    uint64_t from(uint64_t x) const { return reduce(x); }
    uint64_t mul(uint64_t a, uint64_t b) const { return reduce(static_cast<__uint128_t>(a) * b); }
    uint64_t add(uint64_t a, uint64_t b) const { return addmod(a, b, m); }
    uint64_t sub(uint64_t a, uint64_t b) const { return submod(a, b, m); }
    uint64_t one() const { return to(1); }
    uint64_t pow(uint64_t a_mont, uint64_t e) const;
};

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(uint64_t n);

// Brent's cycle variant of Pollard rho with batched gcds. Returns a nontrivial
// factor of composite n > 1 (n must not be prime). Deterministic for fixed seed.
uint64_t brent_rho_u64(uint64_t n, uint64_t seed);

// Dense polynomials over F_p, little-endian coefficient order, normalized so
// that the leading coefficient is nonzero (empty vector = zero polynomial).
namespace fppoly {

using Poly = std::vector<uint64_t>;

void normalize(Poly& f);
int degree(const Poly& f); // -1 for zero
uint64_t eval(const Poly& f, uint64_t x, const Montgomery64& mg); // plain-domain x and result

Poly mul(const Poly& a, const Poly& b, const Montgomery64& mg);
// Remainder of a modulo monic-ized b (b nonzero).
Poly rem(Poly a, const Poly& b, const Montgomery64& mg);
Poly gcd(Poly a, Poly b, const Montgomery64& mg); // monic gcd
Poly derivative(const Poly& f, const Montgomery64& mg);

// x^e mod f, for f of degree >= 1.
Poly pow_x_mod(uint64_t e, const Poly& f, const Montgomery64& mg);
// (x + a)^e mod f.
Poly pow_linear_mod(uint64_t a, uint64_t e, const Poly& f, const Montgomery64& mg);

// Number of distinct roots of f in F_p (f nonzero, coefficients reduced mod p).
uint32_t count_roots(const Poly& f, uint64_t p);
// All distinct roots of f in F_p, ascending. Deterministic.
std::vector<uint64_t> roots(const Poly& f, uint64_t p);

} // namespace fppoly

// splitmix64; used to derive deterministic per-object seeds.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace pfv::modarith
