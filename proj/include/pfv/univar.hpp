#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "pfv/modarith.hpp"

namespace pfv::univar {

// Dense univariate polynomial over Z, little-endian coefficients.
// Leading zeros allowed transiently; call normalize() before degree checks.
using ZPoly = std::vector<mpz_class>;

void normalize(ZPoly& f);
int degree(const ZPoly& f); // -1 for the zero polynomial
mpz_class eval(const ZPoly& f, const mpz_class& x);
ZPoly derivative(const ZPoly& f);
mpz_class content(const ZPoly& f); // non-negative, 0 for the zero polynomial
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const mpz_class& c);

// Coefficients reduced into [0, m).
modarith::fppoly::Poly reduce_u64(const ZPoly& f, uint64_t m);

// Degree of gcd(f, g) over Q, via the subresultant pseudo-remainder sequence.
// f and g must not both be zero.
int gcd_degree(ZPoly a, ZPoly b);

// Res(f, g) via fraction-free (Bareiss) elimination of the Sylvester matrix.
mpz_class resultant(const ZPoly& f, const ZPoly& g);

// Solution set of f(x) = 0 mod p^e, in coarse form: the set is the full
// preimage of `residues` taken mod `modulus`, where modulus = p^{e'} with
// e' <= e (content of f absorbs the difference). all == true means every
// residue mod p^e is a solution (modulus 1).
struct PrimePowerRoots {
    uint64_t modulus = 1;
    std::vector<uint64_t> residues;
    bool all = false;
};

PrimePowerRoots roots_mod_prime_power(const ZPoly& f, uint64_t p, unsigned e,
                                      uint64_t residue_budget);

} // namespace pfv::univar
