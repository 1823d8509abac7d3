#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "pfv/arith.hpp"
#include "pfv/poly.hpp"

namespace pfv::localdensity {

struct EnumBudget {
    uint64_t points = 100'000'000; // evaluated residue points / enumerated lifts
};

enum class RhoMethod { exhaustive, hensel_lift, mixed };

// One Euler-factor numerator: rho_F(p^e) and how it was obtained.
// hensel_lift is set only when every solution mod p was nonsingular.
struct LocalDensityRecord {
    uint64_t p = 0;
    unsigned e = 1;
    mpz_class count;
    RhoMethod method = RhoMethod::exhaustive;
};

struct AdmissibilityVerdict {
    unsigned k = 2;
    bool admissible = false;
    mpz_class fixed_divisor;
    std::optional<mpz_class> witness; // prime p with p^k | fixed_divisor
};

// #{x in (Z/mZ)^n : F(x) = 0 mod m} by full enumeration. The oracle path:
// no lifting, no multiplicativity. m^n must stay within the budget.
mpz_class rho_exhaustive(const Polynomial& F, const mpz_class& m, const EnumBudget& budget = {});

// All roots of univariate f mod p^{e_target} when p does not divide disc(f);
// refuses singular or degenerate inputs.
std::vector<mpz_class> hensel_lift_roots(const Polynomial& f, uint64_t p, unsigned e_target);

// Exact rho_F(p^e): solutions mod p are enumerated; nonsingular ones
// contribute p^{(n-1)(e-1)} fibers, singular ones are resolved exactly by a
// shifted-polynomial recursion (oracle-checked against rho_exhaustive).
LocalDensityRecord rho(const Polynomial& F, uint64_t p, unsigned e, const EnumBudget& budget = {});

// prod over p^e || m of rho(F, p^e); exact by CRT.
mpz_class rho_multiplicative(const Polynomial& F, const mpz_class& m,
                             const arith::FactorConfig& fc = {}, const EnumBudget& budget = {});

// gcd of F over all integer points, computed on the grid {0..d}^n.
mpz_class fixed_divisor(const Polynomial& F);

// F is k-admissible iff its fixed divisor is k-free.
AdmissibilityVerdict is_admissible(const Polynomial& F, unsigned k,
                                   const arith::FactorConfig& fc = {});

struct RatioRow {
    uint64_t p;
    mpz_class rho;
    double ratio; // rho_F(p^k) / p^{nk-2}
};

struct Lemma22Report {
    unsigned k = 2;
    double p_max = 0;
    std::vector<RatioRow> rows;
    double max_ratio = 0.0; // the empirical implied constant
    bool squarefree_exact = false;
    bool squarefree_overridden = false;
};

Lemma22Report lemma22_ratio_report(const Polynomial& F, unsigned k, double p_max,
                                   const SquarefreeOptions& sf = {}, const EnumBudget& budget = {});

struct LangWeilRow {
    uint64_t p;
    mpz_class rho;
    double error; // (rho_F(p) - p^{n-1}) / p^{n-3/2}
};

struct LangWeilReport {
    double p_max = 0;
    bool irreducibility_asserted = true; // user assertion, never decided here
    std::vector<LangWeilRow> rows;
    double max_abs_error = 0.0;
};

LangWeilReport langweil_report(const Polynomial& F, double p_max, bool irreducibility_asserted,
                               const EnumBudget& budget = {});

// Full solution set of F = 0 mod p^e in coarse form: the set is the preimage
// of `points` (vectors mod `modulus`), where modulus = p^{e'} with e' <= e.
struct ResidueClassSet {
    uint64_t modulus = 1;
    std::vector<std::vector<uint64_t>> points;
    bool all = false; // every residue vector is a solution
};

ResidueClassSet congruence_solutions(const Polynomial& F, uint64_t p, unsigned e,
                                     const EnumBudget& budget = {});

} // namespace pfv::localdensity
