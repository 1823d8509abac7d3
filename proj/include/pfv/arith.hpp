#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pfv::arith {

struct FactorConfig {
    uint64_t trial_bound = 1'000'000; // trial division by primes <= this
    uint64_t trial_floor = 2;         // skip trial primes below (engine hint: none exist)
    uint64_t rho_seed = 0x5eed0f2aULL;
};

enum class Certification { deterministic, probabilistic };

// Complete signed factorization; primes strictly increasing. `certification`
// is deterministic when every listed prime is below 2^64 (proved by fixed-base
// Miller-Rabin), probabilistic otherwise.
struct FactorizationResult {
    mpz_class value;
    int sign = 1;
    std::vector<std::pair<mpz_class, unsigned>> factors;
    Certification certification = Certification::deterministic;

    mpz_class reconstruct() const;
    unsigned max_exponent() const;
};

FactorizationResult factorize(const mpz_class& N, const FactorConfig& cfg = {});

// k >= 2. N == 0 is not k-free; |N| == 1 is.
bool is_kfree(const mpz_class& N, unsigned k, const FactorConfig& cfg = {});

int mobius(const mpz_class& m, const FactorConfig& cfg = {});
unsigned omega(const mpz_class& m, const FactorConfig& cfg = {});

// sum over divisors s of m of s^alpha; exact divisor set, double accumulation.
double sigma_alpha(uint64_t m, double alpha, const FactorConfig& cfg = {});

// #{p <= B prime : p == a (mod q)}
uint64_t prime_count_ap(double B, uint64_t q, long a);

// All primes in (lo, hi], ascending.
std::vector<uint64_t> primes_in(double lo, double hi);

// Segmented generator over (lo, hi]; independent instances are safe to use
// concurrently.
class PrimeRange {
public:
    PrimeRange(uint64_t lo_exclusive, uint64_t hi_inclusive, std::size_t segment = 1 << 19);
    std::optional<uint64_t> next();

private:
    void refill();
    uint64_t cursor_;
    uint64_t hi_;
    std::size_t segment_;
    std::vector<uint64_t> base_;
    std::vector<uint64_t> buffer_;
    std::size_t buf_pos_ = 0;
};

void for_each_prime(uint64_t lo_exclusive, uint64_t hi_inclusive,
                    const std::function<void(uint64_t)>& fn);

// Shared table of primes <= 1e6, built once.
const std::vector<uint32_t>& small_primes();

// u64 fast paths used by the counting engines.
void factor_u64(uint64_t n, const FactorConfig& cfg,
                std::vector<std::pair<uint64_t, unsigned>>& out);
bool is_kfree_u64(uint64_t n, unsigned k, const FactorConfig& cfg);

} // namespace pfv::arith
