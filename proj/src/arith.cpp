#include "pfv/arith.hpp"

#include <algorithm>
#include <cmath>

#include "pfv/errors.hpp"
#include "pfv/modarith.hpp"

namespace pfv::arith {

using modarith::is_prime_u64;

mpz_class FactorizationResult::reconstruct() const {
    mpz_class v = sign;
    mpz_class pe;
    for (const auto& [p, e] : factors) {
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

unsigned FactorizationResult::max_exponent() const {
    unsigned m = 0;
    for (const auto& [p, e] : factors) m = std::max(m, e);
    return m;
}

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        const uint32_t N = 1'000'000;
        std::vector<uint8_t> comp(N + 1, 0);
        std::vector<uint32_t> out;
        out.reserve(78498);
        for (uint32_t i = 2; i <= N; i++) {
            if (!comp[i]) {
                out.push_back(i);
                for (uint64_t j = static_cast<uint64_t>(i) * i; j <= N; j += i) comp[j] = 1;
            }
        }
        return out;
    }();
    return primes;
}

// ---------------------------------------------------------------------------
// Segmented prime generation
// ---------------------------------------------------------------------------

PrimeRange::PrimeRange(uint64_t lo_exclusive, uint64_t hi_inclusive, std::size_t segment)
    : cursor_(lo_exclusive + 1), hi_(hi_inclusive), segment_(segment) {
    if (hi_ >= 4) {
        uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(hi_))) + 2;
        std::vector<uint8_t> comp(root + 1, 0);
        for (uint64_t i = 2; i <= root; i++) {
            if (!comp[i]) {
                base_.push_back(i);
                for (uint64_t j = i * i; j <= root; j += i) comp[j] = 1;
            }
        }
    }
}

void PrimeRange::refill() {
    buffer_.clear();
    buf_pos_ = 0;
    while (buffer_.empty() && cursor_ <= hi_) {
        uint64_t lo = cursor_;
        uint64_t hi = std::min(hi_, lo + segment_ - 1);
        std::vector<uint8_t> sieve(hi - lo + 1, 1);
        for (uint64_t p : base_) {
            if (p * p > hi) break;
            uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (uint64_t j = start; j <= hi; j += p) sieve[j - lo] = 0;
        }
        for (uint64_t v = lo; v <= hi; v++) {
            if (v >= 2 && sieve[v - lo]) buffer_.push_back(v);
        }
        cursor_ = hi + 1;
        if (hi == UINT64_MAX) break;
    }
}

std::optional<uint64_t> PrimeRange::next() {
    if (buf_pos_ >= buffer_.size()) {
        refill();
        if (buffer_.empty()) return std::nullopt;
    }
    return buffer_[buf_pos_++];
}

void for_each_prime(uint64_t lo_exclusive, uint64_t hi_inclusive,
                    const std::function<void(uint64_t)>& fn) {
    PrimeRange r(lo_exclusive, hi_inclusive);
    while (auto p = r.next()) fn(*p);
}

std::vector<uint64_t> primes_in(double lo, double hi) {
    if (lo > hi) throw DomainError("primes_in requires lo <= hi");
    std::vector<uint64_t> out;
    if (hi < 2) return out;
    uint64_t lo_i = lo < 1 ? 1 : static_cast<uint64_t>(std::floor(lo));
    uint64_t hi_i = static_cast<uint64_t>(std::floor(hi));
    PrimeRange r(lo_i, hi_i);
    while (auto p = r.next()) {
        if (static_cast<double>(*p) > lo) out.push_back(*p);
    }
    return out;
}

uint64_t prime_count_ap(double B, uint64_t q, long a) {
    if (q < 1) throw DomainError("prime_count_ap requires q >= 1");
    if (B < 2) return 0;
    uint64_t target = static_cast<uint64_t>(((a % static_cast<long>(q)) + static_cast<long>(q)) %
                                            static_cast<long>(q));
    uint64_t count = 0;
    for_each_prime(1, static_cast<uint64_t>(std::floor(B)), [&](uint64_t p) {
        if (p % q == target) count++;
    });
    return count;
}

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

namespace {

void factor_u64_rec(uint64_t n, uint64_t seed, std::vector<std::pair<uint64_t, unsigned>>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.emplace_back(n, 1);
        return;
    }
    // peel perfect powers first; rho converges faster on the reduced base.
    // Prime exponents suffice: composite powers reduce recursively.
    for (unsigned e : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u, 59u, 61u}) {
        if (e >= 64 || n < (1ull << e)) break;
        uint64_t r = static_cast<uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / e)));
        for (uint64_t cand = r > 1 ? r - 1 : 1; cand <= r + 1; cand++) {
            if (cand < 2) continue;
            uint64_t acc = 1;
            bool overflow = false;
            for (unsigned i = 0; i < e; i++) {
                if (acc > UINT64_MAX / cand) {
                    overflow = true;
                    break;
                }
                acc *= cand;
            }
            if (!overflow && acc == n) {
                std::vector<std::pair<uint64_t, unsigned>> base;
                factor_u64_rec(cand, seed, base);
                for (auto& [p, k] : base) out.emplace_back(p, k * e);
                return;
            }
        }
    }
    uint64_t d = modarith::brent_rho_u64(n, seed);
    factor_u64_rec(d, modarith::splitmix64(seed ^ d), out);
    factor_u64_rec(n / d, modarith::splitmix64(seed + d), out);
}

void merge_factors(std::vector<std::pair<uint64_t, unsigned>>& fs) {
    std::sort(fs.begin(), fs.end());
    std::size_t w = 0;
    for (std::size_t i = 0; i < fs.size(); i++) {
        if (w > 0 && fs[w - 1].first == fs[i].first) fs[w - 1].second += fs[i].second;
        else fs[w++] = fs[i];
    }
    fs.resize(w);
}

bool mpz_is_probab_prime_fixed(const mpz_class& n) {
    // fixed witness set: the first 40 primes; deterministic, reproducible
    if (n < 2) return false;
    const auto& primes = small_primes();
    for (int i = 0; i < 40; i++) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), primes[static_cast<std::size_t>(i)])) {
            return n == primes[static_cast<std::size_t>(i)];
        }
    }
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    mpz_class x, n1 = n - 1;
    for (int i = 0; i < 40; i++) {
        mpz_class a = primes[static_cast<std::size_t>(i)];
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n1) continue;
        bool witness = true;
        for (unsigned long r = 1; r < s; r++) {
            x = x * x % n;
            if (x == n1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

void factor_mpz_rec(const mpz_class& n, uint64_t seed, Certification& cert,
                    std::vector<std::pair<mpz_class, unsigned>>& out) {
    if (n == 1) return;
    if (n.fits_ulong_p()) {
        std::vector<std::pair<uint64_t, unsigned>> fs;
        factor_u64_rec(n.get_ui(), seed, fs);
        for (auto& [p, e] : fs) out.emplace_back(mpz_class(static_cast<unsigned long>(p)), e);
        return;
    }
    if (mpz_is_probab_prime_fixed(n)) {
        cert = Certification::probabilistic;
        out.emplace_back(n, 1);
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); e++) {
            mpz_class root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
                std::vector<std::pair<mpz_class, unsigned>> base;
                factor_mpz_rec(root, seed, cert, base);
                for (auto& [p, k] : base) out.emplace_back(p, k * e);
                return;
            }
        }
    }
    // Pollard rho with Brent cycle detection over mpz
    mpz_class x, y, c, d, q, t;
    for (uint64_t attempt = 0;; attempt++) {
        c = static_cast<unsigned long>(modarith::splitmix64(seed + attempt) & 0xffff) + 1;
        x = static_cast<unsigned long>(modarith::splitmix64(seed ^ (attempt + 77)) & 0xffffffff) + 2;
        y = x;
        d = 1;
        q = 1;
        unsigned steps = 0;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            t = x > y ? x - y : y - x;
            if (t == 0) break;
            q = q * t % n;
            if (++steps % 64 == 0) {
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d == 1) {
            mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        if (d > 1 && d < n) {
            factor_mpz_rec(d, modarith::splitmix64(seed + 13 * attempt + 1), cert, out);
            mpz_class rest;
            mpz_divexact(rest.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
            factor_mpz_rec(rest, modarith::splitmix64(seed + 31 * attempt + 2), cert, out);
            return;
        }
    }
}

} // namespace

void factor_u64(uint64_t n, const FactorConfig& cfg,
                std::vector<std::pair<uint64_t, unsigned>>& out) {
    out.clear();
    if (n == 0) throw DomainError("cannot factor 0");
    if (n == 1) return;
    const auto& primes = small_primes();
    for (uint32_t p : primes) {
        if (p < cfg.trial_floor) continue;
        if (static_cast<uint64_t>(p) > cfg.trial_bound) break;
        if (static_cast<uint64_t>(p) * p > n) break;
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                e++;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) factor_u64_rec(n, cfg.rho_seed, out);
    merge_factors(out);
}

FactorizationResult factorize(const mpz_class& N, const FactorConfig& cfg) {
    if (N == 0) throw DomainError("cannot factor 0");
    FactorizationResult r;
    r.value = N;
    r.sign = N < 0 ? -1 : 1;
    mpz_class n = abs(N);
    if (n == 1) return r;
    if (n.fits_ulong_p() && sizeof(unsigned long) == 8) {
        std::vector<std::pair<uint64_t, unsigned>> fs;
        factor_u64(n.get_ui(), cfg, fs);
        for (auto& [p, e] : fs) r.factors.emplace_back(mpz_class(static_cast<unsigned long>(p)), e);
        return r;
    }
    // trial division first, then rho on the remainder
    const auto& primes = small_primes();
    for (uint32_t p : primes) {
        if (p < cfg.trial_floor) continue;
        if (static_cast<uint64_t>(p) > cfg.trial_bound) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                e++;
            } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
            r.factors.emplace_back(mpz_class(p), e);
        }
        if (n == 1) break;
    }
    if (n > 1) {
        std::vector<std::pair<mpz_class, unsigned>> rest;
        factor_mpz_rec(n, cfg.rho_seed, r.certification, rest);
        std::sort(rest.begin(), rest.end());
        std::size_t w = 0;
        for (std::size_t i = 0; i < rest.size(); i++) {
            if (w > 0 && rest[w - 1].first == rest[i].first) rest[w - 1].second += rest[i].second;
            else rest[w++] = rest[i];
        }
        rest.resize(w);
        r.factors.insert(r.factors.end(), rest.begin(), rest.end());
    }
    std::sort(r.factors.begin(), r.factors.end());
    return r;
}

bool is_kfree_u64(uint64_t n, unsigned k, const FactorConfig& cfg) {
    if (k < 2) throw DomainError("k-freeness requires k >= 2");
    if (n == 0) return false;
    if (n == 1) return true;
    const auto& primes = small_primes();
    const uint64_t quick_trial = 10'000;
    for (uint32_t p : primes) {
        if (p < cfg.trial_floor) continue;
        if (p > quick_trial) break;
        uint64_t pk = 1;
        bool over = false;
        for (unsigned i = 0; i < k; i++) {
            if (pk > n / p) {
                over = true;
                break;
            }
            pk *= p;
        }
        if (over || pk > n) break; // no prime power p^k can divide the remainder
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                e++;
            }
            if (e >= k) return false;
        }
        if (n == 1) return true;
    }
    if (n == 1) return true;
    // every prime left in n exceeds the last trial prime, so n < quick_trial^k
    // rules out any remaining k-th power divisor
    {
        __uint128_t fp = 1;
        bool small = false;
        for (unsigned i = 0; i < k; i++) {
            fp *= quick_trial;
            if (fp > n) {
                small = true;
                break;
            }
        }
        if (small) return true;
    }
    if (is_prime_u64(n)) return true;
    std::vector<std::pair<uint64_t, unsigned>> fs;
    FactorConfig sub = cfg;
    sub.trial_floor = quick_trial;
    factor_u64(n, sub, fs);
    for (auto& [p, e] : fs) {
        if (e >= k) return false;
    }
    return true;
}

bool is_kfree(const mpz_class& N, unsigned k, const FactorConfig& cfg) {
    if (k < 2) throw DomainError("k-freeness requires k >= 2");
    if (N == 0) return false;
    mpz_class n = abs(N);
    if (n == 1) return true;
    if (n.fits_ulong_p() && sizeof(unsigned long) == 8) {
        return is_kfree_u64(n.get_ui(), k, cfg);
    }
    FactorizationResult f = factorize(n, cfg);
    return f.max_exponent() < k;
}

int mobius(const mpz_class& m, const FactorConfig& cfg) {
    if (m < 1) throw DomainError("mobius requires m >= 1");
    if (m == 1) return 1;
    FactorizationResult f = factorize(m, cfg);
    for (const auto& [p, e] : f.factors) {
        if (e >= 2) return 0;
    }
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

unsigned omega(const mpz_class& m, const FactorConfig& cfg) {
    if (m < 1) throw DomainError("omega requires m >= 1");
    if (m == 1) return 0;
    return static_cast<unsigned>(factorize(m, cfg).factors.size());
}

double sigma_alpha(uint64_t m, double alpha, const FactorConfig& cfg) {
    if (m < 1) throw DomainError("sigma_alpha requires m >= 1");
    std::vector<std::pair<uint64_t, unsigned>> fs;
    factor_u64(m, cfg, fs);
    std::vector<uint64_t> divisors{1};
    for (const auto& [p, e] : fs) {
        std::size_t base = divisors.size();
        uint64_t pe = 1;
        for (unsigned i = 1; i <= e; i++) {
            pe *= p;
            for (std::size_t j = 0; j < base; j++) divisors.push_back(divisors[j] * pe);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    double acc = 0.0;
    for (uint64_t d : divisors) acc += std::pow(static_cast<double>(d), alpha);
    return acc;
}

} // namespace pfv::arith
