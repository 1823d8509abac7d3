#include "pfv/univar.hpp"

#include <algorithm>
#include <cassert>

#include "pfv/errors.hpp"

namespace pfv::univar {

void normalize(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ZPoly& f) {
    int i = static_cast<int>(f.size()) - 1;
    while (i >= 0 && f[static_cast<std::size_t>(i)] == 0) i--;
    return i;
}

mpz_class eval(const ZPoly& f, const mpz_class& x) {
    mpz_class acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = acc * x + f[i];
    }
    return acc;
}

ZPoly derivative(const ZPoly& f) {
    ZPoly d;
    if (f.size() <= 1) return d;
    d.resize(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); i++) d[i - 1] = f[i] * static_cast<unsigned long>(i);
    normalize(d);
    return d;
}

mpz_class content(const ZPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    ZPoly c;
    if (a.empty() || b.empty()) return c;
    c.assign(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); j++) c[i + j] += a[i] * b[j];
    }
    normalize(c);
    return c;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly c = a.size() >= b.size() ? a : b;
    const ZPoly& s = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < s.size(); i++) c[i] += s[i];
    normalize(c);
    return c;
}

ZPoly scale(const ZPoly& a, const mpz_class& c) {
    if (c == 0) return {};
    ZPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

modarith::fppoly::Poly reduce_u64(const ZPoly& f, uint64_t m) {
    modarith::fppoly::Poly r(f.size());
    mpz_class t;
    for (std::size_t i = 0; i < f.size(); i++) {
        t = f[i] % static_cast<unsigned long>(m);
        if (t < 0) t += static_cast<unsigned long>(m);
        r[i] = t.get_ui();
    }
    modarith::fppoly::normalize(r);
    return r;
}

namespace {

// lc(b)^{deg a - deg b + 1} * a  mod b, computed without fractions.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    normalize(a);
    int db = degree(b);
    assert(db >= 0);
    const mpz_class& lb = b[static_cast<std::size_t>(db)];
    int da = degree(a);
    int steps = da - db + 1;
    for (int s = 0; s < steps; s++) {
        da = degree(a);
        if (da < db) {
            // multiply remaining steps in one shot to keep the PRS exact
            mpz_class f;
            mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps - s));
            for (auto& c : a) c *= f;
            break;
        }
        mpz_class top = a[static_cast<std::size_t>(da)];
        for (int i = 0; i < da; i++) a[static_cast<std::size_t>(i)] *= lb;
        for (int i = 0; i < db; i++) {
            a[static_cast<std::size_t>(da - db + i)] -= top * b[static_cast<std::size_t>(i)];
        }
        a.resize(static_cast<std::size_t>(da));
        normalize(a);
    }
    return a;
}

} // namespace

int gcd_degree(ZPoly a, ZPoly b) {
    normalize(a);
    normalize(b);
    if (a.empty()) return degree(b);
    if (b.empty()) return degree(a);
    if (degree(a) < degree(b)) std::swap(a, b);
    mpz_class g = 1, h = 1;
    while (true) {
        int d = degree(a) - degree(b);
        ZPoly r = pseudo_rem(a, b);
        normalize(r);
        if (r.empty()) return degree(b);
        if (degree(b) == 0) return 0;
        mpz_class divisor;
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(d));
        divisor = g * hd;
        for (auto& c : r) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        }
        g = b[static_cast<std::size_t>(degree(b))];
        if (d > 0) {
            mpz_class gd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(d));
            mpz_class hd1;
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(d - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
        }
        a = std::move(b);
        b = std::move(r);
        if (degree(b) == 0) return 0;
    }
}

mpz_class resultant(const ZPoly& f_in, const ZPoly& g_in) {
    ZPoly f = f_in, g = g_in;
    normalize(f);
    normalize(g);
    int m = degree(f), n = degree(g);
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    const int N = m + n;
    std::vector<std::vector<mpz_class>> M(static_cast<std::size_t>(N),
                                          std::vector<mpz_class>(static_cast<std::size_t>(N), mpz_class(0)));
    for (int i = 0; i < n; i++) {
        for (int j = 0; j <= m; j++) M[i][i + j] = f[static_cast<std::size_t>(m - j)];
    }
    for (int i = 0; i < m; i++) {
        for (int j = 0; j <= n; j++) M[n + i][i + j] = g[static_cast<std::size_t>(n - j)];
    }
    // Bareiss fraction-free elimination
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < N - 1; k++) {
        if (M[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < N; i++) {
                if (M[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            std::swap(M[static_cast<std::size_t>(k)], M[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; i++) {
            for (int j = k + 1; j < N; j++) {
                mpz_class t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = std::move(t);
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[N - 1][N - 1] : -M[N - 1][N - 1];
}

namespace {

uint64_t pow_u64_checked(uint64_t p, unsigned e) {
    uint64_t r = 1;
    for (unsigned i = 0; i < e; i++) {
        if (r > (uint64_t(1) << 62) / p) {
            throw BudgetExceeded("prime power exceeds 2^62 in residue enumeration");
        }
        r *= p;
    }
    return r;
}

uint64_t eval_mod_u64(const ZPoly& f, uint64_t x, uint64_t m) {
    uint64_t acc = 0;
    mpz_class t;
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = modarith::mulmod(acc, x, m);
        t = f[i] % static_cast<unsigned long>(m);
        if (t < 0) t += static_cast<unsigned long>(m);
        acc = modarith::addmod(acc, t.get_ui(), m);
    }
    return acc;
}

} // namespace

PrimePowerRoots roots_mod_prime_power(const ZPoly& f_in, uint64_t p, unsigned e,
                                      uint64_t residue_budget) {
    PrimePowerRoots out;
    ZPoly f = f_in;
    normalize(f);
    if (f.empty()) {
        out.all = true;
        out.modulus = 1;
        out.residues = {0};
        return out;
    }
    unsigned v;
    {
        mpz_class cc = content(f);
        mpz_class pz = static_cast<unsigned long>(p);
        mpz_class stripped;
        v = static_cast<unsigned>(mpz_remove(stripped.get_mpz_t(), cc.get_mpz_t(), pz.get_mpz_t()));
    }
    if (v >= e) {
        out.all = true;
        out.modulus = 1;
        out.residues = {0};
        return out;
    }
    ZPoly g = f;
    if (v > 0) {
        mpz_class pv;
        mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p), v);
        for (auto& x : g) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pv.get_mpz_t());
    }
    const unsigned ee = e - v;
    const uint64_t modulus = pow_u64_checked(p, ee);
    out.modulus = modulus;

    auto gp = reduce_u64(g, p);
    std::vector<uint64_t> base_roots = modarith::fppoly::roots(gp, p);
    if (ee == 1) {
        out.residues = std::move(base_roots);
        return out;
    }
    ZPoly gd = derivative(g);
    for (uint64_t r : base_roots) {
        uint64_t dval = eval_mod_u64(gd, r, p);
        if (dval != 0) {
            // nonsingular: unique Hensel lift, Newton iteration mod p^{ee}
            uint64_t x = r;
            uint64_t t = modarith::invmod(eval_mod_u64(gd, x, modulus), modulus);
            for (unsigned it = 0; it < ee; it++) {
                uint64_t fx = eval_mod_u64(g, x, modulus);
                if (fx == 0) break;
                x = modarith::submod(x, modarith::mulmod(fx, t, modulus), modulus);
                t = modarith::invmod(eval_mod_u64(gd, x, modulus), modulus);
            }
            out.residues.push_back(x);
        } else {
            // singular: level-by-level enumeration; each level keeps or drops
            // whole cosets (derivative vanishes mod p along the fiber)
            std::vector<uint64_t> frontier{r};
            uint64_t pj = p;
            for (unsigned level = 1; level < ee; level++) {
                uint64_t pj1 = pj * p;
                std::vector<uint64_t> next;
                for (uint64_t s : frontier) {
                    if (eval_mod_u64(g, s, pj1) == 0) {
                        for (uint64_t tt = 0; tt < p; tt++) next.push_back(s + pj * tt);
                    }
                }
                if (next.size() > residue_budget) {
                    throw BudgetExceeded("singular lift enumeration exceeded residue budget");
                }
                frontier = std::move(next);
                pj = pj1;
            }
            out.residues.insert(out.residues.end(), frontier.begin(), frontier.end());
        }
    }
    std::sort(out.residues.begin(), out.residues.end());
    if (out.residues.size() > residue_budget) {
        throw BudgetExceeded("residue enumeration exceeded budget");
    }
    return out;
}

} // namespace pfv::univar
