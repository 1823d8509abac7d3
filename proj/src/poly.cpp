#include "pfv/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>

#include "pfv/errors.hpp"

namespace pfv {

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) throw DomainError("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int num_vars, const mpz_class& c) {
    Polynomial p(num_vars);
    if (c != 0) p.terms_.emplace(ExponentVec(static_cast<std::size_t>(num_vars), 0), c);
    return p;
}

Polynomial Polynomial::variable(int num_vars, int var) {
    if (var < 0 || var >= num_vars) throw DomainError("variable index out of range");
    Polynomial p(num_vars);
    ExponentVec e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(var)] = 1;
    p.terms_.emplace(std::move(e), mpz_class(1));
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (uint32_t x : e) s += static_cast<int>(x);
        d = std::max(d, s);
    }
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(var)]));
    return d;
}

bool Polynomial::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (uint32_t x : e) s += static_cast<int>(x);
        if (d < 0) d = s;
        else if (s != d) return false;
    }
    return true;
}

const mpz_class& Polynomial::coeff(const ExponentVec& e) const {
    static const mpz_class zero = 0;
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
}

void Polynomial::add_term(const ExponentVec& e, const mpz_class& c) {
    if (e.size() != static_cast<std::size_t>(num_vars_)) {
        throw DomainError("exponent vector length mismatch");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (num_vars_ != o.num_vars_) throw DomainError("variable count mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (num_vars_ != o.num_vars_) throw DomainError("variable count mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (num_vars_ != o.num_vars_) throw DomainError("variable count mismatch");
    Polynomial r(num_vars_);
    ExponentVec e(static_cast<std::size_t>(num_vars_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); i++) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

namespace {

template <class T>
mpz_class evaluate_impl(const Polynomial::TermMap& terms, int num_vars, std::span<const T> point) {
    if (point.size() != static_cast<std::size_t>(num_vars)) {
        throw DomainError("point dimension mismatch");
    }
    // power tables per variable up to the max exponent used
    std::vector<uint32_t> maxe(static_cast<std::size_t>(num_vars), 0);
    for (const auto& [e, c] : terms) {
        for (std::size_t i = 0; i < maxe.size(); i++) maxe[i] = std::max(maxe[i], e[i]);
    }
    std::vector<std::vector<mpz_class>> pows(maxe.size());
    for (std::size_t i = 0; i < maxe.size(); i++) {
        pows[i].resize(maxe[i] + 1);
        pows[i][0] = 1;
        mpz_class base = point[i];
        for (uint32_t j = 1; j <= maxe[i]; j++) pows[i][j] = pows[i][j - 1] * base;
    }
    mpz_class acc = 0, term;
    for (const auto& [e, c] : terms) {
        term = c;
        for (std::size_t i = 0; i < pows.size(); i++) {
            if (e[i]) term *= pows[i][e[i]];
        }
        acc += term;
    }
    return acc;
}

} // namespace

mpz_class Polynomial::evaluate(std::span<const mpz_class> point) const {
    return evaluate_impl<mpz_class>(terms_, num_vars_, point);
}

mpz_class Polynomial::evaluate(std::span<const long> point) const {
    return evaluate_impl<long>(terms_, num_vars_, point);
}

Polynomial Polynomial::partial_derivative(int var) const {
    if (var < 0 || var >= num_vars_) throw DomainError("derivative variable index out of range");
    Polynomial r(num_vars_);
    for (const auto& [e, c] : terms_) {
        uint32_t k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        ExponentVec e2 = e;
        e2[static_cast<std::size_t>(var)] = k - 1;
        r.add_term(e2, c * k);
    }
    return r;
}

Polynomial Polynomial::reduce_mod(const mpz_class& m) const {
    if (m < 1) throw DomainError("modulus must be >= 1");
    Polynomial r(num_vars_);
    mpz_class t;
    for (const auto& [e, c] : terms_) {
        mpz_mod(t.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (t != 0) r.terms_.emplace(e, t);
    }
    return r;
}

mpz_class Polynomial::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

univar::ZPoly Polynomial::dense_univariate() const {
    if (num_vars_ != 1) throw DomainError("polynomial is not univariate");
    univar::ZPoly f(static_cast<std::size_t>(std::max(degree(), 0)) + 1, mpz_class(0));
    for (const auto& [e, c] : terms_) f[e[0]] = c;
    univar::normalize(f);
    return f;
}

univar::ZPoly Polynomial::restrict_tail(std::span<const long> tail) const {
    if (tail.size() + 1 != static_cast<std::size_t>(num_vars_)) {
        throw DomainError("tail dimension mismatch");
    }
    std::vector<uint32_t> maxe(tail.size(), 0);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < tail.size(); i++) maxe[i] = std::max(maxe[i], e[i + 1]);
    }
    std::vector<std::vector<mpz_class>> pows(tail.size());
    for (std::size_t i = 0; i < tail.size(); i++) {
        pows[i].resize(maxe[i] + 1);
        pows[i][0] = 1;
        for (uint32_t j = 1; j <= maxe[i]; j++) {
            pows[i][j] = pows[i][j - 1] * tail[i];
        }
    }
    univar::ZPoly f(static_cast<std::size_t>(degree_in(0)) + 1, mpz_class(0));
    mpz_class term;
    for (const auto& [e, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < tail.size(); i++) {
            if (e[i + 1]) term *= pows[i][e[i + 1]];
        }
        f[e[0]] += term;
    }
    univar::normalize(f);
    return f;
}

univar::ZPoly Polynomial::specialize_line(std::span<const long> a, std::span<const long> b) const {
    if (a.size() != static_cast<std::size_t>(num_vars_) || b.size() != a.size()) {
        throw DomainError("line dimension mismatch");
    }
    // per-variable powers of (a_i t + b_i)
    std::vector<uint32_t> maxe(a.size(), 0);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < a.size(); i++) maxe[i] = std::max(maxe[i], e[i]);
    }
    std::vector<std::vector<univar::ZPoly>> pows(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        pows[i].resize(maxe[i] + 1);
        pows[i][0] = {mpz_class(1)};
        univar::ZPoly lin{mpz_class(b[i]), mpz_class(a[i])};
        univar::normalize(lin);
        for (uint32_t j = 1; j <= maxe[i]; j++) pows[i][j] = univar::mul(pows[i][j - 1], lin);
    }
    univar::ZPoly acc;
    for (const auto& [e, c] : terms_) {
        univar::ZPoly term{c};
        for (std::size_t i = 0; i < a.size(); i++) {
            if (e[i]) term = univar::mul(term, pows[i][e[i]]);
        }
        acc = univar::add(acc, term);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            pos++;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (true) {
            if (accept('+')) acc = acc + parse_term();
            else if (accept('-')) acc = acc - parse_term();
            else return acc;
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_unary();
        while (accept('*')) acc = acc * parse_unary();
        return acc;
    }

    Polynomial parse_unary() {
        int sign = 1;
        while (true) {
            if (accept('-')) sign = -sign;
            else if (accept('+')) continue;
            else break;
        }
        Polynomial p = parse_power();
        return sign < 0 ? -p : p;
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        skip_ws();
        if (accept('^')) {
            unsigned long e = parse_exponent();
            Polynomial acc = Polynomial::constant(base.num_vars(), 1);
            for (unsigned long i = 0; i < e; i++) acc = acc * base;
            return acc;
        }
        return base;
    }

    unsigned long parse_exponent() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            fail("expected a non-negative integer exponent");
        }
        unsigned long e = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            e = e * 10 + static_cast<unsigned long>(text[pos] - '0');
            if (e > 1000000) throw ParseError("exponent too large", start);
            pos++;
        }
        return e;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of expression");
        char c = text[pos];
        if (c == '(') {
            pos++;
            Polynomial inner = parse_expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) pos++;
            if (pos < text.size() && text[pos] == '.') {
                throw ParseError("non-integer coefficient", start);
            }
            mpz_class v(std::string(text.substr(start, pos - start)), 10);
            return Polynomial::constant(static_cast<int>(std::max<std::size_t>(vars.size(), 1)), v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                pos++;
            }
            std::string name(text.substr(start, pos - start));
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) throw ParseError("unknown variable '" + name + "'", start);
            return Polynomial::variable(static_cast<int>(vars.size()),
                                        static_cast<int>(it - vars.begin()));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& var_names) {
    if (var_names.empty()) throw DomainError("need at least one variable name");
    Parser p{text, 0, var_names};
    Polynomial r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

std::string to_string(const Polynomial& F, const std::vector<std::string>& var_names) {
    if (var_names.size() != static_cast<std::size_t>(F.num_vars())) {
        throw DomainError("variable name count mismatch");
    }
    if (F.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : F.terms()) {
        mpz_class mag = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        bool has_vars = std::any_of(e.begin(), e.end(), [](uint32_t x) { return x != 0; });
        bool printed = false;
        if (!has_vars || mag != 1) {
            out += mag.get_str();
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); i++) {
            if (e[i] == 0) continue;
            if (printed) out += "*";
            out += var_names[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
            printed = true;
        }
    }
    return out;
}

mpz_class discriminant_univariate(const Polynomial& f) {
    if (f.num_vars() != 1) throw DomainError("discriminant requires a univariate polynomial");
    int d = f.degree();
    if (d < 1) throw DomainError("discriminant requires degree >= 1");
    univar::ZPoly fd = f.dense_univariate();
    univar::ZPoly fp = univar::derivative(fd);
    if (d == 1) return 1;
    mpz_class res = univar::resultant(fd, fp);
    const mpz_class& lc = fd[static_cast<std::size_t>(d)];
    mpz_class disc;
    mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), lc.get_mpz_t());
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) disc = -disc;
    return disc;
}

namespace {

bool univar_squarefree(const univar::ZPoly& f) {
    int d = univar::degree(f);
    if (d <= 0) return true; // nonzero constants have no repeated factor
    univar::ZPoly fp = univar::derivative(f);
    return univar::gcd_degree(f, fp) == 0;
}

} // namespace

SquarefreeVerdict is_squarefree_poly(const Polynomial& F, const SquarefreeOptions& opt) {
    if (F.is_zero()) throw DomainError("square-freeness is undefined for the zero polynomial");
    SquarefreeVerdict v;
    if (opt.override_squarefree) {
        v.squarefree = true;
        v.overridden = true;
        v.exact = false;
        return v;
    }
    if (F.num_vars() == 1) {
        v.exact = true;
        v.squarefree = univar_squarefree(F.dense_univariate());
        return v;
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long> dist(-opt.coord_bound, opt.coord_bound);
    const int n = F.num_vars();
    int checked = 0;
    int attempts = 0;
    while (checked < opt.lines && attempts < opt.lines * 16) {
        attempts++;
        std::vector<long> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
        for (auto& x : a) x = dist(rng);
        for (auto& x : b) x = dist(rng);
        univar::ZPoly g = F.specialize_line(a, b);
        if (univar::degree(g) < 1) continue; // degenerate direction; resample
        checked++;
        if (!univar_squarefree(g)) {
            v.squarefree = false;
            v.lines_checked = checked;
            return v;
        }
    }
    v.squarefree = true;
    v.lines_checked = checked;
    double per_line = static_cast<double>(std::max(F.degree(), 1)) /
                      (2.0 * static_cast<double>(opt.coord_bound) + 1.0);
    v.false_accept_bound = std::pow(per_line, checked);
    return v;
}

} // namespace pfv
