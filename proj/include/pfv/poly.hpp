#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "pfv/univar.hpp"

namespace pfv {

// Exponent vector of a term; length always equals the owning polynomial's
// number of variables.
using ExponentVec = std::vector<uint32_t>;

// Sparse multivariate polynomial over Z. Canonical form: no zero coefficients
// stored, terms iterated in descending lexicographic exponent order. Immutable
// in spirit: all operations return new polynomials, so instances can be shared
// across threads freely.
class Polynomial {
public:
    using TermMap = std::map<ExponentVec, mpz_class, std::greater<ExponentVec>>;

    explicit Polynomial(int num_vars = 1);
    static Polynomial constant(int num_vars, const mpz_class& c);
    static Polynomial variable(int num_vars, int var); // var is 0-based

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // total degree; -1 for the zero polynomial
    int degree_in(int var) const;
    bool is_homogeneous() const; // zero polynomial counts as homogeneous
    const TermMap& terms() const { return terms_; }
    const mpz_class& coeff(const ExponentVec& e) const; // 0 if absent

    void add_term(const ExponentVec& e, const mpz_class& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const = default;

    mpz_class evaluate(std::span<const mpz_class> point) const;
    mpz_class evaluate(std::span<const long> point) const;

    // Formal partial derivative with respect to variable `var` (0-based).
    Polynomial partial_derivative(int var) const;

    // Coefficientwise reduction into [0, m), m >= 1.
    Polynomial reduce_mod(const mpz_class& m) const;

    mpz_class content() const; // non-negative gcd of coefficients

    // Dense coefficient vector; requires num_vars == 1.
    univar::ZPoly dense_univariate() const;

    // Restriction to a univariate polynomial in x1 by fixing x2..xn = tail.
    univar::ZPoly restrict_tail(std::span<const long> tail) const;

    // F(a*t + b) as a dense univariate polynomial in t.
    univar::ZPoly specialize_line(std::span<const long> a, std::span<const long> b) const;

private:
    int num_vars_;
    TermMap terms_;
};

// Parses the expression grammar: integers, named variables, + - * ^ and
// parentheses; ^ binds tighter than *, * tighter than +/-; no implicit
// multiplication. Throws ParseError with a byte offset.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& var_names);

// Canonical rendering; parse(to_string(F)) == F.
std::string to_string(const Polynomial& F, const std::vector<std::string>& var_names);

// Resultant-based discriminant of a univariate polynomial of degree >= 1.
// Zero iff f has a repeated complex root.
mpz_class discriminant_univariate(const Polynomial& f);

struct SquarefreeOptions {
    int lines = 8;                    // random specialization lines for n >= 2
    long coord_bound = 1'000'000;     // line coordinates drawn from [-bound, bound]
    uint64_t seed = 0x5eedf00dULL;
    bool override_squarefree = false; // user assertion, recorded in the verdict
};

struct SquarefreeVerdict {
    bool squarefree = false;
    bool exact = false;           // true for n == 1 (subresultant gcd test)
    int lines_checked = 0;        // n >= 2 only
    double false_accept_bound = 0.0;
    bool overridden = false;
};

SquarefreeVerdict is_squarefree_poly(const Polynomial& F, const SquarefreeOptions& opt = {});

} // namespace pfv
