#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cala/rational.hpp"

namespace cala {

// Multivariate polynomial over Q with named indeterminates.
//
// Canonical form: the indeterminate list is sorted, contains no name that
// fails to appear with a positive exponent, every stored coefficient is
// nonzero, and terms are ordered graded-lexicographically (total degree
// first, earlier names more significant). Two equal polynomials therefore
// have identical representations, and a polynomial without indeterminates
// round-trips losslessly to Rational.
class Poly {
public:
    using Exponents = std::vector<int>;

    struct GrlexLess {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    Poly() = default;
    Poly(const Rational& c);      // NOLINT: implicit scalar promotion is intended
    Poly(long long c) : Poly(Rational(c)) {}
    static Poly variable(const std::string& name);

    static Poly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return names_.empty(); }
    // Throws MathError unless is_constant().
    Rational to_rational() const;
    int total_degree() const;

    const std::vector<std::string>& indeterminates() const { return names_; }
    const TermMap& terms() const { return terms_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return names_ == o.names_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Total order on canonical forms; used only to make report output
    // deterministic, no algebraic meaning.
    static int compare(const Poly& a, const Poly& b);
    bool operator<(const Poly& o) const { return compare(*this, o) < 0; }

    // Exact composition; unbound names stay symbolic.
    Poly substitute(const std::map<std::string, Poly>& bindings) const;

    // Exact quotient if divisor divides this polynomial, nullopt otherwise.
    std::optional<Poly> divide_exact(const Poly& divisor) const;

    // Rational roots of a univariate polynomial (empty for constants).
    // Throws MathError if more than one indeterminate is present.
    std::vector<Rational> rational_roots() const;

    std::string str() const;

private:
    std::vector<std::string> names_;  // sorted, minimal support
    TermMap terms_;                   // exponent vectors aligned with names_

    void normalize();
    // Rewrites the term map onto a new (sorted, superset) name list.
    static TermMap remap(const TermMap& terms, const std::vector<std::string>& from,
                         const std::vector<std::string>& to);
    friend struct PolyTestPeek;
};

inline Poly operator*(const Rational& c, const Poly& p) { return Poly(c) * p; }

// The three spec-facing operation names.
Poly parse_scalar(std::string_view text);
inline Poly substitute(const Poly& p, const std::map<std::string, Poly>& b) { return p.substitute(b); }
inline bool is_identically_zero(const Poly& p) { return p.is_zero(); }

}  // namespace cala
