#pragma once

// Exact arithmetic in Q[t]: polynomials, gcds, squarefree decomposition,
// gcd-free factor bases and valuations at places of P^1.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellsurf/valuation.hpp"

namespace ellsurf {

/// Exact rational; mpq_class is always kept canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Univariate polynomial over Q in the variable t.
///
/// Coefficients are stored low degree first and the top coefficient is never
/// zero, so the zero polynomial has no coefficients and no degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);
    Poly(std::initializer_list<Rational> coefficients);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t degree);
    /// The polynomial t.
    static Poly variable();
    /// t - root
    static Poly linear(const Rational& root);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// nullopt encodes deg 0 = -infinity.
    std::optional<std::size_t> degree() const;

    /// Coefficient of t^i (zero past the degree).
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    Poly monic() const;
    Rational eval(const Rational& x) const;
    Poly derivative() const;
    /// p(inner(t)).
    Poly compose(const Poly& inner) const;
    Poly pow(unsigned exponent) const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division. Throws DomainError when the divisor is zero.
DivMod divmod(const Poly& numerator, const Poly& divisor);

/// Exact quotient; throws DomainError if the division leaves a remainder.
Poly exact_quotient(const Poly& numerator, const Poly& divisor);

/// Monic gcd. Throws DomainError when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// True when p is nonzero and has no repeated factor over Q-bar.
bool is_squarefree(const Poly& p);

struct SquarefreeFactor {
    Poly factor;
    unsigned multiplicity;

    friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm: monic, squarefree, pairwise coprime factors with their
/// multiplicities, in increasing multiplicity. Constants give an empty list.
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p);

/// Pairwise-coprime monic factors such that every input is a constant times a
/// product of powers of factors, with each factor carrying one well-defined
/// exponent per input (every irreducible divisor of a factor occurs to that
/// same power).
struct FactorBasis {
    std::vector<Poly> factors;
    /// exponents[i][k] = exponent of factors[k] in input i.
    std::vector<std::vector<unsigned>> exponents;
    /// units[i] = leading coefficient of input i.
    std::vector<Rational> units;

    /// units[i] * prod_k factors[k]^exponents[i][k]
    Poly reconstruct(std::size_t input) const;
};

/// Throws DomainError on a zero input. Factors are returned in place order
/// (see place_less).
FactorBasis gcdfree_refine(std::span<const Poly> inputs);

/// Deterministic order on monic place polynomials: by degree, then by the
/// coefficients below the leading one from t^(d-1) down, larger first. Monic
/// linear factors t - r are thereby ordered by increasing root r.
bool place_less(const Poly& a, const Poly& b);

/// A point of P^1 over Q-bar, up to Galois conjugacy: either the roots of a
/// monic squarefree polynomial q or the point at infinity.
class Place {
public:
    static Place finite(Poly q);
    static Place infinity() { return Place(); }

    bool is_infinity() const { return infinity_; }
    /// The defining polynomial; only meaningful for finite places.
    const Poly& polynomial() const { return q_; }
    /// Number of geometric points represented (deg q, or 1 for infinity).
    std::size_t point_count() const;

    /// "inf" or the printed polynomial, e.g. "t - 1".
    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b) = default;
    friend bool operator<(const Place& a, const Place& b);

private:
    Place() = default;
    explicit Place(Poly q) : q_(std::move(q)), infinity_(false) {}

    Poly q_;
    bool infinity_ = true;
};

/// Exponent of q in p; infinity for p = 0. q must be non-constant.
Valuation valuation(const Poly& p, const Poly& q);

/// Finite places only; the valuation at infinity depends on the model's
/// weighting and is computed by valuation_at_infinity.
Valuation valuation(const Poly& p, const Place& place);

/// weight - deg p, i.e. the order at s = 0 of s^weight p(1/s). Infinity for
/// p = 0; throws DomainError if deg p exceeds weight.
Valuation valuation_at_infinity(const Poly& p, std::int64_t weight);

/// Text form, highest degree first: "t^5 - 2*t^4 + 1/2*t - 3", "0".
std::string to_string(const Poly& p);

/// Parses integers, rationals, t, + - * / ^ and parentheses. Division is only
/// allowed by nonzero constants; exponents are non-negative integer literals.
/// Throws ParseError carrying the 0-based character position.
Poly parse_poly(std::string_view text);

}  // namespace ellsurf
