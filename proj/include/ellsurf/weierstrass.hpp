#pragma once

// Short Weierstrass models y^2 = x^3 + A(t) x + B(t) over P^1.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ellsurf/configuration.hpp"
#include "ellsurf/kodaira.hpp"
#include "ellsurf/ratfunc.hpp"

namespace ellsurf {

class WeierstrassModel {
public:
    /// Throws DomainError if the discriminant vanishes identically.
    WeierstrassModel(Poly a, Poly b);

    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }

    friend bool operator==(const WeierstrassModel&, const WeierstrassModel&) = default;

private:
    Poly a_;
    Poly b_;
};

/// -16 (4 A^3 + 27 B^2)
Poly discriminant(const Poly& a, const Poly& b);

struct ModelInvariants {
    Poly c4;     // -48 A
    Poly c6;     // -864 B
    Poly delta;  // -16 (4 A^3 + 27 B^2)
    /// j = c4^3 / delta = j_num / j_den in lowest terms with j_den monic.
    Poly j_num;
    Poly j_den;
};

ModelInvariants invariants(const WeierstrassModel& m);

/// Weight k at infinity: smallest k with deg A <= 4k and deg B <= 6k.
std::int64_t infinity_weight(const WeierstrassModel& m);

/// Minimal local data at a place. Finite places use plain valuations; at
/// infinity the model is rescaled by the weight k, so v(c4) = 4k - deg c4,
/// v(c6) = 6k - deg c6, v(Delta) = 12k - deg Delta.
LocalData local_data_at(const WeierstrassModel& m, const Place& place);

struct ClassifiedPlace {
    Place place;
    LocalData data;
    FiberType type;
};

struct ModelClassification {
    /// Singular places only, finite places in place order then infinity.
    std::vector<ClassifiedPlace> places;
    unsigned euler_sum = 0;
    unsigned deg_L = 0;
};

/// Classifies every place where the discriminant vanishes, plus infinity.
/// Places come from a gcd-free basis of {Delta, c4, c6} refined further by
/// `refine_with` (useful to isolate chosen points as their own places).
/// Throws std::logic_error if the Euler numbers do not sum to a multiple of 12.
ModelClassification classify_places(const WeierstrassModel& m,
                                    std::span<const Poly> refine_with = {});

/// Genus-0 configuration. A place of degree d contributes d fibers labeled
/// "<place>#1" ... "<place>#d"; rational places are labeled by their
/// polynomial ("t", "t - 1") and infinity by "inf".
Configuration to_configuration(const ModelClassification& mc);
Configuration classify_model(const WeierstrassModel& m, std::span<const Poly> refine_with = {});

/// (f^2 A, f^3 B). Throws DomainError unless f is nonzero and squarefree.
WeierstrassModel quadratic_twist(const WeierstrassModel& m, const Poly& f);

/// Pullback along t -> inner(t).
WeierstrassModel pullback(const WeierstrassModel& m, const Poly& inner);

struct JInvariant {
    bool constant = false;
    /// The value when constant.
    std::optional<Rational> value;
};

JInvariant j_invariant(const WeierstrassModel& m);

/// Model file: lines "A = <poly>" and "B = <poly>" in any order; blank lines
/// and '#' comments ignored. Throws ParseError (position = 1-based line) and
/// DomainError for a zero discriminant.
WeierstrassModel parse_model(std::string_view text);
std::string to_string(const WeierstrassModel& m);

/// Per-place report lines, then "deg L = n" and "sum_euler = 12n".
std::string format_classification(const ModelClassification& mc);

}  // namespace ellsurf
