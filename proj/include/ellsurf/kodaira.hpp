#pragma once

// Kodaira fiber types: local classification from valuations of c4, c6 and the
// discriminant, numeric attributes, quadratic twist and base change.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "ellsurf/valuation.hpp"

namespace ellsurf {

enum class FiberKind { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };

class FiberType {
public:
    /// I_nu; I(0) is the smooth fiber.
    static FiberType I(unsigned nu) { return FiberType(FiberKind::I, nu); }
    static FiberType Istar(unsigned nu) { return FiberType(FiberKind::Istar, nu); }
    static FiberType II() { return FiberType(FiberKind::II, 0); }
    static FiberType III() { return FiberType(FiberKind::III, 0); }
    static FiberType IV() { return FiberType(FiberKind::IV, 0); }
    static FiberType IVstar() { return FiberType(FiberKind::IVstar, 0); }
    static FiberType IIIstar() { return FiberType(FiberKind::IIIstar, 0); }
    static FiberType IIstar() { return FiberType(FiberKind::IIstar, 0); }

    FiberKind kind() const { return kind_; }
    /// Index of I_nu / I_nu^*; zero for the other kinds.
    unsigned nu() const { return nu_; }

    bool is_smooth() const { return kind_ == FiberKind::I && nu_ == 0; }
    bool is_multiplicative() const { return kind_ == FiberKind::I && nu_ > 0; }

    /// "I0", "I5*", "II", "IV*" ...
    std::string to_string() const;

    friend bool operator==(const FiberType&, const FiberType&) = default;
    friend auto operator<=>(const FiberType&, const FiberType&) = default;

private:
    FiberType(FiberKind k, unsigned nu) : kind_(k), nu_(nu) {}

    FiberKind kind_;
    unsigned nu_;
};

/// Inverse of FiberType::to_string. Throws ParseError.
FiberType parse_fiber_type(std::string_view text);

/// (v(c4), v(c6), v(Delta)) at one place. Delta is never identically zero, so
/// its valuation is finite.
class LocalData {
public:
    /// Rejects triples violating v(Delta) >= min(3 v(c4), 2 v(c6)), which
    /// c4^3 - c6^2 = 1728 Delta forces. Throws DomainError.
    LocalData(Valuation c4, Valuation c6, std::int64_t delta);

    Valuation c4() const { return c4_; }
    Valuation c6() const { return c6_; }
    std::int64_t delta() const { return delta_; }

    /// "(v_c4, v_c6, v_delta)" with "inf" for infinite entries.
    std::string to_string() const;

    friend bool operator==(const LocalData&, const LocalData&) = default;

private:
    Valuation c4_;
    Valuation c6_;
    std::int64_t delta_;
};

struct Minimalized {
    LocalData data;
    std::int64_t shift;  // number of (4, 6, 12) subtracted
};

/// Removes the largest multiple of (4, 6, 12) keeping every entry >= 0.
Minimalized minimalize(const LocalData& d);

/// Characteristic-0 Kodaira table. `d` must be minimal. Throws
/// ClassificationError on triples outside the table.
FiberType classify_local(const LocalData& d);

/// Topological Euler number = valuation of the minimal discriminant.
unsigned euler_number(const FiberType& f);

/// m(P) - 1: number of fiber components missing the zero section.
unsigned lattice_contribution(const FiberType& f);

/// Quadratic-twist involution I_nu <-> I_nu^*, II <-> IV^*, III <-> III^*,
/// IV <-> II^*.
FiberType twist_type(const FiberType& f);

/// A valuation triple realizing f, used to transport f through base change.
/// Additive kinds with j = 0 fix v(c6) exactly and those with j = 1728 fix
/// v(c4); the free entry is infinite.
LocalData canonical_local_data(const FiberType& f);

/// Fiber type after pulling back along a cover with ramification index e at
/// the point. Throws DomainError for e = 0.
FiberType base_change_type(const FiberType& f, unsigned e);

}  // namespace ellsurf
