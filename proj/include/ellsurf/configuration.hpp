#pragma once

// Configurations of singular fibers over a base curve of given genus, and the
// invariants, twists, base changes and extremality criteria computed from them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellsurf/kodaira.hpp"
#include "ellsurf/ratfunc.hpp"

namespace ellsurf {

struct Fiber {
    std::string label;
    FiberType type;

    friend bool operator==(const Fiber&, const Fiber&) = default;
};

/// Base-curve genus plus labeled singular fibers. Smooth fibers are never
/// stored; the Euler numbers always sum to a multiple of 12.
class Configuration {
public:
    Configuration() = default;
    /// Throws DomainError on a smooth fiber, a duplicate or malformed label, or
    /// an Euler sum not divisible by 12.
    Configuration(unsigned genus, std::vector<Fiber> fibers);

    unsigned genus() const { return genus_; }
    const std::vector<Fiber>& fibers() const { return fibers_; }
    std::size_t size() const { return fibers_.size(); }

    unsigned euler_sum() const;
    /// deg L = euler_sum / 12.
    unsigned deg_L() const { return euler_sum() / 12; }

    const Fiber* find(std::string_view label) const;
    /// Fiber types sorted; the label-free fingerprint of the configuration.
    std::vector<FiberType> type_multiset() const;

    /// Same genus and same multiset of types.
    bool same_types(const Configuration& other) const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    unsigned genus_ = 0;
    std::vector<Fiber> fibers_;
};

/// Text format: "genus = <n>" then one "<label> : <fiber-type>" per line.
/// Blank lines and lines starting with '#' are ignored. Throws ParseError
/// with the 1-based line number as position for malformed text, and
/// DomainError when the fibers do not form a configuration.
Configuration parse_configuration(std::string_view text);
std::string to_string(const Configuration& c);

struct FiberCounts {
    unsigned a = 0;  // II*, III*, IV*
    unsigned b = 0;  // II, III, IV
    unsigned c = 0;  // I0*
    unsigned d = 0;  // I_nu*, nu > 0
    unsigned e = 0;  // I_nu, nu > 0

    friend bool operator==(const FiberCounts&, const FiberCounts&) = default;
};

FiberCounts counts(const Configuration& c);

struct InvariantReport {
    std::int64_t deg_L = 0;
    std::int64_t p_g = 0;
    std::int64_t h11 = 0;
    std::int64_t rho_tr = 0;
    FiberCounts counts;
    /// h11 - rho_tr; an upper bound for the Mordell-Weil rank.
    std::int64_t delta = 0;
};

/// Global invariants. Cross-checks delta against its closed form in the fiber
/// counts and throws std::logic_error if they ever disagree.
InvariantReport report(const Configuration& c);

/// delta in closed form: 2(a+b+c+d) + e - 2 deg L - 2 + 2g.
std::int64_t delta_closed_form(const Configuration& c);

enum class Extremality {
    Extremal,
    NotExtremal,
    /// deg L = 0 over a genus-1 base with constant j.
    OutOfScopeHyperelliptic,
    /// deg L = 0 over P^1: birational to a product.
    OutOfScopeProduct,
};

std::string to_string(Extremality v);

/// Constant j: extremal iff there are deg L + 1 - g singular fibers and the
/// constant-j shape bounds hold. Non-constant j: extremal iff b = c = 0 and
/// delta = 0. Throws DomainError when the fiber types contradict `j_constant`.
Extremality is_extremal(const Configuration& c, bool j_constant);

/// Quadratic-twist contribution c_P of a fiber type: +1, 0 or -1.
int twist_contribution(const FiberType& f);

struct TwistResult {
    Configuration configuration;
    /// Sum of c_P over the sites.
    std::int64_t predicted_delta_change = 0;
};

/// Twists at the listed sites. Labels absent from `c` are fresh smooth points
/// (they become I0*). Throws DomainError for an odd or repeated site list.
TwistResult twist(const Configuration& c, const std::vector<std::string>& sites);

/// True when there is no II*, III*, IV*, I_nu* and at most one I0*.
bool is_star_minimal(const Configuration& c);

/// Twist at every starred fiber. When that count is odd, one I0* (if any) is
/// left alone, otherwise one fresh smooth point is added. Star-minimal input
/// comes back unchanged.
Configuration star_minimal_twist(const Configuration& c);

/// A twist with b = c = 0, minimizing delta over all twists.
///
/// Requires non-constant j (an I_nu or I_nu* fiber with nu > 0) and that the
/// star-minimal twist satisfies the Hurwitz bound #fibers >= 2 deg L + 2 - 2g;
/// inputs failing the bound would come out with negative delta and cannot
/// occur on any surface. Both are rejected with DomainError.
Configuration minimal_delta_twist(const Configuration& c);

/// Local ramification indices of a cover C' -> C at named places of C. Every
/// other place is unramified.
struct Cover {
    unsigned degree = 1;
    std::map<std::string, std::vector<unsigned>> ramification;
};

/// Pulls the configuration back along the cover. Fiber labels become
/// "<label>/<i>" for the i-th preimage when there are several. The output
/// genus comes from Riemann-Hurwitz. Throws DomainError on an inconsistent
/// profile.
Configuration base_change(const Configuration& c, const Cover& cover);

/// Riemann-Hurwitz genus of a cover of a genus-g curve; nullopt when the
/// resulting Euler characteristic is odd or the genus would be negative.
std::optional<unsigned> cover_genus(unsigned base_genus, const Cover& cover);

/// Ramification budget of j over 0, 1728 and infinity for a star-minimal
/// configuration with non-constant j.
struct RamificationProfile {
    /// deg j = sum of nu over the I_nu fibers.
    std::int64_t degree = 0;
    /// Residues mod 3 of the indices forced over 0 (1 per II, 2 per IV).
    std::vector<unsigned> over0_residues;
    /// Residues mod 2 of the indices forced over 1728 (1 per III).
    std::vector<unsigned> over1728_residues;
    /// Indices over infinity (the nu of each I_nu).
    std::vector<unsigned> over_inf;
    /// Maximal number of further points over 0 (index divisible by 3) and over
    /// 1728 (index divisible by 2).
    Rational free_over0;
    Rational free_over1728;
    /// Upper bound for #j^-1{0, 1728, inf}; attained iff j is of (3,2)-type.
    Rational max_preimages;
    /// deg j + 2 - 2g: lower bound from Hurwitz; attained iff j is unramified
    /// outside 0, 1728, infinity.
    std::int64_t hurwitz_min = 0;
};

struct RamificationVerdict {
    RamificationProfile profile;
    std::int64_t fiber_count = 0;
    /// 2 deg L + 2 - 2g
    std::int64_t expected_count = 0;
    /// fiber_count == expected_count, equivalently max_preimages == hurwitz_min:
    /// j is of (3,2)-type and unramified outside 0, 1728, infinity.
    bool three_point = false;
};

/// Throws DomainError unless c is star-minimal with non-constant j.
RamificationVerdict ramification_accounting(const Configuration& c);

enum class TorelliVerdict { FailsInfinitesimalTorelli, Satisfies, OutOfScope };

std::string to_string(TorelliVerdict v);

/// Surfaces over P^1 without multiple fibers: for p_g > 1 infinitesimal
/// Torelli fails exactly when j is constant and the surface is extremal.
TorelliVerdict torelli_verdict(std::int64_t p_g, bool j_constant, bool extremal);

/// dim H^0(X, Omega^1(nF)) for a surface over P^1 not birational to a product.
/// Throws DomainError for n = 0.
std::int64_t h0_omega_twist(std::int64_t n, std::int64_t deg_L, std::int64_t num_singular,
                            bool j_constant);

/// Whether a maximal constant-j family with s singular fibers has dimension
/// 3g - 3 + s exceeding (s - deg L + g - 1) p_g. Requires p_g = deg L + g - 1
/// > 1, else DomainError.
bool family_bound(std::int64_t genus, std::int64_t deg_L, std::int64_t s);

/// Largest s >= 0 with family_bound true; nullopt if there is none.
std::optional<std::int64_t> family_bound_s_max(std::int64_t genus, std::int64_t deg_L);

/// Smallest base genus carrying a surface whose only singular fiber has type
/// f: I_12k needs g >= k + 1, I*_(12k-6) needs g >= k. nullopt otherwise.
std::optional<unsigned> single_fiber_genus_bound(const FiberType& f);

}  // namespace ellsurf
