#pragma once

// Realizability of three-point branched covers C -> P^1 (branch points 0,
// 1728, infinity) through their monodromy permutations.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ellsurf {

/// Permutation of {1..n}, stored 0-based.
///
/// Products are read left to right: (a * b)(x) = b(a(x)), i.e. a acts first.
class Perm {
public:
    Perm() = default;
    static Perm identity(unsigned n);
    /// 0-based images; throws DomainError if not a bijection of {0..n-1}.
    static Perm from_images(std::vector<unsigned> images);
    /// 1-based disjoint cycles; unlisted points are fixed.
    static Perm from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles);

    unsigned degree() const { return static_cast<unsigned>(images_.size()); }
    /// 0-based image of a 0-based point.
    unsigned operator()(unsigned x) const { return images_[x]; }
    std::span<const unsigned> images() const { return images_; }

    Perm inverse() const;
    /// Cycles in 1-based labels, each starting at its least point, ordered by
    /// that point; fixed points included.
    std::vector<std::vector<unsigned>> cycles() const;
    /// Cycle notation with fixed points, e.g. "(1)(2 3)".
    std::string to_string() const;

    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<unsigned> images_;
};

/// Parses cycle notation "(1 2 3)(4 5)". The degree is `degree` if given,
/// else the largest point mentioned. Throws ParseError.
Perm parse_perm(std::string_view text, std::optional<unsigned> degree = std::nullopt);

/// Weakly decreasing positive parts.
class CycleType {
public:
    CycleType() = default;
    /// Sorts the parts; throws DomainError on a zero part.
    explicit CycleType(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned degree() const;
    std::size_t size() const { return parts_.size(); }
    /// "3,3,3,3"
    std::string to_string() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;

private:
    std::vector<unsigned> parts_;
};

/// Comma-separated positive integers; throws ParseError.
CycleType parse_cycle_type(std::string_view text);

CycleType cycle_type(const Perm& p);

/// Whether the group generated by `generators` acts transitively on {1..n}.
bool is_transitive(std::span<const Perm> generators, unsigned n);

/// Riemann-Hurwitz genus of a connected degree-d cover of P^1 with the given
/// ramification over each branch point: 2 - 2g = 2d - sum (p - 1). nullopt
/// when the right side is odd. A negative value means no such cover.
std::optional<std::int64_t> genus_of_cover(unsigned degree, std::span<const CycleType> profiles);

/// Number of permutations of S_n with this cycle type: n! / prod(k^m_k m_k!).
std::uint64_t conjugacy_class_size(const CycleType& t);

/// All partitions of n, in decreasing lexicographic order.
std::vector<CycleType> partitions(unsigned n);

struct SearchProblem {
    unsigned degree = 0;
    CycleType over0;     // monodromy sigma1, parts <= 3 for a (3,2)-type j
    CycleType over1728;  // monodromy sigma0, parts <= 2 for a (3,2)-type j
    CycleType over_inf;  // cycle type of sigma0 * sigma1
};

struct Witness {
    Perm sigma0;  // over 1728
    Perm sigma1;  // over 0
};

struct SearchOptions {
    unsigned max_degree = 16;
    /// Parallel workers; the result does not depend on this.
    unsigned workers = 1;
};

struct SearchOutcome {
    /// Least witness in the enumeration order, or nullopt when none exists.
    std::optional<Witness> witness;
    /// Number of sigma0 candidates up to and including the witness in the
    /// enumeration order (the whole class when there is none).
    std::uint64_t candidates = 0;
};

/// Exhaustive search. sigma1 is fixed to the block representative of over0
/// ((1 2 3)(4 5 6)... for 3,3,...); sigma0 runs over its whole conjugacy class
/// in lexicographic order of its cycle representation. Since simultaneous
/// conjugation preserves all conditions, a negative answer is a proof.
/// Throws DomainError if the degree exceeds the bound or partitions do not
/// sum to it.
SearchOutcome search(const SearchProblem& problem, const SearchOptions& options = {});

/// Independent check of a witness: cycle types over 0 and 1728, the product
/// cycle type over infinity, and transitivity.
bool verify_witness(const SearchProblem& problem, const Witness& w);

/// "sigma0 = ...", "sigma1 = ...", "product = ..." lines.
std::string format_witness(const Witness& w);

struct SurveyEntry {
    CycleType over_inf;
    std::optional<std::int64_t> genus;
    bool realizable = false;
    std::optional<Witness> witness;
    std::uint64_t candidates = 0;
};

/// Searches every partition of `degree` with at least two parts as the type
/// over infinity, with 3^(d/3) over 0 and 2^(d/2) over 1728. Throws
/// DomainError unless 6 divides the degree.
std::vector<SurveyEntry> survey_partitions(unsigned degree, const SearchOptions& options = {});

}  // namespace ellsurf
