#include "ellsurf/configuration.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ellsurf/errors.hpp"

namespace ellsurf {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool valid_label(std::string_view label) {
    if (label.empty() || label != trim(label)) return false;
    return label.find_first_of(":\n") == std::string_view::npos;
}

bool is_starred(const FiberType& f) {
    switch (f.kind()) {
        case FiberKind::Istar:
        case FiberKind::IIstar:
        case FiberKind::IIIstar:
        case FiberKind::IVstar: return true;
        default: return false;
    }
}

// II, III, IV or I0*: the fibers with c_P = -1.
bool is_b_or_c(const FiberType& f) {
    switch (f.kind()) {
        case FiberKind::II:
        case FiberKind::III:
        case FiberKind::IV: return true;
        case FiberKind::Istar: return f.nu() == 0;
        default: return false;
    }
}

Rational fraction(std::int64_t num, std::int64_t den) {
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

bool has_pole_of_j(const Configuration& c) {
    const FiberCounts n = counts(c);
    return n.d + n.e > 0;
}

std::string fresh_label(const Configuration& c, const std::set<std::string>& taken) {
    for (unsigned i = 1;; ++i) {
        std::string s = "s" + std::to_string(i);
        if (c.find(s) == nullptr && !taken.contains(s)) return s;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Configuration

Configuration::Configuration(unsigned genus, std::vector<Fiber> fibers)
    : genus_(genus), fibers_(std::move(fibers)) {
    std::set<std::string_view> seen;
    for (const auto& f : fibers_) {
        if (!valid_label(f.label)) throw DomainError("invalid fiber label '" + f.label + "'");
        if (!seen.insert(f.label).second) throw DomainError("duplicate fiber label '" + f.label + "'");
        if (f.type.is_smooth()) throw DomainError("configuration lists a smooth fiber at '" + f.label + "'");
    }
    if (euler_sum() % 12 != 0) {
        throw DomainError("Euler numbers sum to " + std::to_string(euler_sum()) +
                          ", not a multiple of 12");
    }
}

unsigned Configuration::euler_sum() const {
    unsigned s = 0;
    for (const auto& f : fibers_) s += euler_number(f.type);
    return s;
}

const Fiber* Configuration::find(std::string_view label) const {
    for (const auto& f : fibers_) {
        if (f.label == label) return &f;
    }
    return nullptr;
}

std::vector<FiberType> Configuration::type_multiset() const {
    std::vector<FiberType> out;
    out.reserve(fibers_.size());
    for (const auto& f : fibers_) out.push_back(f.type);
    std::sort(out.begin(), out.end());
    return out;
}

bool Configuration::same_types(const Configuration& other) const {
    return genus_ == other.genus_ && type_multiset() == other.type_multiset();
}

Configuration parse_configuration(std::string_view text) {
    std::optional<unsigned> genus;
    std::vector<Fiber> fibers;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        const std::string_view line = trim(text.substr(start, end - start));
        start = end + 1;
        if (line.empty() || line.front() == '#') continue;

        const auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
        if (!genus) {
            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos || trim(line.substr(0, eq)) != "genus") {
                throw ParseError(where() + "expected 'genus = <n>'", line_no);
            }
            const std::string_view num = trim(line.substr(eq + 1));
            if (num.empty() || num.size() > 6 ||
                num.find_first_not_of("0123456789") != std::string_view::npos) {
                throw ParseError(where() + "genus must be a non-negative integer", line_no);
            }
            genus = static_cast<unsigned>(std::stoul(std::string(num)));
            continue;
        }
        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(where() + "expected '<label> : <fiber-type>'", line_no);
        }
        const std::string_view label = trim(line.substr(0, colon));
        const std::string_view type = trim(line.substr(colon + 1));
        if (!valid_label(label)) throw ParseError(where() + "empty or invalid label", line_no);
        try {
            fibers.push_back({std::string(label), parse_fiber_type(type)});
        } catch (const ParseError& e) {
            throw ParseError(where() + e.what(), line_no);
        }
    }
    if (!genus) throw ParseError("configuration needs a 'genus = <n>' line", line_no);
    return Configuration(*genus, std::move(fibers));
}

std::string to_string(const Configuration& c) {
    std::string out = "genus = " + std::to_string(c.genus()) + "\n";
    for (const auto& f : c.fibers()) out += f.label + " : " + f.type.to_string() + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Invariants

FiberCounts counts(const Configuration& c) {
    FiberCounts n;
    for (const auto& f : c.fibers()) {
        switch (f.type.kind()) {
            case FiberKind::IIstar:
            case FiberKind::IIIstar:
            case FiberKind::IVstar: ++n.a; break;
            case FiberKind::II:
            case FiberKind::III:
            case FiberKind::IV: ++n.b; break;
            case FiberKind::Istar: ++(f.type.nu() == 0 ? n.c : n.d); break;
            case FiberKind::I:
                if (f.type.nu() > 0) ++n.e;
                break;
        }
    }
    return n;
}

std::int64_t delta_closed_form(const Configuration& c) {
    const FiberCounts n = counts(c);
    const std::int64_t g = c.genus();
    return 2 * static_cast<std::int64_t>(n.a + n.b + n.c + n.d) + n.e -
           2 * static_cast<std::int64_t>(c.deg_L()) - 2 + 2 * g;
}

InvariantReport report(const Configuration& c) {
    InvariantReport r;
    const std::int64_t g = c.genus();
    r.counts = counts(c);
    r.deg_L = c.deg_L();
    r.p_g = r.deg_L - 1 + g;
    r.h11 = 10 * r.deg_L + 2 * g;
    // Shioda-Tate: zero section, fiber, and the components missing the zero
    // section.
    r.rho_tr = 2;
    for (const auto& f : c.fibers()) r.rho_tr += lattice_contribution(f.type);
    r.delta = r.h11 - r.rho_tr;
    if (r.delta != delta_closed_form(c)) {
        throw std::logic_error("delta by definition disagrees with the closed form");
    }
    return r;
}

std::string to_string(Extremality v) {
    switch (v) {
        case Extremality::Extremal: return "extremal";
        case Extremality::NotExtremal: return "not extremal";
        case Extremality::OutOfScopeHyperelliptic: return "out of scope (deg L = 0, hyperelliptic)";
        case Extremality::OutOfScopeProduct: return "out of scope (deg L = 0, product, not extremal)";
    }
    return "?";
}

Extremality is_extremal(const Configuration& c, bool j_constant) {
    const FiberCounts n = counts(c);
    const InvariantReport r = report(c);
    if (!j_constant) {
        if (!has_pole_of_j(c)) {
            throw DomainError("non-constant j needs a fiber of type I_n or I_n* with n > 0");
        }
        return (n.b == 0 && n.c == 0 && r.delta == 0) ? Extremality::Extremal
                                                       : Extremality::NotExtremal;
    }

    if (has_pole_of_j(c)) {
        throw DomainError("constant j excludes fibers of type I_n and I_n* with n > 0");
    }
    bool j0 = false;
    bool j1728 = false;
    for (const auto& f : c.fibers()) {
        switch (f.type.kind()) {
            case FiberKind::II:
            case FiberKind::IV:
            case FiberKind::IVstar:
            case FiberKind::IIstar: j0 = true; break;
            case FiberKind::III:
            case FiberKind::IIIstar: j1728 = true; break;
            default: break;
        }
    }
    if (j0 && j1728) throw DomainError("constant j cannot be both 0 and 1728");

    const std::int64_t g = c.genus();
    if (r.deg_L == 0) {
        if (g == 0) return Extremality::OutOfScopeProduct;
        if (g == 1) return Extremality::OutOfScopeHyperelliptic;
        return Extremality::NotExtremal;
    }
    // Positive deg L forces a rational base, with deg L bounded by the largest
    // Euler number available for the j-value.
    const std::int64_t max_deg = j0 ? 5 : j1728 ? 3 : 1;
    const bool count_ok = static_cast<std::int64_t>(c.size()) == r.deg_L + 1 - g;
    return (g == 0 && count_ok && r.deg_L <= max_deg) ? Extremality::Extremal
                                                       : Extremality::NotExtremal;
}

// ---------------------------------------------------------------------------
// Twists

int twist_contribution(const FiberType& f) {
    if (f.is_smooth()) return 1;
    switch (f.kind()) {
        case FiberKind::IVstar:
        case FiberKind::IIIstar:
        case FiberKind::IIstar: return 1;
        case FiberKind::I: return 0;
        case FiberKind::Istar: return f.nu() == 0 ? -1 : 0;
        case FiberKind::II:
        case FiberKind::III:
        case FiberKind::IV: return -1;
    }
    return 0;
}

TwistResult twist(const Configuration& c, const std::vector<std::string>& sites) {
    if (sites.size() % 2 != 0) {
        throw DomainError("a quadratic twist needs an even number of sites, got " +
                          std::to_string(sites.size()));
    }
    std::set<std::string> site_set;
    for (const auto& s : sites) {
        if (!site_set.insert(s).second) throw DomainError("twist site '" + s + "' listed twice");
    }

    TwistResult out;
    std::vector<Fiber> fibers;
    for (const auto& f : c.fibers()) {
        if (!site_set.contains(f.label)) {
            fibers.push_back(f);
            continue;
        }
        out.predicted_delta_change += twist_contribution(f.type);
        const FiberType t = twist_type(f.type);
        if (!t.is_smooth()) fibers.push_back({f.label, t});
    }
    for (const auto& s : sites) {
        if (c.find(s) != nullptr) continue;
        out.predicted_delta_change += twist_contribution(FiberType::I(0));
        fibers.push_back({s, FiberType::Istar(0)});
    }
    out.configuration = Configuration(c.genus(), std::move(fibers));

    if (report(out.configuration).delta != report(c).delta + out.predicted_delta_change) {
        throw std::logic_error("twist changed delta by other than the sum of c_P");
    }
    return out;
}

bool is_star_minimal(const Configuration& c) {
    const FiberCounts n = counts(c);
    return n.a == 0 && n.d == 0 && n.c <= 1;
}

namespace {

std::vector<std::string> star_minimal_sites(const Configuration& c) {
    std::vector<std::string> sites;
    for (const auto& f : c.fibers()) {
        if (is_starred(f.type)) sites.push_back(f.label);
    }
    if (sites.size() % 2 == 0) return sites;
    // Odd count: keep one I0* as the allowed one, else add a smooth point.
    for (auto it = sites.begin(); it != sites.end(); ++it) {
        if (c.find(*it)->type == FiberType::Istar(0)) {
            sites.erase(it);
            return sites;
        }
    }
    sites.push_back(fresh_label(c, {}));
    return sites;
}

}  // namespace

Configuration star_minimal_twist(const Configuration& c) {
    Configuration out = twist(c, star_minimal_sites(c)).configuration;
    if (!is_star_minimal(out)) throw std::logic_error("star-minimal twist is not star-minimal");
    return out;
}

Configuration minimal_delta_twist(const Configuration& c) {
    if (!has_pole_of_j(c)) {
        throw DomainError("minimal-delta twist needs non-constant j (an I_n or I_n* fiber, n > 0)");
    }
    const std::vector<std::string> first = star_minimal_sites(c);
    const Configuration star = twist(c, first).configuration;

    const std::int64_t g = star.genus();
    const auto bound = 2 * static_cast<std::int64_t>(star.deg_L()) + 2 - 2 * g;
    if (static_cast<std::int64_t>(star.size()) < bound) {
        throw DomainError("configuration violates the Hurwitz bound: its star-minimal twist has " +
                          std::to_string(star.size()) + " singular fibers, fewer than 2 deg L + 2 - 2g = " +
                          std::to_string(bound) + "; no surface realizes it");
    }

    std::vector<std::string> second;
    for (const auto& f : star.fibers()) {
        if (is_b_or_c(f.type)) second.push_back(f.label);
    }
    if (second.size() % 2 != 0) {
        const Fiber* pick = nullptr;
        for (const auto& f : star.fibers()) {
            if (!f.type.is_multiplicative()) continue;
            if (pick == nullptr || f.type.nu() < pick->type.nu() ||
                (f.type.nu() == pick->type.nu() && f.label < pick->label)) {
                pick = &f;
            }
        }
        if (pick == nullptr) throw std::logic_error("star-minimal twist lost its I_n fibers");
        second.push_back(pick->label);
    }

    // Compose the two twists: a site twisted twice is not twisted at all.
    std::set<std::string> combined(first.begin(), first.end());
    for (const auto& s : second) {
        if (!combined.insert(s).second) combined.erase(s);
    }
    std::vector<std::string> sites;
    for (const auto& f : c.fibers()) {
        if (combined.contains(f.label)) sites.push_back(f.label);
    }
    for (const auto& s : combined) {
        if (c.find(s) == nullptr) sites.push_back(s);
    }

    Configuration out = twist(c, sites).configuration;
    const FiberCounts n = counts(out);
    if (n.b != 0 || n.c != 0) throw std::logic_error("minimal-delta twist left II/III/IV/I0* fibers");
    return out;
}

// ---------------------------------------------------------------------------
// Base change

std::optional<unsigned> cover_genus(unsigned base_genus, const Cover& cover) {
    // 2g' - 2 = n (2g - 2) + sum (e - 1)
    std::int64_t chi = static_cast<std::int64_t>(cover.degree) * (2 * static_cast<std::int64_t>(base_genus) - 2);
    for (const auto& [label, indices] : cover.ramification) {
        for (unsigned e : indices) chi += static_cast<std::int64_t>(e) - 1;
    }
    if (chi % 2 != 0 || chi < -2) return std::nullopt;
    return static_cast<unsigned>((chi + 2) / 2);
}

Configuration base_change(const Configuration& c, const Cover& cover) {
    if (cover.degree == 0) throw DomainError("cover degree must be at least 1");
    for (const auto& [label, indices] : cover.ramification) {
        unsigned sum = 0;
        for (unsigned e : indices) {
            if (e == 0) throw DomainError("ramification index 0 at '" + label + "'");
            sum += e;
        }
        if (sum != cover.degree) {
            throw DomainError("ramification indices at '" + label + "' sum to " + std::to_string(sum) +
                              ", not the degree " + std::to_string(cover.degree));
        }
    }
    const auto genus = cover_genus(c.genus(), cover);
    if (!genus) throw DomainError("ramification profile gives no cover (Riemann-Hurwitz parity or sign)");

    std::vector<Fiber> fibers;
    for (const auto& f : c.fibers()) {
        std::vector<unsigned> indices(cover.degree, 1U);
        if (auto it = cover.ramification.find(f.label); it != cover.ramification.end()) {
            indices = it->second;
        }
        for (std::size_t i = 0; i < indices.size(); ++i) {
            const FiberType t = base_change_type(f.type, indices[i]);
            if (t.is_smooth()) continue;
            std::string label = indices.size() == 1 ? f.label : f.label + "/" + std::to_string(i + 1);
            fibers.push_back({std::move(label), t});
        }
    }
    return Configuration(*genus, std::move(fibers));
}

// ---------------------------------------------------------------------------
// Ramification of j

RamificationVerdict ramification_accounting(const Configuration& c) {
    if (!is_star_minimal(c)) throw DomainError("ramification accounting needs a star-minimal configuration");
    if (!has_pole_of_j(c)) throw DomainError("ramification accounting needs non-constant j");

    RamificationVerdict v;
    RamificationProfile& p = v.profile;
    std::int64_t n2 = 0, n3 = 0, n4 = 0;
    for (const auto& f : c.fibers()) {
        switch (f.type.kind()) {
            case FiberKind::II:
                ++n2;
                p.over0_residues.push_back(1);
                break;
            case FiberKind::IV:
                ++n4;
                p.over0_residues.push_back(2);
                break;
            case FiberKind::III:
                ++n3;
                p.over1728_residues.push_back(1);
                break;
            case FiberKind::I:
                p.over_inf.push_back(f.type.nu());
                p.degree += f.type.nu();
                break;
            default: break;  // I0*: j finite there, no constraint
        }
    }
    const std::int64_t g = c.genus();
    p.free_over0 = fraction(p.degree - n2 - 2 * n4, 3);
    p.free_over1728 = fraction(p.degree - n3, 2);
    p.max_preimages = Rational(n2 + n4 + n3 + static_cast<std::int64_t>(p.over_inf.size())) +
                      p.free_over0 + p.free_over1728;
    p.hurwitz_min = p.degree + 2 - 2 * g;

    v.fiber_count = static_cast<std::int64_t>(c.size());
    v.expected_count = 2 * static_cast<std::int64_t>(c.deg_L()) + 2 - 2 * g;
    v.three_point = v.fiber_count == v.expected_count;
    if (p.max_preimages - p.hurwitz_min != Rational(v.fiber_count - v.expected_count)) {
        throw std::logic_error("preimage budget disagrees with the fiber count");
    }
    return v;
}

// ---------------------------------------------------------------------------
// Torelli and numeric criteria

std::string to_string(TorelliVerdict v) {
    switch (v) {
        case TorelliVerdict::FailsInfinitesimalTorelli: return "FAILS infinitesimal Torelli";
        case TorelliVerdict::Satisfies: return "satisfies infinitesimal Torelli";
        case TorelliVerdict::OutOfScope: return "out of scope (p_g <= 1)";
    }
    return "?";
}

TorelliVerdict torelli_verdict(std::int64_t p_g, bool j_constant, bool extremal) {
    if (p_g <= 1) return TorelliVerdict::OutOfScope;
    return (j_constant && extremal) ? TorelliVerdict::FailsInfinitesimalTorelli
                                    : TorelliVerdict::Satisfies;
}

std::int64_t h0_omega_twist(std::int64_t n, std::int64_t deg_L, std::int64_t num_singular,
                            bool j_constant) {
    if (n <= 0) throw DomainError("h0_omega_twist needs n > 0");
    if (!j_constant) return n - 1;
    const std::int64_t d = deg_L - num_singular;
    return n - 1 + std::max<std::int64_t>(0, n + d + 1);
}

bool family_bound(std::int64_t genus, std::int64_t deg_L, std::int64_t s) {
    const std::int64_t h20 = deg_L + genus - 1;
    if (h20 <= 1) throw DomainError("family bound needs p_g = deg L + g - 1 > 1");
    return 3 * genus - 3 + s > (s - deg_L + genus - 1) * h20;
}

std::optional<std::int64_t> family_bound_s_max(std::int64_t genus, std::int64_t deg_L) {
    const std::int64_t h20 = deg_L + genus - 1;
    if (h20 <= 1) throw DomainError("family bound needs p_g = deg L + g - 1 > 1");
    // s (h20 - 1) < 3g - 3 + h20 (deg L - g + 1)
    const std::int64_t rhs = 3 * genus - 3 + h20 * (deg_L - genus + 1);
    if (rhs <= 0) return std::nullopt;
    return (rhs - 1) / (h20 - 1);
}

std::optional<unsigned> single_fiber_genus_bound(const FiberType& f) {
    if (f.kind() == FiberKind::I && f.nu() > 0 && f.nu() % 12 == 0) return f.nu() / 12 + 1;
    if (f.kind() == FiberKind::Istar && f.nu() % 12 == 6) return (f.nu() + 6) / 12;
    return std::nullopt;
}

}  // namespace ellsurf
