#include "ellsurf/kodaira.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "ellsurf/errors.hpp"

namespace ellsurf {

std::string FiberType::to_string() const {
    switch (kind_) {
        case FiberKind::I: return "I" + std::to_string(nu_);
        case FiberKind::Istar: return "I" + std::to_string(nu_) + "*";
        case FiberKind::II: return "II";
        case FiberKind::III: return "III";
        case FiberKind::IV: return "IV";
        case FiberKind::IVstar: return "IV*";
        case FiberKind::IIIstar: return "III*";
        case FiberKind::IIstar: return "II*";
    }
    return "?";
}

FiberType parse_fiber_type(std::string_view text) {
    auto fail = [&](std::size_t pos) -> FiberType {
        throw ParseError("invalid fiber type '" + std::string(text) + "'", pos);
    };
    if (text == "II") return FiberType::II();
    if (text == "III") return FiberType::III();
    if (text == "IV") return FiberType::IV();
    if (text == "II*") return FiberType::IIstar();
    if (text == "III*") return FiberType::IIIstar();
    if (text == "IV*") return FiberType::IVstar();
    if (text.size() < 2 || text[0] != 'I') return fail(0);

    std::string_view rest = text.substr(1);
    const bool star = rest.back() == '*';
    if (star) rest.remove_suffix(1);
    if (rest.empty()) return fail(1);
    // Canonical decimal only, so that printing round-trips bit-exactly.
    if (rest.size() > 1 && rest[0] == '0') return fail(1);
    unsigned long long nu = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(rest[i]))) return fail(1 + i);
        nu = nu * 10 + static_cast<unsigned>(rest[i] - '0');
        if (nu > std::numeric_limits<unsigned>::max() / 2) return fail(1 + i);
    }
    return star ? FiberType::Istar(static_cast<unsigned>(nu)) : FiberType::I(static_cast<unsigned>(nu));
}

// ---------------------------------------------------------------------------

LocalData::LocalData(Valuation c4, Valuation c6, std::int64_t delta)
    : c4_(c4), c6_(c6), delta_(delta) {
    if (delta < 0 || (c4.is_finite() && c4.value() < 0) || (c6.is_finite() && c6.value() < 0)) {
        throw DomainError("negative valuation in local data " + to_string());
    }
    const Valuation bound = std::min(c4.scaled(3), c6.scaled(2));
    if (bound.is_infinite()) throw DomainError("c4 and c6 both vanish, so Delta vanishes identically");
    if (delta < bound.value()) {
        throw DomainError("local data " + to_string() +
                          " violates v(Delta) >= min(3 v(c4), 2 v(c6))");
    }
}

std::string LocalData::to_string() const {
    return "(" + c4_.to_string() + ", " + c6_.to_string() + ", " + std::to_string(delta_) + ")";
}

Minimalized minimalize(const LocalData& d) {
    std::int64_t k = d.delta() / 12;
    if (d.c4().is_finite()) k = std::min(k, d.c4().value() / 4);
    if (d.c6().is_finite()) k = std::min(k, d.c6().value() / 6);
    return {LocalData(d.c4().minus(4 * k), d.c6().minus(6 * k), d.delta() - 12 * k), k};
}

FiberType classify_local(const LocalData& d) {
    const Valuation c4 = d.c4();
    const Valuation c6 = d.c6();
    const std::int64_t vd = d.delta();
    const auto eq = [](Valuation v, std::int64_t x) { return v == Valuation(x); };
    const auto ge = [](Valuation v, std::int64_t x) { return v >= Valuation(x); };

    if (ge(c4, 4) && ge(c6, 6) && vd >= 12) {
        throw ClassificationError("local data " + d.to_string() + " is not minimal");
    }
    if (vd == 0) return FiberType::I(0);
    if (eq(c4, 0) && eq(c6, 0)) return FiberType::I(static_cast<unsigned>(vd));
    if (eq(c4, 2) && eq(c6, 3) && vd > 6) return FiberType::Istar(static_cast<unsigned>(vd - 6));

    switch (vd) {
        case 2:
            if (ge(c4, 1) && eq(c6, 1)) return FiberType::II();
            break;
        case 3:
            if (eq(c4, 1) && ge(c6, 2)) return FiberType::III();
            break;
        case 4:
            if (ge(c4, 2) && eq(c6, 2)) return FiberType::IV();
            break;
        case 6:
            if (ge(c4, 2) && ge(c6, 3)) return FiberType::Istar(0);
            break;
        case 8:
            if (ge(c4, 3) && eq(c6, 4)) return FiberType::IVstar();
            break;
        case 9:
            if (eq(c4, 3) && ge(c6, 5)) return FiberType::IIIstar();
            break;
        case 10:
            if (ge(c4, 4) && eq(c6, 5)) return FiberType::IIstar();
            break;
        default:
            break;
    }
    throw ClassificationError("local data " + d.to_string() +
                              " matches no Kodaira type (not from a Weierstrass model)");
}

unsigned euler_number(const FiberType& f) {
    switch (f.kind()) {
        case FiberKind::I: return f.nu();
        case FiberKind::Istar: return 6 + f.nu();
        case FiberKind::II: return 2;
        case FiberKind::III: return 3;
        case FiberKind::IV: return 4;
        case FiberKind::IVstar: return 8;
        case FiberKind::IIIstar: return 9;
        case FiberKind::IIstar: return 10;
    }
    return 0;
}

unsigned lattice_contribution(const FiberType& f) {
    switch (f.kind()) {
        case FiberKind::I: return f.nu() == 0 ? 0 : f.nu() - 1;
        case FiberKind::Istar: return f.nu() + 4;
        case FiberKind::II: return 0;
        case FiberKind::III: return 1;
        case FiberKind::IV: return 2;
        case FiberKind::IVstar: return 6;
        case FiberKind::IIIstar: return 7;
        case FiberKind::IIstar: return 8;
    }
    return 0;
}

FiberType twist_type(const FiberType& f) {
    switch (f.kind()) {
        case FiberKind::I: return FiberType::Istar(f.nu());
        case FiberKind::Istar: return FiberType::I(f.nu());
        case FiberKind::II: return FiberType::IVstar();
        case FiberKind::IVstar: return FiberType::II();
        case FiberKind::III: return FiberType::IIIstar();
        case FiberKind::IIIstar: return FiberType::III();
        case FiberKind::IV: return FiberType::IIstar();
        case FiberKind::IIstar: return FiberType::IV();
    }
    return f;
}

LocalData canonical_local_data(const FiberType& f) {
    const Valuation inf = Valuation::infinity();
    switch (f.kind()) {
        case FiberKind::I: return LocalData(Valuation(0), Valuation(0), f.nu());
        case FiberKind::Istar: return LocalData(Valuation(2), Valuation(3), 6 + f.nu());
        case FiberKind::II: return LocalData(inf, Valuation(1), 2);
        case FiberKind::IV: return LocalData(inf, Valuation(2), 4);
        case FiberKind::IVstar: return LocalData(inf, Valuation(4), 8);
        case FiberKind::IIstar: return LocalData(inf, Valuation(5), 10);
        case FiberKind::III: return LocalData(Valuation(1), inf, 3);
        case FiberKind::IIIstar: return LocalData(Valuation(3), inf, 9);
    }
    throw std::logic_error("unreachable fiber kind");
}

FiberType base_change_type(const FiberType& f, unsigned e) {
    if (e == 0) throw DomainError("ramification index must be at least 1");
    const LocalData d = canonical_local_data(f);
    const std::int64_t s = e;
    const LocalData pulled(d.c4().scaled(s), d.c6().scaled(s), d.delta() * s);
    return classify_local(minimalize(pulled).data);
}

}  // namespace ellsurf
