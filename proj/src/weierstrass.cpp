#include "ellsurf/weierstrass.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ellsurf/errors.hpp"

namespace ellsurf {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

LocalData infinity_data(const WeierstrassModel& m, const ModelInvariants& inv) {
    const std::int64_t k = infinity_weight(m);
    return LocalData(valuation_at_infinity(inv.c4, 4 * k), valuation_at_infinity(inv.c6, 6 * k),
                     valuation_at_infinity(inv.delta, 12 * k).value());
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

Poly discriminant(const Poly& a, const Poly& b) {
    return Rational(-16) * (Rational(4) * a.pow(3) + Rational(27) * b.pow(2));
}

WeierstrassModel::WeierstrassModel(Poly a, Poly b) : a_(std::move(a)), b_(std::move(b)) {
    if (discriminant(a_, b_).is_zero()) {
        throw DomainError("singular model: discriminant -16(4A^3 + 27B^2) vanishes identically");
    }
}

ModelInvariants invariants(const WeierstrassModel& m) {
    ModelInvariants inv;
    inv.c4 = Rational(-48) * m.a();
    inv.c6 = Rational(-864) * m.b();
    inv.delta = discriminant(m.a(), m.b());
    if (!(inv.c4.pow(3) - inv.c6.pow(2) == Rational(1728) * inv.delta)) {
        throw std::logic_error("c4^3 - c6^2 != 1728 Delta");
    }
    if (inv.c4.is_zero()) {
        inv.j_num = Poly();
        inv.j_den = Poly::constant(1);
    } else {
        const Poly num = inv.c4.pow(3);
        const Poly g = gcd(num, inv.delta);
        inv.j_num = exact_quotient(num, g);
        inv.j_den = exact_quotient(inv.delta, g);
        const Rational lc = inv.j_den.leading();
        inv.j_num *= 1 / lc;
        inv.j_den *= 1 / lc;
    }
    return inv;
}

std::int64_t infinity_weight(const WeierstrassModel& m) {
    std::int64_t k = 0;
    if (auto d = m.a().degree()) k = std::max(k, ceil_div(static_cast<std::int64_t>(*d), 4));
    if (auto d = m.b().degree()) k = std::max(k, ceil_div(static_cast<std::int64_t>(*d), 6));
    return k;
}

LocalData local_data_at(const WeierstrassModel& m, const Place& place) {
    const ModelInvariants inv = invariants(m);
    if (place.is_infinity()) return minimalize(infinity_data(m, inv)).data;
    const LocalData raw(valuation(inv.c4, place), valuation(inv.c6, place),
                        valuation(inv.delta, place).value());
    return minimalize(raw).data;
}

ModelClassification classify_places(const WeierstrassModel& m, std::span<const Poly> refine_with) {
    const ModelInvariants inv = invariants(m);
    std::vector<Poly> inputs{inv.delta};
    const bool has_c4 = !inv.c4.is_zero();
    const bool has_c6 = !inv.c6.is_zero();
    if (has_c4) inputs.push_back(inv.c4);
    if (has_c6) inputs.push_back(inv.c6);
    for (const auto& p : refine_with) {
        if (!p.is_constant()) inputs.push_back(p);
    }
    const FactorBasis basis = gcdfree_refine(inputs);

    ModelClassification out;
    for (std::size_t k = 0; k < basis.factors.size(); ++k) {
        const unsigned vd = basis.exponents[0][k];
        if (vd == 0) continue;
        std::size_t idx = 1;
        const Valuation v4 = has_c4 ? Valuation(basis.exponents[idx++][k]) : Valuation::infinity();
        const Valuation v6 = has_c6 ? Valuation(basis.exponents[idx++][k]) : Valuation::infinity();
        const LocalData data = minimalize(LocalData(v4, v6, vd)).data;
        const FiberType type = classify_local(data);
        if (type.is_smooth()) continue;
        Place place = Place::finite(basis.factors[k]);
        out.euler_sum += euler_number(type) * static_cast<unsigned>(place.point_count());
        out.places.push_back({std::move(place), data, type});
    }

    const LocalData at_inf = minimalize(infinity_data(m, inv)).data;
    const FiberType inf_type = classify_local(at_inf);
    if (!inf_type.is_smooth()) {
        out.euler_sum += euler_number(inf_type);
        out.places.push_back({Place::infinity(), at_inf, inf_type});
    }

    if (out.euler_sum % 12 != 0) {
        throw std::logic_error("Noether violation: Euler numbers sum to " +
                               std::to_string(out.euler_sum));
    }
    out.deg_L = out.euler_sum / 12;
    return out;
}

Configuration to_configuration(const ModelClassification& mc) {
    std::vector<Fiber> fibers;
    for (const auto& cp : mc.places) {
        const std::string name = cp.place.to_string();
        const std::size_t n = cp.place.point_count();
        if (n == 1) {
            fibers.push_back({name, cp.type});
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            fibers.push_back({name + "#" + std::to_string(i), cp.type});
        }
    }
    return Configuration(0, std::move(fibers));
}

Configuration classify_model(const WeierstrassModel& m, std::span<const Poly> refine_with) {
    return to_configuration(classify_places(m, refine_with));
}

WeierstrassModel quadratic_twist(const WeierstrassModel& m, const Poly& f) {
    if (f.is_zero()) throw DomainError("cannot twist by the zero polynomial");
    if (!is_squarefree(f)) throw DomainError("twisting polynomial must be squarefree");
    return WeierstrassModel(f.pow(2) * m.a(), f.pow(3) * m.b());
}

WeierstrassModel pullback(const WeierstrassModel& m, const Poly& inner) {
    return WeierstrassModel(m.a().compose(inner), m.b().compose(inner));
}

JInvariant j_invariant(const WeierstrassModel& m) {
    const ModelInvariants inv = invariants(m);
    JInvariant j;
    if (inv.j_num.is_constant() && inv.j_den.is_constant()) {
        j.constant = true;
        j.value = inv.j_num.coeff(0) / inv.j_den.coeff(0);
    }
    return j;
}

WeierstrassModel parse_model(std::string_view text) {
    std::optional<Poly> a;
    std::optional<Poly> b;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        const std::string_view line = trim(text.substr(start, end - start));
        start = end + 1;
        if (line.empty() || line.front() == '#') continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 'A = <poly>' or 'B = <poly>'",
                             line_no);
        }
        const std::string_view key = trim(line.substr(0, eq));
        std::optional<Poly>* slot = key == "A" ? &a : key == "B" ? &b : nullptr;
        if (slot == nullptr) {
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'",
                             line_no);
        }
        if (slot->has_value()) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'",
                             line_no);
        }
        try {
            *slot = parse_poly(line.substr(eq + 1));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
    }
    if (!a || !b) throw ParseError("model needs both 'A = ...' and 'B = ...'", line_no);
    return WeierstrassModel(*a, *b);
}

std::string to_string(const WeierstrassModel& m) {
    return "A = " + to_string(m.a()) + "\nB = " + to_string(m.b()) + "\n";
}

std::string format_classification(const ModelClassification& mc) {
    std::ostringstream out;
    if (mc.places.empty()) out << "no singular fibers\n";
    for (const auto& cp : mc.places) {
        out << cp.place.to_string() << " : " << cp.type.to_string() << " " << cp.data.to_string();
        if (cp.place.point_count() > 1) out << " x" << cp.place.point_count();
        out << "\n";
    }
    out << "deg L = " << mc.deg_L << "\n";
    out << "sum_euler = " << mc.euler_sum << "\n";
    return out.str();
}

}  // namespace ellsurf
