#include "ellsurf/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ellsurf/errors.hpp"

namespace ellsurf {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::variable() { return monomial(1, 1); }

Poly Poly::linear(const Rational& root) { return Poly({-root, Rational(1)}); }

void Poly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

std::optional<std::size_t> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    return *this * inv;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    }
    return Poly(std::move(d));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner + Poly::constant(*it);
    }
    return acc;
}

Poly Poly::pow(unsigned exponent) const {
    Poly result = Poly::constant(1);
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

// ---------------------------------------------------------------------------
// Division, gcd, squarefree parts

DivMod divmod(const Poly& numerator, const Poly& divisor) {
    if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<Rational> rem(numerator.coefficients().begin(), numerator.coefficients().end());
    const std::size_t dd = *divisor.degree();
    if (rem.size() <= dd) return {Poly(), numerator};

    std::vector<Rational> quot(rem.size() - dd);
    const Rational inv_lead = 1 / divisor.leading();
    auto dc = divisor.coefficients();
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (sgn(rem[k]) == 0) continue;
        Rational q = rem[k] * inv_lead;
        quot[k - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[k - dd + j] -= q * dc[j];
        }
    }
    rem.resize(dd);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& numerator, const Poly& divisor) {
    auto [q, r] = divmod(numerator, divisor);
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    Poly x = a.monic();
    Poly y = b.monic();
    while (!y.is_zero()) {
        Poly r = divmod(x, y).remainder;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

bool is_squarefree(const Poly& p) {
    if (p.is_zero()) return false;
    if (p.is_constant()) return true;
    return gcd(p, p.derivative()).is_constant();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.is_constant()) return out;

    const Poly f = p.monic();
    const Poly df = f.derivative();
    const Poly a0 = gcd(f, df);
    Poly b = exact_quotient(f, a0);
    Poly c = exact_quotient(df, a0);
    Poly d = c - b.derivative();
    for (unsigned i = 1; !b.is_constant(); ++i) {
        Poly a = gcd(b, d);
        if (!a.is_constant()) out.push_back({a, i});
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - b.derivative();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Factor bases

bool place_less(const Poly& a, const Poly& b) {
    const auto da = a.degree().value_or(0);
    const auto db = b.degree().value_or(0);
    if (da != db) return da < db;
    for (std::size_t i = da; i-- > 0;) {
        const int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c > 0;
    }
    return false;
}

Poly FactorBasis::reconstruct(std::size_t input) const {
    Poly acc = Poly::constant(units.at(input));
    for (std::size_t k = 0; k < factors.size(); ++k) {
        acc *= factors[k].pow(exponents.at(input)[k]);
    }
    return acc;
}

FactorBasis gcdfree_refine(std::span<const Poly> inputs) {
    std::vector<Poly> work;
    for (const auto& p : inputs) {
        if (p.is_zero()) throw DomainError("gcd-free refinement of the zero polynomial");
        for (auto& sf : squarefree_decomposition(p)) work.push_back(std::move(sf.factor));
    }

    // Split any two factors sharing a common divisor until all are coprime.
    // Every element stays monic and squarefree, and total degree strictly
    // drops on each split, so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                if (work[i] == work[j]) {
                    work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                    break;
                }
                Poly g = gcd(work[i], work[j]);
                if (g.is_constant()) continue;
                Poly a = exact_quotient(work[i], g);
                Poly b = exact_quotient(work[j], g);
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                work.push_back(std::move(g));
                if (!a.is_constant()) work.push_back(a.monic());
                if (!b.is_constant()) work.push_back(b.monic());
                changed = true;
            }
        }
    }
    std::sort(work.begin(), work.end(), place_less);

    FactorBasis basis;
    basis.factors = std::move(work);
    for (const auto& p : inputs) {
        basis.units.push_back(p.leading());
        std::vector<unsigned> exps;
        exps.reserve(basis.factors.size());
        for (const auto& q : basis.factors) {
            exps.push_back(static_cast<unsigned>(valuation(p, q).value()));
        }
        basis.exponents.push_back(std::move(exps));
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (!(basis.reconstruct(i) == inputs[i])) {
            throw std::logic_error("gcd-free basis does not reconstruct its input");
        }
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Places and valuations

Place Place::finite(Poly q) {
    if (q.is_constant()) throw DomainError("a finite place needs a non-constant polynomial");
    if (sgn(q.leading() - 1) != 0) throw DomainError("place polynomial must be monic");
    if (!is_squarefree(q)) throw DomainError("place polynomial must be squarefree");
    return Place(std::move(q));
}

std::size_t Place::point_count() const { return infinity_ ? 1 : *q_.degree(); }

std::string Place::to_string() const { return infinity_ ? std::string("inf") : ellsurf::to_string(q_); }

bool operator<(const Place& a, const Place& b) {
    if (a.infinity_ || b.infinity_) return !a.infinity_ && b.infinity_;
    return place_less(a.q_, b.q_);
}

Valuation valuation(const Poly& p, const Poly& q) {
    if (q.is_constant()) throw DomainError("valuation at a constant polynomial");
    if (p.is_zero()) return Valuation::infinity();
    std::int64_t v = 0;
    Poly cur = p;
    for (;;) {
        auto [quot, rem] = divmod(cur, q);
        if (!rem.is_zero()) break;
        cur = std::move(quot);
        ++v;
    }
    return Valuation(v);
}

Valuation valuation(const Poly& p, const Place& place) {
    if (place.is_infinity()) {
        throw DomainError("valuation at infinity needs a weight; use valuation_at_infinity");
    }
    return valuation(p, place.polynomial());
}

Valuation valuation_at_infinity(const Poly& p, std::int64_t weight) {
    if (p.is_zero()) return Valuation::infinity();
    const auto d = static_cast<std::int64_t>(*p.degree());
    if (d > weight) throw DomainError("degree exceeds the weight at infinity");
    return Valuation(weight - d);
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    auto cs = p.coefficients();
    bool first = true;
    for (std::size_t i = cs.size(); i-- > 0;) {
        const Rational& c = cs[i];
        if (sgn(c) == 0) continue;
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(c);
        const bool unit = (mag == 1);
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (!unit) out += mag.get_str() + "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    static constexpr unsigned kMaxExponent = 4096;
    static constexpr std::size_t kMaxDegree = 65536;
    static constexpr unsigned kMaxDepth = 200;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + msg,
                         pos_);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        for (;;) {
            if (peek('*')) {
                const std::size_t at = pos_++;
                const Poly rhs = unary();
                if (acc.degree().value_or(0) + rhs.degree().value_or(0) > kMaxDegree) {
                    pos_ = at;
                    fail("degree too large");
                }
                acc *= rhs;
            } else if (peek('/')) {
                const std::size_t at = pos_++;
                Poly d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division is only allowed by a nonzero constant");
                }
                acc *= 1 / d.leading();
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (peek('-') || peek('+')) {
            const bool negate = s_[pos_] == '-';
            if (++depth_ > kMaxDepth) fail("too many signs");
            ++pos_;
            Poly p = unary();
            --depth_;
            return negate ? -p : p;
        }
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            const std::string digits = read_digits();
            if (digits.empty()) fail("expected a non-negative integer exponent");
            if (digits.size() > 5 || std::stoul(digits) > kMaxExponent) {
                pos_ = start;
                fail("exponent too large");
            }
            const unsigned e = static_cast<unsigned>(std::stoul(digits));
            if (base.degree().value_or(0) * e > kMaxDegree) {
                pos_ = start;
                fail("degree too large");
            }
            return base.pow(e);
        }
        return base;
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            if (++depth_ > kMaxDepth) fail("parentheses nested too deeply");
            ++pos_;
            Poly inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            --depth_;
            return inner;
        }
        if (c == 't') {
            ++pos_;
            return Poly::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Poly::constant(Rational(mpz_class(read_digits(), 10)));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    unsigned depth_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace ellsurf
