#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ellsurf {

// Element of N u {inf}. Infinity is the valuation of the zero function and is
// absorbing under addition and scaling.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(std::int64_t v) : value_(v) {}

    static constexpr Valuation infinity() {
        Valuation v;
        v.infinite_ = true;
        return v;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    /// Finite value; callers must check is_finite() first.
    constexpr std::int64_t value() const { return value_; }

    constexpr Valuation scaled(std::int64_t e) const {
        return infinite_ ? *this : Valuation(value_ * e);
    }
    constexpr Valuation minus(std::int64_t k) const {
        return infinite_ ? *this : Valuation(value_ - k);
    }

    friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Valuation& a,
                                                      const Valuation& b) {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ <=> b.infinite_;
        }
        return a.value_ <=> b.value_;
    }
    friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return Valuation(a.value_ + b.value_);
    }

    std::string to_string() const {
        return infinite_ ? std::string("inf") : std::to_string(value_);
    }

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

}  // namespace ellsurf
