#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pacbound {

/// A real number extended with +infinity. -infinity and NaN are rejected at
/// construction: a bound that degenerates to +infinity is vacuous but valid,
/// while -infinity or NaN always indicates a bug in the caller.
class ExtReal {
public:
    constexpr ExtReal() = default;

    explicit ExtReal(double v) : v_(v) {
        if (std::isnan(v) || (std::isinf(v) && v < 0)) {
            throw std::invalid_argument("ExtReal: value must be finite or +inf");
        }
    }

    static ExtReal inf() {
        ExtReal r;
        r.v_ = std::numeric_limits<double>::infinity();
        return r;
    }

    double raw() const { return v_; }
    bool is_inf() const { return std::isinf(v_); }
    bool finite() const { return !std::isinf(v_); }

    /// Finite value accessor; throws on +inf so silent misuse cannot happen.
    double value() const {
        if (is_inf()) throw std::domain_error("ExtReal: +inf has no finite value");
        return v_;
    }

    ExtReal operator+(ExtReal o) const {
        if (is_inf() || o.is_inf()) return inf();
        return ExtReal(v_ + o.v_);
    }
    ExtReal& operator+=(ExtReal o) { return *this = *this + o; }

    friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
    friend bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
    friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
    friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
    friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
    friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

private:
    double v_ = 0.0;
};

inline ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }

} // namespace pacbound
