#pragma once

#include <limits>
#include <string>

namespace sobemb {

// An exponent value in [1, inf].  Infinity participates in the convention
// 1/inf = 0, which every combined-constant formula relies on.
class ExtReal {
public:
    constexpr ExtReal() = default;
    constexpr ExtReal(double v) : v_(v) {}  // NOLINT: implicit, exponents read naturally

    static constexpr ExtReal infinity() {
        return ExtReal(std::numeric_limits<double>::infinity());
    }

    constexpr bool is_inf() const { return v_ == std::numeric_limits<double>::infinity(); }
    constexpr double value() const { return v_; }

    // 1/x with 1/inf = 0.
    constexpr double inv() const { return is_inf() ? 0.0 : 1.0 / v_; }

    constexpr bool operator==(const ExtReal& o) const { return v_ == o.v_; }
    constexpr bool operator!=(const ExtReal& o) const { return v_ != o.v_; }
    constexpr bool operator<(const ExtReal& o) const { return v_ < o.v_; }
    constexpr bool operator<=(const ExtReal& o) const { return v_ <= o.v_; }
    constexpr bool operator>(const ExtReal& o) const { return v_ > o.v_; }
    constexpr bool operator>=(const ExtReal& o) const { return v_ >= o.v_; }

private:
    double v_ = 1.0;
};

// Serialized form used by the CLI and file formats: "inf" is the only
// non-numeric token.
std::string format_exponent(ExtReal e);

// Parses a serialized exponent; throws std::invalid_argument on junk.
ExtReal parse_exponent(const std::string& text);

}  // namespace sobemb
