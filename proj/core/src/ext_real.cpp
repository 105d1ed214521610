#include "sobemb/ext_real.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sobemb {

std::string format_exponent(ExtReal e) {
    if (e.is_inf()) {
        return "inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", e.value());
    return buf;
}

ExtReal parse_exponent(const std::string& text) {
    if (text == "inf") {
        return ExtReal::infinity();
    }
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("exponent: expected a number or \"inf\", got \"" + text + "\"");
    }
    if (pos != text.size() || std::isnan(v)) {
        throw std::invalid_argument("exponent: expected a number or \"inf\", got \"" + text + "\"");
    }
    return ExtReal(v);
}

}  // namespace sobemb
