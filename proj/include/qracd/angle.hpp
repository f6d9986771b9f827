// Copyright 2026 The qracd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRACD_ANGLE_HPP
#define QRACD_ANGLE_HPP

// Angle literals ("0.35pi", "1e-4pi", "0.7", "pi") and locale-free number
// formatting for CSV output.

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "qracd/qmath.hpp"

namespace qracd {

/// Angle in radians that remembers whether it was written as a multiple of pi.
struct Angle {
    double radians = 0.0;
    /// Coefficient of pi as written, or radians / pi for plain literals.
    double pi_multiple = 0.0;
};

inline double parse_decimal(std::string_view s) {
    double v = 0.0;
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    }
    return v;
}

inline Angle parse_angle(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
        std::string_view coeff = text.substr(0, text.size() - 2);
        double k = 1.0;
        if (coeff == "-") {
            k = -1.0;
        } else if (!coeff.empty() && coeff != "+") {
            k = parse_decimal(coeff);
        }
        return {k * kPi, k};
    }
    const double v = parse_decimal(text);
    return {v, v / kPi};
}

inline std::vector<Angle> parse_angle_list(std::string_view text) {
    std::vector<Angle> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_angle(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                     : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

/// Shortest round-trip form at the given number of significant digits,
/// independent of the C locale.
inline std::string format_number(double v, int significant = 12) {
    if (v == 0.0) {
        v = 0.0;  // drop the sign of -0
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant);
    return std::string(buf, res.ptr);
}

}  // namespace qracd

#endif  // QRACD_ANGLE_HPP
