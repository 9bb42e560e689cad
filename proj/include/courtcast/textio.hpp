#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "courtcast/error.hpp"

namespace courtcast {

// Shortest decimal form that parses back to the identical double.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s, const std::string& what) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    require(res.ec == std::errc() && res.ptr == s.data() + s.size(), ErrorKind::parse,
            what + ": bad number '" + std::string(s) + "'");
    return v;
}

inline std::uint64_t parse_u64(std::string_view s, const std::string& what) {
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    require(res.ec == std::errc() && res.ptr == s.data() + s.size(), ErrorKind::parse,
            what + ": bad integer '" + std::string(s) + "'");
    return v;
}

}  // namespace courtcast
