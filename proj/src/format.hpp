#pragma once

#include <charconv>
#include <string>

namespace ostrowski::detail {

// Shortest round-trip decimal form of v.
inline std::string fmt(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace ostrowski::detail
