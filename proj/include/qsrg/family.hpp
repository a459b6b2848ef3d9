#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsrg {

enum class Family { elliptic, hyperbolic, parabolic };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::elliptic: return "elliptic";
        case Family::hyperbolic: return "hyperbolic";
        case Family::parabolic: return "parabolic";
    }
    return "?";
}

inline Family family_from_name(std::string_view s) {
    if (s == "elliptic" || s == "E" || s == "e") return Family::elliptic;
    if (s == "hyperbolic" || s == "H" || s == "h") return Family::hyperbolic;
    if (s == "parabolic" || s == "P" || s == "p") return Family::parabolic;
    throw std::invalid_argument("unknown quadric family: " + std::string(s));
}

}  // namespace qsrg
