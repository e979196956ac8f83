#pragma once

#include <iomanip>
#include <sstream>

#include "monreg/betti.hpp"

namespace monreg {

/// Macaulay2-style Betti layout: columns are homological indices i, rows are
/// internal-degree slopes j - i, zeros print as dots.
inline std::string render_betti_text(const BettiTable& B) {
    int max_i = 0, min_slope = 0, max_slope = 0;
    bool any = false;
    for (const auto& [ij, b] : B.entries) {
        max_i = std::max(max_i, ij.first);
        int slope = ij.second - ij.first;
        if (!any) {
            min_slope = max_slope = slope;
            any = true;
        }
        min_slope = std::min(min_slope, slope);
        max_slope = std::max(max_slope, slope);
    }
    if (!any) return "(zero betti table)\n";

    std::vector<long long> totals(max_i + 1, 0);
    for (const auto& [ij, b] : B.entries) totals[ij.first] += b;

    int width = 6;
    std::ostringstream os;
    os << std::setw(width + 1) << "";
    for (int i = 0; i <= max_i; ++i) os << std::setw(width) << i;
    os << "\n" << std::setw(width) << "total" << ":";
    for (int i = 0; i <= max_i; ++i) os << std::setw(width) << totals[i];
    os << "\n";
    for (int slope = min_slope; slope <= max_slope; ++slope) {
        os << std::setw(width) << slope << ":";
        for (int i = 0; i <= max_i; ++i) {
            long long b = B.at(i, slope + i);
            if (b == 0)
                os << std::setw(width) << ".";
            else
                os << std::setw(width) << b;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace monreg
