#include "cellsim/similarity.hpp"

#include "cellsim/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cellsim {

namespace {

constexpr double kWeightTolerance = 1e-12;

std::size_t count_absent(const MobilityPattern& from, const MobilityPattern& in) {
    std::unordered_set<CellId> present;
    for (const auto& p : in) {
        present.insert(p.cell);
    }
    return static_cast<std::size_t>(std::count_if(
        from.begin(), from.end(), [&](const Point& p) { return !present.contains(p.cell); }));
}

} // namespace

void check_convex_weights(double a, double b) {
    auto in_unit = [](double w) { return std::isfinite(w) && w >= 0.0 && w <= 1.0; };
    if (!in_unit(a) || !in_unit(b) || std::abs(a + b - 1.0) > kWeightTolerance) {
        throw DomainError("weights must lie in [0,1] and sum to 1 (got " + std::to_string(a) +
                          ", " + std::to_string(b) + ")");
    }
}

Weights::Weights(double space, double time) : space_(space), time_(time) {
    check_convex_weights(space, time);
}

std::size_t uncommon_count(const MobilityPattern& a, const MobilityPattern& b) {
    return count_absent(a, b) + count_absent(b, a);
}

double d_space(const MobilityPattern& a, const MobilityPattern& b) {
    return static_cast<double>(uncommon_count(a, b)) / static_cast<double>(a.size() + b.size());
}

double d_time(const MobilityPattern& a, const MobilityPattern& b) {
    // terms tallied by (max, gap), summed in a fixed order
    std::array<std::array<std::size_t, kSlotCount + 1>, kSlotCount + 1> tally{};
    std::size_t matched = 0;
    // the p-th visit of a cell in `a` pairs with its p-th visit in `b`
    std::unordered_map<CellId, std::vector<int>> later;
    for (const auto& pb : b) {
        later[pb.cell].push_back(pb.time.value());
    }
    std::unordered_map<CellId, std::size_t> seen;
    for (const auto& pa : a) {
        const auto it = later.find(pa.cell);
        if (it == later.end()) {
            continue;
        }
        const std::size_t p = seen[pa.cell]++;
        if (p >= it->second.size()) {
            continue;
        }
        ++matched;
        const int ta = pa.time.value();
        const int tb = it->second[p];
        ++tally[static_cast<std::size_t>(std::max(ta, tb))][static_cast<std::size_t>(std::abs(ta - tb))];
    }
    if (matched == 0) {
        return 1.0;
    }
    double total = 0.0;
    for (std::size_t top = 1; top <= kSlotCount; ++top) {
        for (std::size_t gap = 1; gap < top; ++gap) {
            if (tally[top][gap] != 0) {
                total += static_cast<double>(tally[top][gap]) * static_cast<double>(gap) /
                         static_cast<double>(top);
            }
        }
    }
    return total / static_cast<double>(matched);
}

double d_composite(const MobilityPattern& a, const MobilityPattern& b, const Weights& w) {
    return w.space() * d_space(a, b) + w.time() * d_time(a, b);
}

} // namespace cellsim
