#include "cellsim/mobility.hpp"

#include "cellsim/error.hpp"

#include <limits>
#include <string>

namespace cellsim {

Timestamp Timestamp::from_index(int index) {
    if (index < 1 || index > kSlotCount) {
        throw DomainError("timestamp index " + std::to_string(index) + " outside 1.." +
                          std::to_string(kSlotCount));
    }
    return Timestamp(index);
}

Timestamp Timestamp::of_minute(int minute) {
    if (minute < 0 || minute >= kMinutesPerDay) {
        throw DomainError("minute " + std::to_string(minute) + " outside 0..1439");
    }
    return Timestamp(minute / kSlotMinutes + 1);
}

Timestamp timestamp_of_minute(int minute) { return Timestamp::of_minute(minute); }

MobilityPattern::MobilityPattern(std::vector<Point> points, EqualTimestamps rule)
    : points_(std::move(points)) {
    if (points_.empty()) {
        throw DomainError("mobility pattern must contain at least one point");
    }
    std::size_t run = 1;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const auto prev = points_[i - 1].time;
        const auto cur = points_[i].time;
        if (cur < prev) {
            throw DomainError("timestamps decrease at position " + std::to_string(i) + " (t" +
                              std::to_string(prev.index()) + " then t" +
                              std::to_string(cur.index()) + ")");
        }
        run = cur == prev ? run + 1 : 1;
        if (rule == EqualTimestamps::PairsOnly && run > 2) {
            throw DomainError("more than two consecutive points share t" +
                              std::to_string(cur.index()) + " at position " + std::to_string(i));
        }
    }
}

std::vector<CellId> MobilityPattern::cells() const {
    std::vector<CellId> out;
    out.reserve(points_.size());
    for (const auto& p : points_) {
        out.push_back(p.cell);
    }
    return out;
}

MobilityPattern make_pattern(std::span<const std::pair<long long, int>> points,
                             EqualTimestamps rule) {
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& [cell, slot] : points) {
        if (cell < 0 || cell > std::numeric_limits<CellId>::max()) {
            throw DomainError("cell id " + std::to_string(cell) + " is not a valid cell");
        }
        out.push_back(Point{static_cast<CellId>(cell), Timestamp::from_index(slot)});
    }
    return MobilityPattern(std::move(out), rule);
}

MobilityPattern make_pattern(std::initializer_list<std::pair<long long, int>> points,
                             EqualTimestamps rule) {
    return make_pattern(std::span(points.begin(), points.size()), rule);
}

bool is_subpattern(const MobilityPattern& sub, const MobilityPattern& super) {
    // greedy leftmost matching is exact for subsequence tests
    std::size_t k = 0;
    for (const auto& p : super) {
        if (k < sub.size() && sub[k] == p) {
            ++k;
        }
    }
    return k == sub.size();
}

} // namespace cellsim
