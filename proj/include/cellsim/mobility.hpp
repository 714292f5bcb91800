#pragma once

#include "cellsim/cell_graph.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace cellsim {

inline constexpr int kSlotCount = 11;
inline constexpr int kSlotMinutes = 135;
inline constexpr int kMinutesPerDay = 1440;

/// One of the eleven predefined time-of-day slots t1..t11.
///
/// Slot k covers minutes [135(k-1), 135k - 1]; t11 is cut short at 23:59 and
/// spans 90 minutes. In every similarity formula a slot behaves as its
/// ordinal index k.
class Timestamp {
public:
    /// Throws DomainError unless 1 <= index <= 11.
    static Timestamp from_index(int index);
    /// Slot containing `minute` (minutes since midnight, 0..1439).
    static Timestamp of_minute(int minute);

    int index() const noexcept { return index_; }
    int value() const noexcept { return index_; }
    int start_minute() const noexcept { return kSlotMinutes * (index_ - 1); }
    int end_minute() const noexcept {
        return index_ == kSlotCount ? kMinutesPerDay - 1 : kSlotMinutes * index_ - 1;
    }
    int span_minutes() const noexcept { return end_minute() - start_minute() + 1; }

    friend auto operator<=>(Timestamp, Timestamp) = default;

private:
    explicit constexpr Timestamp(int index) noexcept : index_(index) {}

    int index_;
};

Timestamp timestamp_of_minute(int minute);

/// A (cell, timestamp) observation. Two points are equal iff both parts are.
struct Point {
    CellId cell;
    Timestamp time;

    friend bool operator==(const Point&, const Point&) = default;
};

/// How runs of equal consecutive timestamps are treated during validation.
enum class EqualTimestamps {
    /// Any non-decreasing sequence is accepted.
    AnyRun,
    /// At most two consecutive points may share a timestamp.
    PairsOnly,
};

/// Non-empty sequence of points with non-decreasing timestamps (a k-pattern
/// for k points). Cells may repeat.
class MobilityPattern {
public:
    explicit MobilityPattern(std::vector<Point> points,
                             EqualTimestamps rule = EqualTimestamps::AnyRun);

    std::size_t size() const noexcept { return points_.size(); }
    std::span<const Point> points() const noexcept { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    std::vector<CellId> cells() const;

    friend bool operator==(const MobilityPattern&, const MobilityPattern&) = default;

private:
    std::vector<Point> points_;
};

/// Builds a validated pattern from (cell id, timestamp index) pairs.
/// Throws DomainError on an empty input, a negative cell id, a timestamp
/// index outside 1..11, or decreasing timestamps.
MobilityPattern make_pattern(std::span<const std::pair<long long, int>> points,
                             EqualTimestamps rule = EqualTimestamps::AnyRun);
MobilityPattern make_pattern(std::initializer_list<std::pair<long long, int>> points,
                             EqualTimestamps rule = EqualTimestamps::AnyRun);

/// True iff `sub` is an order-preserving point-wise subsequence of `super`.
bool is_subpattern(const MobilityPattern& sub, const MobilityPattern& super);

} // namespace cellsim
