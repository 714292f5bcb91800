#pragma once

#include "cellsim/cell_graph.hpp"
#include "cellsim/mobility.hpp"

#include <cstddef>
#include <cstdint>

namespace cellsim {

// Comparison measures from earlier trajectory-similarity work, restated
// over cell/timestamp patterns.

// --- Network distance (Tiakas et al.) ---------------------------------------

/// Mean positional network distance between two equal-length patterns:
/// per position 0 if the cells agree, else (c(u,v) + c(v,u)) / (2 D_G) with
/// c the hop distance and D_G the graph diameter.
/// Throws DomainError on unequal lengths or cells outside the graph.
double tiakas_net(const HopTable& hops, const MobilityPattern& a, const MobilityPattern& b);
double tiakas_net(const CellGraph& graph, const MobilityPattern& a, const MobilityPattern& b);

/// Mean discrepancy of successive timestamp gaps over the m-1 steps of two
/// equal-length patterns; a step where neither pattern advances counts 0.
/// Throws DomainError on unequal lengths or m < 2.
double tiakas_time(const MobilityPattern& a, const MobilityPattern& b);

/// w_net * tiakas_net + w_time * tiakas_time with convex weights.
double tiakas_total(const HopTable& hops, const MobilityPattern& a, const MobilityPattern& b,
                    double w_net, double w_time);
double tiakas_total(const CellGraph& graph, const MobilityPattern& a, const MobilityPattern& b,
                    double w_net, double w_time);

// --- Ordering-based sequence similarity ---------------------------------------

struct OssParts {
    /// Positional discrepancy of common cells, normalized by the longer length.
    double f = 0.0;
    /// Positions whose cell is absent from the other sequence.
    std::size_t g = 0;
    /// (f + g) / (|a| + |b|)
    double value = 0.0;
};

/// OSS over the cell sequences (timestamps ignored). Occurrence positions
/// are 0-based and the p-th occurrence in `a` is paired with the p-th in `b`.
OssParts oss_parts(const MobilityPattern& a, const MobilityPattern& b);
double oss(const MobilityPattern& a, const MobilityPattern& b);

// --- Cellular-space measures (Kang et al.) ------------------------------------

/// Length of the longest common subsequence of visited cells.
std::size_t lcss(const MobilityPattern& a, const MobilityPattern& b);

/// A point with its timestamp widened to the slot's minute interval.
struct IntervalPoint {
    CellId cell;
    int start_minute;
    int end_minute;
};

IntervalPoint to_interval(const Point& p);

/// Whole minutes shared by two closed intervals.
int overlap_minutes(const IntervalPoint& a, const IntervalPoint& b);

/// Common visit time: summed minute overlap over every index pair visiting
/// the same cell.
std::int64_t cvti(const MobilityPattern& a, const MobilityPattern& b);

} // namespace cellsim
