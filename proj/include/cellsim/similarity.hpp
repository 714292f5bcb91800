#pragma once

#include "cellsim/mobility.hpp"

#include <cstddef>

namespace cellsim {

/// Validates that (a, b) is a convex weight pair: both in [0,1] and
/// a + b = 1 within 1e-12. Throws DomainError otherwise.
void check_convex_weights(double a, double b);

/// Convex weights for the spatial and temporal parts of d_composite.
class Weights {
public:
    Weights() = default;
    Weights(double space, double time);

    double space() const noexcept { return space_; }
    double time() const noexcept { return time_; }

private:
    double space_ = 0.5;
    double time_ = 0.5;
};

// All measures below are dissimilarities: 0 for identical patterns, at most 1.

/// Positions of `a` whose cell never occurs in `b`, plus positions of `b`
/// whose cell never occurs in `a`. Repeated cells count once per position.
std::size_t uncommon_count(const MobilityPattern& a, const MobilityPattern& b);

/// uncommon_count(a, b) / (|a| + |b|). Timestamps play no part.
double d_space(const MobilityPattern& a, const MobilityPattern& b);

/// Mean of |t_a - t_b| / max(t_a, t_b) over matched visits, using slot
/// indices as values. The p-th visit of a cell in `a` matches the p-th visit
/// of the same cell in `b`; surplus visits are unmatched. Returns 1 when the
/// patterns share no cell.
double d_time(const MobilityPattern& a, const MobilityPattern& b);

/// w.space() * d_space + w.time() * d_time.
double d_composite(const MobilityPattern& a, const MobilityPattern& b, const Weights& w = {});

} // namespace cellsim
