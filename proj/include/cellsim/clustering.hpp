#pragma once

#include "cellsim/measure.hpp"
#include "cellsim/mobility.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cellsim {

/// Dense n x n table of pairwise measure values, row-major.
class DissimilarityMatrix {
public:
    DissimilarityMatrix(std::size_t n, Measure measure);
    DissimilarityMatrix(std::size_t n, Measure measure, std::vector<double> values);

    std::size_t size() const noexcept { return n_; }
    Measure measure() const noexcept { return measure_; }

    double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const { return {values_.data() + i * n_, n_}; }
    std::span<const double> values() const noexcept { return values_; }

    /// Largest |m(i,j) - m(j,i)| over all pairs.
    double asymmetry() const;

private:
    std::size_t n_;
    Measure measure_;
    std::vector<double> values_;
};

/// Evaluates `measure` on every ordered pair, diagonal included. Rows are
/// spread over up to `threads` workers (0 = hardware concurrency).
/// A failing pair is rethrown as DomainError naming both indices; when
/// several pairs fail, the first in row-major order is reported.
DissimilarityMatrix build_matrix(std::span<const MobilityPattern> patterns,
                                 const PairMeasure& measure, unsigned threads = 0);

struct ClusterAssignment {
    /// Medoid pattern indices, ascending.
    std::vector<std::size_t> medoids;
    /// For each pattern, the index of its medoid pattern.
    std::vector<std::size_t> assignment;
    double total_cost = 0.0;
    /// Total cost after seeding and after every accepted swap.
    std::vector<double> cost_history;
};

/// Cost of assigning every point to its nearest medoid (ties to the lowest
/// medoid index), filling `assignment` when non-null.
double assign_to_medoids(const DissimilarityMatrix& m, std::span<const std::size_t> medoids,
                         std::vector<std::size_t>* assignment = nullptr);

/// PAM k-medoids. Initial medoids are a seeded random k-subset; then the
/// single medoid/non-medoid swap with the largest cost reduction is applied
/// until no swap lowers the cost. Deterministic for fixed (m, k, seed).
/// Throws DomainError unless 1 <= k <= n.
ClusterAssignment kmedoids(const DissimilarityMatrix& m, std::size_t k, std::uint64_t seed);

} // namespace cellsim
