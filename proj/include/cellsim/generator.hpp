#pragma once

#include "cellsim/cell_graph.hpp"
#include "cellsim/io.hpp"
#include "cellsim/mobility.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace cellsim {

/// Random walk of `length` points: starts on a uniformly chosen cell, and at
/// each step stays put or moves to a uniformly chosen neighbor (all options
/// equally likely). Timestamps are `length` uniform draws from 1..11, sorted.
///
/// A non-empty `region` confines the walk: the start cell and every move are
/// drawn from region members only. The region must be a subset of the graph.
MobilityPattern random_walk(const CellGraph& graph, std::size_t length, std::mt19937_64& rng,
                            std::span<const CellId> region = {});

/// `count` walks with lengths uniform in [min_len, max_len], ids "0".."count-1".
/// Throws DomainError unless 1 <= min_len <= max_len.
std::vector<TracePattern> generate_walks(const CellGraph& graph, std::size_t count,
                                         std::size_t min_len, std::size_t max_len,
                                         std::uint64_t seed);

} // namespace cellsim
