#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cellsim {

using CellId = std::uint32_t;
using CellEdge = std::pair<CellId, CellId>;

/// Coverage region as an unweighted bidirected graph over cells 0..N-1.
///
/// Edges are given once per neighboring pair; the reverse direction is
/// added automatically. Self-loops, out-of-range endpoints and repeated
/// pairs are rejected with DomainError. Disconnected graphs can be built,
/// but distance queries on them throw GraphNotConnected.
class CellGraph {
public:
    CellGraph(std::size_t vertex_count, std::span<const CellEdge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    /// Number of undirected neighbor pairs (each contributes two directed edges).
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Sorted neighbor list of `cell`.
    std::span<const CellId> neighbors(CellId cell) const;
    bool has_edge(CellId from, CellId to) const;
    bool contains(CellId cell) const noexcept { return cell < adjacency_.size(); }
    bool is_connected() const;

    /// All undirected pairs as (a, b) with a < b, in ascending order.
    std::vector<CellEdge> edges() const;

    /// Hop counts from `source` to every vertex; unreachable vertices hold
    /// `kUnreachable`.
    std::vector<std::uint32_t> bfs(CellId source) const;

    static constexpr std::uint32_t kUnreachable = UINT32_MAX;

private:
    void check_cell(CellId cell) const;

    std::vector<std::vector<CellId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Shortest-path length in hops; 0 iff from == to.
std::uint32_t hop_distance(const CellGraph& graph, CellId from, CellId to);

/// Largest hop distance over all vertex pairs (0 for a single cell).
std::uint32_t diameter(const CellGraph& graph);

/// All-pairs hop distances computed once, for repeated queries against the
/// same graph. Construction throws GraphNotConnected on a disconnected graph.
class HopTable {
public:
    explicit HopTable(const CellGraph& graph);

    std::size_t vertex_count() const noexcept { return n_; }
    std::uint32_t distance(CellId from, CellId to) const;
    std::uint32_t diameter() const noexcept { return diameter_; }

private:
    std::size_t n_;
    std::vector<std::uint32_t> dist_;
    std::uint32_t diameter_ = 0;
};

/// The 12-cell coverage region used by the worked examples.
///
/// Cells sit on an axial hex lattice around cell 2; the drawing is a
/// reconstruction consistent with the listed adjacencies, a diameter of 4
/// and unit hop distance for (7,4), (0,1), (0,2) and (2,3).
const CellGraph& example_graph();

/// The example graph serialized in the text graph format.
const char* example_graph_text();

/// Hexagonal tiling of `rows` x `cols` cells in even-offset row layout
/// (even rows shifted right by half a cell). Cell id = row * cols + col.
CellGraph hex_grid(std::size_t rows, std::size_t cols);

} // namespace cellsim
