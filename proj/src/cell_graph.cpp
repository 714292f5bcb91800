#include "cellsim/cell_graph.hpp"

#include "cellsim/error.hpp"
#include "cellsim/io.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <string>

namespace cellsim {

CellGraph::CellGraph(std::size_t vertex_count, std::span<const CellEdge> edges)
    : adjacency_(vertex_count) {
    if (vertex_count == 0) {
        throw DomainError("cell graph needs at least one cell");
    }
    for (const auto& [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count) {
            throw DomainError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") references a cell outside 0.." + std::to_string(vertex_count - 1));
        }
        if (a == b) {
            throw DomainError("self-loop on cell " + std::to_string(a));
        }
        auto& out = adjacency_[a];
        if (std::find(out.begin(), out.end(), b) != out.end()) {
            throw DomainError("duplicate edge between cells " + std::to_string(a) + " and " +
                              std::to_string(b));
        }
        out.push_back(b);
        adjacency_[b].push_back(a);
        ++edge_count_;
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
}

void CellGraph::check_cell(CellId cell) const {
    if (!contains(cell)) {
        throw DomainError("cell " + std::to_string(cell) + " not in graph of " +
                          std::to_string(vertex_count()) + " cells");
    }
}

std::span<const CellId> CellGraph::neighbors(CellId cell) const {
    check_cell(cell);
    return adjacency_[cell];
}

bool CellGraph::has_edge(CellId from, CellId to) const {
    check_cell(from);
    check_cell(to);
    const auto& list = adjacency_[from];
    return std::binary_search(list.begin(), list.end(), to);
}

std::vector<CellEdge> CellGraph::edges() const {
    std::vector<CellEdge> out;
    out.reserve(edge_count_);
    for (CellId a = 0; a < adjacency_.size(); ++a) {
        for (CellId b : adjacency_[a]) {
            if (a < b) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

std::vector<std::uint32_t> CellGraph::bfs(CellId source) const {
    check_cell(source);
    std::vector<std::uint32_t> dist(vertex_count(), kUnreachable);
    std::deque<CellId> frontier{source};
    dist[source] = 0;
    while (!frontier.empty()) {
        const CellId at = frontier.front();
        frontier.pop_front();
        for (CellId next : adjacency_[at]) {
            if (dist[next] == kUnreachable) {
                dist[next] = dist[at] + 1;
                frontier.push_back(next);
            }
        }
    }
    return dist;
}

bool CellGraph::is_connected() const {
    const auto dist = bfs(0);
    return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

std::uint32_t hop_distance(const CellGraph& graph, CellId from, CellId to) {
    if (!graph.contains(to)) {
        throw DomainError("cell " + std::to_string(to) + " not in graph");
    }
    const auto d = graph.bfs(from)[to];
    if (d == CellGraph::kUnreachable) {
        throw GraphNotConnected("no path from cell " + std::to_string(from) + " to cell " +
                                std::to_string(to));
    }
    return d;
}

std::uint32_t diameter(const CellGraph& graph) {
    std::uint32_t best = 0;
    for (CellId v = 0; v < graph.vertex_count(); ++v) {
        for (auto d : graph.bfs(v)) {
            if (d == CellGraph::kUnreachable) {
                throw GraphNotConnected("graph is not connected; diameter undefined");
            }
            best = std::max(best, d);
        }
    }
    return best;
}

HopTable::HopTable(const CellGraph& graph) : n_(graph.vertex_count()), dist_(n_ * n_) {
    for (CellId v = 0; v < n_; ++v) {
        const auto row = graph.bfs(v);
        for (std::size_t u = 0; u < n_; ++u) {
            if (row[u] == CellGraph::kUnreachable) {
                throw GraphNotConnected("graph is not connected; hop table undefined");
            }
            diameter_ = std::max(diameter_, row[u]);
        }
        std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(v * n_));
    }
}

std::uint32_t HopTable::distance(CellId from, CellId to) const {
    if (from >= n_ || to >= n_) {
        throw DomainError("cell id out of range for hop table");
    }
    return dist_[from * n_ + to];
}

const char* example_graph_text() {
    // Axial (q, r) positions: 0(-1,0) 1(0,-1) 2(0,0) 3(1,0) 4(1,1) 5(0,2)
    // 6(3,0) 7(2,0) 8(0,1) 9(1,-1) 10(2,-1) 11(3,-1)
    return "cells 12\n"
           "edge 0 1\n"
           "edge 0 2\n"
           "edge 1 2\n"
           "edge 1 9\n"
           "edge 2 3\n"
           "edge 2 8\n"
           "edge 2 9\n"
           "edge 3 4\n"
           "edge 3 7\n"
           "edge 3 8\n"
           "edge 3 9\n"
           "edge 3 10\n"
           "edge 4 5\n"
           "edge 4 7\n"
           "edge 4 8\n"
           "edge 5 8\n"
           "edge 6 7\n"
           "edge 6 11\n"
           "edge 7 10\n"
           "edge 7 11\n"
           "edge 9 10\n"
           "edge 10 11\n";
}

const CellGraph& example_graph() {
    static const CellGraph graph = [] {
        std::istringstream in(example_graph_text());
        return read_graph(in);
    }();
    return graph;
}

CellGraph hex_grid(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw DomainError("hex grid dimensions must be positive");
    }
    auto id = [cols](std::size_t r, std::size_t c) { return static_cast<CellId>(r * cols + c); };
    std::vector<CellEdge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                edges.emplace_back(id(r, c), id(r, c + 1));
            }
            if (r + 1 == rows) {
                continue;
            }
            // even rows are shifted right: their lower neighbors are c and c+1,
            // odd rows reach down to c-1 and c
            edges.emplace_back(id(r, c), id(r + 1, c));
            if (r % 2 == 0) {
                if (c + 1 < cols) {
                    edges.emplace_back(id(r, c), id(r + 1, c + 1));
                }
            } else if (c > 0) {
                edges.emplace_back(id(r, c), id(r + 1, c - 1));
            }
        }
    }
    return CellGraph(rows * cols, edges);
}

} // namespace cellsim
