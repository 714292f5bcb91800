#pragma once

// Brute-force reference evaluators used only by tests. Each one is written
// straight from the measure's definition with plain loops and shares no code
// with the library beyond the MobilityPattern container.

#include "cellsim/cell_graph.hpp"
#include "cellsim/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace oracle {

using cellsim::CellGraph;
using cellsim::MobilityPattern;

inline std::size_t uncommon(const MobilityPattern& a, const MobilityPattern& b) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            found = found || a[i].cell == b[j].cell;
        }
        count += found ? 0 : 1;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        bool found = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            found = found || a[i].cell == b[j].cell;
        }
        count += found ? 0 : 1;
    }
    return count;
}

inline double d_space(const MobilityPattern& a, const MobilityPattern& b) {
    return double(uncommon(a, b)) / double(a.size() + b.size());
}

/// Per cell, the visit times in each pattern are listed and zipped.
inline double d_time(const MobilityPattern& a, const MobilityPattern& b) {
    double sum = 0;
    int k = 0;
    std::vector<cellsim::CellId> symbols;
    for (const auto& p : a) {
        symbols.push_back(p.cell);
    }
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    for (auto s : symbols) {
        std::vector<double> ta;
        std::vector<double> tb;
        for (const auto& p : a) {
            if (p.cell == s) {
                ta.push_back(p.time.index());
            }
        }
        for (const auto& p : b) {
            if (p.cell == s) {
                tb.push_back(p.time.index());
            }
        }
        for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
            sum += std::fabs(ta[i] - tb[i]) / std::max(ta[i], tb[i]);
            ++k;
        }
    }
    return k == 0 ? 1.0 : sum / k;
}

/// Longest common subsequence by enumerating every subset of `a`'s
/// positions and testing it against `b`. Exponential; keep |a| small.
inline std::size_t lcss(const MobilityPattern& a, const MobilityPattern& b) {
    std::size_t best = 0;
    const std::uint32_t subsets = 1u << a.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::vector<cellsim::CellId> pick;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (mask & (1u << i)) {
                pick.push_back(a[i].cell);
            }
        }
        std::size_t k = 0;
        for (std::size_t j = 0; j < b.size() && k < pick.size(); ++j) {
            if (b[j].cell == pick[k]) {
                ++k;
            }
        }
        if (k == pick.size()) {
            best = std::max(best, pick.size());
        }
    }
    return best;
}

/// Slot bounds typed in from the timestamp table, in minutes since midnight.
struct Slot {
    int start;
    int end;
};

inline Slot table_slot(int index) {
    static const Slot table[] = {
        {0 * 60 + 0, 2 * 60 + 14},    {2 * 60 + 15, 4 * 60 + 29},   {4 * 60 + 30, 6 * 60 + 44},
        {6 * 60 + 45, 8 * 60 + 59},   {9 * 60 + 0, 11 * 60 + 14},   {11 * 60 + 15, 13 * 60 + 29},
        {13 * 60 + 30, 15 * 60 + 44}, {15 * 60 + 45, 17 * 60 + 59}, {18 * 60 + 0, 20 * 60 + 14},
        {20 * 60 + 15, 22 * 60 + 29}, {22 * 60 + 30, 23 * 60 + 59},
    };
    return table[index - 1];
}

/// Common visit time by counting, minute by minute, when both points of a
/// matched pair are inside their slots.
inline std::int64_t cvti(const MobilityPattern& a, const MobilityPattern& b) {
    std::int64_t total = 0;
    for (const auto& pa : a) {
        for (const auto& pb : b) {
            if (pa.cell != pb.cell) {
                continue;
            }
            const auto sa = table_slot(pa.time.index());
            const auto sb = table_slot(pb.time.index());
            for (int minute = 0; minute < 1440; ++minute) {
                if (minute >= sa.start && minute <= sa.end && minute >= sb.start && minute <= sb.end) {
                    ++total;
                }
            }
        }
    }
    return total;
}

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// Floyd-Warshall over the graph's adjacency.
inline std::vector<std::vector<int>> all_pairs_hops(const CellGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (std::size_t v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (auto u : g.neighbors(static_cast<cellsim::CellId>(v))) {
            d[v][u] = 1;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

inline int diameter(const CellGraph& g) {
    int best = 0;
    for (const auto& row : all_pairs_hops(g)) {
        for (int v : row) {
            best = std::max(best, v);
        }
    }
    return best;
}

inline double tiakas_net(const CellGraph& g, const MobilityPattern& a, const MobilityPattern& b) {
    const auto d = all_pairs_hops(g);
    const double dg = oracle::diameter(g);
    double sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto u = a[i].cell;
        const auto v = b[i].cell;
        sum += u == v ? 0.0 : (d[u][v] + d[v][u]) / (2 * dg);
    }
    return sum / double(a.size());
}

inline double tiakas_time(const MobilityPattern& a, const MobilityPattern& b) {
    double sum = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        const double da = a[i + 1].time.index() - a[i].time.index();
        const double db = b[i + 1].time.index() - b[i].time.index();
        const double top = std::max(da, db);
        sum += top == 0 ? 0.0 : std::fabs(da - db) / top;
    }
    return sum / double(a.size() - 1);
}

/// OSS f (unnormalized shift sum) and g computed symbol by symbol.
struct Oss {
    double f;
    std::size_t g;
    double value;
};

inline Oss oss(const MobilityPattern& a, const MobilityPattern& b) {
    std::vector<cellsim::CellId> symbols;
    for (const auto& p : a) {
        symbols.push_back(p.cell);
    }
    for (const auto& p : b) {
        symbols.push_back(p.cell);
    }
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());

    double shift = 0;
    for (auto s : symbols) {
        std::vector<int> pa;
        std::vector<int> pb;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].cell == s) {
                pa.push_back(int(i));
            }
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].cell == s) {
                pb.push_back(int(j));
            }
        }
        const std::size_t delta = std::min(pa.size(), pb.size());
        for (std::size_t p = 0; p < delta; ++p) {
            shift += std::abs(pa[p] - pb[p]);
        }
    }
    Oss out;
    out.f = shift / double(std::max(a.size(), b.size()));
    out.g = uncommon(a, b);
    out.value = (out.f + double(out.g)) / double(a.size() + b.size());
    return out;
}

/// Sub-pattern test by enumerating every strictly increasing index tuple.
inline bool subpattern(const MobilityPattern& sub, const MobilityPattern& super) {
    if (sub.size() > super.size()) {
        return false;
    }
    std::vector<std::size_t> idx(sub.size());
    // recursive enumeration of i_1 < ... < i_m
    auto rec = [&](auto&& self, std::size_t k, std::size_t from) -> bool {
        if (k == sub.size()) {
            return true;
        }
        for (std::size_t i = from; i < super.size(); ++i) {
            if (super[i].cell == sub[k].cell && super[i].time == sub[k].time) {
                idx[k] = i;
                if (self(self, k + 1, i + 1)) {
                    return true;
                }
            }
        }
        return false;
    };
    return rec(rec, 0, 0);
}

/// Cost of nearest-medoid assignment over a dense matrix.
inline double medoid_cost(const std::vector<std::vector<double>>& m, const std::vector<std::size_t>& medoids) {
    double cost = 0;
    for (std::size_t p = 0; p < m.size(); ++p) {
        double best = std::numeric_limits<double>::infinity();
        for (auto med : medoids) {
            best = std::min(best, m[p][med]);
        }
        cost += best;
    }
    return cost;
}

/// Minimum cost over all k-subsets.
inline double best_medoid_cost(const std::vector<std::vector<double>>& m, std::size_t k) {
    const std::size_t n = m.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::size_t(__builtin_popcount(mask)) != k) {
            continue;
        }
        std::vector<std::size_t> medoids;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                medoids.push_back(i);
            }
        }
        best = std::min(best, medoid_cost(m, medoids));
    }
    return best;
}

} // namespace oracle
