#include "cellsim/baselines.hpp"

#include "cellsim/error.hpp"
#include "cellsim/similarity.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

namespace cellsim {

namespace {

void require_equal_lengths(const MobilityPattern& a, const MobilityPattern& b) {
    if (a.size() != b.size()) {
        throw DomainError("patterns must have equal length (got " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()) + ")");
    }
}

std::map<CellId, std::vector<std::size_t>> occurrences(const MobilityPattern& p) {
    std::map<CellId, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[p[i].cell].push_back(i);
    }
    return out;
}

} // namespace

double tiakas_net(const HopTable& hops, const MobilityPattern& a, const MobilityPattern& b) {
    require_equal_lengths(a, b);
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const CellId u = a[i].cell;
        const CellId v = b[i].cell;
        if (u >= hops.vertex_count() || v >= hops.vertex_count()) {
            throw DomainError("pattern visits a cell outside the graph");
        }
        if (u == v) {
            continue;
        }
        total += static_cast<double>(hops.distance(u, v) + hops.distance(v, u)) /
                 (2.0 * static_cast<double>(hops.diameter()));
    }
    return total / static_cast<double>(a.size());
}

double tiakas_net(const CellGraph& graph, const MobilityPattern& a, const MobilityPattern& b) {
    require_equal_lengths(a, b);
    return tiakas_net(HopTable(graph), a, b);
}

double tiakas_time(const MobilityPattern& a, const MobilityPattern& b) {
    require_equal_lengths(a, b);
    if (a.size() < 2) {
        throw DomainError("temporal network distance needs at least two points per pattern");
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        const int da = a[i + 1].time.value() - a[i].time.value();
        const int db = b[i + 1].time.value() - b[i].time.value();
        const int top = std::max(da, db);
        if (top == 0) {
            continue;
        }
        total += static_cast<double>(std::abs(da - db)) / static_cast<double>(top);
    }
    return total / static_cast<double>(a.size() - 1);
}

double tiakas_total(const HopTable& hops, const MobilityPattern& a, const MobilityPattern& b,
                    double w_net, double w_time) {
    check_convex_weights(w_net, w_time);
    return w_net * tiakas_net(hops, a, b) + w_time * tiakas_time(a, b);
}

double tiakas_total(const CellGraph& graph, const MobilityPattern& a, const MobilityPattern& b,
                    double w_net, double w_time) {
    check_convex_weights(w_net, w_time);
    require_equal_lengths(a, b);
    return tiakas_total(HopTable(graph), a, b, w_net, w_time);
}

OssParts oss_parts(const MobilityPattern& a, const MobilityPattern& b) {
    const auto occ_a = occurrences(a);
    const auto occ_b = occurrences(b);

    OssParts parts;
    std::size_t shift = 0;
    for (const auto& [cell, pos_a] : occ_a) {
        auto it = occ_b.find(cell);
        if (it == occ_b.end()) {
            parts.g += pos_a.size();
            continue;
        }
        const auto& pos_b = it->second;
        const std::size_t paired = std::min(pos_a.size(), pos_b.size());
        for (std::size_t p = 0; p < paired; ++p) {
            shift += pos_a[p] > pos_b[p] ? pos_a[p] - pos_b[p] : pos_b[p] - pos_a[p];
        }
    }
    for (const auto& [cell, pos_b] : occ_b) {
        if (!occ_a.contains(cell)) {
            parts.g += pos_b.size();
        }
    }
    parts.f = static_cast<double>(shift) / static_cast<double>(std::max(a.size(), b.size()));
    parts.value = (parts.f + static_cast<double>(parts.g)) / static_cast<double>(a.size() + b.size());
    return parts;
}

double oss(const MobilityPattern& a, const MobilityPattern& b) { return oss_parts(a, b).value; }

std::size_t lcss(const MobilityPattern& a, const MobilityPattern& b) {
    // rolling rows of the LCSS(i, j) table
    std::vector<std::size_t> prev(b.size() + 1, 0);
    std::vector<std::size_t> cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            cur[j] = a[i - 1].cell == b[j - 1].cell ? prev[j - 1] + 1 : std::max(cur[j - 1], prev[j]);
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

IntervalPoint to_interval(const Point& p) {
    return IntervalPoint{p.cell, p.time.start_minute(), p.time.end_minute()};
}

int overlap_minutes(const IntervalPoint& a, const IntervalPoint& b) {
    return std::max(0, std::min(a.end_minute, b.end_minute) - std::max(a.start_minute, b.start_minute) + 1);
}

std::int64_t cvti(const MobilityPattern& a, const MobilityPattern& b) {
    std::int64_t total = 0;
    for (const auto& pa : a) {
        const auto ia = to_interval(pa);
        for (const auto& pb : b) {
            if (pa.cell == pb.cell) {
                total += overlap_minutes(ia, to_interval(pb));
            }
        }
    }
    return total;
}

} // namespace cellsim
