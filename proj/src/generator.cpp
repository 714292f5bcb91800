#include "cellsim/generator.hpp"

#include "cellsim/error.hpp"

#include <algorithm>
#include <string>

namespace cellsim {

MobilityPattern random_walk(const CellGraph& graph, std::size_t length, std::mt19937_64& rng,
                            std::span<const CellId> region) {
    if (length == 0) {
        throw DomainError("walk length must be positive");
    }
    std::vector<bool> allowed(graph.vertex_count(), region.empty());
    for (CellId c : region) {
        if (!graph.contains(c)) {
            throw DomainError("region cell " + std::to_string(c) + " not in graph");
        }
        allowed[c] = true;
    }

    std::vector<int> slots(length);
    std::uniform_int_distribution<int> slot_dist(1, kSlotCount);
    for (auto& s : slots) {
        s = slot_dist(rng);
    }
    std::sort(slots.begin(), slots.end());

    CellId at;
    if (region.empty()) {
        at = static_cast<CellId>(
            std::uniform_int_distribution<std::size_t>(0, graph.vertex_count() - 1)(rng));
    } else {
        at = region[std::uniform_int_distribution<std::size_t>(0, region.size() - 1)(rng)];
    }

    std::vector<Point> points;
    points.reserve(length);
    std::vector<CellId> options;
    for (std::size_t i = 0; i < length; ++i) {
        if (i > 0) {
            options.assign(1, at);
            for (CellId nb : graph.neighbors(at)) {
                if (allowed[nb]) {
                    options.push_back(nb);
                }
            }
            at = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        }
        points.push_back(Point{at, Timestamp::from_index(slots[i])});
    }
    return MobilityPattern(std::move(points));
}

std::vector<TracePattern> generate_walks(const CellGraph& graph, std::size_t count,
                                         std::size_t min_len, std::size_t max_len,
                                         std::uint64_t seed) {
    if (min_len < 1 || min_len > max_len) {
        throw DomainError("walk lengths need 1 <= min-len <= max-len (got " + std::to_string(min_len) +
                          ", " + std::to_string(max_len) + ")");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::vector<TracePattern> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t len = len_dist(rng);
        out.push_back(TracePattern{std::to_string(i), random_walk(graph, len, rng)});
    }
    return out;
}

} // namespace cellsim
