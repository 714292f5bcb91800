#include "cellsim/clustering.hpp"

#include "cellsim/error.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>

namespace cellsim {

DissimilarityMatrix::DissimilarityMatrix(std::size_t n, Measure measure)
    : n_(n), measure_(measure), values_(n * n, 0.0) {}

DissimilarityMatrix::DissimilarityMatrix(std::size_t n, Measure measure, std::vector<double> values)
    : n_(n), measure_(measure), values_(std::move(values)) {
    if (values_.size() != n_ * n_) {
        throw DomainError("matrix needs " + std::to_string(n_ * n_) + " values, got " +
                          std::to_string(values_.size()));
    }
}

double DissimilarityMatrix::asymmetry() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
        }
    }
    return worst;
}

namespace {

struct PairFailure {
    std::size_t i;
    std::size_t j;
    std::string message;
};

} // namespace

DissimilarityMatrix build_matrix(std::span<const MobilityPattern> patterns,
                                 const PairMeasure& measure, unsigned threads) {
    const std::size_t n = patterns.size();
    if (n == 0) {
        throw DomainError("cannot build a matrix over zero patterns");
    }
    DissimilarityMatrix out(n, measure.kind());

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    const std::size_t workers = std::min<std::size_t>(threads, n);

    // Worker w owns rows w, w + workers, ... and records only its first failure.
    std::vector<std::optional<PairFailure>> failures(workers);
    auto run = [&](std::size_t w) {
        for (std::size_t i = w; i < n; i += workers) {
            for (std::size_t j = 0; j < n; ++j) {
                try {
                    out(i, j) = measure(patterns[i], patterns[j]);
                } catch (const std::exception& e) {
                    failures[w] = PairFailure{i, j, e.what()};
                    return;
                }
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
    }

    const PairFailure* first = nullptr;
    for (const auto& f : failures) {
        if (f && (first == nullptr || std::pair(f->i, f->j) < std::pair(first->i, first->j))) {
            first = &*f;
        }
    }
    if (first != nullptr) {
        throw DomainError("patterns " + std::to_string(first->i) + " and " + std::to_string(first->j) +
                          ": " + first->message);
    }
    return out;
}

double assign_to_medoids(const DissimilarityMatrix& m, std::span<const std::size_t> medoids,
                         std::vector<std::size_t>* assignment) {
    if (assignment != nullptr) {
        assignment->assign(m.size(), 0);
    }
    double cost = 0.0;
    for (std::size_t p = 0; p < m.size(); ++p) {
        std::size_t best = medoids.front();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t med : medoids) {
            const double d = m(p, med);
            if (d < best_d || (d == best_d && med < best)) {
                best = med;
                best_d = d;
            }
        }
        cost += best_d;
        if (assignment != nullptr) {
            (*assignment)[p] = best;
        }
    }
    return cost;
}

ClusterAssignment kmedoids(const DissimilarityMatrix& m, std::size_t k, std::uint64_t seed) {
    const std::size_t n = m.size();
    if (k == 0 || k > n) {
        throw DomainError("k must satisfy 1 <= k <= " + std::to_string(n) + " (got " +
                          std::to_string(k) + ")");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> medoids(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(medoids.begin(), medoids.end());

    ClusterAssignment result;
    double cost = assign_to_medoids(m, medoids);
    result.cost_history.push_back(cost);

    std::vector<bool> is_medoid(n, false);
    for (auto med : medoids) {
        is_medoid[med] = true;
    }

    while (true) {
        const double threshold = cost - 1e-12 * std::max(1.0, std::abs(cost));
        double best_cost = threshold;
        std::optional<std::pair<std::size_t, std::size_t>> best_swap;
        std::vector<std::size_t> candidate = medoids;
        for (std::size_t slot = 0; slot < k; ++slot) {
            for (std::size_t o = 0; o < n; ++o) {
                if (is_medoid[o]) {
                    continue;
                }
                candidate[slot] = o;
                const double c = assign_to_medoids(m, candidate);
                if (c < best_cost) {
                    best_cost = c;
                    best_swap = {slot, o};
                }
            }
            candidate[slot] = medoids[slot];
        }
        if (!best_swap) {
            break;
        }
        is_medoid[medoids[best_swap->first]] = false;
        is_medoid[best_swap->second] = true;
        medoids[best_swap->first] = best_swap->second;
        std::sort(medoids.begin(), medoids.end());
        cost = assign_to_medoids(m, medoids);
        result.cost_history.push_back(cost);
    }

    result.total_cost = assign_to_medoids(m, medoids, &result.assignment);
    result.medoids = std::move(medoids);
    return result;
}

} // namespace cellsim
