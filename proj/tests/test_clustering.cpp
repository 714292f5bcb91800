#include "oracles.hpp"
#include "random_inputs.hpp"

#include "cellsim/baselines.hpp"
#include "cellsim/case_study.hpp"
#include "cellsim/clustering.hpp"
#include "cellsim/error.hpp"
#include "cellsim/generator.hpp"

#include <doctest.h>

#include <numeric>

using namespace cellsim;

namespace {

DissimilarityMatrix random_symmetric(gen::Rng& rng, std::size_t n) {
    DissimilarityMatrix m(n, Measure::Composite);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = m(j, i) = u(rng);
        }
    }
    return m;
}

std::vector<std::vector<double>> dense(const DissimilarityMatrix& m) {
    std::vector<std::vector<double>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].assign(m.row(i).begin(), m.row(i).end());
    }
    return out;
}

} // namespace

TEST_CASE("build_matrix on the worked example") {
    const std::vector patterns{case_study_pattern_a(), case_study_pattern_b()};
    const auto m = build_matrix(patterns, PairMeasure(Measure::Composite, Weights(0.5, 0.5)));
    REQUIRE(m.size() == 2);
    CHECK(m(0, 0) == 0.0);
    CHECK(m(1, 1) == 0.0);
    CHECK(m(0, 1) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(m(1, 0) == doctest::Approx(0.2).epsilon(1e-12));

    const std::vector single{case_study_pattern_a()};
    const auto one = build_matrix(single, PairMeasure(Measure::Space));
    CHECK(one.size() == 1);
    CHECK(one(0, 0) == 0.0);

    CHECK_THROWS_AS(build_matrix(std::span<const MobilityPattern>{}, PairMeasure(Measure::Space)),
                    DomainError);
}

TEST_CASE("build_matrix entries equal direct calls for every measure") {
    gen::Rng rng(12);
    const auto g = hex_grid(4, 4);
    std::vector<MobilityPattern> patterns;
    for (int i = 0; i < 9; ++i) {
        patterns.push_back(gen::pattern(rng, g.vertex_count(), 5));
    }
    const HopTable hops(g);
    for (auto kind : kAllMeasures) {
        const PairMeasure measure(kind, Weights(0.3, 0.7), &g);
        for (unsigned threads : {1u, 3u}) {
            const auto m = build_matrix(patterns, measure, threads);
            CHECK(m.measure() == kind);
            CHECK(m.asymmetry() == 0.0);
            for (std::size_t i = 0; i < patterns.size(); ++i) {
                for (std::size_t j = 0; j < patterns.size(); ++j) {
                    const auto& a = patterns[i];
                    const auto& b = patterns[j];
                    double direct = 0.0;
                    switch (kind) {
                    case Measure::Space: direct = d_space(a, b); break;
                    case Measure::Time: direct = d_time(a, b); break;
                    case Measure::Composite: direct = d_composite(a, b, Weights(0.3, 0.7)); break;
                    case Measure::TiakasNet: direct = tiakas_net(g, a, b); break;
                    case Measure::TiakasTime: direct = tiakas_time(a, b); break;
                    case Measure::TiakasTotal: direct = tiakas_total(g, a, b, 0.3, 0.7); break;
                    case Measure::Oss: direct = oss(a, b); break;
                    case Measure::Lcss: direct = double(lcss(a, b)); break;
                    case Measure::Cvti: direct = double(cvti(a, b)); break;
                    }
                    REQUIRE(m(i, j) == direct);
                }
            }
        }
    }
}

TEST_CASE("build_matrix names the failing pair") {
    const std::vector patterns{make_pattern({{0, 1}, {1, 2}}), make_pattern({{0, 1}, {1, 2}}),
                               make_pattern({{0, 1}})};
    try {
        build_matrix(patterns, PairMeasure(Measure::TiakasTime), 2);
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("patterns 0 and 2") != std::string::npos);
    }
}

TEST_CASE("measure selector") {
    for (auto m : kAllMeasures) {
        CHECK(parse_measure(measure_name(m)) == m);
    }
    CHECK_FALSE(parse_measure("euclid").has_value());
    CHECK_THROWS_AS(PairMeasure(Measure::TiakasNet), DomainError);
    CHECK_NOTHROW(PairMeasure(Measure::TiakasTime));
    const CellEdge split[] = {{0, 1}, {2, 3}};
    const CellGraph two_parts(4, split);
    CHECK_THROWS_AS(PairMeasure(Measure::TiakasNet, {}, &two_parts), GraphNotConnected);
}

TEST_CASE("kmedoids edge cases") {
    gen::Rng rng(1);
    const auto m = random_symmetric(rng, 6);
    CHECK_THROWS_AS(kmedoids(m, 0, 1), DomainError);
    CHECK_THROWS_AS(kmedoids(m, 7, 1), DomainError);

    const auto all = kmedoids(m, 6, 3);
    CHECK(all.total_cost == 0.0);
    CHECK(all.medoids == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(all.assignment[i] == i);
    }
}

TEST_CASE("kmedoids with k = 1 picks the minimum column sum") {
    gen::Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = random_symmetric(rng, gen::uniform(rng, 2, 10));
        double best_sum = std::numeric_limits<double>::infinity();
        std::vector<double> sums(m.size(), 0.0);
        for (std::size_t c = 0; c < m.size(); ++c) {
            for (std::size_t r = 0; r < m.size(); ++r) {
                sums[c] += m(r, c);
            }
            best_sum = std::min(best_sum, sums[c]);
        }
        const auto result = kmedoids(m, 1, std::uint64_t(trial));
        REQUIRE(result.medoids.size() == 1);
        CHECK(sums[result.medoids[0]] == doctest::Approx(best_sum).epsilon(1e-12));
        CHECK(result.total_cost == doctest::Approx(best_sum).epsilon(1e-12));
    }
}

TEST_CASE("kmedoids invariants on small random matrices") {
    gen::Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = gen::uniform(rng, 2, 8);
        const std::size_t k = gen::uniform(rng, 1, std::min<std::size_t>(3, n));
        const auto m = random_symmetric(rng, n);
        const auto seed = std::uint64_t(trial);
        const auto r = kmedoids(m, k, seed);

        // non-increasing cost
        for (std::size_t i = 1; i < r.cost_history.size(); ++i) {
            REQUIRE(r.cost_history[i] < r.cost_history[i - 1]);
        }
        REQUIRE(r.total_cost == r.cost_history.back());

        // medoids own themselves; everyone sits at a nearest medoid
        for (auto med : r.medoids) {
            REQUIRE(r.assignment[med] == med);
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (auto med : r.medoids) {
                REQUIRE(m(p, r.assignment[p]) <= m(p, med));
            }
        }

        // single-swap optimality
        const auto d = dense(m);
        for (std::size_t slot = 0; slot < k; ++slot) {
            for (std::size_t o = 0; o < n; ++o) {
                if (std::find(r.medoids.begin(), r.medoids.end(), o) != r.medoids.end()) {
                    continue;
                }
                auto swapped = r.medoids;
                swapped[slot] = o;
                REQUIRE(oracle::medoid_cost(d, swapped) >= r.total_cost - 1e-12);
            }
        }
        REQUIRE(r.total_cost >= oracle::best_medoid_cost(d, k) - 1e-12);

        // determinism
        const auto again = kmedoids(m, k, seed);
        REQUIRE(again.medoids == r.medoids);
        REQUIRE(again.assignment == r.assignment);
        REQUIRE(again.cost_history == r.cost_history);
    }
}

TEST_CASE("kmedoids separates two well-separated groups") {
    // within-group dissimilarity in [0, 0.3], between-group in [0.7, 1]
    gen::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = gen::uniform(rng, 4, 8);
        const std::size_t split = gen::uniform(rng, 1, n - 1);
        DissimilarityMatrix m(n, Measure::Composite);
        std::uniform_real_distribution<double> close(0.0, 0.3);
        std::uniform_real_distribution<double> far(0.7, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                m(i, j) = m(j, i) = ((i < split) == (j < split)) ? close(rng) : far(rng);
            }
        }
        const auto r = kmedoids(m, 2, std::uint64_t(trial));
        REQUIRE(r.total_cost == doctest::Approx(oracle::best_medoid_cost(dense(m), 2)).epsilon(1e-12));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                REQUIRE((r.assignment[i] == r.assignment[j]) == ((i < split) == (j < split)));
            }
        }
    }
}

TEST_CASE("assignment ties go to the lowest medoid index") {
    DissimilarityMatrix m(3, Measure::Space);
    m(0, 2) = m(2, 0) = 0.5;
    m(1, 2) = m(2, 1) = 0.5;
    m(0, 1) = m(1, 0) = 1.0;
    std::vector<std::size_t> assignment;
    const std::size_t medoids[] = {1, 0};
    assign_to_medoids(m, medoids, &assignment);
    CHECK(assignment[2] == 0);
}

TEST_CASE("random walks stay on edges and inside their region") {
    const auto g = hex_grid(5, 6);
    gen::Rng rng(9);
    const std::vector<CellId> region{0, 1, 2, 6, 7, 8};
    for (int i = 0; i < 200; ++i) {
        const auto w = random_walk(g, 10, rng, region);
        for (std::size_t s = 0; s < w.size(); ++s) {
            REQUIRE(std::find(region.begin(), region.end(), w[s].cell) != region.end());
            if (s > 0) {
                REQUIRE((w[s].cell == w[s - 1].cell || g.has_edge(w[s - 1].cell, w[s].cell)));
                REQUIRE(w[s - 1].time <= w[s].time);
            }
        }
    }
    CHECK_THROWS_AS(random_walk(g, 0, rng), DomainError);
    const std::vector<CellId> bad{99};
    CHECK_THROWS_AS(random_walk(g, 3, rng, bad), DomainError);
}

TEST_CASE("generate_walks") {
    const auto g = hex_grid(3, 3);
    CHECK(generate_walks(g, 0, 1, 3, 1).empty());
    CHECK_THROWS_AS(generate_walks(g, 3, 0, 3, 1), DomainError);
    CHECK_THROWS_AS(generate_walks(g, 3, 4, 3, 1), DomainError);

    const auto a = generate_walks(g, 20, 2, 6, 42);
    const auto b = generate_walks(g, 20, 2, 6, 42);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == std::to_string(i));
        CHECK(a[i].pattern == b[i].pattern);
        CHECK(a[i].pattern.size() >= 2);
        CHECK(a[i].pattern.size() <= 6);
        for (std::size_t s = 1; s < a[i].pattern.size(); ++s) {
            const auto u = a[i].pattern[s - 1].cell;
            const auto v = a[i].pattern[s].cell;
            CHECK((u == v || g.has_edge(u, v)));
        }
    }
}
