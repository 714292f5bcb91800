#pragma once

#include "cellsim/mobility.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace cellsim {

/// The two worked-example patterns compared on the example graph.
MobilityPattern case_study_pattern_a();
MobilityPattern case_study_pattern_b();

/// Every quantity of the side-by-side comparison, unrounded.
struct CaseStudyReport {
    std::uint32_t graph_diameter = 0;

    double tiakas_net = 0.0;
    double tiakas_time = 0.0;
    double tiakas_total = 0.0;

    std::size_t oss_g = 0;
    double oss_f = 0.0;
    double oss = 0.0;

    std::size_t uncommon = 0;
    double d_space = 0.0;
    double d_time = 0.0;
    double d_composite = 0.0;

    std::size_t lcss = 0;
    std::int64_t cvti = 0;
};

/// Evaluates all measures on the worked example with equal (0.5, 0.5) weights.
CaseStudyReport run_case_study();

/// Human-readable report, values rounded to 3 decimals.
std::string format_case_study(const CaseStudyReport& r);

} // namespace cellsim
