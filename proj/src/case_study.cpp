#include "cellsim/case_study.hpp"

#include "cellsim/baselines.hpp"
#include "cellsim/cell_graph.hpp"
#include "cellsim/io.hpp"
#include "cellsim/similarity.hpp"

#include <sstream>

namespace cellsim {

MobilityPattern case_study_pattern_a() { return make_pattern({{1, 1}, {0, 3}, {2, 4}, {8, 6}, {7, 9}}); }

MobilityPattern case_study_pattern_b() { return make_pattern({{0, 3}, {2, 4}, {3, 5}, {8, 6}, {4, 8}}); }

CaseStudyReport run_case_study() {
    const auto& graph = example_graph();
    const HopTable hops(graph);
    const auto a = case_study_pattern_a();
    const auto b = case_study_pattern_b();

    CaseStudyReport r;
    r.graph_diameter = hops.diameter();
    r.tiakas_net = tiakas_net(hops, a, b);
    r.tiakas_time = tiakas_time(a, b);
    r.tiakas_total = tiakas_total(hops, a, b, 0.5, 0.5);

    const auto parts = oss_parts(a, b);
    r.oss_g = parts.g;
    r.oss_f = parts.f;
    r.oss = parts.value;

    r.uncommon = uncommon_count(a, b);
    r.d_space = d_space(a, b);
    r.d_time = d_time(a, b);
    r.d_composite = d_composite(a, b, Weights(0.5, 0.5));

    r.lcss = lcss(a, b);
    r.cvti = cvti(a, b);
    return r;
}

std::string format_case_study(const CaseStudyReport& r) {
    auto f3 = [](double v) { return format_fixed(v, 3); };
    std::ostringstream out;
    out << "S_a = <(1,t1),(0,t3),(2,t4),(8,t6),(7,t9)>\n"
        << "S_b = <(0,t3),(2,t4),(3,t5),(8,t6),(4,t8)>\n"
        << "graph: 12-cell example region, D_G = " << r.graph_diameter << "\n\n"
        << "Network distance (Tiakas), W_net = W_time = 0.5\n"
        << "  D_net = " << f3(r.tiakas_net) << '\n'
        << "  D_time(tiakas) = " << f3(r.tiakas_time) << '\n'
        << "  D_total(tiakas) = " << f3(r.tiakas_total) << "\n\n"
        << "Ordering-based sequence similarity\n"
        << "  g = " << r.oss_g << '\n'
        << "  f = " << f3(r.oss_f) << '\n'
        << "  d_OSS = " << f3(r.oss) << "\n\n"
        << "Proposed measure, W_space = W_time = 0.5\n"
        << "  f(S_a,S_b) = " << r.uncommon << '\n'
        << "  D_space = " << f3(r.d_space) << '\n'
        << "  D_time(proposed) = " << f3(r.d_time) << '\n'
        << "  D_total(proposed) = " << f3(r.d_composite) << "\n\n"
        << "Cellular-space measures (Kang)\n"
        << "  LCSS = " << r.lcss << '\n'
        << "  CVTI = " << r.cvti << " min\n";
    return out.str();
}

} // namespace cellsim
