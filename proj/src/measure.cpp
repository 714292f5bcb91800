#include "cellsim/measure.hpp"

#include "cellsim/baselines.hpp"
#include "cellsim/error.hpp"

#include <string>

namespace cellsim {

std::string_view measure_name(Measure m) {
    switch (m) {
    case Measure::Space: return "space";
    case Measure::Time: return "time";
    case Measure::Composite: return "composite";
    case Measure::TiakasNet: return "tiakas-net";
    case Measure::TiakasTime: return "tiakas-time";
    case Measure::TiakasTotal: return "tiakas-total";
    case Measure::Oss: return "oss";
    case Measure::Lcss: return "lcss";
    case Measure::Cvti: return "cvti";
    }
    return "?";
}

std::optional<Measure> parse_measure(std::string_view name) {
    for (auto m : kAllMeasures) {
        if (measure_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

bool measure_needs_graph(Measure m) {
    return m == Measure::TiakasNet || m == Measure::TiakasTotal;
}

bool measure_needs_equal_lengths(Measure m) {
    return m == Measure::TiakasNet || m == Measure::TiakasTime || m == Measure::TiakasTotal;
}

PairMeasure::PairMeasure(Measure kind, Weights weights, const CellGraph* graph)
    : kind_(kind), weights_(weights) {
    if (measure_needs_graph(kind)) {
        if (graph == nullptr) {
            throw DomainError("measure '" + std::string(measure_name(kind)) + "' requires a cell graph");
        }
        hops_ = std::make_shared<const HopTable>(*graph);
    }
}

double PairMeasure::operator()(const MobilityPattern& a, const MobilityPattern& b) const {
    switch (kind_) {
    case Measure::Space: return d_space(a, b);
    case Measure::Time: return d_time(a, b);
    case Measure::Composite: return d_composite(a, b, weights_);
    case Measure::TiakasNet: return tiakas_net(*hops_, a, b);
    case Measure::TiakasTime: return tiakas_time(a, b);
    case Measure::TiakasTotal: return tiakas_total(*hops_, a, b, weights_.space(), weights_.time());
    case Measure::Oss: return oss(a, b);
    case Measure::Lcss: return static_cast<double>(lcss(a, b));
    case Measure::Cvti: return static_cast<double>(cvti(a, b));
    }
    throw DomainError("unknown measure");
}

} // namespace cellsim
