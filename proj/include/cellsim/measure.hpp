#pragma once

#include "cellsim/cell_graph.hpp"
#include "cellsim/mobility.hpp"
#include "cellsim/similarity.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string_view>

namespace cellsim {

enum class Measure {
    Space,
    Time,
    Composite,
    TiakasNet,
    TiakasTime,
    TiakasTotal,
    Oss,
    Lcss,
    Cvti,
};

inline constexpr std::array kAllMeasures = {
    Measure::Space,      Measure::Time,        Measure::Composite,
    Measure::TiakasNet,  Measure::TiakasTime,  Measure::TiakasTotal,
    Measure::Oss,        Measure::Lcss,        Measure::Cvti,
};

/// Command-line spelling: space, time, composite, tiakas-net, tiakas-time,
/// tiakas-total, oss, lcss, cvti.
std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view name);

bool measure_needs_graph(Measure m);
/// Tiakas measures pair points by position and need equal lengths.
bool measure_needs_equal_lengths(Measure m);

/// A measure bound to its parameters. For composite the weights are
/// (space, time); for tiakas-total they are read as (net, time).
class PairMeasure {
public:
    /// Throws DomainError if the measure needs a graph and none is given.
    /// A supplied graph must be connected (GraphNotConnected otherwise).
    PairMeasure(Measure kind, Weights weights = {}, const CellGraph* graph = nullptr);

    Measure kind() const noexcept { return kind_; }
    const Weights& weights() const noexcept { return weights_; }

    double operator()(const MobilityPattern& a, const MobilityPattern& b) const;

private:
    Measure kind_;
    Weights weights_;
    std::shared_ptr<const HopTable> hops_;
};

} // namespace cellsim
