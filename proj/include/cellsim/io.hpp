#pragma once

#include "cellsim/cell_graph.hpp"
#include "cellsim/mobility.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cellsim {

class DissimilarityMatrix;

// Graph files:
//
//   cells <N>
//   edge <a> <b>
//   ...
//
// One record per line; blank lines and lines starting with '#' are skipped.
// Each neighboring pair is listed once and the reverse edge is implied, so
// listing (a,b) and (b,a) is a duplicate.

CellGraph read_graph(std::istream& in);
CellGraph load_graph(const std::string& path);
void write_graph(std::ostream& out, const CellGraph& graph);

// Trace files: comma-separated `pattern_id,seq,cell,timestamp_index` rows
// after a header line of the same names. Rows of one pattern are contiguous
// with strictly increasing seq; patterns keep their file order.

inline constexpr const char* kTraceHeader = "pattern_id,seq,cell,timestamp_index";

struct TracePattern {
    std::string id;
    MobilityPattern pattern;
};

std::vector<TracePattern> read_trace(std::istream& in);
std::vector<TracePattern> load_trace(const std::string& path);
void write_trace(std::ostream& out, std::span<const TracePattern> patterns);

// Matrix tables: header `pattern_id,<id_1>,...,<id_n>`, then one row per
// pattern `<id_i>,<v_i1>,...,<v_in>` with values printed to 6 decimals.

void write_matrix_csv(std::ostream& out, const DissimilarityMatrix& m,
                      std::span<const std::string> ids);

struct MatrixTable {
    std::vector<std::string> ids;
    /// Row-major n x n.
    std::vector<double> values;
};

MatrixTable read_matrix_csv(std::istream& in);

/// `value` printed with exactly `decimals` digits after the point.
std::string format_fixed(double value, int decimals = 6);

} // namespace cellsim
