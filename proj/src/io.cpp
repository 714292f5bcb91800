#include "cellsim/io.hpp"

#include "cellsim/clustering.hpp"
#include "cellsim/error.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

namespace cellsim {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

template <typename T>
T parse_number(std::string_view text, std::size_t line, const char* what) {
    T value{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return in;
}

} // namespace

CellGraph read_graph(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::size_t> cells;
    std::vector<CellEdge> edges;
    std::set<CellEdge> seen;

    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (skippable(line)) {
            continue;
        }
        std::istringstream fields{std::string(line)};
        std::string keyword;
        fields >> keyword;
        std::vector<std::string> args;
        for (std::string a; fields >> a;) {
            args.push_back(a);
        }
        if (keyword == "cells") {
            if (cells) {
                throw ParseError(line_no, "repeated 'cells' header");
            }
            if (args.size() != 1) {
                throw ParseError(line_no, "expected 'cells <N>'");
            }
            cells = parse_number<std::size_t>(args[0], line_no, "cell count");
            if (*cells == 0) {
                throw ParseError(line_no, "cell count must be positive");
            }
        } else if (keyword == "edge") {
            if (!cells) {
                throw ParseError(line_no, "'edge' before 'cells' header");
            }
            if (args.size() != 2) {
                throw ParseError(line_no, "expected 'edge <a> <b>'");
            }
            const auto a = parse_number<CellId>(args[0], line_no, "cell id");
            const auto b = parse_number<CellId>(args[1], line_no, "cell id");
            if (a == b) {
                throw ParseError(line_no, "self-loop on cell " + args[0]);
            }
            if (a >= *cells || b >= *cells) {
                throw ParseError(line_no, "cell id out of range 0.." + std::to_string(*cells - 1));
            }
            if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
                throw ParseError(line_no, "duplicate edge " + args[0] + " " + args[1]);
            }
            edges.emplace_back(a, b);
        } else {
            throw ParseError(line_no, "unknown record '" + keyword + "'");
        }
    }
    if (!cells) {
        throw ParseError(0, "missing 'cells <N>' header");
    }
    return CellGraph(*cells, edges);
}

CellGraph load_graph(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const CellGraph& graph) {
    out << "cells " << graph.vertex_count() << '\n';
    for (const auto& [a, b] : graph.edges()) {
        out << "edge " << a << ' ' << b << '\n';
    }
}

std::vector<TracePattern> read_trace(std::istream& in) {
    std::vector<TracePattern> out;
    std::set<std::string> finished;
    std::string current_id;
    std::vector<std::pair<long long, int>> current;
    std::size_t current_line = 0;
    long long last_seq = 0;

    auto flush = [&] {
        if (current.empty()) {
            return;
        }
        try {
            out.push_back(TracePattern{current_id, make_pattern(current)});
        } catch (const DomainError& e) {
            throw ParseError(current_line, "pattern '" + current_id + "': " + e.what());
        }
        finished.insert(current_id);
        current.clear();
    };

    std::string raw;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (skippable(line)) {
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            if (line == kTraceHeader) {
                continue;
            }
        }
        const auto fields = split(line, ',');
        if (fields.size() != 4) {
            throw ParseError(line_no, "expected 4 comma-separated fields, got " +
                                          std::to_string(fields.size()));
        }
        const std::string id(fields[0]);
        if (id.empty()) {
            throw ParseError(line_no, "empty pattern id");
        }
        const auto seq = parse_number<long long>(fields[1], line_no, "seq");
        const auto cell = parse_number<long long>(fields[2], line_no, "cell id");
        const auto slot = parse_number<int>(fields[3], line_no, "timestamp index");

        if (current.empty() || id != current_id) {
            flush();
            if (finished.contains(id)) {
                throw ParseError(line_no, "rows of pattern '" + id + "' are not contiguous");
            }
            current_id = id;
            current_line = line_no;
        } else if (seq <= last_seq) {
            throw ParseError(line_no, "seq must increase within pattern '" + id + "'");
        }
        last_seq = seq;
        if (cell < 0) {
            throw ParseError(line_no, "negative cell id");
        }
        if (slot < 1 || slot > kSlotCount) {
            throw ParseError(line_no, "timestamp index " + std::to_string(slot) + " outside 1..11");
        }
        current.emplace_back(cell, slot);
    }
    flush();
    return out;
}

std::vector<TracePattern> load_trace(const std::string& path) {
    auto in = open_input(path);
    return read_trace(in);
}

void write_trace(std::ostream& out, std::span<const TracePattern> patterns) {
    out << kTraceHeader << '\n';
    for (const auto& tp : patterns) {
        for (std::size_t i = 0; i < tp.pattern.size(); ++i) {
            out << tp.id << ',' << i << ',' << tp.pattern[i].cell << ','
                << tp.pattern[i].time.index() << '\n';
        }
    }
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

void write_matrix_csv(std::ostream& out, const DissimilarityMatrix& m,
                      std::span<const std::string> ids) {
    if (ids.size() != m.size()) {
        throw DomainError("matrix has " + std::to_string(m.size()) + " rows but " +
                          std::to_string(ids.size()) + " ids were given");
    }
    out << "pattern_id";
    for (const auto& id : ids) {
        out << ',' << id;
    }
    out << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        out << ids[i];
        for (double v : m.row(i)) {
            out << ',' << format_fixed(v);
        }
        out << '\n';
    }
}

MatrixTable read_matrix_csv(std::istream& in) {
    MatrixTable table;
    std::string raw;
    std::size_t line_no = 0;
    bool header_done = false;
    std::size_t rows = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line, ',');
        if (!header_done) {
            if (fields.empty() || fields[0] != "pattern_id") {
                throw ParseError(line_no, "matrix header must start with 'pattern_id'");
            }
            for (std::size_t c = 1; c < fields.size(); ++c) {
                table.ids.emplace_back(fields[c]);
            }
            header_done = true;
            continue;
        }
        if (fields.size() != table.ids.size() + 1) {
            throw ParseError(line_no, "row width does not match header");
        }
        if (rows >= table.ids.size() || fields[0] != table.ids[rows]) {
            throw ParseError(line_no, "row id does not match header order");
        }
        for (std::size_t c = 1; c < fields.size(); ++c) {
            // from_chars for double is missing on older libstdc++
            const std::string text(fields[c]);
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(text, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != text.size() || text.empty()) {
                throw ParseError(line_no, "invalid value '" + text + "'");
            }
            table.values.push_back(v);
        }
        ++rows;
    }
    if (!header_done) {
        throw ParseError(0, "empty matrix file");
    }
    if (rows != table.ids.size()) {
        throw ParseError(0, "matrix is not square");
    }
    return table;
}

} // namespace cellsim
