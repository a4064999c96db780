#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dtri/measure.hpp"
#include "dtri/triangulation.hpp"

namespace dtri {

// Polygon input: JSON {"vertices": [[x,y],...]} with integer coordinates, or
// plain text (line 1 = n, then n lines "x y"). The format is sniffed from the
// first non-space character.
PolygonPtr read_polygon_text(const std::string& content);
PolygonPtr read_polygon_file(const std::string& path);
std::string polygon_to_json(const Polygon& poly);
std::string polygon_to_plain(const Polygon& poly);

// Measure atom table: {"base":"edge"|"triangle","combiner":"sum"|"min"|"max",
// "atoms":{"i,j": value,...}}. The measure is flagged integral when every
// atom is an integer.
DecomposableMeasure read_measure_table(const std::string& content, const std::string& name);
DecomposableMeasure read_measure_file(const std::string& path);
std::string measure_table_to_json(const Polygon& poly, const DecomposableMeasure& m);

// Resolves "euclidean", "const0", ..., or "table:<path>".
DecomposableMeasure resolve_measure(const std::string& spec);

// Triangulation serialization: JSON list of [i,j] pairs in canonical order.
std::string triangulation_to_json(const Triangulation& t);
std::vector<Triangulation> read_triangulations(const std::string& content, const PolygonPtr& poly);

struct RunReport {
    std::string command;
    int n = 0;
    int diagonal_count = 0;
    std::vector<std::vector<Diagonal>> triangulations;
    std::optional<std::int64_t> sum_sd;
    std::optional<std::int64_t> min_sd;
    std::vector<double> values;     // objective values (bct/mwt)
    std::vector<double> quality;    // per-triangulation quality, when a measure applies
    std::optional<Certificate> certificate;
    std::int64_t count = -1;        // enumeration count, -1 when n/a
    double timing_ms = 0.0;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

std::string report_to_json(const RunReport& r);
RunReport report_from_json(const std::string& content);
std::string report_to_text(const RunReport& r);

// SVG 1.1 document: polygon outline plus one overlay of diagonals per
// triangulation in a distinct stroke; viewBox fits the bounding box with a 5%
// margin. At most 8 layers.
std::string render_svg(const Polygon& poly, const std::vector<Triangulation>& layers);

}  // namespace dtri
