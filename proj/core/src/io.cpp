#include "dtri/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dtri {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Coord to_coord(const json& j) {
    if (!j.is_number_integer())
        throw InputError("polygon coordinates must be integers, got " + j.dump());
    return j.get<Coord>();
}

}  // namespace

PolygonPtr read_polygon_text(const std::string& content) {
    std::size_t pos = content.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw InputError("empty polygon input");
    std::vector<Point> pts;
    if (content[pos] == '{' || content[pos] == '[') {
        json j = json::parse(content, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded()) throw InputError("malformed polygon JSON");
        const json& verts = j.is_object() ? j.at("vertices") : j;
        if (!verts.is_array()) throw InputError("polygon JSON needs a \"vertices\" array");
        for (const json& v : verts) {
            if (!v.is_array() || v.size() != 2)
                throw InputError("each vertex must be a [x, y] pair");
            pts.push_back({to_coord(v[0]), to_coord(v[1])});
        }
    } else {
        std::istringstream in(content);
        long long n = 0;
        if (!(in >> n)) throw InputError("plain polygon input must start with the vertex count");
        for (long long i = 0; i < n; ++i) {
            long long x, y;
            if (!(in >> x >> y))
                throw InputError("plain polygon input ended after " + std::to_string(i) +
                                 " of " + std::to_string(n) + " vertices");
            pts.push_back({x, y});
        }
    }
    return make_polygon(std::move(pts));
}

PolygonPtr read_polygon_file(const std::string& path) { return read_polygon_text(slurp(path)); }

std::string polygon_to_json(const Polygon& poly) {
    json verts = json::array();
    for (const Point& p : poly.vertices()) verts.push_back({p.x, p.y});
    return json{{"vertices", verts}}.dump();
}

std::string polygon_to_plain(const Polygon& poly) {
    std::ostringstream out;
    out << poly.n() << "\n";
    for (const Point& p : poly.vertices()) out << p.x << " " << p.y << "\n";
    return out.str();
}

namespace {

Combiner parse_combiner(const std::string& s) {
    if (s == "sum") return Combiner::Sum;
    if (s == "min") return Combiner::Min;
    if (s == "max") return Combiner::Max;
    throw InputError("unknown combiner: " + s);
}

std::vector<int> parse_key(const std::string& key, std::size_t arity) {
    std::vector<int> out;
    std::istringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) out.push_back(std::stoi(part));
    if (out.size() != arity) throw InputError("bad atom key '" + key + "'");
    return out;
}

}  // namespace

DecomposableMeasure read_measure_table(const std::string& content, const std::string& name) {
    json j = json::parse(content, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw InputError("malformed measure table JSON");
    std::string base = j.at("base").get<std::string>();
    Combiner comb = parse_combiner(j.at("combiner").get<std::string>());
    const json& atoms = j.at("atoms");
    bool integral = true;
    for (const auto& [key, val] : atoms.items()) {
        (void)key;
        double v = val.get<double>();
        if (v < 0) throw InputError("measure atoms must be nonnegative");
        if (std::floor(v) != v) integral = false;
    }
    if (base == "edge") {
        std::map<Diagonal, double> table;
        for (const auto& [key, val] : atoms.items()) {
            auto idx = parse_key(key, 2);
            table[Diagonal(idx[0], idx[1])] = val.get<double>();
        }
        return DecomposableMeasure::edge_table(name, comb, std::move(table), integral);
    }
    if (base == "triangle") {
        std::map<Triangle, double> table;
        for (const auto& [key, val] : atoms.items()) {
            auto idx = parse_key(key, 3);
            table[Triangle(idx[0], idx[1], idx[2])] = val.get<double>();
        }
        return DecomposableMeasure::triangle_table(name, comb, std::move(table), integral);
    }
    throw InputError("unknown measure base: " + base);
}

DecomposableMeasure read_measure_file(const std::string& path) {
    return read_measure_table(slurp(path), "table:" + path);
}

std::string measure_table_to_json(const Polygon& poly, const DecomposableMeasure& m) {
    json atoms = json::object();
    if (m.base() == MeasureBase::Edge) {
        for (const Diagonal& d : poly.diagonal_universe()) {
            std::string key = std::to_string(d.i) + "," + std::to_string(d.j);
            atoms[key] = m.atom(poly, d);
        }
    } else {
        const int n = poly.n();
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (poly.is_chord_or_edge(a, b) && poly.is_chord_or_edge(b, c) &&
                        poly.is_chord_or_edge(a, c)) {
                        std::string key = std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c);
                        atoms[key] = m.atom(poly, Triangle(a, b, c));
                    }
    }
    json j{{"base", m.base() == MeasureBase::Edge ? "edge" : "triangle"},
           {"combiner", m.combiner() == Combiner::Sum
                            ? "sum"
                            : (m.combiner() == Combiner::Min ? "min" : "max")},
           {"atoms", atoms}};
    return j.dump(2);
}

DecomposableMeasure resolve_measure(const std::string& spec) {
    if (spec.rfind("table:", 0) == 0) return read_measure_file(spec.substr(6));
    return DecomposableMeasure::builtin(spec);
}

std::string triangulation_to_json(const Triangulation& t) {
    json arr = json::array();
    for (const Diagonal& d : t.diagonals()) arr.push_back({d.i, d.j});
    return arr.dump();
}

std::vector<Triangulation> read_triangulations(const std::string& content,
                                               const PolygonPtr& poly) {
    json j = json::parse(content, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw InputError("malformed triangulation JSON");
    // Accept both a single triangulation ([[i,j],...]) and a list of them.
    bool single = j.empty() || (j[0].is_array() && !j[0].empty() && j[0][0].is_number());
    json list = single ? json::array({j}) : j;
    std::vector<Triangulation> out;
    for (const json& tj : list) {
        std::vector<Diagonal> diags;
        for (const json& d : tj) {
            if (!d.is_array() || d.size() != 2) throw InputError("diagonal must be [i, j]");
            diags.emplace_back(d[0].get<int>(), d[1].get<int>());
        }
        out.push_back(Triangulation::make(poly, std::move(diags)));
    }
    return out;
}

namespace {

json certificate_to_json(const Certificate& c) {
    json j{{"alpha_bound_checked", c.alpha_bound_checked},
           {"beta", {c.beta_num, c.beta_den}}};
    if (c.r_used) j["r_used"] = *c.r_used;
    return j;
}

Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.alpha_bound_checked = j.at("alpha_bound_checked").get<bool>();
    c.beta_num = j.at("beta")[0].get<std::int64_t>();
    c.beta_den = j.at("beta")[1].get<std::int64_t>();
    if (j.contains("r_used")) c.r_used = j.at("r_used").get<int>();
    return c;
}

}  // namespace

std::string report_to_json(const RunReport& r) {
    json tris = json::array();
    for (const auto& t : r.triangulations) {
        json tj = json::array();
        for (const Diagonal& d : t) tj.push_back({d.i, d.j});
        tris.push_back(tj);
    }
    json j{{"command", r.command},
           {"instance", {{"n", r.n}, {"diagonal_count", r.diagonal_count}}},
           {"solution", {{"triangulations", tris}}},
           {"timing_ms", r.timing_ms}};
    if (r.sum_sd) j["solution"]["sum_sd"] = *r.sum_sd;
    if (r.min_sd) j["solution"]["min_sd"] = *r.min_sd;
    if (!r.values.empty()) j["solution"]["values"] = r.values;
    if (!r.quality.empty()) j["solution"]["quality"] = r.quality;
    if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
    if (r.count >= 0) j["count"] = r.count;
    return j.dump(2);
}

RunReport report_from_json(const std::string& content) {
    json j = json::parse(content, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw InputError("malformed report JSON");
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.n = j.at("instance").at("n").get<int>();
    r.diagonal_count = j.at("instance").at("diagonal_count").get<int>();
    for (const json& tj : j.at("solution").at("triangulations")) {
        std::vector<Diagonal> t;
        for (const json& d : tj) t.emplace_back(d[0].get<int>(), d[1].get<int>());
        r.triangulations.push_back(std::move(t));
    }
    const json& sol = j.at("solution");
    if (sol.contains("sum_sd")) r.sum_sd = sol.at("sum_sd").get<std::int64_t>();
    if (sol.contains("min_sd")) r.min_sd = sol.at("min_sd").get<std::int64_t>();
    if (sol.contains("values")) r.values = sol.at("values").get<std::vector<double>>();
    if (sol.contains("quality")) r.quality = sol.at("quality").get<std::vector<double>>();
    if (j.contains("certificate")) r.certificate = certificate_from_json(j.at("certificate"));
    if (j.contains("count")) r.count = j.at("count").get<std::int64_t>();
    r.timing_ms = j.at("timing_ms").get<double>();
    return r;
}

std::string report_to_text(const RunReport& r) {
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    out << "instance: n=" << r.n << " diagonals=" << r.diagonal_count << "\n";
    if (r.count >= 0) out << "count: " << r.count << "\n";
    if (!r.values.empty()) {
        out << "values:";
        for (double v : r.values) out << " " << v;
        out << "\n";
    }
    for (std::size_t i = 0; i < r.triangulations.size(); ++i) {
        out << "T" << i << ":";
        for (const Diagonal& d : r.triangulations[i]) out << " (" << d.i << "," << d.j << ")";
        if (i < r.quality.size()) out << "  quality=" << r.quality[i];
        out << "\n";
    }
    if (r.sum_sd) out << "sum_sd: " << *r.sum_sd << "\n";
    if (r.min_sd) out << "min_sd: " << *r.min_sd << "\n";
    if (r.certificate) {
        out << "certificate: beta=" << r.certificate->beta_num << "/" << r.certificate->beta_den;
        if (r.certificate->alpha_bound_checked) out << " alpha_bound_checked";
        if (r.certificate->r_used) out << " r_used=" << *r.certificate->r_used;
        out << "\n";
    }
    out << "timing_ms: " << r.timing_ms << "\n";
    return out.str();
}

std::string render_svg(const Polygon& poly, const std::vector<Triangulation>& layers) {
    if (layers.size() > 8)
        throw TooManyLayers("at most 8 triangulation layers per render, got " +
                            std::to_string(layers.size()));
    static const char* kStrokes[8] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                      "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};
    Coord minx = poly.vertex(0).x, maxx = minx, miny = poly.vertex(0).y, maxy = miny;
    for (const Point& p : poly.vertices()) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    double w = static_cast<double>(maxx - minx), h = static_cast<double>(maxy - miny);
    double margin = 0.05 * std::max({w, h, 1.0});
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << (minx - margin) << " " << (miny - margin) << " " << (w + 2 * margin) << " "
        << (h + 2 * margin) << "\">\n";
    // Flip y so the polygon appears in the usual orientation.
    out << "<g transform=\"translate(0," << (miny + maxy) << ") scale(1,-1)\">\n";
    out << "<polygon points=\"";
    for (const Point& p : poly.vertices()) out << p.x << "," << p.y << " ";
    out << "\" fill=\"#f5f5f0\" stroke=\"#222\" stroke-width=\"" << std::max(w, h) / 200.0
        << "\"/>\n";
    for (std::size_t l = 0; l < layers.size(); ++l) {
        out << "<g stroke=\"" << kStrokes[l % 8] << "\" stroke-width=\""
            << std::max(w, h) / 300.0 << "\" fill=\"none\">\n";
        for (const Diagonal& d : layers[l].diagonals()) {
            const Point& a = poly.vertex(d.i);
            const Point& b = poly.vertex(d.j);
            out << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\""
                << b.y << "\"/>\n";
        }
        out << "</g>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace dtri
