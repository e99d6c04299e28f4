#include "levelcross/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstring>

#include <json.hpp>

namespace levelcross {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void append_cells(std::string& out, const std::vector<CellIndex>& cells) {
    out += "[";
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) out += ",";
        out += "[";
        for (std::size_t s = 0; s < cells[c].i.size(); ++s) {
            if (s) out += ",";
            out += std::to_string(cells[c].i[s]);
        }
        out += "]";
    }
    out += "]";
}

}  // namespace

CellLabeling parse_labeling(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("labeling: not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("labeling: document must be an object");
    for (const char* field : {"n", "k", "d", "values"}) {
        if (!doc.contains(field)) {
            throw SchemaError(std::string("labeling: missing field '") + field + "'");
        }
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 1) {
        throw SchemaError("labeling: 'n' must be an integer >= 1");
    }
    if (!doc["k"].is_number_integer() || doc["k"].get<std::int64_t>() < 1) {
        throw SchemaError("labeling: 'k' must be an integer >= 1");
    }
    if (!doc["d"].is_number_integer() || doc["d"].get<std::int64_t>() < 0) {
        throw SchemaError("labeling: 'd' must be an integer >= 0");
    }
    const int n = doc["n"].get<int>();
    const std::int64_t k = doc["k"].get<std::int64_t>();
    const int d = doc["d"].get<int>();
    if (n > 16) throw SchemaError("labeling: 'n' larger than 16 is not supported");

    const GridShape shape(n, k);
    const std::int64_t cells = shape.cell_count();
    const auto& values = doc["values"];
    if (!values.is_array()) throw SchemaError("labeling: 'values' must be an array");
    if (static_cast<std::int64_t>(values.size()) != cells) {
        throw SchemaError("labeling: 'values' has length " + std::to_string(values.size()) +
                          ", expected k^n = " + std::to_string(cells));
    }

    CellLabeling out(shape, d);
    std::vector<std::int64_t> row(static_cast<std::size_t>(d));
    for (std::int64_t pos = 0; pos < cells; ++pos) {
        const auto& entry = values[static_cast<std::size_t>(pos)];
        const std::string where = "values[" + std::to_string(pos) + "]";
        if (!entry.is_array() || static_cast<int>(entry.size()) != d) {
            throw SchemaError("labeling: " + where + " must be an array of " + std::to_string(d) +
                              " integers");
        }
        for (int s = 0; s < d; ++s) {
            const auto& num = entry[static_cast<std::size_t>(s)];
            if (!num.is_number_integer()) {
                throw SchemaError("labeling: " + where + "[" + std::to_string(s) +
                                  "] is not an integer");
            }
            row[static_cast<std::size_t>(s)] = num.get<std::int64_t>();
        }
        out.set_value(pos, row);
    }
    return out;
}

std::string serialize_labeling(const CellLabeling& labeling) {
    ordered_json doc;
    doc["n"] = labeling.shape().n;
    doc["k"] = labeling.shape().k;
    doc["d"] = labeling.value_dim();
    auto values = ordered_json::array();
    const std::int64_t cells = labeling.shape().cell_count();
    for (std::int64_t pos = 0; pos < cells; ++pos) {
        auto row = ordered_json::array();
        for (std::int64_t v : labeling.value(pos)) row.push_back(v);
        values.push_back(std::move(row));
    }
    doc["values"] = std::move(values);
    return doc.dump();
}

std::string emit_witness(const ChessboardWitness& w) {
    std::string out = "{\"kind\":\"chessboard\",\"p\":";
    out += std::to_string(w.color);
    out += ",\"axis\":" + std::to_string(w.axis) + ",\"cells\":";
    append_cells(out, w.cells);
    out += "}";
    return out;
}

std::string emit_witness(const DiscreteWitness& w) {
    std::string out = "{\"kind\":\"discrete\",\"p\":[";
    const auto& pts = w.value_set.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ",";
        out += "[";
        for (std::size_t s = 0; s < pts[i].coords.size(); ++s) {
            if (s) out += ",";
            out += std::to_string(pts[i].coords[s]);
        }
        out += "]";
    }
    out += "],\"axis\":" + std::to_string(w.axis) + ",\"cells\":";
    append_cells(out, w.cells);
    out += ",\"bound\":" + std::to_string(w.bound) + "}";
    return out;
}

std::string emit_witness(const ContinuousWitness& w) {
    std::string out = "{\"kind\":\"continuous\",\"p\":[";
    for (std::size_t s = 0; s < w.p.size(); ++s) {
        if (s) out += ",";
        out += format_real(w.p[s]);
    }
    out += "],\"axis\":" + std::to_string(w.axis) + ",\"cells\":";
    append_cells(out, w.cells);
    out += ",\"epsilon\":" + format_real(w.epsilon);
    out += ",\"grid\":{\"n\":" + std::to_string(w.grid.n) +
           ",\"k\":" + std::to_string(w.grid.k) + "}}";
    return out;
}

namespace {

// Stable pastel from a value hash; witness outlines stay readable on top.
void value_rgb(std::span<const std::int64_t> v, int& r, int& g, int& b) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::int64_t c : v) {
        h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    r = 120 + static_cast<int>(h % 120);
    g = 120 + static_cast<int>((h >> 20) % 120);
    b = 120 + static_cast<int>((h >> 40) % 120);
}

}  // namespace

std::string render_grid_svg(const CellLabeling& labeling,
                            const std::vector<CellIndex>* witness_cells,
                            std::optional<int> witness_axis, const SvgOptions& options) {
    const GridShape& shape = labeling.shape();
    if (shape.n != 2) {
        throw UnsupportedDimensionError("render_grid_svg: only n = 2 is drawable");
    }
    const std::int64_t k = shape.k;
    const double px = static_cast<double>(options.pixels);
    const double cell = px / static_cast<double>(k);

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(options.pixels) +
           "\" height=\"" + std::to_string(options.pixels) + "\" viewBox=\"0 0 " +
           std::to_string(options.pixels) + " " + std::to_string(options.pixels) + "\">\n";

    // i_1 grows rightward, i_2 grows upward: flip the y pixel coordinate.
    for (std::int64_t lin = 0; lin < shape.cell_count(); ++lin) {
        const CellIndex c = cell_at(lin, shape);
        int r, g, b;
        value_rgb(labeling.value(lin), r, g, b);
        const double x = (c.i[0] - 1) * cell;
        const double y = px - static_cast<double>(c.i[1]) * cell;
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                      "fill=\"rgb(%d,%d,%d)\" stroke=\"white\" stroke-width=\"0.5\"/>\n",
                      x, y, cell, cell, r, g, b);
        svg += buf;
    }
    if (witness_cells != nullptr) {
        for (const auto& c : *witness_cells) {
            const double x = (c.i[0] - 1) * cell;
            const double y = px - static_cast<double>(c.i[1]) * cell;
            char buf[256];
            std::snprintf(buf, sizeof(buf),
                          "<rect class=\"witness\" x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" "
                          "height=\"%.2f\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n",
                          x, y, cell, cell);
            svg += buf;
        }
    }
    if (options.legend && witness_axis.has_value()) {
        svg += "<text x=\"8\" y=\"20\" font-family=\"monospace\" font-size=\"16\">crossing axis " +
               std::to_string(*witness_axis) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::vector<std::string> render_grid_ppm_layers(const CellLabeling& labeling,
                                                const std::vector<CellIndex>* witness_cells) {
    const GridShape& shape = labeling.shape();
    if (shape.n != 3) {
        throw UnsupportedDimensionError("render_grid_ppm_layers: only n = 3 is stackable");
    }
    const std::int64_t k = shape.k;
    std::vector<char> marked(static_cast<std::size_t>(shape.cell_count()), 0);
    if (witness_cells != nullptr) {
        for (const auto& c : *witness_cells) {
            marked[static_cast<std::size_t>(linear_index(c, shape))] = 1;
        }
    }

    std::vector<std::string> layers;
    for (std::int64_t z = 1; z <= k; ++z) {
        std::string ppm = "P6\n" + std::to_string(k) + " " + std::to_string(k) + "\n255\n";
        for (std::int64_t row = k; row >= 1; --row) {  // i_2 upward
            for (std::int64_t col = 1; col <= k; ++col) {
                CellIndex c{static_cast<std::int32_t>(col), static_cast<std::int32_t>(row),
                            static_cast<std::int32_t>(z)};
                const std::int64_t lin = linear_index(c, shape);
                int r, g, b;
                value_rgb(labeling.value(lin), r, g, b);
                if (marked[static_cast<std::size_t>(lin)]) {
                    r = std::min(255, r + 100);
                    g = std::min(255, g + 100);
                    b = std::min(255, b + 100);
                }
                ppm.push_back(static_cast<char>(r));
                ppm.push_back(static_cast<char>(g));
                ppm.push_back(static_cast<char>(b));
            }
        }
        layers.push_back(std::move(ppm));
    }
    return layers;
}

}  // namespace levelcross
