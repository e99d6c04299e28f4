#include "levelcross/builtin_functions.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include <json.hpp>

namespace levelcross {

ContinuousFn make_projection(int n) {
    if (n < 1) throw InvalidInputError("make_projection: need n >= 1");
    ContinuousFn f;
    f.n = n;
    f.lipschitz = 1.0;
    f.bound = 1.0;
    f.eval = [d = n - 1](std::span<const double> x, std::span<double> out) {
        for (int s = 0; s < d; ++s) out[s] = x[s];
    };
    return f;
}

ContinuousFn make_linear_diff() {
    ContinuousFn f;
    f.n = 2;
    f.lipschitz = 1.0;
    f.bound = 1.0;
    f.eval = [](std::span<const double> x, std::span<double> out) { out[0] = x[0] - x[1]; };
    return f;
}

ContinuousFn make_quadratic_saddle() {
    ContinuousFn f;
    f.n = 2;
    f.lipschitz = 2.0;
    f.bound = 0.25;
    f.eval = [](std::span<const double> x, std::span<double> out) {
        out[0] = (x[0] - 0.5) * (x[0] - 0.5) - (x[1] - 0.5) * (x[1] - 0.5);
    };
    return f;
}

namespace {

struct Segment {
    double ax, ay, bx, by;
    double lox, loy, hix, hiy;  // bounding box for pruning
};

double segment_distance(const Segment& s, double px, double py) {
    const double dx = s.bx - s.ax;
    const double dy = s.by - s.ay;
    const double len_sq = dx * dx + dy * dy;
    double t = 0;
    if (len_sq > 0) t = std::clamp(((px - s.ax) * dx + (py - s.ay) * dy) / len_sq, 0.0, 1.0);
    const double qx = s.ax + t * dx - px;
    const double qy = s.ay + t * dy - py;
    return std::sqrt(qx * qx + qy * qy);
}

double box_distance(const Segment& s, double px, double py) {
    const double gx = std::max({s.lox - px, px - s.hix, 0.0});
    const double gy = std::max({s.loy - py, py - s.hiy, 0.0});
    return std::sqrt(gx * gx + gy * gy);
}

}  // namespace

ContinuousFn make_sine_curve_distance(int oscillations, int chords_per_period) {
    if (oscillations < 1 || chords_per_period < 4) {
        throw InvalidInputError("make_sine_curve_distance: degenerate sampling parameters");
    }
    auto segments = std::make_shared<std::vector<Segment>>();
    const auto add = [&](double ax, double ay, double bx, double by) {
        Segment s{ax, ay, bx, by,
                  std::min(ax, bx), std::min(ay, by), std::max(ax, bx), std::max(ay, by)};
        segments->push_back(s);
    };

    const double sin4 = std::sin(4.0);
    // Descender from (0, 1) to the left end of the bar.
    add(0.0, 1.0, 0.25, 0.5);
    // Vertical bar at x = 1/4.
    add(0.25, 0.25, 0.25, 0.75);
    // Closing segment from (1/2, sin(4)/4 + 1/2) down to (1, 0).
    add(0.5, sin4 / 4.0 + 0.5, 1.0, 0.0);
    // Oscillating arc, parametrized by phase phi = 1/(x - 1/4) in [4, phimax];
    // the tail past phimax stays within 1/phimax of the bar and is dropped.
    const double phimax = 4.0 + 2.0 * std::numbers::pi * oscillations;
    const double dphi = 2.0 * std::numbers::pi / chords_per_period;
    double phi = 4.0;
    double px = 0.25 + 1.0 / phi;
    double py = std::sin(phi) / 4.0 + 0.5;
    while (phi < phimax) {
        const double nphi = std::min(phi + dphi, phimax);
        const double nx = 0.25 + 1.0 / nphi;
        const double ny = std::sin(nphi) / 4.0 + 0.5;
        add(px, py, nx, ny);
        phi = nphi;
        px = nx;
        py = ny;
    }

    ContinuousFn f;
    f.n = 2;
    f.lipschitz = std::numbers::sqrt2;  // Euclidean distance field, l-inf inputs
    f.bound = 1.5;
    f.eval = [segments](std::span<const double> x, std::span<double> out) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& s : *segments) {
            if (box_distance(s, x[0], x[1]) >= best) continue;
            best = std::min(best, segment_distance(s, x[0], x[1]));
        }
        out[0] = best;
    };
    return f;
}

ContinuousFn parse_function_spec(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("function spec: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("function spec: document must be an object");
    for (const char* field : {"n", "lipschitz", "bound", "pieces"}) {
        if (!doc.contains(field)) {
            throw SchemaError(std::string("function spec: missing field '") + field + "'");
        }
    }
    if (!doc["n"].is_number_integer()) throw SchemaError("function spec: n must be an integer");
    const int n = doc["n"].get<int>();
    if (n < 1) throw SchemaError("function spec: n must be >= 1");
    const double lipschitz = doc["lipschitz"].get<double>();
    const double bound = doc["bound"].get<double>();
    if (!(lipschitz > 0) || !(bound > 0)) {
        throw SchemaError("function spec: lipschitz and bound must be positive");
    }

    struct Term {
        double coef;
        std::vector<int> powers;
    };
    struct Piece {
        bool has_box = false;
        std::vector<std::pair<double, double>> box;
        std::vector<std::vector<Term>> components;
    };
    auto pieces = std::make_shared<std::vector<Piece>>();
    if (!doc["pieces"].is_array() || doc["pieces"].empty()) {
        throw SchemaError("function spec: pieces must be a nonempty array");
    }
    std::size_t piece_pos = 0;
    for (const auto& pj : doc["pieces"]) {
        Piece piece;
        const std::string where = "pieces[" + std::to_string(piece_pos) + "]";
        if (pj.contains("box")) {
            piece.has_box = true;
            if (!pj["box"].is_array() || static_cast<int>(pj["box"].size()) != n) {
                throw SchemaError("function spec: " + where + ".box needs n intervals");
            }
            for (const auto& iv : pj["box"]) {
                if (!iv.is_array() || iv.size() != 2) {
                    throw SchemaError("function spec: " + where + ".box interval malformed");
                }
                piece.box.emplace_back(iv[0].get<double>(), iv[1].get<double>());
            }
        }
        if (!pj.contains("components") || !pj["components"].is_array() ||
            static_cast<int>(pj["components"].size()) != n - 1) {
            throw SchemaError("function spec: " + where + " needs n-1 components");
        }
        for (const auto& comp : pj["components"]) {
            std::vector<Term> terms;
            if (!comp.is_array()) {
                throw SchemaError("function spec: " + where + " component must be a term array");
            }
            for (const auto& tj : comp) {
                Term t;
                if (!tj.contains("c") || !tj.contains("p") || !tj["p"].is_array() ||
                    static_cast<int>(tj["p"].size()) != n) {
                    throw SchemaError("function spec: " + where + " term needs c and p[n]");
                }
                t.coef = tj["c"].get<double>();
                for (const auto& e : tj["p"]) {
                    if (!e.is_number_integer() || e.get<int>() < 0) {
                        throw SchemaError("function spec: " + where + " powers must be >= 0 integers");
                    }
                    t.powers.push_back(e.get<int>());
                }
                terms.push_back(std::move(t));
            }
            piece.components.push_back(std::move(terms));
        }
        pieces->push_back(std::move(piece));
        ++piece_pos;
    }

    ContinuousFn f;
    f.n = n;
    f.lipschitz = lipschitz;
    f.bound = bound;
    f.eval = [pieces, n](std::span<const double> x, std::span<double> out) {
        const Piece* active = nullptr;
        for (const auto& piece : *pieces) {
            bool inside = true;
            if (piece.has_box) {
                for (int s = 0; s < n && inside; ++s) {
                    inside = x[s] >= piece.box[s].first && x[s] <= piece.box[s].second;
                }
            }
            if (inside) {
                active = &piece;
                break;
            }
        }
        if (active == nullptr) active = &pieces->front();  // fall back to the first piece
        for (int c = 0; c < n - 1; ++c) {
            double acc = 0;
            for (const auto& term : active->components[c]) {
                double v = term.coef;
                for (int s = 0; s < n; ++s) {
                    for (int e = 0; e < term.powers[s]; ++e) v *= x[s];
                }
                acc += v;
            }
            out[c] = acc;
        }
    };
    return f;
}

ContinuousFn builtin_function(const std::string& name) {
    if (name == "proj") return make_projection(2);
    if (name == "proj3") return make_projection(3);
    if (name == "linear") return make_linear_diff();
    if (name == "quad") return make_quadratic_saddle();
    if (name == "sine") return make_sine_curve_distance();
    throw InvalidInputError("unknown function '" + name +
                            "' (available: proj, proj3, linear, quad, sine)");
}

}  // namespace levelcross
