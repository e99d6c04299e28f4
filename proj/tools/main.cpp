#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "levelcross/builtin_functions.hpp"
#include "levelcross/clustered_coloring.hpp"
#include "levelcross/constants_lab.hpp"
#include "levelcross/continuous_solver.hpp"
#include "levelcross/discrete_solver.hpp"
#include "levelcross/generators.hpp"
#include "levelcross/invariant_suite.hpp"
#include "levelcross/io.hpp"
#include "levelcross/steinhaus.hpp"
#include "levelcross/witness_verify.hpp"

namespace {

using namespace levelcross;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cannot write file: " + path);
    out << content;
}

// "--box lo:hi,lo:hi,..." -> per-axis inclusive ranges
std::vector<std::pair<std::int64_t, std::int64_t>> parse_box(const std::string& text, int n) {
    std::vector<std::pair<std::int64_t, std::int64_t>> box;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) throw InvalidInputError("box range needs lo:hi");
        box.emplace_back(std::stoll(part.substr(0, colon)), std::stoll(part.substr(colon + 1)));
        if (box.back().first > box.back().second) throw InvalidInputError("box range is empty");
    }
    if (static_cast<int>(box.size()) != n) {
        throw InvalidInputError("box needs exactly n ranges");
    }
    return box;
}

int run_color(int n, std::int64_t m, const std::string& box_text) {
    const ColoringParams params(n, m);
    const auto box = parse_box(box_text, n);

    // character grid for 1- and 2-dimensional slices
    if (n == 1) {
        std::string line;
        for (std::int64_t x = box[0].first; x <= box[0].second; ++x) {
            line += static_cast<char>('0' + color(LatticePoint{x}, params));
        }
        std::cout << line << "\n";
    } else if (n == 2) {
        for (std::int64_t y = box[1].second; y >= box[1].first; --y) {
            std::string line;
            for (std::int64_t x = box[0].first; x <= box[0].second; ++x) {
                line += static_cast<char>('0' + color(LatticePoint{x, y}, params));
            }
            std::cout << line << "\n";
        }
    }

    std::string json = "{\"n\":" + std::to_string(n) + ",\"m\":" + std::to_string(m) + ",\"box\":[";
    for (std::size_t s = 0; s < box.size(); ++s) {
        if (s) json += ",";
        json += "[" + std::to_string(box[s].first) + "," + std::to_string(box[s].second) + "]";
    }
    json += "],\"colors\":[";
    std::vector<std::int64_t> t(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) t[static_cast<std::size_t>(s)] = box[static_cast<std::size_t>(s)].first;
    bool first = true;
    while (true) {
        if (!first) json += ",";
        first = false;
        json += std::to_string(color(LatticePoint(std::vector<std::int64_t>(t)), params));
        int s = n - 1;
        while (s >= 0 && t[static_cast<std::size_t>(s)] == box[static_cast<std::size_t>(s)].second) {
            t[static_cast<std::size_t>(s)] = box[static_cast<std::size_t>(s)].first;
            --s;
        }
        if (s < 0) break;
        ++t[static_cast<std::size_t>(s)];
    }
    json += "]}";
    std::cout << json << "\n";
    return 0;
}

int run_chessboard(const std::string& input, std::uint64_t seed, bool random, int n,
                   std::int64_t k, const std::string& svg, const std::string& ppm) {
    CellLabeling coloring = random ? random_coloring(GridShape(n, k), n, seed)
                                   : parse_labeling(slurp(input));
    const ChessboardWitness w = find_crossing(coloring);
    const auto check = verify_chessboard_witness(coloring, w);
    if (!check) throw TheoremViolationError("witness failed verification: " + check.reason);
    std::cout << emit_witness(w) << "\n";
    if (!svg.empty()) spill(svg, render_grid_svg(coloring, &w.cells, w.axis));
    if (!ppm.empty()) {
        const auto layers = render_grid_ppm_layers(coloring, &w.cells);
        for (std::size_t z = 0; z < layers.size(); ++z) {
            spill(ppm + "_layer" + std::to_string(z + 1) + ".ppm", layers[z]);
        }
    }
    return 0;
}

int run_solve_discrete(const std::string& input, int m, bool shrink, const std::string& svg) {
    const CellLabeling f = parse_labeling(slurp(input));
    const DiscreteWitness w = solve(f, m, shrink);
    const auto check = verify_discrete_witness(f, w, !shrink);
    if (!check) throw TheoremViolationError("witness failed verification: " + check.reason);
    std::cout << emit_witness(w) << "\n";
    if (!svg.empty()) spill(svg, render_grid_svg(f, &w.cells, w.axis));
    return 0;
}

int run_levelset(const std::string& fn_name, const std::string& spec_path, double epsilon,
                 int steps, const std::string& svg) {
    const ContinuousFn f =
        spec_path.empty() ? builtin_function(fn_name) : parse_function_spec(slurp(spec_path));
    if (steps <= 1) {
        const ContinuousWitness w = approximate_level_crossing(f, epsilon);
        const auto check = verify_continuous_witness(f, w);
        if (!check) throw TheoremViolationError("witness failed verification: " + check.reason);
        std::cout << emit_witness(w) << "\n";
        if (!svg.empty()) {
            if (w.grid.cell_count() > 1'000'000) {
                throw InvalidInputError("grid too large to render");
            }
            CellLabeling blank(w.grid, 0);
            spill(svg, render_grid_svg(blank, &w.cells, w.axis));
        }
        return 0;
    }

    const RefineResult res = refine_sequence(f, epsilon, steps);
    std::cout << "[";
    for (std::size_t j = 0; j < res.witnesses.size(); ++j) {
        const auto check = verify_continuous_witness(f, res.witnesses[j]);
        if (!check) throw TheoremViolationError("witness failed verification: " + check.reason);
        if (j) std::cout << ",";
        std::cout << emit_witness(res.witnesses[j]);
    }
    std::cout << "]\n";
    std::cout << "{\"diagnostics\":[";
    for (std::size_t j = 0; j < res.diagnostics.size(); ++j) {
        const auto& d = res.diagnostics[j];
        if (j) std::cout << ",";
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "{\"hausdorff\":%.17g,\"p_drift\":%.17g,\"unions_intersect\":%s}",
                      d.hausdorff, d.p_drift, d.unions_intersect ? "true" : "false");
        std::cout << buf;
    }
    std::cout << "]}\n";
    if (!svg.empty() && !res.witnesses.empty()) {
        const auto& w = res.witnesses.back();
        if (w.grid.cell_count() > 1'000'000) throw InvalidInputError("grid too large to render");
        CellLabeling blank(w.grid, 0);
        spill(svg, render_grid_svg(blank, &w.cells, w.axis));
    }
    return 0;
}

int run_constants(std::int64_t k, int m, std::int64_t radius, std::uint64_t budget, bool prop53) {
    if (prop53) {
        const CellLabeling f = build_prop53_witness();
        const bool singleton = singleton_sufficient(f).has_value();
        const DiscreteWitness w = solve(f, 0);
        std::cout << "{\"singleton_crossing\":" << (singleton ? "true" : "false")
                  << ",\"solver_value_set_size\":" << w.value_set.size()
                  << ",\"consistent_with_two_value_minimum\":"
                  << (!singleton && w.value_set.size() == 2 ? "true" : "false") << "}\n";
        return 0;
    }
    int workers = 1;
    if (const char* env = std::getenv("LEVELCROSS_WORKERS")) {
        workers = std::max(1, std::atoi(env));
    }
    const ExhaustiveReport r = exhaustive_check_c1(k, m, radius, budget, workers);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "{\"k\":%lld,\"m\":%d,\"radius\":%lld,\"enumerated\":%llu,\"verified\":%llu,"
                  "\"all_passed\":%s,\"elapsed_seconds\":%.3f}",
                  static_cast<long long>(k), m, static_cast<long long>(radius),
                  static_cast<unsigned long long>(r.enumerated),
                  static_cast<unsigned long long>(r.verified), r.all_passed ? "true" : "false",
                  r.elapsed_seconds);
    std::cout << buf << "\n";
    return r.all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clustered lattice colorings, chessboard crossings, and approximate level sets"};
    app.require_subcommand(1);

    auto* color_cmd = app.add_subcommand("color", "print a slice of the clustered coloring of Z^n");
    int color_n = 2;
    std::int64_t color_m = 1;
    std::string color_box = "-5:5,-5:5";
    color_cmd->add_option("--n", color_n, "lattice dimension")->check(CLI::Range(1, 8));
    color_cmd->add_option("--m", color_m, "distance parameter")->check(CLI::Range(1, 1000));
    color_cmd->add_option("--box", color_box, "slice as lo:hi,lo:hi,... (n ranges)");

    auto* chess_cmd = app.add_subcommand("chessboard", "find a monochromatic crossing family");
    std::string chess_input, chess_svg, chess_ppm;
    std::uint64_t chess_seed = 0;
    int chess_n = 2;
    std::int64_t chess_k = 8;
    chess_cmd->add_option("--input", chess_input, "labeling JSON file (d = 1, values in 1..n)");
    chess_cmd->add_option("--random", chess_seed, "generate a random coloring from this seed");
    chess_cmd->add_option("--n", chess_n, "dimension for --random")->check(CLI::Range(1, 6));
    chess_cmd->add_option("--k", chess_k, "subdivisions for --random")->check(CLI::Range(1, 64));
    chess_cmd->add_option("--svg", chess_svg, "write an SVG rendering (n = 2)");
    chess_cmd->add_option("--ppm", chess_ppm, "write PPM layer files with this prefix (n = 3)");

    auto* solve_cmd = app.add_subcommand("solve-discrete", "value-set crossing for a labeling");
    std::string solve_input, solve_svg;
    int solve_m = 0;
    bool solve_shrink = false;
    solve_cmd->add_option("--input", solve_input, "labeling JSON file (d = n-1)")->required();
    solve_cmd->add_option("--m", solve_m, "intersection-dimension parameter")->check(CLI::Range(0, 15));
    solve_cmd->add_flag("--shrink", solve_shrink, "shrink P to a 1-connected hull of the used values");
    solve_cmd->add_option("--svg", solve_svg, "write an SVG rendering (n = 2)");

    auto* level_cmd = app.add_subcommand("levelset", "approximate level-set crossing witness");
    std::string level_fn = "linear", level_spec, level_svg;
    double level_eps = 0.1;
    int level_steps = 1;
    level_cmd->add_option("--fn", level_fn, "builtin function: proj, proj3, linear, quad, sine");
    level_cmd->add_option("--spec", level_spec, "piecewise-polynomial spec JSON file");
    level_cmd->add_option("--epsilon", level_eps, "target level tolerance")->check(CLI::PositiveNumber);
    level_cmd->add_option("--steps", level_steps, "epsilon halvings to run")->check(CLI::Range(1, 16));
    level_cmd->add_option("--svg", level_svg, "write an SVG overlay of grid and band (n = 2)");

    auto* const_cmd = app.add_subcommand("constants", "small-scale minimal-constant experiments");
    std::int64_t const_k = 2, const_radius = 2;
    int const_m = 1;
    std::uint64_t const_budget = 2'000'000'000ULL;
    bool const_prop53 = false;
    const_cmd->add_option("--k", const_k, "grid subdivisions")->check(CLI::Range(1, 8));
    const_cmd->add_option("--m", const_m, "condition parameter (0 or 1)")->check(CLI::Range(0, 1));
    const_cmd->add_option("--radius", const_radius, "value range half-width")->check(CLI::Range(0, 16));
    const_cmd->add_option("--budget", const_budget, "enumeration state budget");
    const_cmd->add_flag("--prop53", const_prop53, "run the 7^3 two-value-minimum construction");

    auto* verify_cmd = app.add_subcommand("verify", "run the module invariant suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (color_cmd->parsed()) return run_color(color_n, color_m, color_box);
        if (chess_cmd->parsed()) {
            const bool random_given = chess_cmd->count("--random") > 0;
            if (chess_input.empty() && !random_given) {
                throw InvalidInputError("chessboard: provide --input or --random");
            }
            return run_chessboard(chess_input, chess_seed, random_given, chess_n, chess_k,
                                  chess_svg, chess_ppm);
        }
        if (solve_cmd->parsed()) {
            return run_solve_discrete(solve_input, solve_m, solve_shrink, solve_svg);
        }
        if (level_cmd->parsed()) {
            return run_levelset(level_fn, level_spec, level_eps, level_steps, level_svg);
        }
        if (const_cmd->parsed()) {
            return run_constants(const_k, const_m, const_radius, const_budget, const_prop53);
        }
        if (verify_cmd->parsed()) return run_invariant_suite(std::cout) ? 0 : 2;
    } catch (const TheoremViolationError& e) {
        std::cerr << "theorem violation (internal bug): " << e.what() << "\n";
        return 2;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InfeasibleEnumerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
