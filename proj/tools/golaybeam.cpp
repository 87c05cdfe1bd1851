// SPDX-License-Identifier: Apache-2.0
//
// golaybeam command-line tool.
//
// Subcommands:
//   construct  build a Golay array pair from cataloged 1D seeds
//   verify     check an array-pair file for complementarity
//   sweep      evaluate array factor / pattern maps over an angle grid
//   search     exhaustive enumeration of small Golay sequence pairs
//   info       catalog contents and scenario defaults
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 resource limit.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "golaybeam/golaybeam.hpp"

namespace gb = golaybeam;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;

gb::Alphabet parse_alphabet(const std::string &s) { return gb::alphabet_from_name(s); }

int run_construct(std::size_t l1, std::size_t l2, const std::string &alphabet,
                  const std::string &alphabet2, const std::string &layout,
                  const std::string &out_path) {
    const auto a1 = parse_alphabet(alphabet);
    const auto a2 = alphabet2.empty() ? a1 : parse_alphabet(alphabet2);
    const auto [u1, w1] = gb::known_golay_pair(l1, a1);
    const auto [u2, w2] = gb::known_golay_pair(l2, a2);
    const auto [U, W] = layout == "stacked" ? gb::construct_stacked(u1, w1, u2, w2)
                                            : gb::construct_concat(u1, w1, u2, w2);
    const auto chk = gb::is_golay_array_pair(U, W, 1e-12);
    if (!out_path.empty())
        gb::save_json_file(out_path, gb::array_pair_to_json(U, W));
    std::printf("dims: %zux%zu\n", U.rows(), U.cols());
    std::printf("max deviation: %.3e\n", chk.max_deviation);
    std::printf("verdict: %s\n", chk.complementary ? "PASS" : "FAIL");
    return chk.complementary ? kExitOk : kExitVerificationFailure;
}

int run_verify(const std::string &pair_path, double tol) {
    const auto [U, W] = gb::array_pair_from_json(gb::load_json_file(pair_path));
    const auto chk = gb::is_golay_array_pair(U, W, tol);
    std::printf("dims: %zux%zu\n", U.rows(), U.cols());
    std::printf("max |R_U + R_W| deviation: %.6e (tol %.3e)\n", chk.max_deviation, tol);
    std::printf("verdict: %s\n", chk.complementary ? "PASS" : "FAIL");
    return chk.complementary ? kExitOk : kExitVerificationFailure;
}

gb::Quantity parse_quantity(const std::string &s) {
    if (s == "total_af") return gb::Quantity::total_af;
    if (s == "af_h") return gb::Quantity::af_h;
    if (s == "af_v") return gb::Quantity::af_v;
    if (s == "total_pattern") return gb::Quantity::total_pattern;
    throw gb::invalid_input("unknown quantity: " + s);
}

gb::AngleGrid parse_grid(const std::string &spec) {
    // az0,az1,naz,el0,el1,nel in degrees
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 6)
        throw gb::invalid_input("grid spec must be az0,az1,naz,el0,el1,nel (degrees)");
    try {
        return gb::make_grid(gb::rad_from_deg(std::stod(parts[0])),
                             gb::rad_from_deg(std::stod(parts[1])), std::stoul(parts[2]),
                             gb::rad_from_deg(std::stod(parts[3])),
                             gb::rad_from_deg(std::stod(parts[4])), std::stoul(parts[5]));
    } catch (const std::logic_error &) {
        throw gb::invalid_input("grid spec must contain numbers: " + spec);
    }
}

int run_sweep(const std::string &scenario_path, const std::string &quantity,
              const std::string &grid_spec, const std::string &csv_path,
              const std::string &json_path, const std::string &png_path,
              const std::string &svg_path) {
    gb::Scenario scenario = [&] {
        if (scenario_path.empty())
            return gb::Scenario(gb::reference_config());
        const auto base = std::filesystem::path(scenario_path).parent_path().string();
        return gb::scenario_from_json(gb::load_json_file(scenario_path),
                                      base.empty() ? "." : base);
    }();
    const auto q = parse_quantity(quantity);
    const auto grid = grid_spec.empty()
                          ? gb::make_grid(gb::rad_from_deg(-60), gb::rad_from_deg(60), 181,
                                          gb::rad_from_deg(-30), gb::rad_from_deg(30), 61)
                          : parse_grid(grid_spec);
    const auto map = gb::sweep(q, scenario.config, scenario.geometry, grid, scenario.aoa,
                               scenario.element_gain);
    const auto map_db = gb::to_db(map);
    if (!csv_path.empty())
        gb::write_text_file(csv_path, gb::pattern_map_to_csv(map_db));
    if (!json_path.empty())
        gb::save_json_file(json_path, gb::pattern_map_to_json(map_db));
    if (!png_path.empty())
        gb::heatmap::write_png(png_path, map_db);
    if (!svg_path.empty())
        gb::heatmap::write_svg(svg_path, map_db);
    const auto stats = gb::ripple_stats(map_db);
    std::printf("quantity: %s (dB)\n", map_db.quantity.c_str());
    std::printf("min: %.6f dB  max: %.6f dB  ripple: %.6e dB\n", stats.min, stats.max,
                stats.max - stats.min);
    return kExitOk;
}

int run_search(std::size_t length, int alphabet_size, const std::string &out_path) {
    const auto pairs = gb::search_golay_pairs(length, alphabet_size);
    if (!out_path.empty()) {
        gb::json arr = gb::json::array();
        for (const auto &[u, w] : pairs)
            arr.push_back(gb::pair_to_json(u, w));
        gb::save_json_file(out_path, arr);
    }
    std::printf("length %zu, alphabet size %d: %zu complementary pairs\n", length, alphabet_size,
                pairs.size());
    return kExitOk;
}

int run_info() {
    std::printf("golaybeam: dual-polarized broad-beam phase configurations from Golay pairs\n\n");
    std::printf("cataloged binary lengths:");
    for (auto l : gb::cataloged_lengths(gb::Alphabet::binary))
        std::printf(" %zu", l);
    std::printf("\ncataloged quaternary lengths:");
    for (auto l : gb::cataloged_lengths(gb::Alphabet::quaternary))
        std::printf(" %zu", l);
    std::printf("\n\nscenario defaults: 16x16 surface, half-wavelength spacing,\n");
    std::printf("AoA (-60 deg, 60 deg), sweep az [-60, 60] x 181, el [-30, 30] x 61.\n");
    std::printf("Flat total array factor level: 10*log10(256) = %.2f dB.\n",
                gb::db_from_linear(256.0));
    std::printf("\nGOLAYBEAM_THREADS caps sweep parallelism.\n");
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Broad-beam reflecting-surface design from Golay complementary pairs"};
    app.require_subcommand(1);

    auto *c_construct = app.add_subcommand("construct", "Build a Golay array pair from seeds");
    std::size_t l1 = 8, l2 = 8;
    std::string alphabet = "binary", alphabet2, layout = "stacked", out_path;
    c_construct->add_option("--l1", l1, "First seed pair length")->required();
    c_construct->add_option("--l2", l2, "Second seed pair length")->required();
    c_construct->add_option("--alphabet", alphabet, "Seed alphabet: binary|quaternary")
        ->check(CLI::IsMember({"binary", "quaternary"}));
    c_construct->add_option("--alphabet2", alphabet2,
                            "Alphabet of the second seed pair (defaults to --alphabet)")
        ->check(CLI::IsMember({"binary", "quaternary"}));
    c_construct->add_option("--layout", layout, "stacked (2*L1 x L2) or concat (L1 x 2*L2)")
        ->check(CLI::IsMember({"stacked", "concat"}));
    c_construct->add_option("--out", out_path, "Output array-pair JSON path");

    auto *c_verify = app.add_subcommand("verify", "Verify an array-pair file");
    std::string pair_path;
    double tol = 1e-9;
    c_verify->add_option("--pair", pair_path, "Array-pair JSON path")->required();
    c_verify->add_option("--tol", tol, "Complementarity tolerance");

    auto *c_sweep = app.add_subcommand("sweep", "Angular sweep of a pattern quantity");
    std::string scenario_path, quantity = "total_af", grid_spec, csv_path, json_path, png_path,
                svg_path;
    c_sweep->add_option("--scenario", scenario_path, "Scenario JSON (defaults: reference setup)");
    c_sweep->add_option("--quantity", quantity, "total_af|af_h|af_v|total_pattern")
        ->check(CLI::IsMember({"total_af", "af_h", "af_v", "total_pattern"}));
    c_sweep->add_option("--grid", grid_spec, "az0,az1,naz,el0,el1,nel in degrees");
    c_sweep->add_option("--csv", csv_path, "CSV output path");
    c_sweep->add_option("--json", json_path, "JSON output path");
    c_sweep->add_option("--png", png_path, "PNG heatmap output path");
    c_sweep->add_option("--svg", svg_path, "SVG heatmap output path");

    auto *c_search = app.add_subcommand("search", "Exhaustive Golay pair enumeration");
    std::size_t s_length = 2;
    int s_alpha = 2;
    std::string s_out;
    c_search->add_option("--length", s_length, "Sequence length")->required();
    c_search->add_option("--alphabet-size", s_alpha, "2 (binary) or 4 (quaternary)")
        ->check(CLI::IsMember({2, 4}));
    c_search->add_option("--out", s_out, "Output pair-list JSON path");

    auto *c_info = app.add_subcommand("info", "Catalog and defaults");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (c_construct->parsed())
            return run_construct(l1, l2, alphabet, alphabet2, layout, out_path);
        if (c_verify->parsed())
            return run_verify(pair_path, tol);
        if (c_sweep->parsed())
            return run_sweep(scenario_path, quantity, grid_spec, csv_path, json_path, png_path,
                             svg_path);
        if (c_search->parsed())
            return run_search(s_length, s_alpha, s_out);
        if (c_info->parsed())
            return run_info();
    } catch (const gb::resource_limit &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitResourceLimit;
    } catch (const gb::verification_failure &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerificationFailure;
    } catch (const gb::invalid_input &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    }
    return kExitOk;
}
