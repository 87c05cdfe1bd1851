// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line surface: exit codes, file
// round-trips, and byte-stable CSV output across worker counts.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>

#include "golaybeam/io.hpp"

namespace fs = std::filesystem;
using golaybeam::json;

namespace {

const std::string kCli = GOLAYBEAM_CLI_PATH;

int run(const std::string &args) {
    const int status = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("golaybeam_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("construct then verify round trip") {
    TempDir tmp;
    const auto pair = (tmp.path / "pair.json").string();
    CHECK(run("construct --l1 8 --l2 8 --alphabet binary --alphabet2 quaternary "
              "--layout stacked --out " + pair) == 0);
    CHECK(run("verify --pair " + pair + " --tol 1e-12") == 0);

    const auto j = golaybeam::load_json_file(pair);
    CHECK(j["dims"][0] == 16);
    CHECK(j["dims"][1] == 8);
}

TEST_CASE("concat layout dims") {
    TempDir tmp;
    const auto pair = (tmp.path / "pair.json").string();
    CHECK(run("construct --l1 2 --l2 2 --alphabet binary --layout concat --out " + pair) == 0);
    const auto j = golaybeam::load_json_file(pair);
    CHECK(j["dims"][0] == 2);
    CHECK(j["dims"][1] == 4);
}

TEST_CASE("uncataloged seed length exits 2") {
    CHECK(run("construct --l1 3 --l2 2 --alphabet binary") == 2);
}

TEST_CASE("perturbed pair fails verification with exit 1") {
    TempDir tmp;
    const auto pair = (tmp.path / "pair.json").string();
    REQUIRE(run("construct --l1 4 --l2 4 --alphabet binary --out " + pair) == 0);
    auto j = golaybeam::load_json_file(pair);
    j["U_phases"][0][0] = j["U_phases"][0][0].get<double>() + 3.14159 / 7.0;
    golaybeam::save_json_file(pair, j);
    CHECK(run("verify --pair " + pair + " --tol 1e-9") == 1);
}

TEST_CASE("malformed pair file exits 2") {
    TempDir tmp;
    const auto bad = (tmp.path / "bad.json").string();
    golaybeam::write_text_file(bad, "{ not json");
    CHECK(run("verify --pair " + bad) == 2);

    // dims mismatch
    const auto mismatched = (tmp.path / "mismatch.json").string();
    golaybeam::write_text_file(mismatched,
                               R"({"dims":[2,3],"U_phases":[[0,0]],"W_phases":[[0,0]]})");
    CHECK(run("verify --pair " + mismatched) == 2);

    CHECK(run("verify --pair " + (tmp.path / "missing.json").string()) == 2);
}

TEST_CASE("search CLI") {
    TempDir tmp;
    const auto out = (tmp.path / "pairs.json").string();
    CHECK(run("search --length 2 --alphabet-size 2 --out " + out) == 0);
    const auto j = golaybeam::load_json_file(out);
    bool has_classic = false;
    for (const auto &p : j) {
        const auto ph_u = p["u"]["phases"].get<std::vector<double>>();
        const auto ph_w = p["w"]["phases"].get<std::vector<double>>();
        if (ph_u == std::vector<double>{0.0, 0.0} && ph_w.size() == 2 && ph_w[0] == 0.0 &&
            std::abs(ph_w[1] - 3.14159265358979) < 1e-9)
            has_classic = true;
    }
    CHECK(has_classic);

    CHECK(run("search --length 3 --alphabet-size 2") == 0); // empty result is still success
    CHECK(run("search --length 10 --alphabet-size 4") == 3);
}

TEST_CASE("sweep CSV is byte-identical across worker counts") {
    TempDir tmp;
    std::vector<std::string> outputs;
    for (int threads : {1, 2, 8}) {
        const auto csv = (tmp.path / ("sweep_" + std::to_string(threads) + ".csv")).string();
        const std::string cmd = "GOLAYBEAM_THREADS=" + std::to_string(threads) + " " + kCli +
                                " sweep --quantity total_af --grid -60,60,31,-30,30,11 --csv " +
                                csv + " > /dev/null 2>&1";
        REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
        outputs.push_back(slurp(csv));
    }
    REQUIRE(outputs.size() == 3);
    CHECK(outputs[0] == outputs[1]);
    CHECK(outputs[0] == outputs[2]);
    CHECK(outputs[0].starts_with("azimuth_deg,elevation_deg,value\n"));
}

TEST_CASE("sweep emits images and JSON") {
    TempDir tmp;
    const auto png = (tmp.path / "map.png").string();
    const auto svg = (tmp.path / "map.svg").string();
    const auto js = (tmp.path / "map.json").string();
    CHECK(run("sweep --quantity total_pattern --grid -90,90,19,-90,90,19 --png " + png +
              " --svg " + svg + " --json " + js) == 0);
    CHECK(fs::file_size(png) > 8);
    const auto png_bytes = slurp(png);
    CHECK(png_bytes.substr(1, 3) == "PNG");
    CHECK(slurp(svg).starts_with("<svg"));
    const auto j = golaybeam::load_json_file(js);
    CHECK(j["units"] == "dB");
}

TEST_CASE("bad grid spec exits 2") {
    CHECK(run("sweep --grid 1,2,3") == 2);
    CHECK(run("sweep --grid a,b,c,d,e,f") == 2);
}

TEST_CASE("scenario file drives the sweep") {
    TempDir tmp;
    const auto pair = (tmp.path / "pair.json").string();
    REQUIRE(run("construct --l1 8 --l2 8 --alphabet binary --alphabet2 quaternary "
                "--layout stacked --out " + pair) == 0);
    json scenario{{"config", {{"file", "pair.json"}}},
                  {"aoa_deg", {{"azimuth", -60.0}, {"elevation", 60.0}}}};
    const auto sc = (tmp.path / "scenario.json").string();
    golaybeam::save_json_file(sc, scenario);
    const auto csv = (tmp.path / "flat.csv").string();
    REQUIRE(run("sweep --scenario " + sc + " --quantity total_af --grid -60,60,13,-30,30,7 "
                "--csv " + csv) == 0);
    // every row carries the flat 24.08 dB level
    std::istringstream in(slurp(csv));
    std::string line;
    std::getline(in, line); // header
    int rows = 0;
    while (std::getline(in, line)) {
        const auto pos = line.rfind(',');
        const double v = std::stod(line.substr(pos + 1));
        CHECK(v == Catch::Approx(10.0 * std::log10(256.0)).margin(1e-6));
        ++rows;
    }
    CHECK(rows == 13 * 7);
}

TEST_CASE("unknown flags rejected") {
    CHECK(run("verify --pair x.json --frobnicate") == 2);
    CHECK(run("") == 2); // a subcommand is required
}
