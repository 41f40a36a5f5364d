#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "wigner/census.hpp"
#include "wigner/dwf.hpp"
#include "wigner/finite_field.hpp"
#include "wigner/phase_space.hpp"
#include "wigner/qrac.hpp"
#include "wigner/report_io.hpp"

using namespace wigner;
using nlohmann::json;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

struct FileGuard {
    std::string path;
    ~FileGuard() { std::remove(path.c_str()); }
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

}  // namespace

TEST_SUITE("report_io") {

TEST_CASE("round_to") {
    CHECK(round_to(1.234567, 3) == doctest::Approx(1.235).epsilon(1e-12));
    CHECK(round_to(-1.5, 0) == -2.0);
    CHECK(round_to(0.1239, 2) == doctest::Approx(0.12).epsilon(1e-12));
    CHECK(round_to(3.14159, 15) == doctest::Approx(3.14159).epsilon(1e-15));

    // tiny negatives do not leak a minus sign
    const double z = round_to(-1e-9, 5);
    CHECK(z == 0.0);
    CHECK_FALSE(std::signbit(z));

    CHECK_THROWS_AS(round_to(1.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(round_to(1.0, 16), std::invalid_argument);
}

TEST_CASE("text file round trip") {
    FileGuard guard{temp_path("wigner_io_roundtrip.txt")};
    write_text_file(guard.path, "alpha\nbeta\n");
    CHECK(read_text_file(guard.path) == "alpha\nbeta\n");
    CHECK_THROWS_AS(read_text_file(temp_path("wigner_io_missing.txt")), std::runtime_error);
}

TEST_CASE("MUB save/load round trip") {
    const MubSet original = default_mub(3);
    FileGuard guard{temp_path("wigner_io_mub3.json")};
    save_mub(original, guard.path);

    const MubSet loaded = load_mub(guard.path);
    CHECK(loaded.dim == 3);
    CHECK(loaded.source == "file");
    REQUIRE(loaded.basis_count() == 4);
    for (int b = 0; b < 4; ++b)
        for (int k = 0; k < 3; ++k)
            CHECK((loaded.vector(b, k) - original.vector(b, k)).norm() == 0.0);
    CHECK(verify_mub(loaded).pass(1e-10));

    // saving the loaded set reproduces the same component data
    FileGuard guard2{temp_path("wigner_io_mub3b.json")};
    save_mub(loaded, guard2.path);
    const json a = json::parse(read_text_file(guard.path));
    const json b = json::parse(read_text_file(guard2.path));
    CHECK(a["bases"] == b["bases"]);
}

TEST_CASE("MUB load rejects bad files") {
    FileGuard guard{temp_path("wigner_io_mub_bad.json")};

    write_text_file(guard.path, "not json at all");
    CHECK_THROWS(load_mub(guard.path));

    write_text_file(guard.path, R"({"dimension": 2})");
    CHECK_THROWS_AS(load_mub(guard.path), std::invalid_argument);

    // perturb one component: parses fine, fails verification
    json j = mub_to_json(default_mub(2));
    j["bases"][1][0][0][0] = j["bases"][1][0][0][0].get<double>() + 1e-3;
    write_text_file(guard.path, j.dump());
    CHECK_THROWS_WITH_AS(load_mub(guard.path), doctest::Contains("verification failed"),
                         std::invalid_argument);

    // wrong vector count
    j = mub_to_json(default_mub(2));
    j["bases"][0].erase(1);
    write_text_file(guard.path, j.dump());
    CHECK_THROWS_AS(load_mub(guard.path), std::invalid_argument);
}

TEST_CASE("state files") {
    // pure state, normalized on load
    json j;
    j["vector"] = {{3.0, 0.0}, {4.0, 0.0}};
    const DensityMatrix pure = state_from_json(j);
    CHECK(pure.dim() == 2);
    CHECK(std::abs(pure.matrix()(0, 0).real() - 0.36) < 1e-12);

    // explicit density matrix
    json jd;
    jd["density"] = {{{0.5, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {0.5, 0.0}}};
    const DensityMatrix mixed = state_from_json(jd);
    CHECK((mixed.matrix() - CMat::Identity(2, 2) / 2.0).norm() < 1e-12);

    jd["density"] = {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}};  // trace 2
    CHECK_THROWS_AS(state_from_json(jd), std::invalid_argument);

    json empty;
    empty["label"] = "nothing useful";
    CHECK_THROWS_WITH_AS(state_from_json(empty), doctest::Contains("'vector' or 'density'"),
                         std::invalid_argument);

    json ragged;
    ragged["density"] = {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}}};
    CHECK_THROWS_AS(state_from_json(ragged), std::invalid_argument);

    FileGuard guard{temp_path("wigner_io_state.json")};
    write_text_file(guard.path, j.dump());
    CHECK(load_state(guard.path).dim() == 2);
}

TEST_CASE("geometry json") {
    const PhaseSpace ps = PhaseSpace::build(field_of_order(4));
    const json j = geometry_to_json(ps, verify_axioms(ps));
    CHECK(j["dim"] == 4);
    CHECK(j["p"] == 2);
    CHECK(j["n"] == 2);
    CHECK(j["point_count"] == 16);
    CHECK(j["line_count"] == 20);
    CHECK(j["striation_count"] == 5);
    CHECK(j["axioms"]["all_pass"] == true);
    CHECK(j["modulus"].is_string());
    CHECK_FALSE(j["modulus"].get<std::string>().empty());
}

TEST_CASE("census json") {
    const CensusReport rep = census(default_mub(3));
    const json j = census_to_json(rep);
    CHECK(j["dim"] == 3);
    CHECK(j["class_count"] == 2);
    CHECK(j["total_operators"] == 81);
    CHECK(j["mub_source"] == "ivanovic");
    REQUIRE(j["classes"].size() == 2);
    CHECK(j["classes"][0]["count"] == 72);
    CHECK(j["classes"][1]["count"] == 9);
    CHECK(std::abs(j["lambda_min"].get<double>() + 1.0) < 1e-9);
    CHECK(j["spot_checks"]["count"].get<std::uint64_t>() > 0);

    // representatives decode to valid selectors
    for (const json& cls : j["classes"]) {
        REQUIRE(cls["representative"].is_array());
        CHECK(cls["representative"].size() == 4);
    }

    // spectra honour the rounding request
    const json j2 = census_to_json(rep, 2);
    for (const json& cls : j2["classes"])
        for (const json& v : cls["spectrum"]) {
            const double scaled = v.get<double>() * 100.0;
            CHECK(std::abs(scaled - std::round(scaled)) < 1e-9);
        }
}

TEST_CASE("census csv") {
    const CensusReport rep = census(default_mub(3));
    const auto lines = split_lines(census_to_csv(rep));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0].rfind("# ", 0) == 0);
    CHECK(lines[1].rfind("# dim=3 mub_source=ivanovic total_operators=81", 0) == 0);
    CHECK(lines[2] == "spectrum,count,representative");
    CHECK(lines[3].find(",72,") != std::string::npos);
    CHECK(lines[4].find(",9,") != std::string::npos);
    // three eigenvalues joined by semicolons
    CHECK(std::count(lines[3].begin(), lines[3].end(), ';') >= 2);
}

TEST_CASE("extrema json") {
    const ExtremaReport rep = extremal_eigenvalues(default_mub(2));
    const json j = extrema_to_json(rep);
    CHECK(j["dim"] == 2);
    CHECK(j["lambda_max"].get<double>() == rep.lambda_max);
    CHECK(j["w_max"].get<double>() == rep.lambda_max / 2.0);
    CHECK(j["w_min"].get<double>() == rep.lambda_min / 2.0);
    CHECK(j["argmin"].is_array());
    CHECK(j["argmin"].size() == 3);
    CHECK(j["argmax"].size() == 3);
    CHECK(j["total_operators"] == 8);
}

TEST_CASE("qrac json uses null for absent figures") {
    QracReport rate;
    rate.d = 2;
    rate.p_q_exact = 0.789;
    const json j = qrac_to_json(rate);
    CHECK(j["p_q_exact"].get<double>() == 0.789);
    CHECK(j["p_q_empirical"].is_null());

    QracReport sim;
    sim.d = 2;
    sim.p_q_empirical = 0.79;
    sim.trials = 1000;
    sim.seed = 7;
    const json js = qrac_to_json(sim);
    CHECK(js["p_q_exact"].is_null());
    CHECK(js["p_q_empirical"].get<double>() == 0.79);
    CHECK(js["trials"] == 1000);
    CHECK(js["seed"] == 7);
}

TEST_CASE("dwf map serializations") {
    const int d = 3;
    const DwfMap w = evaluate(DensityMatrix::maximally_mixed(d), default_mub(d),
                              PhaseSpace::build(field_of_order(d)), QuantumNet::canonical(d));

    const auto lines = split_lines(dwf_map_to_csv(w));
    REQUIRE(lines.size() == 3);
    for (const auto& line : lines) {
        CHECK(std::count(line.begin(), line.end(), ',') == 2);
        CHECK(line.find("0.111111") != std::string::npos);
    }

    const json j = dwf_map_to_json(w);
    CHECK(j["dim"] == 3);
    REQUIRE(j["values"].size() == 9);
    CHECK(std::abs(j["sum"].get<double>() - 1.0) < 1e-12);
    CHECK(std::abs(j["min"].get<double>() - 1.0 / 9.0) < 1e-12);
    CHECK(std::abs(j["max"].get<double>() - 1.0 / 9.0) < 1e-12);
}

}  // TEST_SUITE
