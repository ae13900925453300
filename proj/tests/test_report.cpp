#include <doctest.h>

#include "helpers.hpp"
#include "tauq/report.hpp"

#include <fstream>
#include <sstream>

using namespace tauq;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string render_report(const std::string& name) {
    Analysis an = analyze(tt::load_fixture(name));
    return build_report(an).dump(2) + "\n";
}

} // namespace

TEST_CASE("analysis pipeline on ex2") {
    const auto& an = tt::cached_analysis("ex2");
    CHECK(an.C.size() == 7);
    CHECK(an.R.size() == 5);
    CHECK(an.tilts.size() == 3);
    CHECK(an.air_violations.empty());
    CHECK(an.perms.witnesses.size() == 1);
    auto rep = build_report(an);
    CHECK(rep.contains("algebra"));
    CHECK(rep.contains("catalog"));
    CHECK(rep.contains("tau_tilting"));
    CHECK(rep["algebra"]["name"] == "ex2");
    CHECK(rep["catalog"].size() == 7);
}

TEST_CASE("reports are deterministic") {
    for (const char* name : {"ex1", "ex2", "ex3", "ex6", "ex7a", "ex7b"})
        CHECK(render_report(name) == render_report(name));
}

TEST_CASE("reports match the golden files") {
    for (const char* name : {"ex1", "ex2", "ex3", "ex6", "ex7a", "ex7b", "ex10"}) {
        CAPTURE(name);
        CHECK(render_report(name) == read_file(std::string(GOLDEN_DIR) + "/" + name + ".json"));
    }
}

TEST_CASE("AR quiver dot output") {
    const auto& an = tt::cached_analysis("ex1");
    auto irr = irreducible_dims(an.C);
    // the six indecomposables sit on one cycle of irreducible maps
    int edges = 0;
    for (int i = 0; i < an.C.size(); ++i) {
        int out_deg = 0;
        for (int j = 0; j < an.C.size(); ++j) {
            edges += irr[i][j];
            out_deg += irr[i][j];
        }
        CHECK(out_deg == 1);
    }
    CHECK(edges == 6);
    auto dot = ar_quiver_dot(an.C, irr);
    CHECK(dot.rfind("digraph", 0) == 0);
    for (const auto& label : an.C.labels)
        CHECK(dot.find(label) != std::string::npos);
}
