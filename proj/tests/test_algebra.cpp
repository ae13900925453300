#include <doctest.h>

#include "helpers.hpp"
#include "tauq/algebra.hpp"

using namespace tauq;

TEST_CASE("fixture path-basis dimensions") {
    CHECK(tt::load_fixture("ex1").dim() == 6);
    CHECK(tt::load_fixture("ex2").dim() == 6);
    CHECK(tt::load_fixture("ex3").dim() == 6);
    CHECK(tt::load_fixture("ex6").dim() == 5); // n = 3: e1 e2 a b bb
    CHECK(tt::load_fixture("ex7a").dim() == 7);
    CHECK(tt::load_fixture("ex7b").dim() == 7);
    CHECK(tt::load_fixture("ex10").dim() == 42); // 6 vertices, paths of length <= 6
}

TEST_CASE("basis ordering: trivial paths by vertex, then length, then arrows") {
    auto A = tt::load_fixture("ex1");
    REQUIRE(A.dim() == 6);
    for (int v = 0; v < 3; ++v) {
        CHECK(A.basis[v].length() == 0);
        CHECK(A.basis[v].at == v);
    }
    for (int k = 0; k < 3; ++k) {
        CHECK(A.basis[3 + k].length() == 1);
        CHECK(A.basis[3 + k].arrows[0] == k);
        CHECK(A.basis_index({k}, -1) == 3 + k);
    }
    CHECK(A.basis_index({}, 2) == 2);
    CHECK(A.basis_index({0, 1}, -1) == -1); // ab is a relation
    CHECK(A.hits_relation({0, 1}));
    CHECK(!A.hits_relation({0}));
    CHECK(A.path_source(A.basis[3]) == 0);
    CHECK(A.path_target(A.basis[3]) == 1);
}

TEST_CASE("parameter overrides resize the loop fixture") {
    for (long n = 2; n <= 6; ++n) {
        auto A = tt::load_fixture("ex6", {{"n", n}});
        CHECK(A.dim() == n + 2);
        CHECK(A.params.at("n") == n);
    }
    CHECK(tt::load_fixture("ex6").params.at("n") == 3); // file default
}

TEST_CASE("parse errors carry position") {
    try {
        parse_algebra_file(tt::testdata_path("bad_syntax"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).rfind("line 4:", 0) == 0);
    }
    CHECK_THROWS_AS(parse_algebra_file(tt::testdata_path("bad_unknown_arrow")), ParseError);
    CHECK_THROWS_WITH_AS(parse_algebra_file("no_such_file.alg"),
                         "cannot open no_such_file.alg", std::runtime_error);
}

TEST_CASE("free loops are rejected as non-admissible") {
    CHECK_THROWS_AS(parse_algebra_file(tt::testdata_path("not_admissible")), NotAdmissibleError);
}

TEST_CASE("opposite algebra") {
    auto A = tt::load_fixture("ex7a");
    auto B = tt::load_fixture("ex7b");
    CHECK(presentations_isomorphic(opposite(A), B));
    CHECK(presentations_isomorphic(opposite(B), A));
    auto E1 = tt::load_fixture("ex1");
    CHECK(presentations_isomorphic(opposite(opposite(E1)), E1));
    CHECK(!presentations_isomorphic(E1, tt::load_fixture("ex2")));
    // arrow direction actually flips
    auto Aop = opposite(A);
    int p = Aop.quiver.arrow_index("p");
    REQUIRE(p >= 0);
    CHECK(Aop.quiver.arrows[p].src == A.quiver.arrows[A.quiver.arrow_index("p")].tgt);
    CHECK(Aop.dim() == A.dim());
}

TEST_CASE("special biserial check") {
    for (const char* name : {"ex1", "ex2", "ex3", "ex6", "ex7a", "ex7b", "ex10"})
        CHECK(is_special_biserial(tt::load_fixture(name)));
    auto tri = parse_algebra_file(tt::testdata_path("not_biserial"));
    CHECK(!is_special_biserial(tri));
}

TEST_CASE("quiver name lookups") {
    auto A = tt::load_fixture("ex2");
    CHECK(A.name == "ex2");
    CHECK(A.quiver.vertex_index("3") == 2);
    CHECK(A.quiver.vertex_index("7") == -1);
    CHECK(A.quiver.arrow_index("c") == 2);
    CHECK(A.quiver.arrow_index("z") == -1);
}

TEST_CASE("manual construction plus finalize") {
    MonomialAlgebra A;
    A.name = "line";
    A.quiver.vertices = {"x", "y"};
    A.quiver.arrows = {{"a", 0, 1}};
    finalize_algebra(A);
    CHECK(A.dim() == 3); // ex, ey, a
    CHECK(A.basis_index({0}, -1) == 2);
}
