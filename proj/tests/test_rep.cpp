#include <doctest.h>

#include "helpers.hpp"
#include "tauq/rep.hpp"

using namespace tauq;

TEST_CASE("projective, injective and simple shapes on ex2") {
    auto A = tt::load_fixture("ex2");
    auto P1 = projective_rep(A, 0), P2 = projective_rep(A, 1), P3 = projective_rep(A, 2);
    CHECK(dim_vector(P1) == std::vector<int>{1, 1, 0});
    CHECK(dim_vector(P2) == std::vector<int>{0, 1, 1});
    CHECK(dim_vector(P3) == std::vector<int>{0, 0, 2});
    CHECK(loewy_label(A, P1) == "1/2");
    CHECK(loewy_label(A, P2) == "2/3");
    CHECK(loewy_label(A, P3) == "3/3");

    auto I1 = injective_rep(A, 0), I2 = injective_rep(A, 1), I3 = injective_rep(A, 2);
    CHECK(dim_vector(I1) == std::vector<int>{1, 0, 0});
    CHECK(dim_vector(I2) == std::vector<int>{1, 1, 0});
    CHECK(dim_vector(I3) == std::vector<int>{0, 1, 2});
    CHECK(loewy_label(A, I3) == "23/3");

    auto S2 = simple_rep(A, 1);
    CHECK(S2.total_dim() == 1);
    CHECK(loewy_label(A, S2) == "2");
    CHECK(loewy_label(A, zero_rep(A)) == "0");

    for (const Representation* M : {&P1, &P2, &P3, &I1, &I2, &I3, &S2})
        CHECK_NOTHROW(check_representation(A, *M));
}

TEST_CASE("corrupted actions are rejected") {
    auto A = tt::load_fixture("ex2");
    auto P1 = projective_rep(A, 0);
    SUBCASE("wrong shape") {
        P1.act[0] = Matrix(3, 3);
        CHECK_THROWS_AS(check_representation(A, P1), std::logic_error);
    }
    SUBCASE("relation acts nonzero") {
        // make both a and b act as identity 1x1; then ab acts nonzero
        Representation M;
        M.dims = {1, 1, 1};
        M.act = {Matrix::identity(1), Matrix::identity(1), Matrix(1, 1)};
        CHECK_THROWS_AS(check_representation(A, M), std::logic_error);
    }
}

TEST_CASE("path action multiplies along the path") {
    auto A = tt::load_fixture("ex2");
    auto P1 = projective_rep(A, 0);
    Matrix act_a = path_action(A, P1, {0}, -1);
    CHECK(act_a.rows == 1);
    CHECK(act_a.cols == 1);
    CHECK(!act_a.is_zero());
    // relations act as zero on every representation
    CHECK(path_action(A, P1, {0, 1}, -1).is_zero());
    // trivial path at v acts as the identity on the v component
    Matrix e1 = path_action(A, P1, {}, 0);
    CHECK(e1 == Matrix::identity(1));
}

TEST_CASE("radical and sincerity") {
    auto A = tt::load_fixture("ex2");
    auto P1 = projective_rep(A, 0), P3 = projective_rep(A, 2);
    CHECK(radical_dims(A, P1) == std::vector<int>{0, 1, 0});
    CHECK(radical_dims(A, P3) == std::vector<int>{0, 0, 1});
    CHECK(!is_sincere(P1));
    auto sum = direct_sum(A, {&P1, &P3});
    CHECK(is_sincere(sum));
    CHECK(sum.total_dim() == 4);
}

TEST_CASE("annihilators on the three-cycle") {
    auto A = tt::load_fixture("ex1");
    auto P1 = projective_rep(A, 0), P2 = projective_rep(A, 1), P3 = projective_rep(A, 2);
    auto whole = direct_sum(A, {&P1, &P2, &P3});
    CHECK(annihilator_dim(A, whole) == 0);
    CHECK(is_faithful(A, whole));

    auto S1 = simple_rep(A, 0);
    CHECK(annihilator_dim(A, S1) == 5); // e2, e3 and all three arrows
    CHECK(!is_faithful(A, S1));

    // S1 + P1 + P3 kills exactly the arrow b
    auto Z = direct_sum(A, {&S1, &P1, &P3});
    CHECK(annihilator_dim(A, Z) == 1);
    Matrix ann = annihilator_basis(A, Z);
    REQUIRE(ann.cols == 1);
    REQUIRE(ann.rows == A.dim());
    int b_idx = A.basis_index({A.quiver.arrow_index("b")}, -1);
    for (int r = 0; r < ann.rows; ++r)
        CHECK(ann.at(r, 0).is_zero() == (r != b_idx));
}

TEST_CASE("direct sum acts blockwise") {
    auto A = tt::load_fixture("ex3");
    auto P1 = projective_rep(A, 0);
    auto S2 = simple_rep(A, 1);
    auto M = direct_sum(A, {&P1, &S2});
    CHECK(dim_vector(M) == std::vector<int>{2, 2, 0});
    CHECK_NOTHROW(check_representation(A, M));
    CHECK(loewy_label(A, P1) == "1/12");
}
