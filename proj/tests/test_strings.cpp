#include <doctest.h>

#include "helpers.hpp"
#include "tauq/strings.hpp"

#include <set>

using namespace tauq;

TEST_CASE("string counts per fixture") {
    CHECK(enumerate_strings(tt::load_fixture("ex1")).size() == 6);
    CHECK(enumerate_strings(tt::load_fixture("ex2")).size() == 7);
    CHECK(enumerate_strings(tt::load_fixture("ex3")).size() == 7);
    for (long n = 2; n <= 5; ++n)
        CHECK(enumerate_strings(tt::load_fixture("ex6", {{"n", n}})).size() == size_t(2 * n + 1));
    CHECK(enumerate_strings(tt::load_fixture("ex7a")).size() == 13);
    CHECK(enumerate_strings(tt::load_fixture("ex7b")).size() == 13);
    CHECK(enumerate_strings(tt::load_fixture("ex10")).size() == 42);
}

TEST_CASE("enumeration is canonical, valid, sorted, duplicate-free") {
    auto A = tt::load_fixture("ex7a");
    auto words = enumerate_strings(A);
    std::set<StringWord> seen;
    const StringWord* prev = nullptr;
    for (const auto& w : words) {
        CHECK(is_valid_string(A, w));
        CHECK(canonical_word(A.quiver, w) == w);
        if (prev) CHECK(*prev < w);
        prev = &w;
        seen.insert(w);
    }
    CHECK(seen.size() == words.size());
    // trivial words first, one per vertex
    for (int v = 0; v < A.n(); ++v) {
        CHECK(words[v].length() == 0);
        CHECK(words[v].base_vertex == v);
    }
}

TEST_CASE("inverse words") {
    auto A = tt::load_fixture("ex10");
    for (const auto& w : enumerate_strings(A)) {
        auto inv = inverse_word(A.quiver, w);
        CHECK(is_valid_string(A, inv));
        CHECK(inverse_word(A.quiver, inv) == w);
        CHECK(canonical_word(A.quiver, inv) == w);
        CHECK(word_source(A.quiver, inv) == word_target(A.quiver, w));
        CHECK(word_target(A.quiver, inv) == word_source(A.quiver, w));
    }
}

TEST_CASE("validity rules") {
    auto A = tt::load_fixture("ex2"); // a: 1->2, b: 2->3, c: loop at 3, rel ab bc cc
    int a = 0, b = 1;
    StringWord w;
    w.letters = {{a, false}, {b, false}}; // direct run hits the relation ab
    CHECK(!is_valid_string(A, w));
    w.letters = {{b, false}, {b, true}}; // letter followed by its own inverse
    CHECK(!is_valid_string(A, w));
    w.letters = {{b, false}};
    CHECK(is_valid_string(A, w));
    // b then c^-1 walks 2 -> 3 <- 3; both maximal direct runs are single letters
    w.letters = {{b, false}, {2, true}};
    CHECK(is_valid_string(A, w));
    CHECK(word_to_string(A.quiver, w) == "b c-");
    StringWord triv;
    triv.base_vertex = 0;
    CHECK(word_to_string(A.quiver, triv) == "@1");
}

TEST_CASE("string modules have one basis vector per walk vertex") {
    auto A = tt::load_fixture("ex3");
    for (const auto& w : enumerate_strings(A)) {
        auto M = string_module(A, w);
        CHECK(M.total_dim() == w.length() + 1);
        CHECK_NOTHROW(check_representation(A, M));
    }
    // the trivial word at v is the simple at v
    StringWord triv;
    triv.base_vertex = 2;
    CHECK(dim_vector(string_module(A, triv)) == dim_vector(simple_rep(A, 2)));
}

TEST_CASE("bands abort enumeration") {
    auto K = parse_algebra_file(tt::testdata_path("kronecker"));
    CHECK_THROWS_AS(enumerate_strings(K), BandDetectedError);
}

TEST_CASE("caps abort enumeration") {
    auto A = tt::load_fixture("ex10");
    StringCaps tight_len;
    tight_len.max_length = 2;
    CHECK_THROWS_AS(enumerate_strings(A, tight_len), CapExceededError);
    StringCaps tight_count;
    tight_count.max_modules = 5;
    CHECK_THROWS_AS(enumerate_strings(A, tight_count), CapExceededError);
}
