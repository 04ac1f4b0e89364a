#include <doctest.h>

#include "schubertkit/json_io.hpp"
#include "test_util.hpp"

using namespace schubertkit;
using schubertkit::testing::perm;

TEST_CASE("permutation json carries the window") {
    Permutation w = perm({1, -1, 0}, -1);
    CHECK(permutation_from_json(to_json(w)) == w);
    CHECK(to_json(w).find("\"window_lo\":-1") != std::string::npos);
    CHECK(permutation_from_json("[2,1,4,3]") == perm({2, 1, 4, 3}));
    CHECK(permutation_from_json(to_json(Permutation::identity())) == Permutation::identity());
}

TEST_CASE("word json") {
    Word w{2, 1, 0, -1};
    CHECK(word_from_json(to_json(w)) == w);
}

TEST_CASE("poly json lists terms") {
    MultiPoly f = MultiPoly::variable(1) + MultiPoly::beta() * MultiPoly::variable(2, 2) * 3;
    std::string j = to_json(f);
    CHECK(j.find("\"beta\":1") != std::string::npos);
    CHECK(j.find("\"coeff\":3") != std::string::npos);
}
