#include <doctest.h>

#include <random>

#include "wellpath/bijections.hpp"
#include "wellpath/counting.hpp"
#include "wellpath/json_io.hpp"

using namespace wellpath;
using T = LabelledBinaryTree;

TEST_CASE("wire formats are byte-stable") {
    const auto p = validate_path({0, -1}, {2, 1, 3});
    CHECK(path_to_json(p).dump() == R"({"steps":[0,-1],"labels":[2,1,3]})");
    // canonical order puts the subtree containing label 1 first
    const T t = T::internal(T::leaf(2), T::internal(T::leaf(1), T::leaf(3)));
    CHECK(tree_to_json(t).dump() == R"([[1,3],2])");
    CHECK(marked_tree_to_json({t, {0, 1}}).dump() == R"({"tree":[[1,3],2],"mark":[0,1]})");
    CHECK(matching_to_json(validate_matching({{2, 4}, {1, 3}})).dump() ==
          R"({"pairs":[[1,3],[2,4]]})");
}

TEST_CASE("parse then serialize reproduces the input byte-for-byte") {
    for (int n = 1; n <= 5; ++n) {
        for_each_positive(n, [&](const WellLabelledPath& p) {
            const std::string s = path_to_json(p).dump();
            CHECK(path_to_json(path_from_json(Json::parse(s))).dump() == s);
        });
        for (const auto& mt : enumerate_marked_trees(n)) {
            const std::string s = marked_tree_to_json(mt).dump();
            CHECK(marked_tree_to_json(marked_tree_from_json(Json::parse(s))).dump() == s);
        }
        for (const auto& m : enumerate_matchings(n)) {
            const std::string s = matching_to_json(m).dump();
            CHECK(matching_to_json(matching_from_json(Json::parse(s))).dump() == s);
        }
    }
}

TEST_CASE("tree parsing canonicalizes child order") {
    CHECK(tree_from_json(Json::parse("[2,1]")) == T::internal(T::leaf(1), T::leaf(2)));
    CHECK(tree_to_json(tree_from_json(Json::parse("[[2,3],1]"))).dump() == "[1,[2,3]]");
}

TEST_CASE("parsing rejects invalid objects") {
    CHECK_THROWS_AS(path_from_json(Json::parse(R"({"steps":[1],"labels":[1,2]})")), PathError);
    CHECK_THROWS_AS(matching_from_json(Json::parse(R"({"pairs":[[1,1]]})")), MatchingError);
    CHECK_THROWS_AS(marked_tree_from_json(Json::parse(R"({"tree":1,"mark":[0]})")), TreeError);
    CHECK_THROWS_AS(tree_from_json(Json::parse("[1,2,3]")), TreeError);
}
