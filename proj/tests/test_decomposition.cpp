#include "test_support.hpp"

#include "gallai/decomposition.hpp"
#include "gallai/json_io.hpp"

using namespace gallai;
using gallai_test::from_edges;
using gallai_test::require_contract;

TEST_CASE("validate") {
    SimpleGraph p3 = path_graph(3);
    SECTION("single covering path") {
        PathDecomposition d(p3, {PathSeq({0, 1, 2})});
        CHECK(is_valid(p3, d));
        require_contract(p3, d);
    }
    SECTION("uncovered edge is reported") {
        SimpleGraph c3 = cycle_graph(3);
        PathDecomposition d(c3, {PathSeq({0, 1, 2})});
        auto bad = validate(c3, d);
        REQUIRE(bad.size() == 1);
        CHECK(bad[0].path_index == -1);
        CHECK(bad[0].reason.find("uncovered") != std::string::npos);
    }
    SECTION("two-path cover of the triangle") {
        SimpleGraph c3 = cycle_graph(3);
        PathDecomposition d(c3, {PathSeq({0, 1, 2}), PathSeq({2, 0})});
        CHECK(is_valid(c3, d));
        CHECK(d.endpoint_count(0) == 2);
        CHECK(d.endpoint_count(1) == 0);
        CHECK(d.endpoint_count(2) == 2);
        require_contract(c3, d);
    }
    SECTION("duplicate edge use names the offender") {
        PathDecomposition d(p3, {PathSeq({0, 1}), PathSeq({1, 0}), PathSeq({1, 2})});
        auto bad = validate(p3, d);
        REQUIRE_FALSE(bad.empty());
        CHECK(bad[0].path_index == 1);
    }
    SECTION("repeated vertex rejected") {
        SimpleGraph c4 = cycle_graph(4);
        PathDecomposition d(c4, {PathSeq({0, 1, 2, 3, 0})});
        CHECK_FALSE(is_valid(c4, d));
    }
    SECTION("zero-length path rejected") {
        PathDecomposition d(p3, {PathSeq({0}), PathSeq({0, 1}), PathSeq({1, 2})});
        CHECK_FALSE(is_valid(p3, d));
    }
}

TEST_CASE("endpoint counts") {
    SimpleGraph p3 = path_graph(3);
    PathDecomposition d(p3, {PathSeq({0, 1, 2})});
    CHECK(d.endpoint_count(1) == 0);
    CHECK(d.endpoint_count(0) == 1);
    CHECK_THROWS_AS(d.endpoint_count(9), std::out_of_range);
    SimpleGraph single = from_edges(2, {{0, 1}});
    PathDecomposition d2(single, {PathSeq({0, 1})});
    CHECK(d2.endpoint_count(0) == 1);
}

TEST_CASE("passing neighbors") {
    SimpleGraph p3 = path_graph(3);
    PathDecomposition d(p3, {PathSeq({0, 1, 2})});
    CHECK(passing_neighbors(p3, d, 0) == (VertexMask{1} << 1));
    CHECK(passing_neighbors(p3, d, 1) == 0);
    SimpleGraph c3 = cycle_graph(3);
    PathDecomposition d2(c3, {PathSeq({0, 1, 2}), PathSeq({2, 0})});
    CHECK(passing_neighbors(c3, d2, 0) == (VertexMask{1} << 1));
}

TEST_CASE("gallai status classification") {
    CHECK(gallai_status(5, 2) == GallaiStatus::Gallai);
    CHECK(gallai_status(5, 3) == GallaiStatus::CeilingOnly);
    CHECK(gallai_status(4, 3) == GallaiStatus::Violation);
    CHECK(gallai_status(4, 2) == GallaiStatus::Gallai);
    CHECK(gallai_status(1, 0) == GallaiStatus::Gallai);
    CHECK_THROWS_AS(gallai_status(0, 0), std::invalid_argument);
}

TEST_CASE("canonical ordering and serialization") {
    SimpleGraph p5 = path_graph(5);
    PathDecomposition a(p5, {PathSeq({4, 3, 2}), PathSeq({2, 1, 0})});
    PathDecomposition b(p5, {PathSeq({0, 1, 2}), PathSeq({2, 3, 4})});
    json ja = decomposition_to_json(a);
    json jb = decomposition_to_json(b);
    CHECK(ja == jb);
    CHECK(ja.dump() == "{\"paths\":[[0,1,2],[2,3,4]]}");
    PathDecomposition back = decomposition_from_json(ja, p5.n);
    CHECK(is_valid(p5, back));
}
