#ifndef GALLAI_TEST_SUPPORT_HPP
#define GALLAI_TEST_SUPPORT_HPP

#include <catch2/catch_amalgamated.hpp>

#include "gallai/decomposition.hpp"
#include "gallai/graph.hpp"

namespace gallai_test {

// global postcondition hook: every decomposition produced by any constructor
// in the repo must validate and keep the parity identities
inline void require_contract(const gallai::SimpleGraph& g, const gallai::PathDecomposition& d) {
    REQUIRE_NOTHROW(gallai::assert_decomposition_contract(g, d));
}

inline gallai::SimpleGraph from_edges(int n, std::initializer_list<std::pair<int, int>> es) {
    std::vector<gallai::Edge> v;
    for (auto [a, b] : es) v.push_back(gallai::make_edge(a, b));
    return gallai::SimpleGraph(n, std::move(v));
}

}  // namespace gallai_test

#endif
