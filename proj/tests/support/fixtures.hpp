#ifndef COVER_RAMSEY_TESTS_FIXTURES_HPP
#define COVER_RAMSEY_TESTS_FIXTURES_HPP

#include <vector>

#include "cover_ramsey/hypergraph.hpp"

namespace fixture {

inline cover_ramsey::Hypergraph fano() {
  return cover_ramsey::Hypergraph(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

inline cover_ramsey::EdgeColoring constant_coloring(std::size_t m, cover_ramsey::Color c) {
  return {std::vector<cover_ramsey::Color>(m, c), 2};
}

// K5 with the 5-cycle 12,23,34,45,15 blue and its complement red.
inline cover_ramsey::EdgeColoring pentagon_coloring() {
  // lexicographic pairs: 12 13 14 15 23 24 25 34 35 45
  return {{0, 1, 1, 0, 0, 1, 1, 0, 1, 0}, 2};
}

}  // namespace fixture

#endif  // COVER_RAMSEY_TESTS_FIXTURES_HPP
