#include "comlang/verify/fixtures.hpp"

namespace comlang::verify::fixtures {

Dfa count_language_minimal() {
  // letters a, b
  return Dfa(Alphabet("ab"), 3, 0, {0, 2}, {1, 2, 1, 2, 2, 2});
}

Dfa count_language_commutative() {
  // 0 = (eps,eps), 1 = (a,eps), 2 = (eps,b), 3 = (a,b)
  return Dfa(Alphabet("ab"), 4, 0, {0, 2, 3}, {1, 2, 1, 3, 3, 2, 3, 3});
}

Dfa partial_four_state() {
  // letters a, b, c
  return Dfa(Alphabet("abc"), 4, 0, {0}, {1, 2, 2, 2, 3, 1, 3, 0, 0, 0, 1, 3});
}

}  // namespace comlang::verify::fixtures
