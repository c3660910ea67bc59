#pragma once

#include "comlang/dfa.hpp"

namespace comlang::verify::fixtures {

// {w : |w|_a = 0 or |w|_b > 0}
inline constexpr const char* kCountLanguage = "bb*&a* | b*";
inline constexpr const char* kTwelveStates = "(aa)*&(bb)* | (aaa)*&b(bb)*";
inline constexpr const char* kPeriodFourTwo = "(aa)*&(bb)* | (aaaa)*&b*";
inline constexpr const char* kL3L4NotL2 = "aa(aaa)*&bb(bbb)* | a(aaa)*&b(bbb)*";
inline constexpr const char* kL3NotL4 = "a(aaa)*&b | aa(aaa)*";
inline constexpr const char* kL1NotL4 = "a&b";
inline constexpr const char* kL2NotL1 = "(a(aaa)* | aa(aaa)*)&b";
inline constexpr const char* kFourAs = "aaaa&b*";

/// Minimal DFA of kCountLanguage as drawn: states eps, a, b.
Dfa count_language_minimal();
/// Its four-state commutative automaton (a-class, b-class).
Dfa count_language_commutative();
/// Four states over {a, b, c}: a cycles 0-1-2-3, b swaps 0/2 and 1/3, c
/// swaps 0/2 and fixes 1 and 3; only the start accepts.
Dfa partial_four_state();

}  // namespace comlang::verify::fixtures
