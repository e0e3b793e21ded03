#pragma once

// Shared inputs for the unit and acceptance tests.

#include <string>
#include <vector>

namespace fixtures {

// a^n b^n, n >= 1, accepted by final state.
inline const std::string kAnBn = R"(pda K
alphabet a,b
stack Z,A
start Z
state p init
state q
state f accept
trans p a [Z/A Z] -> p
trans p a [A/A A] -> p
trans p b [A/] -> q
trans q b [A/] -> q
trans q eps [Z/Z] -> f
)";

inline const std::string kAStarBStar = R"(fsa F
alphabet a,b
state s0 init accept
state s1 accept
trans s0 a -> s0
trans s0 b -> s1
trans s1 b -> s1
)";

// (aa)^i (bb)^j with j >= 1
inline const std::string kEvenBlocks = R"(fsa E
alphabet a,b
state a0 init
state a1
state b1
state b0 accept
trans a0 a -> a1
trans a1 a -> a0
trans a0 b -> b1
trans b1 b -> b0
trans b0 b -> b1
)";

inline const std::string kNoB = R"(fsa N
alphabet a,b
state s init accept
trans s a -> s
)";

inline const std::string kOddLength = R"(fsa O
alphabet a,b
state e init
state o accept
trans e a -> o
trans e b -> o
trans o a -> e
trans o b -> e
)";

// every a is followed only by a's
inline const std::string kBStarAStar = R"(fsa R
alphabet a,b
state s0 init accept
state s1 accept
trans s0 b -> s0
trans s0 a -> s1
trans s1 a -> s1
)";

struct IntersectionCase {
  std::string name;
  std::string text;
  bool nonempty;
};

inline std::vector<IntersectionCase> intersection_cases() {
  return {
      {"anbn and a*b*", kAnBn + kAStarBStar, true},
      {"anbn and even blocks", kAnBn + kEvenBlocks, true},
      {"anbn alone", kAnBn, true},
      {"anbn and no b", kAnBn + kNoB, false},
      {"anbn and odd length", kAnBn + kOddLength, false},
      {"anbn, a*b* and b*a*", kAnBn + kAStarBStar + kBStarAStar, false},
  };
}

inline const std::string kHandshake = R"(memory vars x domain 0..1
adt trivial
process P
state q0 init
state w
state r
state done target
trans q0 -> w : wr x 1
trans q0 -> r : rd x 1
trans r -> done : skip
)";

}  // namespace fixtures
