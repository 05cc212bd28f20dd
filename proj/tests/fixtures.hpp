#pragma once

#include <string>

#include "arbor/tree.hpp"

namespace fixtures {

using arbor::DecoratedTree;

// Blue cherry k = -k1 + k2 + k3 with a conjugate leaf k1.
inline const std::string kCherry = "I[(t2,0)](-k1+k2+k3; I[(t1,1)](k1), I[(t1,0)](k2), I[(t1,0)](k3))";

inline const std::string kT0 = "I[(t1,0)](k)";
inline const std::string kT1 =
    "I[(t1,0)](-k1+k2+k3; I[(t2,0)](-k1+k2+k3; I[(t1,1)](k1), I[(t1,0)](k2), I[(t1,0)](k3)))";
// Order two, the inner cherry hangs below a plain edge.
inline const std::string kT2 =
    "I[(t1,0)](-k1+k2+k3-k4+k5; I[(t2,0)](-k1+k2+k3-k4+k5; I[(t1,1)](k4), I[(t1,0)](k5), "
    "I[(t1,0)](-k1+k2+k3; I[(t2,0)](-k1+k2+k3; I[(t1,1)](k1), I[(t1,0)](k2), I[(t1,0)](k3)))))";
// Order two, the inner cherry hangs below a conjugate edge.
inline const std::string kT3 =
    "I[(t1,0)](k1-k2-k3+k4+k5; I[(t2,0)](k1-k2-k3+k4+k5; I[(t1,0)](k4), I[(t1,0)](k5), "
    "I[(t1,1)](-k1+k2+k3; I[(t2,1)](-k1+k2+k3; I[(t1,0)](k1), I[(t1,1)](k2), I[(t1,1)](k3)))))";

// Stacked blue edges without the plain root edge.
inline const std::string kStacked =
    "I[(t2,0)](-k1+k2+k3-k4+k5; I[(t1,1)](k4), I[(t1,0)](k5), "
    "I[(t1,0)](-k1+k2+k3; I[(t2,0)](-k1+k2+k3; I[(t1,1)](k1), I[(t1,0)](k2), I[(t1,0)](k3))))";
inline const std::string kStackedTrunk =
    "I[(t2,0)](-k1+k2+k3-k4+k5; I[(t1,1)](k4), I[(t1,0)](k5), I[(t1,0)](-k1+k2+k3))";

// Two cherries side by side below one blue edge.
inline const std::string kWide =
    "I[(t2,0)](-k1+k2+k3-k4-k5+k6+k7; I[(t1,1)](k4), "
    "I[(t1,0)](-k1+k2+k3; I[(t2,0)](-k1+k2+k3; I[(t1,1)](k1), I[(t1,0)](k2), I[(t1,0)](k3))), "
    "I[(t1,0)](-k5+k6+k7; I[(t2,0)](-k5+k6+k7; I[(t1,1)](k5), I[(t1,0)](k6), I[(t1,0)](k7))))";
inline const std::string kRightCherry = "I[(t2,0)](-k5+k6+k7; I[(t1,1)](k5), I[(t1,0)](k6), I[(t1,0)](k7))";

inline DecoratedTree tree(const std::string& s) { return DecoratedTree::parse(s); }

}  // namespace fixtures
