#pragma once

// Diagrams shared by the unit tests.

namespace knotvol::fixtures {

// Left-handed trefoil in the PD convention (incoming under-strand first,
// counterclockwise); its mirror is KnotInfo's 3_1.
inline constexpr const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
inline constexpr const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
// Trefoil followed by a positive Reidemeister-I kink on edge 6.
inline constexpr const char* kTrefoilKink = "X(1,4,2,5) X(3,8,4,1) X(5,2,6,3) X(6,7,7,8)";
// Two left-handed trefoils joined along edges 6 and 12 (granny knot).
inline constexpr const char* kGranny =
    "X(1,4,2,5) X(3,12,4,1) X(5,2,6,3) X(7,10,8,11) X(9,6,10,7) X(11,8,12,9)";
// KnotInfo 9_35, the standard diagram of the pretzel knot P(3,3,3).
inline constexpr const char* kPretzel333 =
    "X(2,12,3,11) X(4,16,5,15) X(6,14,7,13) X(8,18,9,17) X(10,4,11,3) X(12,2,13,1) X(14,6,15,5) X(16,10,17,9) "
    "X(18,8,1,7)";

}  // namespace knotvol::fixtures
