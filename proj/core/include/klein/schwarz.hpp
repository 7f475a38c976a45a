#pragma once

#include "klein/hyperg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace klein {

enum class Group { Tetrahedral, Octahedral, Icosahedral };
std::string group_name(Group g);

struct SchwarzType {
    Group group;
    // One of the 14 representatives, listed in the orientation of the first
    // database evaluation of the type.
    ExponentTriple representative;
    int m;
    // Index 0..13 into schwarz_types().
    int id;
    // Conventional label, e.g. "(1/2,1/3,1/3)".
    std::string label;
};

const std::vector<SchwarzType>& schwarz_types();

enum class Rejection { None, Cyclic, Dihedral, NotAlgebraic };

struct Classification {
    Rejection rejection = Rejection::None;
    std::optional<SchwarzType> type;
    // "dihedral: out of scope" etc. for rejections.
    std::string reason;
};

// Exact test: e lies in the orbit of a representative under permutations,
// sign changes and integer shifts with even total.
Classification classify(const ExponentTriple& e);

// True when e (position by position) equals +-r + k with integer k and even
// total shift.
bool in_contiguity_orbit(const ExponentTriple& e, const ExponentTriple& r);

// (6m/(6-m)) (|e0|+|e1|+|einf| - 1); throws std::domain_error unless it is a
// positive integer.
unsigned covering_degree(const ExponentTriple& e, int m);

// Klein invariant S_m(s) in the symbol s, m in {3,4,5}.
RatFunc standard_invariant(int m);
// S_m with s^m replaced by z (reciprocal: s^-m replaced by z).
RatFunc invariant_in_z(int m, bool reciprocal = false);

enum class ZPoint { Zero, One, Infinity, ZeroOrInfinity };
std::string zpoint_name(ZPoint p);

struct PointAssignment {
    // Exponent differences placed at X = 0, 1, infinity.
    ExponentTriple exponents;
    // Fiber of the standard equation lying below each X point.  ZeroOrInfinity
    // is left for tetrahedral exponents with denominator 3 that the covering
    // itself decides.
    std::array<ZPoint, 3> fiber;
};

// Chooses the placement of |e| at X = 0, 1, infinity: the placement must match
// the type's database orientation position by position; ties prefer a
// half-integer at X = 1, then equal exponents at X = 0 and X = 1, then the
// lexicographically smallest triple.
PointAssignment assign_points(const ExponentTriple& e, const SchwarzType& t);

}  // namespace klein
