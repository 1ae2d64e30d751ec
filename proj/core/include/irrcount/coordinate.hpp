#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irrcount/sym_char.hpp"
#include "irrcount/young_diagram.hpp"

namespace irrcount {

/*
 * One coordinate of an infinitesimal character: sign*tag + offset, where
 * the optional tag is a generic symbol.  Distinct tags are treated as
 * algebraically independent, so the integrality predicates below are
 * decidable without ever evaluating a tag numerically.
 *
 * Text grammar:  coord := ['-'] ident (('+'|'-') rational)? | rational
 *                rational := ['-'] int ['/' posint]
 * e.g. "1", "-3/2", "x", "-x+3/2".
 */
struct Coordinate {
    std::string tag;   // empty = plain rational coordinate
    int tagSign = +1;  // meaningful only when tag is nonempty
    BigRat offset = 0;

    bool isRational() const { return tag.empty(); }
    bool operator==(const Coordinate&) const = default;
};

Coordinate parseCoordinate(std::string_view text);
std::vector<Coordinate> parseCoordinateList(std::string_view text);  // comma-separated
std::string formatCoordinate(const Coordinate& c);

// a - b is an integer: equal tags (with equal signs) and integral offset
// difference.
bool differenceIntegral(const Coordinate& a, const Coordinate& b);
// a + b is an integer: opposite tags (rational counts as its own
// negative) and integral offset sum.
bool sumIntegral(const Coordinate& a, const Coordinate& b);
// a lies in (1/2)Z.
bool isHalfInteger(const Coordinate& a);

Coordinate negated(const Coordinate& c);
Coordinate shifted(const Coordinate& c, const BigRat& delta);
std::vector<Coordinate> shifted(std::span<const Coordinate> coords, const BigRat& delta);

/*
 * A maximal difference-integral class of coordinates.  coords lists the
 * class grouped by value; mult is the partition of multiplicities sorted
 * descending ([d_1 >= d_2 >= ...]).
 */
struct IntegralBlock {
    std::vector<Coordinate> coords;
    YoungDiagram mult;
    int size = 0;
    const Coordinate& rep() const { return coords.front(); }
};

// Partition of the coordinates into integral blocks, in a deterministic
// order that does not depend on the input permutation.
std::vector<IntegralBlock> integralBlocks(std::span<const Coordinate> coords);

/*
 * Block-level classification for U(p,q): at most one block each in the
 * (n-1)/2 + Z and n/2 + Z classes, the rest paired off by sum-integrality
 * with equal sizes.  Returns nullopt (no representations) on an
 * unpairable class, an odd n/2-class size, or a negative residual
 * signature.
 */
struct UDecomposition {
    std::optional<IntegralBlock> lam;   // class (n-1)/2 + Z
    std::optional<IntegralBlock> lamp;  // class n/2 + Z, even size
    std::vector<std::pair<IntegralBlock, IntegralBlock>> pairs;
    int pRes = 0;
    int qRes = 0;
};

std::optional<UDecomposition> classifyU(std::span<const Coordinate> coords, int p, int q);

// Bijective matching of the two factors' blocks by difference-integral
// representatives with equal sizes; nullopt when impossible.
std::optional<std::vector<std::pair<IntegralBlock, IntegralBlock>>> classifyGlc(
    std::span<const Coordinate> left, std::span<const Coordinate> right);

}  // namespace irrcount
