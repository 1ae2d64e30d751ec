#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irrcount/coherent.hpp"
#include "irrcount/coordinate.hpp"
#include "irrcount/young_diagram.hpp"

namespace irrcount {

enum class Family { Glr, Glh, Glc, U, UGenuine };

struct GroupSpec {
    Family family = Family::Glr;
    int n = 0;  // Glr/Glh/Glc: number of coordinates (Glh: twice the quaternionic rank)
    int p = 0, q = 0;  // U / UGenuine

    int rank() const { return (family == Family::U || family == Family::UGenuine) ? p + q : n; }
    std::string toString() const;
};

// "GLR(3)", "GLH(8)", "GLC(2)", "U(2,1)", "UGEN(2,1)".
GroupSpec parseGroup(std::string_view text);

struct NuSpec {
    std::vector<Coordinate> left;
    std::vector<Coordinate> right;  // GLC only
};

struct OrbitSpec {
    YoungDiagram first;
    std::optional<YoungDiagram> second;  // GLC only
    std::string toString() const;
    bool operator==(const OrbitSpec&) const = default;
};

struct BreakdownTerm {
    std::vector<YoungDiagram> tuple;
    std::vector<long long> factors;
    long long product = 0;
};

struct CountResult {
    long long count = 0;
    std::vector<BreakdownTerm> breakdown;  // nonzero summands only
};

// Which orbit label feeds which U-factor of the unitary recursion
// (Unswapped matches the factors' ranks), and the sign applied to the
// second block of a generic pair before the complex-linear delegation.
enum class USwap { Unswapped, Verbatim };
enum class GlcPairSign { NegateSecond, Verbatim };

struct CountOptions {
    USwap uSwap = USwap::Unswapped;
    GlcPairSign glcPairSign = GlcPairSign::NegateSecond;
    CartanRange cartanRange = CartanRange::Full;  // oracle path only
    BigRat muOffset = BigRat(1, 2);               // det^{1/2} twist
};

CountResult countGlr(std::span<const Coordinate> nu, const YoungDiagram& orbit);
CountResult countGlh(std::span<const Coordinate> nu, const YoungDiagram& orbit);
CountResult countGlc(std::span<const Coordinate> left, std::span<const Coordinate> right,
                     const YoungDiagram& orbitLeft, const YoungDiagram& orbitRight,
                     const CountOptions& opts = {});
CountResult countU(int p, int q, std::span<const Coordinate> nu, const YoungDiagram& orbit,
                   const CountOptions& opts = {});
CountResult countUGenuine(int p, int q, std::span<const Coordinate> nu,
                          const YoungDiagram& orbit, const CountOptions& opts = {});

CountResult count(const GroupSpec& group, const NuSpec& nu, const OrbitSpec& orbit,
                  const CountOptions& opts = {});

struct TableEntry {
    OrbitSpec orbit;
    CountResult result;
};

// Counts for every nilpotent orbit (every partition of n; every ordered
// pair of partitions for the complex family), in canonical orbit order.
std::vector<TableEntry> countTable(const GroupSpec& group, const NuSpec& nu,
                                   const CountOptions& opts = {}, int threads = 1);

struct VerifyRow {
    OrbitSpec orbit;
    long long formula = 0;
    long long oracle = 0;
    bool ok = false;
};

struct VerifyReport {
    bool ok = false;
    std::vector<VerifyRow> rows;
    std::string mismatchDump;  // empty when ok
};

// Dual-path check: the closed-form counts against the character-theoretic
// multiplicity sums, orbit by orbit.
VerifyReport verifyCounts(const GroupSpec& group, const NuSpec& nu,
                          const CountOptions& opts = {}, int threads = 1);

// Enumerates tuples (one diagram of each given size) whose row union is
// exactly target.  Shared by the counting sums and the verification path.
void forEachTupleWithUnion(std::span<const int> sizes, const YoungDiagram& target,
                           const std::function<void(std::span<const YoungDiagram>)>& fn);

}  // namespace irrcount
