#include "irrcount/selftest.hpp"

#include <cmath>
#include <sstream>

#include "irrcount/assignment.hpp"
#include "irrcount/coherent.hpp"
#include "irrcount/counting.hpp"
#include "irrcount/painting.hpp"

namespace irrcount {

namespace {

struct Checker {
    bool ok = true;
    std::ostringstream firstFailure;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            firstFailure << what;
        }
    }
    template <typename T, typename U>
    void expectEq(const T& got, const U& want, const std::string& what) {
        if (!(got == static_cast<T>(want)) && ok) {
            ok = false;
            firstFailure << what << ": got " << got << ", want " << want;
        }
    }
    CriterionResult result(std::string name) const {
        return CriterionResult{std::move(name), ok, firstFailure.str()};
    }
};

std::vector<Coordinate> integerNu(const YoungDiagram& pattern, const BigRat& base) {
    std::vector<Coordinate> nu;
    for (int i = 1; i <= pattern.rowCount(); ++i)
        for (int k = 0; k < pattern.row(i); ++k)
            nu.push_back(Coordinate{"", +1, base + (i - 1)});
    return nu;
}

YoungDiagram hook(int n) {  // [2,1,...,1]
    std::vector<int> rows{2};
    for (int i = 0; i < n - 2; ++i) rows.push_back(1);
    return YoungDiagram(std::move(rows));
}

// Criterion 1: the worked examples.
CriterionResult criterionWorkedExamples() {
    Checker c;
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> principal{n};
        auto nu = integerNu(YoungDiagram(std::vector<int>(static_cast<size_t>(n), 1)), 0);
        c.expectEq(countGlr(nu, YoungDiagram(principal)).count, n + 1,
                   "GLR(" + std::to_string(n) + ") principal orbit");
    }
    {
        auto nu = parseCoordinateList("1,1,1,2,2,2,3,3");
        c.expectEq(countGlh(nu, parseDiagram("[4,4]")).count, 1, "GLH(8) count at [4,4]");
        long long total = 0;
        for (const auto& orbit : enumeratePartitions(8)) total += countGlh(nu, orbit).count;
        c.expectEq(total, 1, "GLH(8) table total");
    }
    {
        auto nu = parseCoordinateList("1,1,1,1,2,2,2,3,3,4");
        for (const auto& orbit : enumeratePartitions(10)) {
            long long want = 0;
            if (orbit == parseDiagram("[5,5]")) want = 2;
            if (orbit == parseDiagram("[4,4,1,1]")) want = 1;
            c.expectEq(countGlh(nu, orbit).count, want, "GLH(10) count at " + orbit.toString());
        }
    }
    for (int n = 2; n <= 6; ++n) {
        auto ones = YoungDiagram(std::vector<int>(static_cast<size_t>(n), 1));
        auto nu = integerNu(ones, 0);
        c.expectEq(countGlc(nu, nu, hook(n), hook(n)).count,
                   static_cast<long long>(n - 1) * (n - 1),
                   "GLC(" + std::to_string(n) + ") minimal-orbit pair");
    }
    {
        auto nu = parseCoordinateList("1,1,2");
        c.expectEq(countU(2, 1, nu, parseDiagram("[3]")).count, 1, "U(2,1) at [3]");
        c.expectEq(countU(2, 1, nu, parseDiagram("[2,1]")).count, 2, "U(2,1) at [2,1]");
        c.expectEq(countU(2, 1, nu, parseDiagram("[1,1,1]")).count, 0, "U(2,1) at [1,1,1]");
    }
    return c.result("1 paper worked examples");
}

// Criterion 2: dual-path oracle equivalence plus the painting identities.
CriterionResult criterionDualPath(int threads) {
    Checker c;
    auto runVerify = [&](const GroupSpec& g, const NuSpec& nu, const std::string& what) {
        auto report = verifyCounts(g, nu, CountOptions{}, threads);
        c.expect(report.ok, what + ": " + report.mismatchDump);
    };
    for (int n = 1; n <= 7; ++n)
        for (const auto& d : enumeratePartitions(n))
            runVerify(GroupSpec{Family::Glr, n}, NuSpec{integerNu(d, 0), {}},
                      "GLR(" + std::to_string(n) + ") d=" + d.toString());
    for (int n = 2; n <= 8; n += 2)
        for (const auto& d : enumeratePartitions(n))
            runVerify(GroupSpec{Family::Glh, n}, NuSpec{integerNu(d, 0), {}},
                      "GLH(" + std::to_string(n) + ") d=" + d.toString());
    for (int n = 1; n <= 5; ++n)
        for (const auto& dl : enumeratePartitions(n))
            for (const auto& dr : enumeratePartitions(n))
                runVerify(GroupSpec{Family::Glc, n}, NuSpec{integerNu(dl, 0), integerNu(dr, 0)},
                          "GLC(" + std::to_string(n) + ") d=" + dl.toString() + "|" +
                              dr.toString());
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; p + q <= 6; ++q) {
            int n = p + q;
            if (n == 0) continue;
            GroupSpec g{Family::U, 0, p, q};
            for (const auto& d : enumeratePartitions(n)) {
                runVerify(g, NuSpec{integerNu(d, BigRat(n - 1, 2)), {}},
                          "U(" + std::to_string(p) + "," + std::to_string(q) +
                              ") lam-class d=" + d.toString());
                runVerify(g, NuSpec{integerNu(d, BigRat(n, 2)), {}},
                          "U(" + std::to_string(p) + "," + std::to_string(q) +
                              ") lamp-class d=" + d.toString());
            }
        }
    // Multiplicity identities between coherent tables and painting counts.
    for (int n = 0; n <= 8; ++n) {
        FormalRepSum glr = cohGlr(n, CohMethod::Strips);
        for (const auto& iota : enumeratePartitions(n))
            c.expectEq(glr.mult(iota), countPaintings(iota, PaintingType::AR),
                       "coh/painting identity (real family) at " + iota.toString());
        if (n % 2 == 0) {
            FormalRepSum glh = cohGlh(n, CohMethod::Strips);
            for (const auto& iota : enumeratePartitions(n))
                c.expectEq(glh.mult(iota), countPaintings(iota, PaintingType::AH),
                           "coh/painting identity (quaternionic family) at " + iota.toString());
            FormalRepSum half = cohUHalf(n / 2, CohMethod::Strips);
            for (const auto& iota : enumeratePartitions(n))
                c.expectEq(half.mult(iota), countPaintings(iota, PaintingType::ADegenerate),
                           "coh/painting identity (half-shifted unitary) at " + iota.toString());
        }
        for (int p = 0; p <= n; ++p) {
            FormalRepSum u = cohU(p, n - p, CohMethod::Strips);
            for (const auto& iota : enumeratePartitions(n))
                c.expectEq(u.mult(iota), countPaintingsASignature(iota, p, n - p),
                           "coh/painting identity (unitary) at " + iota.toString());
        }
    }
    // The two computation routes of every coherent table agree.
    for (int n = 0; n <= 8; ++n) {
        c.expect(cohGlr(n, CohMethod::Strips) == cohGlr(n, CohMethod::Oracle),
                 "coh route mismatch, real family, n=" + std::to_string(n));
        if (n % 2 == 0) {
            c.expect(cohGlh(n, CohMethod::Strips) == cohGlh(n, CohMethod::Oracle),
                     "coh route mismatch, quaternionic family, n=" + std::to_string(n));
            c.expect(cohUHalf(n / 2, CohMethod::Strips) == cohUHalf(n / 2, CohMethod::Oracle),
                     "coh route mismatch, half-shifted unitary, n=" + std::to_string(n));
        }
    }
    for (int p = 0; p <= 7; ++p)
        for (int q = 0; p + q <= 7; ++q)
            c.expect(cohU(p, q, CohMethod::Strips) == cohU(p, q, CohMethod::Oracle),
                     "coh route mismatch, unitary, p=" + std::to_string(p) +
                         " q=" + std::to_string(q));
    return c.result("2 dual-path oracle equivalence");
}

// Criterion 3: the branching identities, from raw signed-class data.
CriterionResult criterionBranching() {
    Checker c;
    for (int r = 1; r <= 5; ++r) {
        FormalRepSum eps = decompose(hyperoctInduced(r, HyperChar::Eps));
        FormalRepSum triv = decompose(hyperoctInduced(r, HyperChar::Trivial));
        for (const auto& sigma : enumeratePartitions(2 * r)) {
            c.expectEq(eps.mult(sigma), sigma.allColumnsEven() ? 1 : 0,
                       "eps branching at " + sigma.toString() + ", r=" + std::to_string(r));
            c.expectEq(triv.mult(sigma), sigma.allRowsEven() ? 1 : 0,
                       "trivial branching at " + sigma.toString() + ", r=" + std::to_string(r));
        }
    }
    return c.result("3 hyperoctahedral branching reproduced");
}

// Criterion 4: backtracking count equals the iterated-strip count.
CriterionResult criterionKostka() {
    Checker c;
    for (int n = 0; n <= 9; ++n)
        for (const auto& shape : enumeratePartitions(n))
            for (const auto& content : enumeratePartitions(n))
                c.expectEq(countAssignments(shape, content), kostkaViaPieri(shape, content),
                           "Kostka mismatch at shape " + shape.toString() + ", content " +
                               content.toString());
    return c.result("4 assignment count equals strip-path count");
}

// Criterion 5: chain enumeration equals the 5^n brute-force filter.
CriterionResult criterionPaintingBruteForce() {
    Checker c;
    const PaintSymbol alphabet[5] = {PaintSymbol::Bullet, PaintSymbol::S, PaintSymbol::R,
                                     PaintSymbol::C, PaintSymbol::D};
    for (int n = 0; n <= 6; ++n) {
        for (const auto& shape : enumeratePartitions(n)) {
            std::vector<Box> boxes;
            for (int i = 1; i <= shape.rowCount(); ++i)
                for (int j = 1; j <= shape.row(i); ++j) boxes.push_back(Box{i, j});
            long long total = 1;
            for (int i = 0; i < n; ++i) total *= 5;
            std::vector<std::vector<Painting>> byType(4);
            for (long long code = 0; code < total; ++code) {
                SymbolGrid grid(static_cast<size_t>(shape.rowCount()));
                for (int i = 1; i <= shape.rowCount(); ++i)
                    grid[static_cast<size_t>(i - 1)].resize(static_cast<size_t>(shape.row(i)));
                long long rem = code;
                for (const Box& b : boxes) {
                    grid[static_cast<size_t>(b.row - 1)][static_cast<size_t>(b.col - 1)] =
                        alphabet[rem % 5];
                    rem /= 5;
                }
                bool valid = isValidPainting(shape, grid);
                c.expectEq(isValidPaintingChain(shape, grid), valid,
                           "chain/staged validity disagrees on " + shape.toString());
                if (!valid) continue;
                Painting painting(shape, grid);
                bool onlyBullet = true, noSR = true, noCD = true;
                int bullets = 0;
                for (const auto& row : grid)
                    for (PaintSymbol s : row) {
                        bullets += s == PaintSymbol::Bullet;
                        if (s != PaintSymbol::Bullet) onlyBullet = false;
                        if (s == PaintSymbol::S || s == PaintSymbol::R) noSR = false;
                        if (s == PaintSymbol::C || s == PaintSymbol::D) noCD = false;
                    }
                (void)bullets;
                // Column / row bullet parity per type.
                auto columnParityEven = [&] {
                    for (int j = 1; j <= shape.columnCount(); ++j) {
                        int cnt = 0;
                        for (int i = 1; i <= shape.column(j); ++i)
                            cnt += grid[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] ==
                                   PaintSymbol::Bullet;
                        if (cnt % 2) return false;
                    }
                    return true;
                };
                auto rowParityEven = [&] {
                    for (int i = 1; i <= shape.rowCount(); ++i) {
                        int cnt = 0;
                        for (int j = 1; j <= shape.row(i); ++j)
                            cnt += grid[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] ==
                                   PaintSymbol::Bullet;
                        if (cnt % 2) return false;
                    }
                    return true;
                };
                if (noSR && columnParityEven()) byType[0].push_back(painting);
                if (onlyBullet && columnParityEven()) byType[1].push_back(painting);
                if (noCD && rowParityEven()) byType[2].push_back(painting);
                if (onlyBullet && rowParityEven()) byType[3].push_back(painting);
            }
            const PaintingType types[4] = {PaintingType::AR, PaintingType::AH, PaintingType::A,
                                           PaintingType::ADegenerate};
            for (int t = 0; t < 4; ++t) {
                auto chain = enumeratePaintings(shape, types[t]);
                c.expectEq(chain.size(), byType[static_cast<size_t>(t)].size(),
                           "painting count mismatch on " + shape.toString());
                for (const auto& p : chain) {
                    bool found = false;
                    for (const auto& q : byType[static_cast<size_t>(t)])
                        if (p == q) {
                            found = true;
                            break;
                        }
                    c.expect(found, "chain-enumerated painting missing from brute force on " +
                                        shape.toString());
                }
            }
        }
    }
    return c.result("5 painting chain enumeration equals brute force");
}

// Criterion 6: non-integral recursion spot checks.
CriterionResult criterionNonIntegralSpots() {
    Checker c;
    {
        auto nu = parseCoordinateList("0,1/2");
        for (const auto& orbit : enumeratePartitions(2))
            c.expectEq(countGlr(nu, orbit).count, orbit == parseDiagram("[2]") ? 4 : 0,
                       "GLR(2) split character at " + orbit.toString());
    }
    {
        auto nu = parseCoordinateList("x,-x+1");
        for (const auto& orbit : enumeratePartitions(2))
            c.expectEq(countU(1, 1, nu, orbit).count, orbit == parseDiagram("[2]") ? 1 : 0,
                       "U(1,1) generic pair at " + orbit.toString());
    }
    {
        auto nu = parseCoordinateList("0,1/2");
        for (const auto& orbit : enumeratePartitions(2))
            c.expectEq(countGlh(nu, orbit).count, 0, "GLH(2) odd-class zero branch");
        auto nu4 = parseCoordinateList("0,0,0,1/2");
        for (const auto& orbit : enumeratePartitions(4))
            c.expectEq(countGlh(nu4, orbit).count, 0, "GLH(4) odd-class zero branch");
    }
    return c.result("6 non-integral recursion spot checks");
}

// Criterion 7: regression guards for the two rejected variants.
CriterionResult criterionVariantRegressions() {
    Checker c;
    {
        // Cartan-class range: 0..min(p,q) matches the worked example,
        // 0..floor(min(p,q)/2) does not.
        auto nu = parseCoordinateList("1,1,2");
        GroupSpec g{Family::U, 0, 2, 1};
        CountOptions full;
        auto okReport = verifyCounts(g, NuSpec{nu, {}}, full);
        c.expect(okReport.ok, "full Cartan range should verify");
        CountOptions half;
        half.cartanRange = CartanRange::Halved;
        auto badReport = verifyCounts(g, NuSpec{nu, {}}, half);
        c.expect(!badReport.ok, "halved Cartan range should fail verification");
        FormalRepSum halved = cohU(2, 1, CohMethod::Strips, CartanRange::Halved);
        bool anyDiff = false;
        for (const auto& iota : enumeratePartitions(3))
            anyDiff |= halved.mult(iota) != countPaintingsASignature(iota, 2, 1);
        c.expect(anyDiff, "halved Cartan range should break the painting identity");
    }
    {
        // Sum-integral pairs must be negated before the complex-linear
        // delegation; the verbatim pairing counts nothing.
        auto nu = parseCoordinateList("x,-x+1");
        CountOptions negate;
        c.expectEq(countU(1, 1, nu, parseDiagram("[2]"), negate).count, 1,
                   "negated pair delegation");
        CountOptions verbatim;
        verbatim.glcPairSign = GlcPairSign::Verbatim;
        c.expectEq(countU(1, 1, nu, parseDiagram("[2]"), verbatim).count, 0,
                   "verbatim pair delegation");
    }
    return c.result("7 rejected-variant regression guards");
}

}  // namespace

std::vector<CriterionResult> runAcceptance(int threads) {
    std::vector<CriterionResult> results;
    results.push_back(criterionWorkedExamples());
    results.push_back(criterionDualPath(threads));
    results.push_back(criterionBranching());
    results.push_back(criterionKostka());
    results.push_back(criterionPaintingBruteForce());
    results.push_back(criterionNonIntegralSpots());
    results.push_back(criterionVariantRegressions());
    return results;
}

}  // namespace irrcount
