#include <doctest.h>

#include "irrcount/coherent.hpp"
#include "irrcount/painting.hpp"

using namespace irrcount;

TEST_CASE("real-family tables at small rank") {
    FormalRepSum one = cohGlr(1, CohMethod::Strips);
    CHECK(one.mult(YoungDiagram({1})) == 2);
    FormalRepSum two = cohGlr(2, CohMethod::Strips);
    CHECK(two.mult(YoungDiagram({2})) == 3);
    CHECK(two.mult(YoungDiagram({1, 1})) == 2);
}

TEST_CASE("quaternionic and half-shifted tables") {
    FormalRepSum glh2 = cohGlh(2, CohMethod::Strips);
    CHECK(glh2.terms().size() == 1);
    CHECK(glh2.mult(YoungDiagram({1, 1})) == 1);
    FormalRepSum glh4 = cohGlh(4, CohMethod::Strips);
    CHECK(glh4.mult(YoungDiagram({2, 2})) == 1);
    CHECK(glh4.mult(YoungDiagram({1, 1, 1, 1})) == 1);
    CHECK(glh4.terms().size() == 2);
    CHECK_THROWS_AS(cohGlh(3, CohMethod::Strips), std::invalid_argument);

    FormalRepSum half1 = cohUHalf(1, CohMethod::Strips);
    CHECK(half1.terms().size() == 1);
    CHECK(half1.mult(YoungDiagram({2})) == 1);
    FormalRepSum half2 = cohUHalf(2, CohMethod::Strips);
    CHECK(half2.mult(YoungDiagram({4})) == 1);
    CHECK(half2.mult(YoungDiagram({2, 2})) == 1);
    CHECK(half2.terms().size() == 2);
}

TEST_CASE("unitary tables") {
    FormalRepSum u21 = cohU(2, 1, CohMethod::Strips);
    CHECK(u21.mult(YoungDiagram({3})) == 1);
    CHECK(u21.mult(YoungDiagram({2, 1})) == 2);
    CHECK(u21.mult(YoungDiagram({1, 1, 1})) == 1);
    FormalRepSum u10 = cohU(1, 0, CohMethod::Strips);
    CHECK(u10.terms().size() == 1);
    CHECK(u10.mult(YoungDiagram({1})) == 1);
    FormalRepSum u00 = cohU(0, 0, CohMethod::Strips);
    CHECK(u00.mult(YoungDiagram()) == 1);
}

TEST_CASE("diagonal multiplicity") {
    CHECK(cohGlcMult(YoungDiagram({2, 1}), YoungDiagram({2, 1})) == 1);
    CHECK(cohGlcMult(YoungDiagram({3}), YoungDiagram({2, 1})) == 0);
    CHECK_THROWS_AS(cohGlcMult(YoungDiagram({2}), YoungDiagram({2, 1})), std::invalid_argument);
    long long trace = 0;
    for (const auto& a : enumeratePartitions(3))
        for (const auto& b : enumeratePartitions(3)) trace += cohGlcMult(a, b);
    CHECK(trace == 3);
    // The honest route: self-duality makes the diagonal multiplicity an
    // inner product of irreducible characters.
    for (const auto& a : enumeratePartitions(5))
        for (const auto& b : enumeratePartitions(5))
            CHECK(BigRat(cohGlcMult(a, b)) ==
                  innerProduct(ClassFunction::irreducible(a), ClassFunction::irreducible(b)));
}

TEST_CASE("the two routes agree on every family") {
    for (int n = 0; n <= 8; ++n) {
        CHECK(cohGlr(n, CohMethod::Strips) == cohGlr(n, CohMethod::Oracle));
        if (n % 2 == 0) {
            CHECK(cohGlh(n, CohMethod::Strips) == cohGlh(n, CohMethod::Oracle));
            CHECK(cohUHalf(n / 2, CohMethod::Strips) == cohUHalf(n / 2, CohMethod::Oracle));
        }
    }
    for (int p = 0; p <= 7; ++p)
        for (int q = 0; p + q <= 7; ++q)
            CHECK(cohU(p, q, CohMethod::Strips) == cohU(p, q, CohMethod::Oracle));
}

TEST_CASE("multiplicities equal painting counts") {
    for (int n = 0; n <= 8; ++n) {
        FormalRepSum glr = cohGlr(n, CohMethod::Strips);
        for (const auto& iota : enumeratePartitions(n))
            CHECK(glr.mult(iota) == countPaintings(iota, PaintingType::AR));
        if (n % 2 == 0) {
            FormalRepSum glh = cohGlh(n, CohMethod::Strips);
            FormalRepSum half = cohUHalf(n / 2, CohMethod::Strips);
            for (const auto& iota : enumeratePartitions(n)) {
                CHECK(glh.mult(iota) == countPaintings(iota, PaintingType::AH));
                CHECK(half.mult(iota) == countPaintings(iota, PaintingType::ADegenerate));
            }
        }
        for (int p = 0; p <= n; ++p) {
            FormalRepSum u = cohU(p, n - p, CohMethod::Strips);
            for (const auto& iota : enumeratePartitions(n))
                CHECK(u.mult(iota) == countPaintingsASignature(iota, p, n - p));
        }
    }
}

TEST_CASE("total dimension matches the induced-index bookkeeping") {
    // dim Ind_H^G 1-dimensional = [G : H]; summed over the index set.
    for (int n = 1; n <= 8; ++n) {
        BigInt want = 0;
        for (int r = 0; 2 * r <= n; ++r)
            for (int i = 0; 2 * r + i <= n; ++i)
                want += factorial(n) / (hyperoctOrder(r) * factorial(i) * factorial(n - 2 * r - i));
        CHECK(cohGlr(n, CohMethod::Strips).dimension() == want);
    }
}

TEST_CASE("the halved range loses terms") {
    FormalRepSum halved = cohU(2, 1, CohMethod::Strips, CartanRange::Halved);
    CHECK(halved.mult(YoungDiagram({3})) == 0);
    CHECK(halved.mult(YoungDiagram({2, 1})) == 1);
}
