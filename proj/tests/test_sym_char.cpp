#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "irrcount/assignment.hpp"
#include "irrcount/sym_char.hpp"

using namespace irrcount;

namespace {

// Brute-force S_3 from permutation matrices: the standard 2-dimensional
// character is (#fixed points) - 1.
YoungDiagram cycleTypeOf(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> cycles;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(perm[j]);
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end(), std::greater<int>());
    return YoungDiagram(cycles);
}

}  // namespace

TEST_CASE("class sizes") {
    CHECK(classSize(YoungDiagram({1, 1, 1})) == 1);
    CHECK(classSize(YoungDiagram({3})) == 2);
    CHECK(classSize(YoungDiagram({2, 1})) == 3);
    // Against a full S_4 enumeration.
    std::vector<int> perm{0, 1, 2, 3};
    std::map<YoungDiagram, int> histogram;
    do {
        ++histogram[cycleTypeOf(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& mu : enumeratePartitions(4))
        CHECK(BigInt(histogram[mu]) == classSize(mu));
}

TEST_CASE("character values of small shapes") {
    for (const auto& mu : enumeratePartitions(5)) CHECK(characterValue(YoungDiagram({5}), mu) == 1);
    CHECK(characterValue(YoungDiagram({1, 1, 1}), YoungDiagram({2, 1})) == -1);
    CHECK(characterValue(YoungDiagram({2, 1}), YoungDiagram({1, 1, 1})) == 2);
    CHECK(characterValue(YoungDiagram({2, 1}), YoungDiagram({2, 1})) == 0);
    CHECK(characterValue(YoungDiagram({2, 1}), YoungDiagram({3})) == -1);
    // Standard character of S_n equals fixed points minus one; check at n=4.
    std::vector<int> perm{0, 1, 2, 3};
    do {
        int fixed = 0;
        for (int i = 0; i < 4; ++i) fixed += perm[static_cast<size_t>(i)] == i;
        CHECK(characterValue(YoungDiagram({3, 1}), cycleTypeOf(perm)) == fixed - 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("orthonormality and column orthogonality") {
    for (int n = 1; n <= 8; ++n) {
        const auto& parts = enumeratePartitions(n);
        for (const auto& a : parts) {
            CHECK(innerProduct(ClassFunction::irreducible(a), ClassFunction::irreducible(a)) == 1);
            for (const auto& b : parts)
                if (!(a == b))
                    CHECK(innerProduct(ClassFunction::irreducible(a),
                                       ClassFunction::irreducible(b)) == 0);
        }
    }
    // Column orthogonality: sum_iota chi(mu) chi(nu) = z_mu [mu == nu].
    for (int n = 1; n <= 10; ++n) {
        const auto& parts = enumeratePartitions(n);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                BigInt sum = 0;
                for (const auto& iota : parts)
                    sum += characterValue(iota, mu) * characterValue(iota, nu);
                CHECK(sum == (mu == nu ? zOrder(mu) : BigInt(0)));
            }
    }
}

TEST_CASE("regular character decomposes by dimension") {
    ClassFunction regular(3);
    regular.set(YoungDiagram({1, 1, 1}), 6);
    FormalRepSum dec = decompose(regular);
    CHECK(dec.mult(YoungDiagram({3})) == 1);
    CHECK(dec.mult(YoungDiagram({2, 1})) == 2);
    CHECK(dec.mult(YoungDiagram({1, 1, 1})) == 1);
    for (int n = 1; n <= 7; ++n) {
        ClassFunction reg(n);
        std::vector<int> ones(static_cast<size_t>(n), 1);
        reg.set(YoungDiagram(ones), factorial(n));
        for (const auto& iota : enumeratePartitions(n))
            CHECK(innerProduct(reg, ClassFunction::irreducible(iota)) == BigRat(dimensionOf(iota)));
    }
}

TEST_CASE("young-subgroup inductions") {
    auto ind = induceYoung({YoungPart{3, YoungPart::Kind::Trivial, {}}});
    CHECK(ind == ClassFunction::trivial(3));

    auto sgn21 = induceYoung({YoungPart{2, YoungPart::Kind::Sign, {}},
                              YoungPart{1, YoungPart::Kind::Sign, {}}});
    FormalRepSum dec = decompose(sgn21);
    CHECK(dec.mult(YoungDiagram({2, 1})) == 1);
    CHECK(dec.mult(YoungDiagram({1, 1, 1})) == 1);
    CHECK(dec.mult(YoungDiagram({3})) == 0);

    auto reg = induceYoung({YoungPart{1, YoungPart::Kind::Trivial, {}},
                            YoungPart{1, YoungPart::Kind::Trivial, {}},
                            YoungPart{1, YoungPart::Kind::Trivial, {}}});
    CHECK(reg.value(YoungDiagram({1, 1, 1})) == 6);
    CHECK(reg.value(YoungDiagram({2, 1})) == 0);
    CHECK(reg.value(YoungDiagram({3})) == 0);
}

TEST_CASE("Pieri expansions through induction") {
    // phi(iota) x 1: horizontal strips; phi(iota) x sgn: vertical strips.
    for (int k = 1; k <= 6; ++k)
        for (const auto& iota : enumeratePartitions(k))
            for (int l = 1; l + k <= 9 && l <= 3; ++l) {
                auto horiz = decompose(induceYoung(
                    {YoungPart{k, YoungPart::Kind::Irreducible, iota},
                     YoungPart{l, YoungPart::Kind::Trivial, {}}}));
                for (const auto& nu : enumeratePartitions(k + l))
                    CHECK(horiz.mult(nu) == (isHorizontalStrip(iota, nu) ? 1 : 0));
                auto vert = decompose(induceYoung(
                    {YoungPart{k, YoungPart::Kind::Irreducible, iota},
                     YoungPart{l, YoungPart::Kind::Sign, {}}}));
                for (const auto& nu : enumeratePartitions(k + l))
                    CHECK(vert.mult(nu) == (isVerticalStrip(iota, nu) ? 1 : 0));
            }
}

TEST_CASE("hyperoctahedral classes embed with the right data") {
    // |W_r| is recovered from the class sizes.
    for (int r = 0; r <= 5; ++r) {
        BigInt total = 0;
        for (const auto& c : hyperoctClasses(r)) total += hyperoctClassSize(r, c);
        CHECK(total == hyperoctOrder(r));
    }
    SignedClassType c{YoungDiagram({2, 1}), YoungDiagram({3, 1})};
    CHECK(hyperoctEmbeddedType(c) == YoungDiagram({6, 2, 2, 2, 1, 1}));
}

TEST_CASE("hyperoctahedral inductions at small rank") {
    CHECK(hyperoctInduced(1, HyperChar::Eps) == ClassFunction::irreducible(YoungDiagram({1, 1})));
    auto eps2 = decompose(hyperoctInduced(2, HyperChar::Eps));
    CHECK(eps2.mult(YoungDiagram({2, 2})) == 1);
    CHECK(eps2.mult(YoungDiagram({1, 1, 1, 1})) == 1);
    CHECK(eps2.mult(YoungDiagram({4})) == 0);
    auto triv2 = decompose(hyperoctInduced(2, HyperChar::Trivial));
    CHECK(triv2.mult(YoungDiagram({4})) == 1);
    CHECK(triv2.mult(YoungDiagram({2, 2})) == 1);
    CHECK(triv2.mult(YoungDiagram({3, 1})) == 0);
}

TEST_CASE("the branching identities hold for r <= 5") {
    for (int r = 1; r <= 5; ++r) {
        auto eps = decompose(hyperoctInduced(r, HyperChar::Eps));
        auto triv = decompose(hyperoctInduced(r, HyperChar::Trivial));
        for (const auto& sigma : enumeratePartitions(2 * r)) {
            CHECK(eps.mult(sigma) == (sigma.allColumnsEven() ? 1 : 0));
            CHECK(triv.mult(sigma) == (sigma.allRowsEven() ? 1 : 0));
        }
    }
}

TEST_CASE("permutation-module multiplicities are assignment counts") {
    // The third route to the same numbers: decompose the full induced
    // trivial character of the Young subgroup S_{d_1} x ... x S_{d_k}.
    for (int n = 1; n <= 8; ++n)
        for (const auto& content : enumeratePartitions(n)) {
            std::vector<YoungPart> parts;
            for (int i = 1; i <= content.rowCount(); ++i)
                parts.push_back(YoungPart{content.row(i), YoungPart::Kind::Trivial, {}});
            FormalRepSum dec = decompose(induceYoung(parts));
            for (const auto& iota : enumeratePartitions(n))
                CHECK(dec.mult(iota) == countAssignments(iota, content));
        }
}

TEST_CASE("decompose round-trips with recompose") {
    auto f = induceYoung({YoungPart{2, YoungPart::Kind::Trivial, {}},
                          YoungPart{2, YoungPart::Kind::Sign, {}},
                          YoungPart{1, YoungPart::Kind::Trivial, {}}});
    CHECK(recompose(decompose(f)) == f);
}

TEST_CASE("decompose rejects non-representations") {
    ClassFunction bogus(2);
    bogus.set(YoungDiagram({1, 1}), 1);  // value 1 on the identity class only
    CHECK_THROWS_AS(decompose(bogus), std::logic_error);
}
