#include "irrcount/coherent.hpp"

#include <stdexcept>

namespace irrcount {

namespace {

std::vector<YoungDiagram> evenColumnDiagrams(int n) {
    std::vector<YoungDiagram> out;
    for (const auto& d : enumeratePartitions(n))
        if (d.allColumnsEven()) out.push_back(d);
    return out;
}

std::vector<YoungDiagram> evenRowDiagrams(int n) {
    std::vector<YoungDiagram> out;
    for (const auto& d : enumeratePartitions(n))
        if (d.allRowsEven()) out.push_back(d);
    return out;
}

void addStripExpansion(FormalRepSum& sum, const YoungDiagram& start, int first, int second,
                       bool horizontal) {
    auto expand = [&](const YoungDiagram& d, int l) {
        return horizontal ? horizontalStripSuperdiagrams(d, l)
                          : verticalStripSuperdiagrams(d, l);
    };
    for (const auto& mid : expand(start, first))
        for (const auto& end : expand(mid, second)) sum.add(end, 1);
}

}  // namespace

FormalRepSum cohGlr(int n, CohMethod method) {
    if (n < 0) throw std::invalid_argument("rank must be nonnegative");
    if (method == CohMethod::Strips) {
        FormalRepSum sum(n);
        for (int r = 0; 2 * r <= n; ++r)
            for (const auto& sigma : evenColumnDiagrams(2 * r))
                for (int i = 0; 2 * r + i <= n; ++i)
                    addStripExpansion(sum, sigma, i, n - 2 * r - i, /*horizontal=*/true);
        return sum;
    }
    ClassFunction total(n);
    for (int r = 0; 2 * r <= n; ++r) {
        ClassFunction eps = hyperoctInduced(r, HyperChar::Eps);
        for (int i = 0; 2 * r + i <= n; ++i)
            total += induceYoung({eps, ClassFunction::trivial(i),
                                  ClassFunction::trivial(n - 2 * r - i)});
    }
    return decompose(total);
}

FormalRepSum cohGlh(int n, CohMethod method) {
    if (n < 0 || n % 2 != 0)
        throw std::invalid_argument("quaternionic family needs an even rank");
    if (method == CohMethod::Strips) {
        FormalRepSum sum(n);
        for (const auto& d : evenColumnDiagrams(n)) sum.add(d, 1);
        return sum;
    }
    return decompose(hyperoctInduced(n / 2, HyperChar::Eps));
}

long long cohGlcMult(const YoungDiagram& a, const YoungDiagram& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("diagonal induction multiplicity needs equal sizes");
    return a == b ? 1 : 0;
}

FormalRepSum cohU(int p, int q, CohMethod method, CartanRange range) {
    if (p < 0 || q < 0) throw std::invalid_argument("signature must be nonnegative");
    int n = p + q;
    int sMax = std::min(p, q);
    if (range == CartanRange::Halved) sMax /= 2;
    if (method == CohMethod::Strips) {
        FormalRepSum sum(n);
        for (int s = 0; s <= sMax; ++s)
            for (const auto& sigma : evenRowDiagrams(2 * s))
                addStripExpansion(sum, sigma, p - s, q - s, /*horizontal=*/false);
        return sum;
    }
    ClassFunction total(n);
    for (int s = 0; s <= sMax; ++s)
        total += induceYoung({hyperoctInduced(s, HyperChar::Trivial),
                              ClassFunction::sign(p - s), ClassFunction::sign(q - s)});
    return decompose(total);
}

FormalRepSum cohUHalf(int p, CohMethod method) {
    if (p < 0) throw std::invalid_argument("rank must be nonnegative");
    if (method == CohMethod::Strips) {
        FormalRepSum sum(2 * p);
        for (const auto& d : evenRowDiagrams(2 * p)) sum.add(d, 1);
        return sum;
    }
    return decompose(hyperoctInduced(p, HyperChar::Trivial));
}

}  // namespace irrcount
