#include "irrcount/counting.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "irrcount/assignment.hpp"
#include "irrcount/painting.hpp"

namespace irrcount {

namespace {

void parallelFor(int count, int threads, const std::function<void(int)>& fn) {
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (int i = t; i < count; i += threads) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::string GroupSpec::toString() const {
    std::ostringstream os;
    switch (family) {
        case Family::Glr: os << "GLR(" << n << ')'; break;
        case Family::Glh: os << "GLH(" << n << ')'; break;
        case Family::Glc: os << "GLC(" << n << ')'; break;
        case Family::U: os << "U(" << p << ',' << q << ')'; break;
        case Family::UGenuine: os << "UGEN(" << p << ',' << q << ')'; break;
    }
    return os.str();
}

GroupSpec parseGroup(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw std::invalid_argument("group must look like FAMILY(args): " + std::string(text));
    std::string name = s.substr(0, open);
    std::string args = s.substr(open + 1, s.size() - open - 2);
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    auto parseNonneg = [&](const std::string& a) {
        if (a.empty() || !std::all_of(a.begin(), a.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("bad rank '" + a + "' in group: " + std::string(text));
        long v = std::stol(a);
        if (v > 1000) throw std::invalid_argument("rank too large in group: " + std::string(text));
        return static_cast<int>(v);
    };
    GroupSpec g;
    if (name == "GLR" || name == "GLH" || name == "GLC") {
        g.family = name == "GLR" ? Family::Glr : name == "GLH" ? Family::Glh : Family::Glc;
        g.n = parseNonneg(args);
        if (g.family == Family::Glh && g.n % 2 != 0)
            throw std::invalid_argument("quaternionic family needs an even rank: " +
                                        std::string(text));
    } else if (name == "U" || name == "UGEN") {
        auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("unitary group needs a signature U(p,q): " +
                                        std::string(text));
        g.family = name == "U" ? Family::U : Family::UGenuine;
        g.p = parseNonneg(args.substr(0, comma));
        g.q = parseNonneg(args.substr(comma + 1));
    } else {
        throw std::invalid_argument("unknown group family: " + std::string(text));
    }
    return g;
}

std::string OrbitSpec::toString() const {
    if (second) return first.toString() + "|" + second->toString();
    return first.toString();
}

void forEachTupleWithUnion(std::span<const int> sizes, const YoungDiagram& target,
                           const std::function<void(std::span<const YoungDiagram>)>& fn) {
    int total = 0;
    for (int s : sizes) {
        if (s < 0) throw std::invalid_argument("tuple sizes must be nonnegative");
        total += s;
    }
    if (total != target.size()) return;
    std::vector<YoungDiagram> tuple(sizes.size());
    std::vector<int> partial(static_cast<size_t>(target.rowCount()), 0);
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == sizes.size()) {
            for (int i = 1; i <= target.rowCount(); ++i)
                if (partial[static_cast<size_t>(i - 1)] != target.row(i)) return;
            fn(tuple);
            return;
        }
        for (const auto& d : enumeratePartitions(sizes[idx])) {
            if (d.rowCount() > target.rowCount()) continue;
            bool fits = true;
            for (int i = 1; i <= d.rowCount(); ++i)
                if (partial[static_cast<size_t>(i - 1)] + d.row(i) > target.row(i)) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (int i = 1; i <= d.rowCount(); ++i) partial[static_cast<size_t>(i - 1)] += d.row(i);
            tuple[idx] = d;
            self(self, idx + 1);
            for (int i = 1; i <= d.rowCount(); ++i) partial[static_cast<size_t>(i - 1)] -= d.row(i);
        }
        tuple[idx] = YoungDiagram();
    };
    rec(rec, 0);
}

namespace {

// Generic product-over-blocks sum: for every tuple with row union equal to
// the orbit, multiply per-block factors and accumulate.
CountResult tupleSum(std::span<const int> sizes, const YoungDiagram& orbit,
                     const std::function<long long(size_t, std::span<const YoungDiagram>)>& factor) {
    CountResult res;
    forEachTupleWithUnion(sizes, orbit, [&](std::span<const YoungDiagram> tuple) {
        BreakdownTerm term;
        term.product = 1;
        for (size_t i = 0; i < sizes.size(); ++i) {
            long long f = factor(i, tuple);
            term.factors.push_back(f);
            term.product *= f;
            if (term.product == 0) break;
        }
        if (term.product == 0) return;
        term.tuple.assign(tuple.begin(), tuple.end());
        res.count += term.product;
        res.breakdown.push_back(std::move(term));
    });
    return res;
}

void checkArity(size_t coords, int rank, const char* family) {
    if (static_cast<int>(coords) != rank)
        throw std::invalid_argument(std::string(family) +
                                    ": the infinitesimal character needs exactly one "
                                    "coordinate per unit of rank");
}

void checkOrbitSize(const YoungDiagram& orbit, int rank, const char* family) {
    if (orbit.size() != rank)
        throw std::invalid_argument(std::string(family) + ": orbit partition must have size " +
                                    std::to_string(rank));
}

}  // namespace

CountResult countGlr(std::span<const Coordinate> nu, const YoungDiagram& orbit) {
    checkOrbitSize(orbit, static_cast<int>(nu.size()), "GLR");
    auto blocks = integralBlocks(nu);
    std::vector<int> sizes;
    for (const auto& b : blocks) sizes.push_back(b.size);
    return tupleSum(sizes, orbit, [&](size_t i, std::span<const YoungDiagram> tuple) {
        return countPaintings(tuple[i], PaintingType::AR) *
               countAssignments(tuple[i], blocks[i].mult);
    });
}

CountResult countGlh(std::span<const Coordinate> nu, const YoungDiagram& orbit) {
    if (nu.size() % 2 != 0)
        throw std::invalid_argument("GLH: the rank must be even");
    checkOrbitSize(orbit, static_cast<int>(nu.size()), "GLH");
    auto blocks = integralBlocks(nu);
    for (const auto& b : blocks)
        if (b.size % 2 != 0) return CountResult{};  // an odd class kills every orbit
    std::vector<int> sizes;
    for (const auto& b : blocks) sizes.push_back(b.size);
    return tupleSum(sizes, orbit, [&](size_t i, std::span<const YoungDiagram> tuple) {
        return countPaintings(tuple[i], PaintingType::AH) *
               countAssignments(tuple[i], blocks[i].mult);
    });
}

CountResult countGlc(std::span<const Coordinate> left, std::span<const Coordinate> right,
                     const YoungDiagram& orbitLeft, const YoungDiagram& orbitRight,
                     const CountOptions&) {
    if (left.size() != right.size())
        throw std::invalid_argument("GLC: the two coordinate lists must have equal lengths");
    checkOrbitSize(orbitLeft, static_cast<int>(left.size()), "GLC");
    checkOrbitSize(orbitRight, static_cast<int>(right.size()), "GLC");
    auto matched = classifyGlc(left, right);
    if (!matched) return CountResult{};
    if (!(orbitLeft == orbitRight)) return CountResult{};
    std::vector<int> sizes;
    for (const auto& [L, R] : *matched) sizes.push_back(L.size);
    return tupleSum(sizes, orbitLeft, [&](size_t i, std::span<const YoungDiagram> tuple) {
        return countAssignments(tuple[i], (*matched)[i].first.mult) *
               countAssignments(tuple[i], (*matched)[i].second.mult);
    });
}

CountResult countU(int p, int q, std::span<const Coordinate> nu, const YoungDiagram& orbit,
                   const CountOptions& opts) {
    if (p < 0 || q < 0) throw std::invalid_argument("U: signature must be nonnegative");
    checkArity(nu.size(), p + q, "U");
    checkOrbitSize(orbit, p + q, "U");
    if (p == 0 && q == 0) {
        CountResult res;
        res.count = orbit.empty() ? 1 : 0;
        if (res.count)
            res.breakdown.push_back(BreakdownTerm{{}, {}, 1});
        return res;
    }
    auto dec = classifyU(nu, p, q);
    if (!dec) return CountResult{};

    bool singleLam = dec->lam && !dec->lamp && dec->pairs.empty();
    bool singleLamp = dec->lamp && !dec->lam && dec->pairs.empty();
    if (singleLam) {
        CountResult res;
        long long paint = countPaintingsASignature(orbit, p, q);
        long long assign = countAssignments(orbit, dec->lam->mult);
        res.count = paint * assign;
        if (res.count) res.breakdown.push_back(BreakdownTerm{{orbit}, {paint, assign}, res.count});
        return res;
    }
    if (singleLamp) {
        // classifyU already enforced p == q through the residual signature.
        CountResult res;
        long long paint = countPaintings(orbit, PaintingType::ADegenerate);
        long long assign = countAssignments(orbit, dec->lamp->mult);
        res.count = paint * assign;
        if (res.count) res.breakdown.push_back(BreakdownTerm{{orbit}, {paint, assign}, res.count});
        return res;
    }

    int e = dec->lam ? dec->lam->size : 0;
    int ep = dec->lamp ? dec->lamp->size : 0;
    std::vector<Coordinate> lamCoords = dec->lam ? dec->lam->coords : std::vector<Coordinate>{};
    std::vector<Coordinate> lampCoords = dec->lamp ? dec->lamp->coords : std::vector<Coordinate>{};
    if ((p + q) % 2 != 0) lampCoords = shifted(lampCoords, opts.muOffset);

    std::vector<int> sizes = {e, ep};
    for (const auto& pr : dec->pairs) {
        sizes.push_back(pr.first.size);
        sizes.push_back(pr.first.size);
    }

    auto subU = [&](int sp, int sq, std::span<const Coordinate> coords,
                    const YoungDiagram& subOrbit) -> long long {
        if (subOrbit.size() != sp + sq) return 0;  // only reachable under USwap::Verbatim
        return countU(sp, sq, coords, subOrbit, opts).count;
    };

    return tupleSum(sizes, orbit, [&](size_t i, std::span<const YoungDiagram> tuple) -> long long {
        const YoungDiagram& lamOrbit = (opts.uSwap == USwap::Verbatim) ? tuple[1] : tuple[0];
        const YoungDiagram& lampOrbit = (opts.uSwap == USwap::Verbatim) ? tuple[0] : tuple[1];
        if (i == 0) return subU(dec->pRes, dec->qRes, lamCoords, lamOrbit);
        if (i == 1) return subU(ep / 2, ep / 2, lampCoords, lampOrbit);
        size_t pairIndex = (i - 2) / 2;
        if ((i - 2) % 2 != 0) return 1;  // the pair factor is attached to the even slot
        const auto& pr = dec->pairs[pairIndex];
        std::vector<Coordinate> second = pr.second.coords;
        if (opts.glcPairSign == GlcPairSign::NegateSecond) {
            for (auto& c : second) c = negated(c);
        }
        return countGlc(pr.first.coords, second, tuple[i], tuple[i + 1], opts).count;
    });
}

CountResult countUGenuine(int p, int q, std::span<const Coordinate> nu,
                          const YoungDiagram& orbit, const CountOptions& opts) {
    auto twisted = shifted(nu, opts.muOffset);
    return countU(p, q, twisted, orbit, opts);
}

CountResult count(const GroupSpec& group, const NuSpec& nu, const OrbitSpec& orbit,
                  const CountOptions& opts) {
    switch (group.family) {
        case Family::Glr:
            checkArity(nu.left.size(), group.n, "GLR");
            if (orbit.second) throw std::invalid_argument("GLR: orbit must be a single partition");
            return countGlr(nu.left, orbit.first);
        case Family::Glh:
            checkArity(nu.left.size(), group.n, "GLH");
            if (orbit.second) throw std::invalid_argument("GLH: orbit must be a single partition");
            return countGlh(nu.left, orbit.first);
        case Family::Glc: {
            checkArity(nu.left.size(), group.n, "GLC");
            checkArity(nu.right.size(), group.n, "GLC");
            if (!orbit.second)
                throw std::invalid_argument("GLC: orbit must be a pair of partitions");
            return countGlc(nu.left, nu.right, orbit.first, *orbit.second, opts);
        }
        case Family::U:
            if (orbit.second) throw std::invalid_argument("U: orbit must be a single partition");
            return countU(group.p, group.q, nu.left, orbit.first, opts);
        case Family::UGenuine:
            if (orbit.second)
                throw std::invalid_argument("UGEN: orbit must be a single partition");
            return countUGenuine(group.p, group.q, nu.left, orbit.first, opts);
    }
    throw std::logic_error("unreachable family");
}

namespace {

std::vector<OrbitSpec> allOrbits(const GroupSpec& group) {
    std::vector<OrbitSpec> orbits;
    int n = group.rank();
    if (group.family == Family::Glc) {
        for (const auto& a : enumeratePartitions(n))
            for (const auto& b : enumeratePartitions(n)) orbits.push_back(OrbitSpec{a, b});
    } else {
        for (const auto& a : enumeratePartitions(n)) orbits.push_back(OrbitSpec{a, std::nullopt});
    }
    return orbits;
}

}  // namespace

std::vector<TableEntry> countTable(const GroupSpec& group, const NuSpec& nu,
                                   const CountOptions& opts, int threads) {
    auto orbits = allOrbits(group);
    std::vector<TableEntry> table(orbits.size());
    parallelFor(static_cast<int>(orbits.size()), threads, [&](int i) {
        table[static_cast<size_t>(i)] =
            TableEntry{orbits[static_cast<size_t>(i)],
                       count(group, nu, orbits[static_cast<size_t>(i)], opts)};
    });
    return table;
}

namespace {

using OrbitKey = std::pair<YoungDiagram, YoungDiagram>;

OrbitKey keyOf(const OrbitSpec& o) {
    return {o.first, o.second ? *o.second : YoungDiagram()};
}

// Character-theoretic side of the verification: multiplicity sums
//   sum_sigma [1_{W_nu} : sigma] [sigma : Coh]
// evaluated per orbit, with the Kostka factors from the strip path and
// every coherent multiplicity from the Oracle route.
std::map<OrbitKey, long long> oracleTable(const GroupSpec& group, const NuSpec& nu,
                                          const CountOptions& opts) {
    std::map<OrbitKey, long long> table;
    int n = group.rank();

    auto scatterProduct = [&](const std::vector<int>& sizes,
                              const std::function<long long(size_t, std::span<const YoungDiagram>)>&
                                  factor) {
        // Enumerate the full product of diagram tuples and accumulate at
        // the row union; equivalent to per-orbit sums over Irr(W(Lambda); O).
        std::vector<YoungDiagram> tuple(sizes.size());
        auto rec = [&](auto&& self, size_t idx) -> void {
            if (idx == sizes.size()) {
                long long prod = 1;
                for (size_t i = 0; i < sizes.size() && prod; ++i) prod *= factor(i, tuple);
                if (prod) {
                    YoungDiagram u = rowUnion(tuple);
                    table[{u, YoungDiagram()}] += prod;
                }
                return;
            }
            for (const auto& d : enumeratePartitions(sizes[idx])) {
                tuple[idx] = d;
                self(self, idx + 1);
            }
        };
        rec(rec, 0);
    };

    switch (group.family) {
        case Family::Glr: {
            auto blocks = integralBlocks(nu.left);
            std::map<int, FormalRepSum> coh;
            std::vector<int> sizes;
            for (const auto& b : blocks) {
                sizes.push_back(b.size);
                if (!coh.count(b.size)) coh.emplace(b.size, cohGlr(b.size, CohMethod::Oracle));
            }
            scatterProduct(sizes, [&](size_t i, std::span<const YoungDiagram> t) {
                return kostkaViaPieri(t[i], blocks[i].mult) * coh.at(blocks[i].size).mult(t[i]);
            });
            break;
        }
        case Family::Glh: {
            auto blocks = integralBlocks(nu.left);
            bool anyOdd = std::any_of(blocks.begin(), blocks.end(),
                                      [](const IntegralBlock& b) { return b.size % 2 != 0; });
            if (anyOdd) break;  // empty parameter set: zero everywhere
            std::map<int, FormalRepSum> coh;
            std::vector<int> sizes;
            for (const auto& b : blocks) {
                sizes.push_back(b.size);
                if (!coh.count(b.size)) coh.emplace(b.size, cohGlh(b.size, CohMethod::Oracle));
            }
            scatterProduct(sizes, [&](size_t i, std::span<const YoungDiagram> t) {
                return kostkaViaPieri(t[i], blocks[i].mult) * coh.at(blocks[i].size).mult(t[i]);
            });
            break;
        }
        case Family::Glc: {
            auto matched = classifyGlc(nu.left, nu.right);
            if (!matched) break;
            size_t r = matched->size();
            std::vector<YoungDiagram> tl(r), tr(r);
            auto rec = [&](auto&& self, size_t idx) -> void {
                if (idx == r) {
                    long long prod = 1;
                    for (size_t i = 0; i < r && prod; ++i) {
                        prod *= kostkaViaPieri(tl[i], (*matched)[i].first.mult) *
                                kostkaViaPieri(tr[i], (*matched)[i].second.mult) *
                                cohGlcMult(tl[i], tr[i]);
                    }
                    if (prod) table[{rowUnion(tl), rowUnion(tr)}] += prod;
                    return;
                }
                for (const auto& a : enumeratePartitions((*matched)[idx].first.size)) {
                    tl[idx] = a;
                    for (const auto& b : enumeratePartitions((*matched)[idx].second.size)) {
                        tr[idx] = b;
                        self(self, idx + 1);
                    }
                }
            };
            rec(rec, 0);
            break;
        }
        case Family::U:
        case Family::UGenuine: {
            std::vector<Coordinate> coords(nu.left.begin(), nu.left.end());
            if (group.family == Family::UGenuine) coords = shifted(coords, opts.muOffset);
            auto dec = classifyU(coords, group.p, group.q);
            if (!dec) break;
            int e = dec->lam ? dec->lam->size : 0;
            int ep = dec->lamp ? dec->lamp->size : 0;
            FormalRepSum cohLam = cohU(dec->pRes, dec->qRes, CohMethod::Oracle, opts.cartanRange);
            FormalRepSum cohLamp = cohUHalf(ep / 2, CohMethod::Oracle);
            YoungDiagram lamMult = dec->lam ? dec->lam->mult : YoungDiagram();
            YoungDiagram lampMult = dec->lamp ? dec->lamp->mult : YoungDiagram();
            std::vector<int> sizes = {e, ep};
            for (const auto& pr : dec->pairs) {
                sizes.push_back(pr.first.size);
                sizes.push_back(pr.first.size);
            }
            scatterProduct(sizes, [&](size_t i, std::span<const YoungDiagram> t) -> long long {
                if (i == 0) return kostkaViaPieri(t[0], lamMult) * cohLam.mult(t[0]);
                if (i == 1) return kostkaViaPieri(t[1], lampMult) * cohLamp.mult(t[1]);
                size_t pairIndex = (i - 2) / 2;
                if ((i - 2) % 2 != 0) return 1;
                return kostkaViaPieri(t[i], dec->pairs[pairIndex].first.mult) *
                       kostkaViaPieri(t[i + 1], dec->pairs[pairIndex].second.mult) *
                       cohGlcMult(t[i], t[i + 1]);
            });
            break;
        }
    }
    (void)n;
    return table;
}

}  // namespace

VerifyReport verifyCounts(const GroupSpec& group, const NuSpec& nu, const CountOptions& opts,
                          int threads) {
    VerifyReport report;
    auto formula = countTable(group, nu, opts, threads);
    auto oracle = oracleTable(group, nu, opts);
    report.ok = true;
    for (const auto& entry : formula) {
        VerifyRow row;
        row.orbit = entry.orbit;
        row.formula = entry.result.count;
        auto it = oracle.find(keyOf(entry.orbit));
        row.oracle = (it == oracle.end()) ? 0 : it->second;
        row.ok = row.formula == row.oracle;
        if (!row.ok && report.ok) {
            report.ok = false;
            std::ostringstream os;
            os << group.toString() << " orbit " << entry.orbit.toString() << ": formula "
               << row.formula << " != oracle " << row.oracle << "; summands:";
            for (const auto& term : entry.result.breakdown) {
                os << " (";
                for (size_t i = 0; i < term.tuple.size(); ++i) {
                    if (i) os << ',';
                    os << term.tuple[i].toString();
                }
                os << ")->" << term.product;
            }
            report.mismatchDump = os.str();
        } else if (!row.ok) {
            report.ok = false;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace irrcount
