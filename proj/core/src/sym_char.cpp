#include "irrcount/sym_char.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace irrcount {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

BigInt zOrder(const YoungDiagram& cycleType) {
    std::map<int, int> mult;
    for (int r : cycleType.rows()) ++mult[r];
    BigInt z = 1;
    for (auto [len, m] : mult) {
        for (int i = 0; i < m; ++i) z *= len;
        z *= factorial(m);
    }
    return z;
}

BigInt classSize(const YoungDiagram& cycleType) {
    return factorial(cycleType.size()) / zOrder(cycleType);
}

int partitionIndex(const YoungDiagram& mu) {
    const auto& all = enumeratePartitions(mu.size());
    auto it = std::lower_bound(all.begin(), all.end(), mu);
    return static_cast<int>(it - all.begin());
}

namespace {

/*
 * Murnaghan-Nakayama through beta-numbers: with B = {lambda_i + L - i},
 * removing a border strip of length t amounts to replacing some b in B by
 * b - t (not already present); the sign is (-1)^{#B in (b-t, b)}.
 */
struct MnKey {
    std::vector<int> shape;
    int cycleIndex;
    bool operator<(const MnKey& o) const {
        if (cycleIndex != o.cycleIndex) return cycleIndex < o.cycleIndex;
        return shape < o.shape;
    }
};

BigInt mnRecurse(const std::vector<int>& shape, const std::vector<int>& cycles, int idx,
                 std::map<MnKey, BigInt>& memo) {
    if (shape.empty()) return 1;
    MnKey key{shape, idx};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int t = cycles[static_cast<size_t>(idx)];
    int L = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < L; ++i) beta[static_cast<size_t>(i)] = shape[static_cast<size_t>(i)] + (L - 1 - i);

    BigInt total = 0;
    for (int i = 0; i < L; ++i) {
        int b = beta[static_cast<size_t>(i)];
        int nb = b - t;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int height = 0;
        for (int x : beta)
            if (x > nb && x < b) ++height;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nshape;
        for (int j = 0; j < L; ++j) {
            int part = nbeta[static_cast<size_t>(j)] - (L - 1 - j);
            if (part > 0) nshape.push_back(part);
        }
        BigInt sub = mnRecurse(nshape, cycles, idx + 1, memo);
        if (height % 2)
            total -= sub;
        else
            total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

// Full character table of S_n: rows indexed by shapes, columns by cycle
// types, both in canonical order.  Built once per degree under a lock;
// read-only afterwards.
struct CharacterTable {
    int degree = 0;
    std::vector<std::vector<BigInt>> values;  // [shapeIndex][classIndex]
};

const CharacterTable& characterTable(int n) {
    static std::mutex mutex;
    static std::map<int, CharacterTable> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const auto& parts = enumeratePartitions(n);
    CharacterTable table;
    table.degree = n;
    table.values.assign(parts.size(), std::vector<BigInt>(parts.size()));
    for (size_t c = 0; c < parts.size(); ++c) {
        std::map<MnKey, BigInt> memo;
        const std::vector<int>& cycles = parts[c].rows();
        for (size_t s = 0; s < parts.size(); ++s)
            table.values[s][c] = mnRecurse(parts[s].rows(), cycles, 0, memo);
    }
    return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace

BigInt characterValue(const YoungDiagram& shape, const YoungDiagram& cycleType) {
    if (shape.size() != cycleType.size())
        throw std::invalid_argument("character value needs |shape| = |cycle type|");
    const CharacterTable& table = characterTable(shape.size());
    return table.values[static_cast<size_t>(partitionIndex(shape))]
                       [static_cast<size_t>(partitionIndex(cycleType))];
}

BigInt dimensionOf(const YoungDiagram& shape) {
    std::vector<int> ones(static_cast<size_t>(shape.size()), 1);
    return characterValue(shape, YoungDiagram(std::move(ones)));
}

ClassFunction::ClassFunction(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("class function degree must be nonnegative");
    values_.assign(enumeratePartitions(degree).size(), BigInt(0));
}

const BigInt& ClassFunction::value(const YoungDiagram& cycleType) const {
    if (cycleType.size() != degree_)
        throw std::invalid_argument("cycle type has the wrong degree");
    return values_[static_cast<size_t>(partitionIndex(cycleType))];
}

void ClassFunction::set(const YoungDiagram& cycleType, BigInt v) {
    if (cycleType.size() != degree_)
        throw std::invalid_argument("cycle type has the wrong degree");
    values_[static_cast<size_t>(partitionIndex(cycleType))] = std::move(v);
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
    if (other.degree_ != degree_)
        throw std::invalid_argument("cannot add class functions of different degrees");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

ClassFunction ClassFunction::trivial(int degree) {
    ClassFunction f(degree);
    for (size_t i = 0; i < f.values_.size(); ++i) f.values_[i] = 1;
    return f;
}

ClassFunction ClassFunction::sign(int degree) {
    ClassFunction f(degree);
    const auto& parts = enumeratePartitions(degree);
    for (size_t i = 0; i < parts.size(); ++i) {
        // sgn of a permutation with cycle type mu is (-1)^{n - #cycles}.
        int exponent = degree - parts[i].rowCount();
        f.values_[i] = (exponent % 2) ? -1 : 1;
    }
    return f;
}

ClassFunction ClassFunction::irreducible(const YoungDiagram& shape) {
    const CharacterTable& table = characterTable(shape.size());
    ClassFunction f(shape.size());
    f.values_ = table.values[static_cast<size_t>(partitionIndex(shape))];
    return f;
}

BigRat innerProduct(const ClassFunction& f, const ClassFunction& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("inner product needs equal degrees");
    const auto& parts = enumeratePartitions(f.degree());
    BigInt sum = 0;
    for (size_t i = 0; i < parts.size(); ++i)
        sum += classSize(parts[i]) * f.value(static_cast<int>(i)) * g.value(static_cast<int>(i));
    return BigRat(sum, factorial(f.degree()));
}

namespace {

BigInt multinomial(int m, std::span<const int> split) {
    BigInt r = factorial(m);
    for (int a : split) r /= factorial(a);
    return r;
}

}  // namespace

ClassFunction induceYoung(const std::vector<ClassFunction>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.degree();
    ClassFunction result(n);
    const auto& classes = enumeratePartitions(n);
    size_t k = parts.size();

    for (size_t ci = 0; ci < classes.size(); ++ci) {
        const YoungDiagram& mu = classes[ci];
        // Distinct cycle lengths with multiplicities.
        std::vector<std::pair<int, int>> lengths;
        for (int r : mu.rows()) {
            if (!lengths.empty() && lengths.back().first == r)
                ++lengths.back().second;
            else
                lengths.emplace_back(r, 1);
        }
        std::vector<int> capacity(k);
        for (size_t j = 0; j < k; ++j) capacity[j] = parts[j].degree();
        std::vector<std::vector<int>> assigned(k);  // cycle lengths per factor
        BigInt total = 0;

        auto rec = [&](auto&& self, size_t li, BigInt coeff) -> void {
            if (li == lengths.size()) {
                BigInt term = coeff;
                for (size_t j = 0; j < k; ++j) {
                    YoungDiagram type(assigned[j]);
                    term *= parts[j].value(type);
                    if (term == 0) break;
                }
                total += term;
                return;
            }
            auto [len, m] = lengths[li];
            std::vector<int> split(k, 0);
            auto distribute = [&](auto&& dself, size_t j, int remaining) -> void {
                if (j + 1 == k) {
                    if (remaining * len > capacity[j]) return;
                    split[j] = remaining;
                    for (size_t jj = 0; jj < k; ++jj) {
                        capacity[jj] -= split[jj] * len;
                        for (int c = 0; c < split[jj]; ++c) assigned[jj].push_back(len);
                    }
                    self(self, li + 1, coeff * multinomial(m, split));
                    for (size_t jj = 0; jj < k; ++jj) {
                        capacity[jj] += split[jj] * len;
                        for (int c = 0; c < split[jj]; ++c) assigned[jj].pop_back();
                    }
                    return;
                }
                for (int a = 0; a <= remaining && a * len <= capacity[j]; ++a) {
                    split[j] = a;
                    dself(dself, j + 1, remaining - a);
                }
                split[j] = 0;
            };
            if (k == 0) return;
            distribute(distribute, 0, m);
        };
        if (k == 0) {
            total = (n == 0) ? 1 : 0;
        } else {
            rec(rec, 0, 1);
        }
        result.set(static_cast<int>(ci), total);
    }
    return result;
}

ClassFunction induceYoung(const std::vector<YoungPart>& parts) {
    std::vector<ClassFunction> fns;
    fns.reserve(parts.size());
    for (const auto& p : parts) {
        switch (p.kind) {
            case YoungPart::Kind::Trivial: fns.push_back(ClassFunction::trivial(p.size)); break;
            case YoungPart::Kind::Sign: fns.push_back(ClassFunction::sign(p.size)); break;
            case YoungPart::Kind::Irreducible:
                if (p.shape.size() != p.size)
                    throw std::invalid_argument("irreducible factor size mismatch");
                fns.push_back(ClassFunction::irreducible(p.shape));
                break;
        }
    }
    return induceYoung(fns);
}

std::vector<SignedClassType> hyperoctClasses(int r) {
    std::vector<SignedClassType> out;
    for (int a = r; a >= 0; --a)
        for (const auto& pos : enumeratePartitions(a))
            for (const auto& neg : enumeratePartitions(r - a))
                out.push_back(SignedClassType{pos, neg});
    return out;
}

BigInt hyperoctOrder(int r) {
    BigInt o = factorial(r);
    o <<= r;
    return o;
}

namespace {

// Centralizer order of the class (alpha, beta) in W_r:
// prod_l (2l)^{m_l(alpha)} m_l(alpha)! * prod_l (2l)^{m_l(beta)} m_l(beta)!.
BigInt hyperoctZ(const YoungDiagram& part) {
    std::map<int, int> mult;
    for (int r : part.rows()) ++mult[r];
    BigInt z = 1;
    for (auto [len, m] : mult) {
        for (int i = 0; i < m; ++i) z *= 2 * len;
        z *= factorial(m);
    }
    return z;
}

}  // namespace

BigInt hyperoctClassSize(int r, const SignedClassType& c) {
    return hyperoctOrder(r) / (hyperoctZ(c.positive) * hyperoctZ(c.negative));
}

YoungDiagram hyperoctEmbeddedType(const SignedClassType& c) {
    std::vector<int> cycles;
    for (int l : c.positive.rows()) {
        cycles.push_back(l);
        cycles.push_back(l);
    }
    for (int l : c.negative.rows()) cycles.push_back(2 * l);
    std::sort(cycles.begin(), cycles.end(), std::greater<int>());
    return YoungDiagram(std::move(cycles));
}

ClassFunction hyperoctInduced(int r, HyperChar which) {
    if (r < 0) throw std::invalid_argument("hyperoctahedral rank must be nonnegative");
    ClassFunction result(2 * r);
    const BigInt order = hyperoctOrder(r);
    std::map<YoungDiagram, BigRat> sums;  // sum of chi(c)/z(c) per embedded type
    for (const auto& c : hyperoctClasses(r)) {
        BigInt chi = 1;
        if (which == HyperChar::Eps && c.negative.rowCount() % 2) chi = -1;
        BigRat contrib(chi, hyperoctZ(c.positive) * hyperoctZ(c.negative));
        sums[hyperoctEmbeddedType(c)] += contrib;
    }
    for (const auto& [type, sum] : sums) {
        BigRat value = BigRat(zOrder(type)) * sum;
        if (boost::multiprecision::denominator(value) != 1)
            throw std::logic_error("induced hyperoctahedral character is not integral");
        result.set(type, BigInt(boost::multiprecision::numerator(value)));
    }
    return result;
}

long long FormalRepSum::mult(const YoungDiagram& shape) const {
    auto it = terms_.find(shape);
    return it == terms_.end() ? 0 : it->second;
}

void FormalRepSum::add(const YoungDiagram& shape, long long m) {
    if (shape.size() != degree_)
        throw std::invalid_argument("formal sum term has the wrong degree");
    if (m == 0) return;
    long long& slot = terms_[shape];
    slot += m;
    if (slot == 0) terms_.erase(shape);
}

BigInt FormalRepSum::dimension() const {
    BigInt d = 0;
    for (const auto& [shape, m] : terms_) d += BigInt(m) * dimensionOf(shape);
    return d;
}

FormalRepSum decompose(const ClassFunction& f) {
    FormalRepSum sum(f.degree());
    for (const auto& shape : enumeratePartitions(f.degree())) {
        BigRat m = innerProduct(f, ClassFunction::irreducible(shape));
        if (boost::multiprecision::denominator(m) != 1)
            throw std::logic_error("non-integral multiplicity in decomposition");
        BigInt mi(boost::multiprecision::numerator(m));
        if (mi < 0) throw std::logic_error("negative multiplicity in decomposition");
        if (mi > std::numeric_limits<long long>::max())
            throw std::logic_error("multiplicity out of range");
        sum.add(shape, static_cast<long long>(mi));
    }
    return sum;
}

ClassFunction recompose(const FormalRepSum& sum) {
    ClassFunction f(sum.degree());
    for (const auto& [shape, m] : sum.terms()) {
        ClassFunction chi = ClassFunction::irreducible(shape);
        for (int i = 0; i < f.classCount(); ++i) f.set(i, f.value(i) + BigInt(m) * chi.value(i));
    }
    return f;
}

}  // namespace irrcount
