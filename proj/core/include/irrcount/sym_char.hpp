#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

#include "irrcount/young_diagram.hpp"

namespace irrcount {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// Centralizer order z_mu = prod_k k^{m_k} m_k! of a cycle type.
BigInt zOrder(const YoungDiagram& cycleType);
// Conjugacy class size n!/z_mu.
BigInt classSize(const YoungDiagram& cycleType);

// Index of mu within enumeratePartitions(|mu|).
int partitionIndex(const YoungDiagram& mu);

// chi^shape(cycleType), exact, via the border-strip recursion.  Tables
// are memoized per degree; safe for concurrent use.
BigInt characterValue(const YoungDiagram& shape, const YoungDiagram& cycleType);

BigInt dimensionOf(const YoungDiagram& shape);

/*
 * An exact integer-valued class function on S_n, stored densely over the
 * conjugacy classes (partitions of n in canonical order).
 */
class ClassFunction {
public:
    explicit ClassFunction(int degree);

    int degree() const { return degree_; }
    int classCount() const { return static_cast<int>(values_.size()); }

    const BigInt& value(int classIndex) const { return values_[static_cast<size_t>(classIndex)]; }
    const BigInt& value(const YoungDiagram& cycleType) const;
    void set(int classIndex, BigInt v) { values_[static_cast<size_t>(classIndex)] = std::move(v); }
    void set(const YoungDiagram& cycleType, BigInt v);

    ClassFunction& operator+=(const ClassFunction& other);

    static ClassFunction trivial(int degree);
    static ClassFunction sign(int degree);
    static ClassFunction irreducible(const YoungDiagram& shape);

    bool operator==(const ClassFunction&) const = default;

private:
    int degree_;
    std::vector<BigInt> values_;
};

// (1/n!) sum_mu |class(mu)| f(mu) g(mu), exact.
BigRat innerProduct(const ClassFunction& f, const ClassFunction& g);

// Induction from a Young subgroup S_{n_1} x ... x S_{n_k} of the outer
// product of the given class functions, by the class-splitting formula.
ClassFunction induceYoung(const std::vector<ClassFunction>& parts);

struct YoungPart {
    enum class Kind { Trivial, Sign, Irreducible };
    int size = 0;
    Kind kind = Kind::Trivial;
    YoungDiagram shape;  // Irreducible only
};
ClassFunction induceYoung(const std::vector<YoungPart>& parts);

/*
 * The hyperoctahedral group W_r = S_r x| {+-1}^r sits inside S_{2r}: a
 * positive l-cycle becomes two l-cycles, a negative l-cycle one 2l-cycle.
 * Conjugacy classes are pairs of partitions (positive, negative) with
 * |positive| + |negative| = r.
 */
struct SignedClassType {
    YoungDiagram positive;
    YoungDiagram negative;
    bool operator==(const SignedClassType&) const = default;
};

std::vector<SignedClassType> hyperoctClasses(int r);
BigInt hyperoctOrder(int r);                               // 2^r r!
BigInt hyperoctClassSize(int r, const SignedClassType&);   // |W_r| / z
YoungDiagram hyperoctEmbeddedType(const SignedClassType&); // cycle type in S_{2r}

enum class HyperChar { Eps, Trivial };

// The character of S_{2r} induced from eps (product of signs) or 1 on
// W_r, computed directly from W_r class data.
ClassFunction hyperoctInduced(int r, HyperChar which);

/*
 * A formal nonnegative-integer combination of irreducible representations
 * of S_n, indexed by Young diagrams.
 */
class FormalRepSum {
public:
    explicit FormalRepSum(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    long long mult(const YoungDiagram& shape) const;
    void add(const YoungDiagram& shape, long long m);
    const std::map<YoungDiagram, long long>& terms() const { return terms_; }
    BigInt dimension() const;

    bool operator==(const FormalRepSum&) const = default;

private:
    int degree_;
    std::map<YoungDiagram, long long> terms_;  // zero entries absent
};

// Multiplicity extraction <f, chi^iota> over all iota.  Throws
// std::logic_error on a non-integral or negative multiplicity (that would
// be an internal inconsistency, never a user error).
FormalRepSum decompose(const ClassFunction& f);
ClassFunction recompose(const FormalRepSum&);

}  // namespace irrcount
