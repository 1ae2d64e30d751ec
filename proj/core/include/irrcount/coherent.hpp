#pragma once

#include "irrcount/sym_char.hpp"
#include "irrcount/young_diagram.hpp"

namespace irrcount {

// Every table below is computed by two independent routes:
//   Strips — Young-diagram strip combinatorics (branching + iterated
//            strip expansion),
//   Oracle — induced class functions decomposed against the exact
//            character table.
enum class CohMethod { Strips, Oracle };

// Range of the Cartan-class sum for the U(p,q) table.  Full is the range
// 0..min(p,q) used throughout; Halved (0..min(p,q)/2) exists only so the
// regression tests can pin the wrong variant down as wrong.
enum class CartanRange { Full, Halved };

// GL_n(R): sum over 2r+i <= n of the eps-induction from W_r x S_i x S_{n-2r-i}.
FormalRepSum cohGlr(int n, CohMethod method);

// GL_{n/2}(H): eps induced from W_{n/2}; even-column diagrams with
// multiplicity one.  Throws on odd n.
FormalRepSum cohGlh(int n, CohMethod method);

// GL_n(C): multiplicity of phi(a) x phi(b) in the diagonal induction,
// which is 1 iff a == b.  Throws on size mismatch.
long long cohGlcMult(const YoungDiagram& a, const YoungDiagram& b);

// U(p,q): sum over s of (1 on W_s) x sgn x sgn inductions.
FormalRepSum cohU(int p, int q, CohMethod method, CartanRange range = CartanRange::Full);

// U(p,p) at the half-shifted integral class: 1 induced from W_p;
// even-row diagrams with multiplicity one.
FormalRepSum cohUHalf(int p, CohMethod method);

struct CohSpec {
    enum class Family { Glr, Glh, Glc, U, UHalf };
    Family family = Family::Glr;
    int a = 0;  // n, or p
    int b = 0;  // q for U
};

}  // namespace irrcount
