#pragma once

#include <string>
#include <vector>

#include "irrcount/young_diagram.hpp"

namespace irrcount {

// The five painting symbols.  AR paintings use {•,c,d}, AH only {•},
// A paintings {•,s,r}; degenerate A paintings are all-•.
enum class PaintSymbol { Bullet, S, R, C, D };

enum class PaintingType { AR, AH, A, ADegenerate };

char paintSymbolChar(PaintSymbol s);                 // '*','s','r','c','d'
std::string paintSymbolUtf8(PaintSymbol s);          // "•","s","r","c","d"

struct Signature {
    int p = 0;
    int q = 0;
    bool operator==(const Signature&) const = default;
};

using SymbolGrid = std::vector<std::vector<PaintSymbol>>;

// Validity per the defining conditions: removing the boxes painted {d},
// then {c,d}, then {r,c,d}, then {s,r,c,d} leaves a Young diagram at every
// stage; each row holds at most one s and one r; each column at most one c
// and one d.  The grid must cover exactly the boxes of shape.
bool isValidPainting(const YoungDiagram& shape, const SymbolGrid& symbols);

// Equivalent formulation through the nested chain of sub-diagrams
// kappa_0 (•) <= kappa_1 (+s) <= kappa_2 (+r) <= kappa_3 (+c) <= shape,
// with vertical strips at the s/r stages and horizontal strips at the c/d
// stages.  Kept separate so the two readings can be cross-checked.
bool isValidPaintingChain(const YoungDiagram& shape, const SymbolGrid& symbols);

class Painting {
public:
    // Throws std::invalid_argument unless symbols is a valid painting on shape.
    Painting(YoungDiagram shape, SymbolGrid symbols);

    const YoungDiagram& shape() const { return shape_; }
    const SymbolGrid& symbols() const { return symbols_; }
    PaintSymbol at(int row1, int col1) const {
        return symbols_[static_cast<size_t>(row1 - 1)][static_cast<size_t>(col1 - 1)];
    }
    int countSymbol(PaintSymbol s) const;

    bool operator==(const Painting& other) const {
        return shape_ == other.shape_ && symbols_ == other.symbols_;
    }

private:
    YoungDiagram shape_;
    SymbolGrid symbols_;
};

// All paintings of the given type, each exactly once, ordered by the
// chain (kappa_0, kappa_1, kappa_2, kappa_3) in the canonical diagram order.
std::vector<Painting> enumeratePaintings(const YoungDiagram& shape, PaintingType type);

long long countPaintings(const YoungDiagram& shape, PaintingType type);

// Signature (p,q) = (#•/2 + #s, #•/2 + #r) of a type-A painting.
// Throws std::invalid_argument if the painting contains c or d.
Signature signature(const Painting& painting);

// Number of type-A paintings with signature exactly (p,q); requires
// p + q = |shape|.
long long countPaintingsASignature(const YoungDiagram& shape, int p, int q);

}  // namespace irrcount
