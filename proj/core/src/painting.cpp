#include "irrcount/painting.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace irrcount {

char paintSymbolChar(PaintSymbol s) {
    switch (s) {
        case PaintSymbol::Bullet: return '*';
        case PaintSymbol::S: return 's';
        case PaintSymbol::R: return 'r';
        case PaintSymbol::C: return 'c';
        case PaintSymbol::D: return 'd';
    }
    return '?';
}

std::string paintSymbolUtf8(PaintSymbol s) {
    return s == PaintSymbol::Bullet ? "•" : std::string(1, paintSymbolChar(s));
}

namespace {

bool gridMatchesShape(const YoungDiagram& shape, const SymbolGrid& symbols) {
    if (static_cast<int>(symbols.size()) != shape.rowCount()) return false;
    for (int i = 1; i <= shape.rowCount(); ++i)
        if (static_cast<int>(symbols[static_cast<size_t>(i - 1)].size()) != shape.row(i))
            return false;
    return true;
}

// Boxes form a top-left-justified set, i.e. a Young diagram.
bool boxSetIsDiagram(const std::set<Box>& boxes) {
    for (const Box& b : boxes) {
        if (b.col > 1 && !boxes.count(Box{b.row, b.col - 1})) return false;
        if (b.row > 1 && !boxes.count(Box{b.row - 1, b.col})) return false;
    }
    return true;
}

YoungDiagram diagramFromBoxes(const std::set<Box>& boxes) {
    std::vector<int> rows;
    for (const Box& b : boxes) {
        if (b.row > static_cast<int>(rows.size())) rows.resize(static_cast<size_t>(b.row), 0);
        rows[static_cast<size_t>(b.row - 1)] = std::max(rows[static_cast<size_t>(b.row - 1)], b.col);
    }
    return YoungDiagram(std::move(rows));
}

}  // namespace

bool isValidPainting(const YoungDiagram& shape, const SymbolGrid& symbols) {
    if (!gridMatchesShape(shape, symbols)) return false;
    // Row/column uniqueness of s, r resp. c, d.
    for (int i = 1; i <= shape.rowCount(); ++i) {
        int nS = 0, nR = 0;
        for (int j = 1; j <= shape.row(i); ++j) {
            PaintSymbol s = symbols[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            nS += s == PaintSymbol::S;
            nR += s == PaintSymbol::R;
        }
        if (nS > 1 || nR > 1) return false;
    }
    for (int j = 1; j <= shape.columnCount(); ++j) {
        int nC = 0, nD = 0;
        for (int i = 1; i <= shape.column(j); ++i) {
            PaintSymbol s = symbols[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            nC += s == PaintSymbol::C;
            nD += s == PaintSymbol::D;
        }
        if (nC > 1 || nD > 1) return false;
    }
    // Staged removals leave Young diagrams.
    const std::array<std::set<PaintSymbol>, 4> removals = {
        std::set<PaintSymbol>{PaintSymbol::D},
        std::set<PaintSymbol>{PaintSymbol::C, PaintSymbol::D},
        std::set<PaintSymbol>{PaintSymbol::R, PaintSymbol::C, PaintSymbol::D},
        std::set<PaintSymbol>{PaintSymbol::S, PaintSymbol::R, PaintSymbol::C, PaintSymbol::D}};
    for (const auto& removed : removals) {
        std::set<Box> remaining;
        for (int i = 1; i <= shape.rowCount(); ++i)
            for (int j = 1; j <= shape.row(i); ++j)
                if (!removed.count(symbols[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]))
                    remaining.insert(Box{i, j});
        if (!boxSetIsDiagram(remaining)) return false;
    }
    return true;
}

bool isValidPaintingChain(const YoungDiagram& shape, const SymbolGrid& symbols) {
    if (!gridMatchesShape(shape, symbols)) return false;
    std::array<std::set<Box>, 4> layers;  // kappa_0 .. kappa_3
    for (int i = 1; i <= shape.rowCount(); ++i) {
        for (int j = 1; j <= shape.row(i); ++j) {
            PaintSymbol s = symbols[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            Box b{i, j};
            if (s == PaintSymbol::Bullet) layers[0].insert(b);
            if (s == PaintSymbol::Bullet || s == PaintSymbol::S) layers[1].insert(b);
            if (s != PaintSymbol::C && s != PaintSymbol::D) layers[2].insert(b);
            if (s != PaintSymbol::D) layers[3].insert(b);
        }
    }
    for (const auto& layer : layers)
        if (!boxSetIsDiagram(layer)) return false;
    YoungDiagram k0 = diagramFromBoxes(layers[0]);
    YoungDiagram k1 = diagramFromBoxes(layers[1]);
    YoungDiagram k2 = diagramFromBoxes(layers[2]);
    YoungDiagram k3 = diagramFromBoxes(layers[3]);
    return isVerticalStrip(k0, k1) && isVerticalStrip(k1, k2) &&
           isHorizontalStrip(k2, k3) && isHorizontalStrip(k3, shape);
}

Painting::Painting(YoungDiagram shape, SymbolGrid symbols)
    : shape_(std::move(shape)), symbols_(std::move(symbols)) {
    if (!isValidPainting(shape_, symbols_))
        throw std::invalid_argument("not a valid painting on " + shape_.toString());
}

int Painting::countSymbol(PaintSymbol s) const {
    int n = 0;
    for (const auto& row : symbols_)
        n += static_cast<int>(std::count(row.begin(), row.end(), s));
    return n;
}

namespace {

// A painting of type AR or A is determined by its chain of sub-diagrams;
// fill the grid back from the chain.
SymbolGrid gridFromChain(const YoungDiagram& shape, const YoungDiagram& k0,
                         const YoungDiagram& k1, const YoungDiagram& k2,
                         const YoungDiagram& k3) {
    SymbolGrid grid(static_cast<size_t>(shape.rowCount()));
    for (int i = 1; i <= shape.rowCount(); ++i) {
        auto& row = grid[static_cast<size_t>(i - 1)];
        row.resize(static_cast<size_t>(shape.row(i)));
        for (int j = 1; j <= shape.row(i); ++j) {
            PaintSymbol s;
            if (j <= k0.row(i))
                s = PaintSymbol::Bullet;
            else if (j <= k1.row(i))
                s = PaintSymbol::S;
            else if (j <= k2.row(i))
                s = PaintSymbol::R;
            else if (j <= k3.row(i))
                s = PaintSymbol::C;
            else
                s = PaintSymbol::D;
            row[static_cast<size_t>(j - 1)] = s;
        }
    }
    return grid;
}

struct Chain {
    YoungDiagram k0, k1, k2, k3;
    auto key() const { return std::tie(k0, k1, k2, k3); }
};

// Type AR: no s/r boxes, so kappa_0 = kappa_1 = kappa_2 with even columns;
// the c and d layers are horizontal strips.
std::vector<Chain> chainsAR(const YoungDiagram& shape) {
    std::vector<Chain> chains;
    for (const auto& k3 : horizontalStripSubdiagrams(shape))
        for (const auto& k2 : horizontalStripSubdiagrams(k3))
            if (k2.allColumnsEven()) chains.push_back(Chain{k2, k2, k2, k3});
    return chains;
}

// Type A: no c/d boxes, so kappa_2 = kappa_3 = shape; kappa_0 has even
// rows and the s and r layers are vertical strips.
std::vector<Chain> chainsA(const YoungDiagram& shape) {
    std::vector<Chain> chains;
    for (const auto& k0 : subDiagrams(shape)) {
        if (!k0.allRowsEven()) continue;
        for (const auto& k1 : verticalStripsBetween(k0, shape))
            chains.push_back(Chain{k0, k1, shape, shape});
    }
    return chains;
}

std::vector<Chain> chainsFor(const YoungDiagram& shape, PaintingType type) {
    std::vector<Chain> chains;
    switch (type) {
        case PaintingType::AR:
            chains = chainsAR(shape);
            break;
        case PaintingType::A:
            chains = chainsA(shape);
            break;
        case PaintingType::AH:
            if (shape.allColumnsEven()) chains.push_back(Chain{shape, shape, shape, shape});
            break;
        case PaintingType::ADegenerate:
            if (shape.allRowsEven()) chains.push_back(Chain{shape, shape, shape, shape});
            break;
    }
    std::sort(chains.begin(), chains.end(),
              [](const Chain& a, const Chain& b) { return a.key() < b.key(); });
    return chains;
}

Signature chainSignature(const YoungDiagram& shape, const Chain& c) {
    int bullets = c.k0.size();
    int s = c.k1.size() - c.k0.size();
    int r = shape.size() - c.k1.size();
    return Signature{bullets / 2 + s, bullets / 2 + r};
}

}  // namespace

std::vector<Painting> enumeratePaintings(const YoungDiagram& shape, PaintingType type) {
    std::vector<Painting> out;
    for (const Chain& c : chainsFor(shape, type))
        out.emplace_back(shape, gridFromChain(shape, c.k0, c.k1, c.k2, c.k3));
    return out;
}

long long countPaintings(const YoungDiagram& shape, PaintingType type) {
    return static_cast<long long>(chainsFor(shape, type).size());
}

Signature signature(const Painting& painting) {
    if (painting.countSymbol(PaintSymbol::C) > 0 || painting.countSymbol(PaintSymbol::D) > 0)
        throw std::invalid_argument("signature is defined for type-A paintings only");
    int bullets = painting.countSymbol(PaintSymbol::Bullet);
    return Signature{bullets / 2 + painting.countSymbol(PaintSymbol::S),
                     bullets / 2 + painting.countSymbol(PaintSymbol::R)};
}

long long countPaintingsASignature(const YoungDiagram& shape, int p, int q) {
    if (p < 0 || q < 0 || p + q != shape.size())
        throw std::invalid_argument("signature must satisfy p + q = |shape|");
    long long n = 0;
    for (const Chain& c : chainsFor(shape, PaintingType::A))
        if (chainSignature(shape, c) == Signature{p, q}) ++n;
    return n;
}

}  // namespace irrcount
