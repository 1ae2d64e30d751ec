#include "irrcount/coordinate.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace irrcount {

namespace {

bool isIntegral(const BigRat& r) { return boost::multiprecision::denominator(r) == 1; }

// Fractional residue in [0,1).
BigRat residue(const BigRat& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    BigRat frac = r - BigRat(q);
    if (frac < 0) frac += 1;
    return frac;
}

struct CoordParser {
    std::string_view text;
    size_t pos = 0;

    void skipWs() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skipWs();
        return pos >= text.size();
    }
    char peek() {
        skipWs();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("bad coordinate '" + std::string(text) + "': " + what);
    }
    BigInt parseInt() {
        skipWs();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a digit");
        BigInt v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return v;
    }
    BigRat parseRational(bool neg) {
        BigInt num = parseInt();
        BigInt den = 1;
        if (peek() == '/') {
            ++pos;
            den = parseInt();
            if (den == 0) fail("zero denominator");
        }
        BigRat r(num, den);
        return neg ? -r : r;
    }
    std::string parseIdent() {
        skipWs();
        std::string id;
        if (pos >= text.size() || (!std::isalpha(static_cast<unsigned char>(text[pos])) && text[pos] != '_'))
            fail("expected an identifier");
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            id.push_back(text[pos]);
            ++pos;
        }
        return id;
    }
};

}  // namespace

Coordinate parseCoordinate(std::string_view text) {
    CoordParser p{text};
    Coordinate c;
    bool neg = false;
    if (p.peek() == '-') {
        neg = true;
        ++p.pos;
    }
    char next = p.peek();
    if (std::isalpha(static_cast<unsigned char>(next)) || next == '_') {
        c.tag = p.parseIdent();
        c.tagSign = neg ? -1 : +1;
        char op = p.peek();
        if (op == '+' || op == '-') {
            ++p.pos;
            c.offset = p.parseRational(op == '-');
        }
    } else {
        c.offset = p.parseRational(neg);
    }
    if (!p.eof()) p.fail("trailing characters");
    return c;
}

std::vector<Coordinate> parseCoordinateList(std::string_view text) {
    std::vector<Coordinate> out;
    size_t start = 0;
    bool sawAny = false;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            std::string_view piece = text.substr(start, i - start);
            size_t a = piece.find_first_not_of(" \t");
            if (a != std::string_view::npos) {
                out.push_back(parseCoordinate(piece));
                sawAny = true;
            } else if (sawAny || i < text.size()) {
                throw std::invalid_argument("empty coordinate in list: " + std::string(text));
            }
            start = i + 1;
        }
    }
    return out;
}

std::string formatCoordinate(const Coordinate& c) {
    std::ostringstream os;
    if (!c.tag.empty()) {
        if (c.tagSign < 0) os << '-';
        os << c.tag;
        if (c.offset != 0) {
            if (c.offset > 0) os << '+';
            os << c.offset;
        }
    } else {
        os << c.offset;
    }
    return os.str();
}

bool differenceIntegral(const Coordinate& a, const Coordinate& b) {
    if (a.tag != b.tag) return false;
    if (!a.tag.empty() && a.tagSign != b.tagSign) return false;
    return isIntegral(a.offset - b.offset);
}

bool sumIntegral(const Coordinate& a, const Coordinate& b) {
    if (a.tag != b.tag) return false;  // rational pairs with rational, x with x
    if (!a.tag.empty() && a.tagSign != -b.tagSign) return false;
    return isIntegral(a.offset + b.offset);
}

bool isHalfInteger(const Coordinate& a) {
    return a.tag.empty() && isIntegral(a.offset * 2);
}

Coordinate negated(const Coordinate& c) {
    Coordinate r = c;
    r.tagSign = -r.tagSign;
    r.offset = -r.offset;
    return r;
}

Coordinate shifted(const Coordinate& c, const BigRat& delta) {
    Coordinate r = c;
    r.offset += delta;
    return r;
}

std::vector<Coordinate> shifted(std::span<const Coordinate> coords, const BigRat& delta) {
    std::vector<Coordinate> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(shifted(c, delta));
    return out;
}

std::vector<IntegralBlock> integralBlocks(std::span<const Coordinate> coords) {
    std::vector<std::vector<Coordinate>> groups;
    for (const auto& c : coords) {
        bool placed = false;
        for (auto& g : groups) {
            if (differenceIntegral(c, g.front())) {
                g.push_back(c);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({c});
    }

    std::vector<IntegralBlock> blocks;
    for (auto& g : groups) {
        // Group equal values, order by multiplicity descending then value
        // descending, so the multiplicity partition reads off directly.
        std::vector<std::pair<Coordinate, int>> values;
        for (const auto& c : g) {
            bool found = false;
            for (auto& [v, m] : values) {
                if (v == c) {
                    ++m;
                    found = true;
                    break;
                }
            }
            if (!found) values.emplace_back(c, 1);
        }
        std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first.offset > b.first.offset;
        });
        IntegralBlock block;
        std::vector<int> mult;
        for (const auto& [v, m] : values) {
            mult.push_back(m);
            for (int i = 0; i < m; ++i) block.coords.push_back(v);
        }
        block.mult = YoungDiagram(std::move(mult));
        block.size = static_cast<int>(block.coords.size());
        blocks.push_back(std::move(block));
    }

    // Deterministic, permutation-invariant block order: rational classes
    // first by residue, then tagged classes by (tag, sign, residue).
    std::sort(blocks.begin(), blocks.end(), [](const IntegralBlock& a, const IntegralBlock& b) {
        const Coordinate& x = a.rep();
        const Coordinate& y = b.rep();
        if (x.tag.empty() != y.tag.empty()) return x.tag.empty();
        if (x.tag != y.tag) return x.tag < y.tag;
        if (!x.tag.empty() && x.tagSign != y.tagSign) return x.tagSign > y.tagSign;
        return residue(x.offset) < residue(y.offset);
    });
    return blocks;
}

std::optional<UDecomposition> classifyU(std::span<const Coordinate> coords, int p, int q) {
    int n = p + q;
    if (static_cast<int>(coords.size()) != n)
        throw std::invalid_argument("expected one coordinate per unit of rank");
    UDecomposition dec;
    BigRat lamClass(n - 1, 2);
    BigRat lampClass(n, 2);
    std::vector<IntegralBlock> generic;
    for (auto& block : integralBlocks(coords)) {
        if (block.rep().isRational() && isIntegral(block.rep().offset - lamClass)) {
            dec.lam = std::move(block);
        } else if (block.rep().isRational() && isIntegral(block.rep().offset - lampClass)) {
            if (block.size % 2 != 0) return std::nullopt;
            dec.lamp = std::move(block);
        } else {
            generic.push_back(std::move(block));
        }
    }
    std::vector<bool> used(generic.size(), false);
    for (size_t i = 0; i < generic.size(); ++i) {
        if (used[i]) continue;
        bool matched = false;
        for (size_t j = i + 1; j < generic.size(); ++j) {
            if (used[j]) continue;
            if (sumIntegral(generic[i].rep(), generic[j].rep())) {
                if (generic[i].size != generic[j].size) return std::nullopt;
                dec.pairs.emplace_back(generic[i], generic[j]);
                used[i] = used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return std::nullopt;
    }
    int consumed = (dec.lamp ? dec.lamp->size / 2 : 0);
    for (const auto& pr : dec.pairs) consumed += pr.first.size;
    dec.pRes = p - consumed;
    dec.qRes = q - consumed;
    if (dec.pRes < 0 || dec.qRes < 0) return std::nullopt;
    return dec;
}

std::optional<std::vector<std::pair<IntegralBlock, IntegralBlock>>> classifyGlc(
    std::span<const Coordinate> left, std::span<const Coordinate> right) {
    if (left.size() != right.size())
        throw std::invalid_argument("the two coordinate lists must have equal lengths");
    auto lb = integralBlocks(left);
    auto rb = integralBlocks(right);
    if (lb.size() != rb.size()) return std::nullopt;
    std::vector<std::pair<IntegralBlock, IntegralBlock>> pairs;
    std::vector<bool> used(rb.size(), false);
    for (auto& L : lb) {
        bool matched = false;
        for (size_t j = 0; j < rb.size(); ++j) {
            if (used[j]) continue;
            if (differenceIntegral(L.rep(), rb[j].rep())) {
                if (L.size != rb[j].size) return std::nullopt;
                pairs.emplace_back(std::move(L), std::move(rb[j]));
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return std::nullopt;
    }
    return pairs;
}

}  // namespace irrcount
