#include "irrcount/young_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace irrcount {

YoungDiagram::YoungDiagram(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0)
            throw std::invalid_argument("young diagram row lengths must be positive");
        if (i > 0 && rows[i] > rows[i - 1])
            throw std::invalid_argument("young diagram rows must be weakly decreasing");
    }
    rows_ = std::move(rows);
    size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

int YoungDiagram::column(int j) const {
    if (j < 1) return 0;
    int count = 0;
    for (int r : rows_) {
        if (r >= j)
            ++count;
        else
            break;
    }
    return count;
}

YoungDiagram YoungDiagram::transpose() const {
    std::vector<int> cols;
    cols.reserve(static_cast<size_t>(columnCount()));
    for (int j = 1; j <= columnCount(); ++j) cols.push_back(column(j));
    return YoungDiagram(std::move(cols));
}

bool YoungDiagram::contains(const YoungDiagram& inner) const {
    if (inner.rowCount() > rowCount()) return false;
    for (int i = 1; i <= inner.rowCount(); ++i)
        if (inner.row(i) > row(i)) return false;
    return true;
}

bool YoungDiagram::allRowsEven() const {
    return std::all_of(rows_.begin(), rows_.end(), [](int r) { return r % 2 == 0; });
}

bool YoungDiagram::allColumnsEven() const {
    for (int j = 1; j <= columnCount(); ++j)
        if (column(j) % 2 != 0) return false;
    return true;
}

std::strong_ordering YoungDiagram::operator<=>(const YoungDiagram& other) const {
    if (size_ != other.size_) return size_ <=> other.size_;
    // Reverse-lexicographic listing: lexicographically larger row vectors
    // come first.
    size_t k = std::min(rows_.size(), other.rows_.size());
    for (size_t i = 0; i < k; ++i) {
        if (rows_[i] != other.rows_[i]) return other.rows_[i] <=> rows_[i];
    }
    return other.rows_.size() <=> rows_.size();
}

std::string YoungDiagram::toString() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << ',';
        os << rows_[i];
    }
    os << ']';
    return os.str();
}

YoungDiagram parseDiagram(std::string_view text) {
    size_t i = 0;
    auto skipWs = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skipWs();
    if (i >= text.size() || text[i] != '[')
        throw std::invalid_argument("partition must look like [a,b,c]: " + std::string(text));
    ++i;
    std::vector<int> rows;
    skipWs();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skipWs();
            bool neg = false;
            if (i < text.size() && text[i] == '-') {
                neg = true;
                ++i;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("bad partition entry in: " + std::string(text));
            long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1000000) throw std::invalid_argument("partition entry too large");
                ++i;
            }
            rows.push_back(static_cast<int>(neg ? -v : v));
            skipWs();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw std::invalid_argument("expected ',' or ']' in partition: " + std::string(text));
        }
    }
    skipWs();
    if (i != text.size())
        throw std::invalid_argument("trailing characters after partition: " + std::string(text));
    return YoungDiagram(std::move(rows));
}

YoungDiagram rowUnion(std::span<const YoungDiagram> parts) {
    std::vector<int> rows;
    for (const auto& part : parts) {
        if (part.rowCount() > static_cast<int>(rows.size())) rows.resize(part.rowCount(), 0);
        for (int i = 0; i < part.rowCount(); ++i)
            rows[static_cast<size_t>(i)] += part.rows()[static_cast<size_t>(i)];
    }
    return YoungDiagram(std::move(rows));
}

YoungDiagram rowUnion(const YoungDiagram& a, const YoungDiagram& b) {
    const YoungDiagram parts[] = {a, b};
    return rowUnion(std::span<const YoungDiagram>(parts, 2));
}

namespace {

void enumerateRec(int remaining, int maxPart, std::vector<int>& acc,
                  std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.push_back(YoungDiagram(acc));
        return;
    }
    for (int part = std::min(remaining, maxPart); part >= 1; --part) {
        acc.push_back(part);
        enumerateRec(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

const std::vector<YoungDiagram>& enumeratePartitions(int n) {
    if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    static std::mutex mutex;
    static std::map<int, std::vector<YoungDiagram>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<YoungDiagram> out;
    std::vector<int> acc;
    enumerateRec(n, n == 0 ? 1 : n, acc, out);
    return cache.emplace(n, std::move(out)).first->second;
}

bool dominanceLeq(const YoungDiagram& a, const YoungDiagram& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance order compares partitions of equal size");
    long long sumA = 0, sumB = 0;
    int k = std::max(a.rowCount(), b.rowCount());
    for (int i = 1; i <= k; ++i) {
        sumA += a.row(i);
        sumB += b.row(i);
        if (sumA > sumB) return false;
    }
    return true;
}

bool isHorizontalStrip(const YoungDiagram& inner, const YoungDiagram& outer) {
    if (!outer.contains(inner)) return false;
    // No two added boxes in one column <=> interleaving outer_{i+1} <= inner_i.
    for (int i = 1; i <= outer.rowCount(); ++i)
        if (outer.row(i + 1) > inner.row(i)) return false;
    return true;
}

bool isVerticalStrip(const YoungDiagram& inner, const YoungDiagram& outer) {
    if (!outer.contains(inner)) return false;
    // No two added boxes in one row.
    for (int i = 1; i <= outer.rowCount(); ++i)
        if (outer.row(i) - inner.row(i) > 1) return false;
    return true;
}

std::vector<YoungDiagram> horizontalStripSuperdiagrams(const YoungDiagram& base, int l) {
    if (l < 0) throw std::invalid_argument("strip size must be nonnegative");
    std::vector<YoungDiagram> out;
    int k = base.rowCount();
    std::vector<int> acc(static_cast<size_t>(k) + 1, 0);
    // Result rows satisfy base_i <= nu_i, nu_i <= base_{i-1} (i >= 2), and
    // exactly l extra boxes in total; only row k+1 may be freshly created.
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i > k + 1) {
            if (remaining == 0) out.push_back(YoungDiagram(acc));
            return;
        }
        int lo = base.row(i);
        int hi = (i == 1) ? base.row(1) + remaining
                          : std::min(base.row(i - 1), base.row(i) + remaining);
        for (int len = hi; len >= lo; --len) {
            acc[static_cast<size_t>(i - 1)] = len;
            self(self, i + 1, remaining - (len - lo));
        }
        acc[static_cast<size_t>(i - 1)] = 0;
    };
    rec(rec, 1, l);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<YoungDiagram> verticalStripSuperdiagrams(const YoungDiagram& base, int l) {
    auto tr = horizontalStripSuperdiagrams(base.transpose(), l);
    std::vector<YoungDiagram> out;
    out.reserve(tr.size());
    for (const auto& d : tr) out.push_back(d.transpose());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<YoungDiagram> horizontalStripsBetween(const YoungDiagram& inner,
                                                  const YoungDiagram& outer) {
    std::vector<YoungDiagram> out;
    if (!outer.contains(inner)) return out;
    // mu/inner horizontal strip: mu_i <= inner_{i-1}; outer/mu horizontal
    // strip: mu_i >= outer_{i+1}.  Rows are otherwise independent.
    int k = outer.rowCount();
    std::vector<int> acc(static_cast<size_t>(std::max(k, 1)), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > k) {
            out.push_back(YoungDiagram(std::vector<int>(acc.begin(), acc.begin() + k)));
            return;
        }
        int lo = std::max(inner.row(i), outer.row(i + 1));
        int hi = std::min(outer.row(i), (i == 1) ? outer.row(1) : inner.row(i - 1));
        for (int len = hi; len >= lo; --len) {
            acc[static_cast<size_t>(i - 1)] = len;
            self(self, i + 1);
        }
        acc[static_cast<size_t>(i - 1)] = 0;
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<YoungDiagram> verticalStripsBetween(const YoungDiagram& inner,
                                                const YoungDiagram& outer) {
    auto tr = horizontalStripsBetween(inner.transpose(), outer.transpose());
    std::vector<YoungDiagram> out;
    out.reserve(tr.size());
    for (const auto& d : tr) out.push_back(d.transpose());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<YoungDiagram> horizontalStripSubdiagrams(const YoungDiagram& outer) {
    std::vector<YoungDiagram> out;
    int k = outer.rowCount();
    std::vector<int> acc(static_cast<size_t>(std::max(k, 1)), 0);
    // outer/mu horizontal strip <=> outer_{i+1} <= mu_i <= outer_i.
    auto rec = [&](auto&& self, int i) -> void {
        if (i > k) {
            out.push_back(YoungDiagram(std::vector<int>(acc.begin(), acc.begin() + k)));
            return;
        }
        for (int len = outer.row(i); len >= outer.row(i + 1); --len) {
            acc[static_cast<size_t>(i - 1)] = len;
            self(self, i + 1);
        }
        acc[static_cast<size_t>(i - 1)] = 0;
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<YoungDiagram> subDiagrams(const YoungDiagram& outer) {
    std::vector<YoungDiagram> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int i) -> void {
        out.push_back(YoungDiagram(acc));
        if (i > outer.rowCount()) return;
        int hi = std::min(outer.row(i), acc.empty() ? outer.row(1) : acc.back());
        for (int len = hi; len >= 1; --len) {
            acc.push_back(len);
            self(self, i + 1);
            acc.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace irrcount
