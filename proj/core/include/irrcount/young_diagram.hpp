#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace irrcount {

/*
 * A Young diagram, stored as its weakly decreasing sequence of positive
 * row lengths.  The same type doubles as a partition (of its size) and as
 * a cycle type of a symmetric-group conjugacy class.
 *
 * Values are immutable after construction, so they can be shared freely
 * across threads.
 */
class YoungDiagram {
public:
    YoungDiagram() = default;

    // Validates and canonicalizes: trailing zeros are stripped, negative
    // entries and increasing steps are rejected.
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    int rowCount() const { return static_cast<int>(rows_.size()); }
    int size() const { return size_; }
    bool empty() const { return rows_.empty(); }

    // 1-based row length; rows past the last are 0.
    int row(int i) const {
        return (i >= 1 && i <= rowCount()) ? rows_[static_cast<size_t>(i - 1)] : 0;
    }
    // 1-based column length c_j = #{i : r_i >= j}.
    int column(int j) const;
    int columnCount() const { return rows_.empty() ? 0 : rows_[0]; }

    YoungDiagram transpose() const;
    bool contains(const YoungDiagram& inner) const;
    bool hasBox(int row1, int col1) const {
        return row1 >= 1 && col1 >= 1 && col1 <= row(row1);
    }

    bool allRowsEven() const;
    bool allColumnsEven() const;

    bool operator==(const YoungDiagram& other) const { return rows_ == other.rows_; }

    // Canonical listing order: ascending size, then reverse-lexicographic
    // within a size ([n] first, [1,...,1] last).  Maps and sorted output
    // everywhere follow this order.
    std::strong_ordering operator<=>(const YoungDiagram& other) const;

    // "[5,3,1]"; the empty diagram prints as "[]".
    std::string toString() const;

private:
    std::vector<int> rows_;
    int size_ = 0;
};

// A box position (1-based); (row, col) lies in diagram d iff col <= r_row(d).
struct Box {
    int row = 0;
    int col = 0;
    bool operator==(const Box&) const = default;
    auto operator<=>(const Box&) const = default;
};

YoungDiagram parseDiagram(std::string_view text);

// Entrywise sum of row sequences (row-by-row union).
YoungDiagram rowUnion(std::span<const YoungDiagram> parts);
YoungDiagram rowUnion(const YoungDiagram& a, const YoungDiagram& b);

// All diagrams of total size n in canonical order.
const std::vector<YoungDiagram>& enumeratePartitions(int n);

// Dominance order on partitions of equal size: every prefix sum of a is
// <= the corresponding prefix sum of b.  Throws on size mismatch.
bool dominanceLeq(const YoungDiagram& a, const YoungDiagram& b);

// outer/inner is a horizontal strip (at most one box per column) resp. a
// vertical strip (at most one box per row).  Requires inner <= outer
// rowwise; returns false otherwise.
bool isHorizontalStrip(const YoungDiagram& inner, const YoungDiagram& outer);
bool isVerticalStrip(const YoungDiagram& inner, const YoungDiagram& outer);

// All diagrams obtained from base by adding l boxes forming a horizontal
// (resp. vertical) strip, sorted in canonical order, without duplicates.
std::vector<YoungDiagram> horizontalStripSuperdiagrams(const YoungDiagram& base, int l);
std::vector<YoungDiagram> verticalStripSuperdiagrams(const YoungDiagram& base, int l);

// All diagrams mu with inner <= mu <= outer such that both mu/inner and
// outer/mu are horizontal (resp. vertical) strips.
std::vector<YoungDiagram> horizontalStripsBetween(const YoungDiagram& inner,
                                                  const YoungDiagram& outer);
std::vector<YoungDiagram> verticalStripsBetween(const YoungDiagram& inner,
                                                const YoungDiagram& outer);

// All mu <= outer such that outer/mu is a horizontal strip (any size).
std::vector<YoungDiagram> horizontalStripSubdiagrams(const YoungDiagram& outer);

// All sub-diagrams of outer (used by painting enumeration).
std::vector<YoungDiagram> subDiagrams(const YoungDiagram& outer);

}  // namespace irrcount
