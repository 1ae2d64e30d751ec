#include "irrcount/assignment.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace irrcount {

namespace {

bool gridMatchesShape(const YoungDiagram& shape, const LabelGrid& labels) {
    if (static_cast<int>(labels.size()) != shape.rowCount()) return false;
    for (int i = 1; i <= shape.rowCount(); ++i)
        if (static_cast<int>(labels[static_cast<size_t>(i - 1)].size()) != shape.row(i))
            return false;
    return true;
}

}  // namespace

bool isValidAssignment(const YoungDiagram& shape, const LabelGrid& labels,
                       const YoungDiagram& content) {
    if (!gridMatchesShape(shape, labels)) return false;
    int N = content.rowCount();
    std::vector<int> counts(static_cast<size_t>(N) + 1, 0);
    for (int i = 1; i <= shape.rowCount(); ++i) {
        for (int j = 1; j <= shape.row(i); ++j) {
            int v = labels[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            if (v < 1 || v > N) return false;
            ++counts[static_cast<size_t>(v)];
        }
    }
    for (int v = 1; v <= N; ++v)
        if (counts[static_cast<size_t>(v)] != content.row(v)) return false;
    // Boxes labelled <= n form a Young diagram for every n: equivalent to
    // the per-row prefix lengths being left-justified and weakly
    // decreasing down the rows at every threshold.
    for (int n = 1; n <= N; ++n) {
        std::vector<int> prefix(static_cast<size_t>(shape.rowCount()), 0);
        for (int i = 1; i <= shape.rowCount(); ++i) {
            int len = 0;
            bool gap = false;
            for (int j = 1; j <= shape.row(i); ++j) {
                bool in = labels[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] <= n;
                if (in && gap) return false;  // not left-justified
                if (in)
                    ++len;
                else
                    gap = true;
            }
            prefix[static_cast<size_t>(i - 1)] = len;
            if (i > 1 && len > prefix[static_cast<size_t>(i - 2)]) return false;
        }
    }
    // No label twice in a column.
    for (int j = 1; j <= shape.columnCount(); ++j) {
        std::vector<int> seen;
        for (int i = 1; i <= shape.column(j); ++i) {
            int v = labels[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            if (std::find(seen.begin(), seen.end(), v) != seen.end()) return false;
            seen.push_back(v);
        }
    }
    return true;
}

Assignment::Assignment(YoungDiagram shape, LabelGrid labels, YoungDiagram content)
    : shape_(std::move(shape)), labels_(std::move(labels)), content_(std::move(content)) {
    if (!isValidAssignment(shape_, labels_, content_))
        throw std::invalid_argument("not a valid assignment of content " + content_.toString() +
                                    " on " + shape_.toString());
}

namespace {

// Row-wise backtracking.  Rows are weakly increasing and columns strictly
// increasing for any valid assignment, which is exactly what the prefix
// and column constraints enforce; generation in ascending label order
// yields lexicographic output.
template <typename Sink>
void enumerateRec(const YoungDiagram& shape, const YoungDiagram& content,
                  std::vector<int>& remaining, LabelGrid& grid, int boxIndex,
                  const std::vector<Box>& boxes, Sink&& sink) {
    if (boxIndex == static_cast<int>(boxes.size())) {
        sink(grid);
        return;
    }
    Box b = boxes[static_cast<size_t>(boxIndex)];
    int left = (b.col > 1) ? grid[static_cast<size_t>(b.row - 1)][static_cast<size_t>(b.col - 2)] : 1;
    int above = (b.row > 1) ? grid[static_cast<size_t>(b.row - 2)][static_cast<size_t>(b.col - 1)] : 0;
    int N = content.rowCount();
    for (int v = std::max(left, above + 1); v <= N; ++v) {
        if (remaining[static_cast<size_t>(v)] == 0) continue;
        --remaining[static_cast<size_t>(v)];
        grid[static_cast<size_t>(b.row - 1)][static_cast<size_t>(b.col - 1)] = v;
        enumerateRec(shape, content, remaining, grid, boxIndex + 1, boxes, sink);
        ++remaining[static_cast<size_t>(v)];
    }
}

template <typename Sink>
void enumerateAll(const YoungDiagram& shape, const YoungDiagram& content, Sink&& sink) {
    if (content.size() != shape.size())
        throw std::invalid_argument("assignment content must have the same size as the shape");
    std::vector<Box> boxes;
    for (int i = 1; i <= shape.rowCount(); ++i)
        for (int j = 1; j <= shape.row(i); ++j) boxes.push_back(Box{i, j});
    std::vector<int> remaining(static_cast<size_t>(content.rowCount()) + 1, 0);
    for (int v = 1; v <= content.rowCount(); ++v) remaining[static_cast<size_t>(v)] = content.row(v);
    LabelGrid grid(static_cast<size_t>(shape.rowCount()));
    for (int i = 1; i <= shape.rowCount(); ++i)
        grid[static_cast<size_t>(i - 1)].resize(static_cast<size_t>(shape.row(i)));
    enumerateRec(shape, content, remaining, grid, 0, boxes, sink);
}

}  // namespace

std::vector<Assignment> enumerateAssignments(const YoungDiagram& shape,
                                             const YoungDiagram& content) {
    std::vector<Assignment> out;
    enumerateAll(shape, content, [&](const LabelGrid& grid) {
        out.emplace_back(shape, grid, content);
    });
    return out;
}

long long countAssignments(const YoungDiagram& shape, const YoungDiagram& content) {
    long long n = 0;
    enumerateAll(shape, content, [&](const LabelGrid&) { ++n; });
    return n;
}

long long kostkaViaPieri(const YoungDiagram& shape, const YoungDiagram& content) {
    if (content.size() != shape.size())
        throw std::invalid_argument("content must have the same size as the shape");
    std::map<YoungDiagram, long long> front;
    front[YoungDiagram()] = 1;
    for (int step = 1; step <= content.rowCount(); ++step) {
        std::map<YoungDiagram, long long> next;
        for (const auto& [diagram, ways] : front)
            for (const auto& bigger : horizontalStripSuperdiagrams(diagram, content.row(step))) {
                if (!shape.contains(bigger)) continue;
                next[bigger] += ways;
            }
        front = std::move(next);
    }
    auto it = front.find(shape);
    return it == front.end() ? 0 : it->second;
}

}  // namespace irrcount
