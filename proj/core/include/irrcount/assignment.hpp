#pragma once

#include <vector>

#include "irrcount/young_diagram.hpp"

namespace irrcount {

using LabelGrid = std::vector<std::vector<int>>;

// Validity of a label filling of content [d_1,...,d_N]: label i occurs
// exactly d_i times, the boxes labelled <= n form a Young diagram for
// every n, and no label repeats within a column.
bool isValidAssignment(const YoungDiagram& shape, const LabelGrid& labels,
                       const YoungDiagram& content);

class Assignment {
public:
    // Throws std::invalid_argument unless labels is a valid assignment of
    // the given content on shape.
    Assignment(YoungDiagram shape, LabelGrid labels, YoungDiagram content);

    const YoungDiagram& shape() const { return shape_; }
    const LabelGrid& labels() const { return labels_; }
    const YoungDiagram& content() const { return content_; }
    int at(int row1, int col1) const {
        return labels_[static_cast<size_t>(row1 - 1)][static_cast<size_t>(col1 - 1)];
    }

    bool operator==(const Assignment& other) const {
        return shape_ == other.shape_ && labels_ == other.labels_;
    }

private:
    YoungDiagram shape_;
    LabelGrid labels_;
    YoungDiagram content_;
};

// All assignments of the given content, in lexicographic order of the
// row-major label word.  Throws on |content| != |shape|.
std::vector<Assignment> enumerateAssignments(const YoungDiagram& shape,
                                             const YoungDiagram& content);

long long countAssignments(const YoungDiagram& shape, const YoungDiagram& content);

// The same count obtained by iterated horizontal-strip expansion: starting
// from the empty diagram, expand by strips of sizes d_1, d_2, ..., and
// count the paths that end at shape.
long long kostkaViaPieri(const YoungDiagram& shape, const YoungDiagram& content);

}  // namespace irrcount
