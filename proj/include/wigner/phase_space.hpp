#ifndef WIGNER_PHASE_SPACE_HPP
#define WIGNER_PHASE_SPACE_HPP

#include <vector>

#include "wigner/finite_field.hpp"

namespace wigner {

/// Point of the d x d grid. Coordinates live in one field; the flat index is
/// d*idx(x) + idx(y) in canonical field order.
struct PhasePoint {
    FieldElement x;
    FieldElement y;
    int index = 0;
};

/// A set of d collinear points. Lines are grouped into striations; within a
/// striation, line_id is the intercept index (the x index for verticals).
struct Line {
    int striation_id = 0;
    int line_id = 0;
    std::vector<int> point_indices;  // ascending point index

    bool contains(int point_index) const;
};

/// One of the d+1 parallel classes: d disjoint lines covering the grid.
struct Striation {
    int id = 0;
    std::vector<Line> lines;
};

struct AxiomReport {
    bool unique_line_per_point_pair = false;   // every point pair lies on exactly one line
    bool unique_parallel_through_point = false;  // one parallel per external point
    bool nonparallel_lines_meet_once = false;  // cross-striation lines share one point

    bool all_pass() const {
        return unique_line_per_point_pair && unique_parallel_through_point && nonparallel_lines_meet_once;
    }
};

/// The affine plane over GF(d): d^2 points and d(d+1) lines in d+1
/// striations. Striation 0 holds the vertical lines {(c, y) : y}, striation
/// 1+idx(m) the lines {(x, m*x + b) : x} of slope m. Immutable after build.
class PhaseSpace {
public:
    static PhaseSpace build(const FieldSpec& spec);

    const FieldSpec& field() const { return spec_; }
    int dim() const { return spec_.order(); }
    int point_count() const { return dim() * dim(); }
    int line_count() const { return dim() * (dim() + 1); }

    const std::vector<Striation>& striations() const { return striations_; }
    const Line& line(int striation_id, int line_id) const;

    PhasePoint point(int index) const;
    PhasePoint point_at(const FieldElement& x, const FieldElement& y) const;

    /// Index of the striation-s line through the given point.
    int line_through(int point_index, int striation_id) const;

    /// The d+1 lines through a point, ordered by striation id. Throws if the
    /// point does not belong to this space.
    std::vector<Line> lines_through(const PhasePoint& p) const;

private:
    explicit PhaseSpace(FieldSpec spec) : spec_(std::move(spec)) {}

    FieldSpec spec_;
    std::vector<Striation> striations_;
    std::vector<std::vector<int>> incidence_;  // [point][striation] -> line_id
};

/// Exhaustive check of the three affine-plane axioms. Failures are reported,
/// not thrown.
AxiomReport verify_axioms(const PhaseSpace& ps);

}  // namespace wigner

#endif
