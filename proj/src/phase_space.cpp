#include "wigner/phase_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace wigner {

bool Line::contains(int point_index) const {
    return std::binary_search(point_indices.begin(), point_indices.end(), point_index);
}

PhaseSpace PhaseSpace::build(const FieldSpec& spec) {
    PhaseSpace ps(spec);
    const int d = spec.order();
    const auto elems = spec.elements();

    ps.incidence_.assign(d * d, std::vector<int>(d + 1, -1));
    ps.striations_.resize(d + 1);

    auto point_index = [&](const FieldElement& x, const FieldElement& y) {
        return d * spec.index_of(x) + spec.index_of(y);
    };

    // Striation 0: vertical lines x = c.
    Striation& vertical = ps.striations_[0];
    vertical.id = 0;
    for (int c = 0; c < d; ++c) {
        Line line;
        line.striation_id = 0;
        line.line_id = c;
        for (int y = 0; y < d; ++y) line.point_indices.push_back(point_index(elems[c], elems[y]));
        std::sort(line.point_indices.begin(), line.point_indices.end());
        for (int pi : line.point_indices) ps.incidence_[pi][0] = c;
        vertical.lines.push_back(std::move(line));
    }

    // Striation 1+idx(m): lines y = m*x + b.
    for (int mi = 0; mi < d; ++mi) {
        Striation& st = ps.striations_[1 + mi];
        st.id = 1 + mi;
        const FieldElement m = elems[mi];
        for (int bi = 0; bi < d; ++bi) {
            const FieldElement b = elems[bi];
            Line line;
            line.striation_id = st.id;
            line.line_id = bi;
            for (int xi = 0; xi < d; ++xi) {
                const FieldElement y = spec.add(spec.mul(m, elems[xi]), b);
                line.point_indices.push_back(point_index(elems[xi], y));
            }
            std::sort(line.point_indices.begin(), line.point_indices.end());
            for (int pi : line.point_indices) ps.incidence_[pi][st.id] = bi;
            st.lines.push_back(std::move(line));
        }
    }
    return ps;
}

const Line& PhaseSpace::line(int striation_id, int line_id) const {
    return striations_.at(striation_id).lines.at(line_id);
}

PhasePoint PhaseSpace::point(int index) const {
    const int d = dim();
    if (index < 0 || index >= d * d) throw std::out_of_range("phase-space point index out of range");
    return PhasePoint{spec_.element(index / d), spec_.element(index % d), index};
}

PhasePoint PhaseSpace::point_at(const FieldElement& x, const FieldElement& y) const {
    const int index = dim() * spec_.index_of(x) + spec_.index_of(y);
    return PhasePoint{x, y, index};
}

int PhaseSpace::line_through(int point_index, int striation_id) const {
    return incidence_.at(point_index).at(striation_id);
}

std::vector<Line> PhaseSpace::lines_through(const PhasePoint& p) const {
    if (p.x.field_sig != spec_.signature() || p.y.field_sig != spec_.signature())
        throw std::invalid_argument("point belongs to a different phase space");
    const int expected = dim() * spec_.index_of(p.x) + spec_.index_of(p.y);
    if (p.index != expected) throw std::invalid_argument("point index inconsistent with its coordinates");
    std::vector<Line> out;
    out.reserve(dim() + 1);
    for (int s = 0; s <= dim(); ++s) out.push_back(line(s, incidence_[p.index][s]));
    return out;
}

AxiomReport verify_axioms(const PhaseSpace& ps) {
    const int d = ps.dim();
    const int npts = d * d;
    AxiomReport report;

    std::vector<const Line*> all_lines;
    for (const Striation& st : ps.striations())
        for (const Line& l : st.lines) all_lines.push_back(&l);

    // (i) every unordered pair of points lies on exactly one line
    bool ok_i = true;
    for (int a = 0; a < npts && ok_i; ++a) {
        for (int b = a + 1; b < npts && ok_i; ++b) {
            int through = 0;
            for (const Line* l : all_lines)
                if (l->contains(a) && l->contains(b)) ++through;
            ok_i = (through == 1);
        }
    }
    report.unique_line_per_point_pair = ok_i;

    // (ii) for every point off a line, exactly one parallel (same striation)
    // line passes through it
    bool ok_ii = true;
    for (const Striation& st : ps.striations()) {
        for (const Line& l : st.lines) {
            for (int a = 0; a < npts; ++a) {
                if (l.contains(a)) continue;
                int through = 0;
                for (const Line& par : st.lines)
                    if (&par != &l && par.contains(a)) ++through;
                if (through != 1) ok_ii = false;
            }
        }
    }
    report.unique_parallel_through_point = ok_ii;

    // (iii) lines from different striations intersect in exactly one point
    bool ok_iii = true;
    for (std::size_t i = 0; i < all_lines.size(); ++i) {
        for (std::size_t j = i + 1; j < all_lines.size(); ++j) {
            if (all_lines[i]->striation_id == all_lines[j]->striation_id) continue;
            int common = 0;
            for (int pi : all_lines[i]->point_indices)
                if (all_lines[j]->contains(pi)) ++common;
            if (common != 1) ok_iii = false;
        }
    }
    report.nonparallel_lines_meet_once = ok_iii;

    return report;
}

}  // namespace wigner
