#include "equistab/stability/module.hpp"

#include "equistab/core/snf.hpp"
#include "equistab/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace equistab {

std::int64_t GradedModule::max_degree() const {
    std::int64_t m = 0;
    for (std::int64_t d : grade_degree) m = std::max(m, d);
    return m;
}

const GradedModule::Edge* GradedModule::edge_for(std::size_t op, std::size_t src) const {
    for (const Edge& e : edges)
        if (e.op == op && e.src == src) return &e;
    return nullptr;
}

void validate_commuting(const GradedModule& m) {
    for (const auto& e : m.edges) {
        if (e.src >= m.pieces.size() || e.dst >= m.pieces.size())
            throw ValidationError("module edge references a missing grade");
        if (e.f.rows() != m.pieces[e.dst].size() || e.f.cols() != m.pieces[e.src].size())
            throw ValidationError("module edge matrix has wrong shape at grade " + m.grade_names[e.src]);
        if (!hom_is_valid(m.pieces[e.dst], m.pieces[e.src], e.f))
            throw ValidationError("module edge is not a well-defined homomorphism at grade " + m.grade_names[e.src]);
    }
    for (std::size_t s = 0; s < m.pieces.size(); ++s)
        for (std::size_t op1 = 0; op1 < m.op_names.size(); ++op1)
            for (std::size_t op2 = op1 + 1; op2 < m.op_names.size(); ++op2) {
                const auto* a1 = m.edge_for(op1, s);
                const auto* b1 = m.edge_for(op2, s);
                if (!a1 || !b1) continue;
                const auto* b2 = m.edge_for(op2, a1->dst);
                const auto* a2 = m.edge_for(op1, b1->dst);
                if (!b2 || !a2) continue;
                if (b2->dst != a2->dst)
                    throw ValidationError("operator square does not close at grade " + m.grade_names[s]);
                IntMat left = b2->f * a1->f;
                IntMat right = a2->f * b1->f;
                if (!hom_equal(m.pieces[b2->dst], m.pieces[s], left, right))
                    throw ValidationError("operators " + m.op_names[op1] + " and " + m.op_names[op2] +
                                          " do not commute at grade " + m.grade_names[s]);
            }
}

FgReport fg_check(const GradedModule& m, std::int64_t window, const std::vector<std::size_t>* ops) {
    validate_commuting(m);

    std::vector<std::size_t> use_ops;
    if (ops)
        use_ops = *ops;
    else
        for (std::size_t i = 0; i < m.op_names.size(); ++i) use_ops.push_back(i);

    if (window < 0) {
        // default: one more than the largest degree shift among the
        // operators in play, so a clean top window has seen every operator
        std::int64_t shift = 0;
        for (std::size_t op : use_ops) shift = std::max(shift, m.op_shift[op]);
        window = shift + 1;
    }

    FgReport rep;
    rep.bound = m.max_degree();
    rep.window = window;

    // incoming edges per grade
    std::vector<std::vector<const GradedModule::Edge*>> incoming(m.pieces.size());
    std::set<std::size_t> opset(use_ops.begin(), use_ops.end());
    for (const auto& e : m.edges)
        if (opset.count(e.op)) incoming[e.dst].push_back(&e);

    for (std::size_t s = 0; s < m.pieces.size(); ++s) {
        IntMat gens = m.pieces[s].relation_matrix();
        for (const auto* e : incoming[s]) gens = gens.hstack(e->f);
        CokernelShape c = cokernel_shape(gens);
        if (!c.is_trivial()) {
            FgAbGroup coker = canonical_fg(c.free_rank, c.torsion);
            rep.nonzero_cokernels.push_back(FgGradeInfo{s, coker});
        }
    }

    bool clean_top = true;
    for (const auto& info : rep.nonzero_cokernels)
        if (m.grade_degree[info.grade] > rep.bound - window) clean_top = false;
    rep.finitely_generated = clean_top;
    for (const auto& info : rep.nonzero_cokernels)
        rep.max_generator_degree = std::max(rep.max_generator_degree, m.grade_degree[info.grade]);
    rep.pattern = describe_persistence(m, rep.nonzero_cokernels);
    return rep;
}

std::string describe_persistence(const GradedModule& m, const std::vector<FgGradeInfo>& bad) {
    if (bad.empty()) return "all cokernels vanish";
    std::ostringstream os;
    os << "nonzero cokernels at " << bad.size() << " grade(s): ";
    std::size_t shown = 0;
    for (const auto& info : bad) {
        if (shown == 8) {
            os << ", ...";
            break;
        }
        if (shown) os << ", ";
        os << m.grade_names[info.grade] << " (degree " << m.grade_degree[info.grade] << ", " << info.cokernel.to_string()
           << ")";
        ++shown;
    }
    // detect an arithmetic progression of degrees (the instability signature)
    std::set<std::int64_t> degs;
    for (const auto& info : bad) degs.insert(m.grade_degree[info.grade]);
    if (degs.size() >= 3) {
        auto it = degs.begin();
        std::int64_t first = *it++;
        std::int64_t step = *it - first;
        bool ap = step > 0;
        std::int64_t prev = first;
        for (it = std::next(degs.begin()); it != degs.end() && ap; ++it) {
            if (*it - prev != step) ap = false;
            prev = *it;
        }
        if (ap && prev + step > m.max_degree())
            os << "; degrees form the progression " << first << ", " << first + step << ", ... (step " << step
               << ") persisting to the bound";
    }
    return os.str();
}

} // namespace equistab
