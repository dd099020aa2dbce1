#include "equistab/confstab/kunneth.hpp"

#include "equistab/errors.hpp"

#include <string>

namespace equistab {

FgAbGroup tensor_fg(const FgAbGroup& a, const FgAbGroup& b) {
    BasedGroup t = tensor_group(BasedGroup::from_fg(a), BasedGroup::from_fg(b));
    return t.canonical();
}

FgAbGroup tor_fg(const FgAbGroup& a, const FgAbGroup& b) {
    BasedGroup t = tor_group(BasedGroup::from_fg(a), BasedGroup::from_fg(b));
    return t.canonical();
}

FgAbGroup kunneth(const std::vector<FgAbGroup>& a, const std::vector<FgAbGroup>& b, int d) {
    if (d < 0) throw ValidationError("kunneth: negative degree");
    if (static_cast<int>(a.size()) <= d || static_cast<int>(b.size()) <= d)
        throw ValidationError("kunneth: gradings must cover degrees <= " + std::to_string(d));
    std::size_t free_rank = 0;
    std::vector<Int> torsion;
    auto absorb = [&](const FgAbGroup& g) {
        free_rank += g.free_rank;
        for (const Int& t : g.torsion) torsion.push_back(t);
    };
    for (int i = 0; i <= d; ++i) absorb(tensor_fg(a[i], b[d - i]));
    for (int i = 0; i + 1 <= d; ++i) absorb(tor_fg(a[i], b[d - 1 - i]));
    return canonical_fg(free_rank, torsion);
}

GradedBased graded_point(int dmax) {
    GradedBased g;
    g.deg.resize(dmax + 1);
    g.deg[0].orders = {Int(0)};
    return g;
}

GradedMap graded_identity(const GradedBased& a) {
    GradedMap m;
    for (const BasedGroup& g : a.deg) m.deg.push_back(IntMat::identity(g.size()));
    return m;
}

GradedBased kunneth_pair(const GradedBased& a, const GradedBased& b) {
    if (a.dmax() != b.dmax()) throw ValidationError("kunneth_pair: grading ranges differ");
    GradedBased out;
    const int dmax = a.dmax();
    out.deg.resize(dmax + 1);
    for (int d = 0; d <= dmax; ++d) {
        BasedGroup& g = out.deg[d];
        for (int i = 0; i <= d; ++i) {
            BasedGroup t = tensor_group(a.deg[i], b.deg[d - i]);
            g.orders.insert(g.orders.end(), t.orders.begin(), t.orders.end());
        }
        for (int i = 0; i + 1 <= d; ++i) {
            BasedGroup t = tor_group(a.deg[i], b.deg[d - 1 - i]);
            g.orders.insert(g.orders.end(), t.orders.begin(), t.orders.end());
        }
    }
    return out;
}

GradedMap kunneth_pair_map(const GradedBased& a, const GradedBased& a2, const GradedBased& b, const GradedBased& b2,
                           const GradedMap& f, const GradedMap& g) {
    const int dmax = a.dmax();
    if (a2.dmax() != dmax || b.dmax() != dmax || b2.dmax() != dmax)
        throw ValidationError("kunneth_pair_map: grading ranges differ");
    GradedBased src = kunneth_pair(a, b);
    GradedBased dst = kunneth_pair(a2, b2);
    GradedMap out;
    out.deg.resize(dmax + 1);
    for (int d = 0; d <= dmax; ++d) {
        IntMat m(dst.deg[d].size(), src.deg[d].size());
        std::size_t r0 = 0, c0 = 0;
        auto paste = [&](const IntMat& block, std::size_t rows, std::size_t cols) {
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m(r0 + i, c0 + j) = block(i, j);
            r0 += rows;
            c0 += cols;
        };
        // blocks are diagonal: same (i, j) decomposition upstairs and down
        for (int i = 0; i <= d; ++i) {
            IntMat blk = tensor_hom(a.deg[i], a2.deg[i], b.deg[d - i], b2.deg[d - i], f.deg[i], g.deg[d - i]);
            paste(blk, blk.rows(), blk.cols());
        }
        for (int i = 0; i + 1 <= d; ++i) {
            IntMat blk = tor_hom(a.deg[i], a2.deg[i], b.deg[d - 1 - i], b2.deg[d - 1 - i], f.deg[i], g.deg[d - 1 - i]);
            paste(blk, blk.rows(), blk.cols());
        }
        out.deg[d] = reduce_hom(dst.deg[d], src.deg[d], m);
    }
    return out;
}

} // namespace equistab
