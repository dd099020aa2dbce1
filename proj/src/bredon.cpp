#include "equistab/bredon.hpp"

#include "equistab/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace equistab {

int GCWComplex::top_dim() const {
    int d = 0;
    for (const auto& c : cells) d = std::max(d, c.dim);
    return d;
}

std::vector<std::size_t> GCWComplex::cells_in_dim(int n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].dim == n) out.push_back(i);
    return out;
}

namespace {

void structural_checks(const SubgroupLattice& lat, const GCWComplex& x) {
    for (const auto& c : x.cells) {
        if (c.dim < 0) throw ValidationError("cell with negative dimension");
        if (c.isotropy >= lat.size()) throw ValidationError("cell isotropy index out of range");
    }
    for (const auto& t : x.boundary) {
        if (t.from >= x.cells.size() || t.to >= x.cells.size())
            throw ValidationError("boundary term references a missing cell");
        const auto& e = x.cells[t.from];
        const auto& f = x.cells[t.to];
        if (e.dim != f.dim + 1) throw ValidationError("boundary term does not drop dimension by one");
        if (!lat.leq(e.isotropy, f.isotropy))
            throw ValidationError("boundary term needs H_from <= H_to: no orbit map " +
                                  lat.subgroup_name(e.isotropy) + " -> " + lat.subgroup_name(f.isotropy));
        if (t.coset_elem < 0 || t.coset_elem >= lat.group.order())
            throw ValidationError("boundary coset element out of range");
    }
}

} // namespace

void validate_gcw(const SubgroupLattice& lat, const GCWComplex& x) {
    structural_checks(lat, x);
    // fixed-point complexes carry the full coset bookkeeping; checking them
    // at every K covers the underlying complex (K = e) as well
    for (std::size_t k = 0; k < lat.size(); ++k) {
        IntChainComplex c = fixed_point_complex(lat, x, k);
        int bad = c.first_bad_composite();
        if (bad >= 0)
            throw ValidationError("d^2 != 0 in the " + lat.subgroup_name(k) + "-fixed subcomplex between degrees " +
                                  std::to_string(bad + 2) + " and " + std::to_string(bad));
    }
}

IntChainComplex assemble_bredon_complex(const SubgroupLattice& lat, const GCWComplex& x, const MackeyFunctorData& m) {
    validate_gcw(lat, x);
    const int top = x.cells.empty() ? 0 : x.top_dim();

    // block offsets per degree
    std::vector<std::vector<std::size_t>> cells_by_dim(top + 1);
    for (int n = 0; n <= top; ++n) cells_by_dim[n] = x.cells_in_dim(n);

    IntChainComplex c;
    c.ranks.resize(top + 1, 0);
    std::vector<std::map<std::size_t, std::size_t>> offset(top + 1); // cell index -> block start
    for (int n = 0; n <= top; ++n) {
        std::size_t r = 0;
        for (std::size_t i : cells_by_dim[n]) {
            offset[n][i] = r;
            r += m.level_rank[x.cells[i].isotropy];
        }
        c.ranks[n] = r;
    }

    for (int n = 0; n + 1 <= top; ++n) {
        IntMat d(c.ranks[n], c.ranks[n + 1]);
        for (const auto& t : x.boundary) {
            const auto& e = x.cells[t.from];
            if (e.dim != n + 1) continue;
            const auto& f = x.cells[t.to];
            const IntMat& tr = m.tr_at(e.isotropy, f.isotropy);
            std::size_t r0 = offset[n][t.to];
            std::size_t c0 = offset[n + 1][t.from];
            for (std::size_t i = 0; i < tr.rows(); ++i)
                for (std::size_t j = 0; j < tr.cols(); ++j) d(r0 + i, c0 + j) += t.coeff * tr(i, j);
        }
        c.boundaries.push_back(std::move(d));
    }

    int bad = c.first_bad_composite();
    if (bad >= 0)
        throw ValidationError("assembled Bredon complex has d^2 != 0 between degrees " + std::to_string(bad + 2) +
                              " and " + std::to_string(bad));
    return c;
}

IntChainComplex fixed_point_complex(const SubgroupLattice& lat, const GCWComplex& x, std::size_t k) {
    structural_checks(lat, x);
    const FiniteAbelianGroup& g = lat.group;
    const int top = x.cells.empty() ? 0 : x.top_dim();

    // canonical coset representative: smallest element index in u + H
    auto coset_rep = [&](std::size_t h, std::int64_t u) {
        std::int64_t best = -1;
        auto ue = g.elem_at(u);
        for (std::int64_t he : lat.nodes[h].elems) {
            std::int64_t v = g.elem_index(g.add(ue, g.elem_at(he)));
            if (best < 0 || v < best) best = v;
        }
        return best;
    };

    // enumerate K-fixed cells: (cell, coset rep) for cells with K <= H_e
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> fixed(top + 1);
    std::vector<std::map<std::pair<std::size_t, std::int64_t>, std::size_t>> pos(top + 1);
    for (int n = 0; n <= top; ++n) {
        for (std::size_t i : x.cells_in_dim(n)) {
            std::size_t h = x.cells[i].isotropy;
            if (!lat.leq(k, h)) continue;
            std::vector<std::int64_t> reps;
            for (std::int64_t u = 0; u < g.order(); ++u) {
                std::int64_t r = coset_rep(h, u);
                if (r == u) reps.push_back(u);
            }
            for (std::int64_t r : reps) {
                pos[n][{i, r}] = fixed[n].size();
                fixed[n].emplace_back(i, r);
            }
        }
    }

    IntChainComplex c;
    c.ranks.resize(top + 1);
    for (int n = 0; n <= top; ++n) c.ranks[n] = fixed[n].size();
    for (int n = 0; n + 1 <= top; ++n) {
        IntMat d(c.ranks[n], c.ranks[n + 1]);
        for (std::size_t col = 0; col < fixed[n + 1].size(); ++col) {
            auto [i, u] = fixed[n + 1][col];
            for (const auto& t : x.boundary) {
                if (t.from != i) continue;
                std::size_t hf = x.cells[t.to].isotropy;
                if (!lat.leq(k, hf)) continue; // target cell not K-fixed; cannot happen when from is
                std::int64_t w =
                    coset_rep(hf, g.elem_index(g.add(g.elem_at(u), g.elem_at(t.coset_elem))));
                auto it = pos[n].find({t.to, w});
                if (it == pos[n].end()) continue;
                d(it->second, col) += t.coeff;
            }
        }
        c.boundaries.push_back(std::move(d));
    }
    return c;
}

} // namespace equistab
