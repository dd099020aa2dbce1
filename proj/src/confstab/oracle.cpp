#include "equistab/confstab/oracle.hpp"

#include "equistab/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace equistab {

ConcreteGSet realize_gset(const SubgroupLattice& lat, const GSetClass& s) {
    ConcreteGSet x;
    x.ambient = s.ambient;
    const FiniteAbelianGroup& g = lat.group;
    const auto& amb_elems = lat.nodes[s.ambient].elems;

    auto coset_rep = [&](std::size_t h, std::int64_t u) {
        std::int64_t best = -1;
        auto ue = g.elem_at(u);
        for (std::int64_t he : lat.nodes[h].elems) {
            std::int64_t v = g.elem_index(g.add(ue, g.elem_at(he)));
            if (best < 0 || v < best) best = v;
        }
        return best;
    };

    // points are (isotropy, copy, coset rep), copies laid out consecutively
    struct Point {
        std::size_t h;
        std::int64_t copy;
        std::int64_t rep;
    };
    std::vector<Point> tags;
    std::map<std::tuple<std::size_t, std::int64_t, std::int64_t>, std::size_t> idx;
    for (std::size_t h = 0; h < s.mult.size(); ++h) {
        if (s.mult[h] == 0) continue;
        std::vector<std::int64_t> reps;
        for (std::int64_t u : amb_elems)
            if (coset_rep(h, u) == u) reps.push_back(u);
        for (std::int64_t c = 0; c < s.mult[h]; ++c)
            for (std::int64_t r : reps) {
                idx[{h, c, r}] = tags.size();
                tags.push_back(Point{h, c, r});
            }
    }
    x.size = tags.size();
    if (x.size > kOracleSizeBound)
        throw ResourceError("discrete model size " + std::to_string(x.size) + " exceeds the bound " +
                            std::to_string(kOracleSizeBound));

    // rows for elements outside the ambient subgroup stay the identity;
    // consumers only ever act by ambient elements
    x.action.assign(g.order(), std::vector<std::int64_t>(x.size, 0));
    for (std::int64_t ge = 0; ge < g.order(); ++ge)
        for (std::size_t p = 0; p < x.size; ++p) x.action[ge][p] = static_cast<std::int64_t>(p);
    for (std::int64_t ge : amb_elems)
        for (std::size_t p = 0; p < x.size; ++p) {
            const Point& pt = tags[p];
            std::int64_t moved = coset_rep(pt.h, g.elem_index(g.add(g.elem_at(ge), g.elem_at(pt.rep))));
            x.action[ge][p] = static_cast<std::int64_t>(idx.at({pt.h, pt.copy, moved}));
        }
    return x;
}

ConcreteGSet concrete_product(const SubgroupLattice& lat, const ConcreteGSet& x, const ConcreteGSet& y) {
    if (x.ambient != y.ambient) throw ValidationError("concrete_product: ambient mismatch");
    ConcreteGSet p;
    p.ambient = x.ambient;
    p.size = x.size * y.size;
    p.action.assign(lat.group.order(), std::vector<std::int64_t>(p.size, 0));
    for (std::int64_t ge = 0; ge < lat.group.order(); ++ge)
        for (std::size_t a = 0; a < x.size; ++a)
            for (std::size_t b = 0; b < y.size; ++b)
                p.action[ge][a * y.size + b] = x.action[ge][a] * static_cast<std::int64_t>(y.size) + y.action[ge][b];
    return p;
}

std::int64_t concrete_fixed_points(const SubgroupLattice& lat, const ConcreteGSet& x, std::size_t k) {
    std::int64_t n = 0;
    for (std::size_t p = 0; p < x.size; ++p) {
        bool fixed = true;
        for (std::int64_t e : lat.nodes[k].elems)
            if (x.action[e][p] != static_cast<std::int64_t>(p)) {
                fixed = false;
                break;
            }
        if (fixed) ++n;
    }
    return n;
}

GSetClass classify_subset(const SubgroupLattice& lat, const ConcreteGSet& x, const std::vector<bool>& member) {
    const auto& amb_elems = lat.nodes[x.ambient].elems;
    // invariance
    for (std::size_t p = 0; p < x.size; ++p) {
        if (!member[p]) continue;
        for (std::int64_t e : amb_elems)
            if (!member[x.action[e][p]]) throw ValidationError("classify_subset: subset is not invariant");
    }
    GSetClass cls = empty_gset(lat, x.ambient);
    std::vector<bool> seen(x.size, false);
    for (std::size_t p = 0; p < x.size; ++p) {
        if (!member[p] || seen[p]) continue;
        // orbit of p and its stabilizer
        std::vector<std::int64_t> stab_elems;
        for (std::int64_t e : amb_elems) {
            std::int64_t q = x.action[e][p];
            if (q == static_cast<std::int64_t>(p)) stab_elems.push_back(e);
            seen[q] = true;
        }
        std::sort(stab_elems.begin(), stab_elems.end());
        cls.mult[lat.node_of(stab_elems)] += 1;
    }
    return cls;
}

GSetClass classify_concrete(const SubgroupLattice& lat, const ConcreteGSet& x) {
    return classify_subset(lat, x, std::vector<bool>(x.size, true));
}

std::vector<CensusEntry> discrete_config_oracle(const SubgroupLattice& lat, const ConcreteGSet& x, std::int64_t n) {
    if (x.size > kOracleSizeBound)
        throw ResourceError("discrete_config_oracle: |X| exceeds the bound " + std::to_string(kOracleSizeBound));
    if (n < 0 || n > static_cast<std::int64_t>(x.size))
        throw ValidationError("discrete_config_oracle: n out of range");
    const auto& amb_elems = lat.nodes[x.ambient].elems;

    std::map<GSetClass, std::int64_t> census;
    std::vector<bool> member(x.size, false);
    auto rec = [&](auto&& self, std::size_t start, std::int64_t left) -> void {
        if (left == 0) {
            bool invariant = true;
            for (std::size_t p = 0; p < x.size && invariant; ++p) {
                if (!member[p]) continue;
                for (std::int64_t e : amb_elems)
                    if (!member[x.action[e][p]]) {
                        invariant = false;
                        break;
                    }
            }
            if (invariant) census[classify_subset(lat, x, member)] += 1;
            return;
        }
        for (std::size_t p = start; x.size - p >= static_cast<std::size_t>(left); ++p) {
            member[p] = true;
            self(self, p + 1, left - 1);
            member[p] = false;
        }
    };
    rec(rec, 0, n);

    std::vector<CensusEntry> out;
    for (const auto& [cls, count] : census) out.push_back(CensusEntry{cls, count});
    return out;
}

} // namespace equistab
