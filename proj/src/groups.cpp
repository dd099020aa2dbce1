#include "equistab/groups.hpp"

#include "equistab/core/snf.hpp"
#include "equistab/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace equistab {

std::int64_t FiniteAbelianGroup::order() const {
    std::int64_t n = 1;
    for (std::int64_t d : factors) n *= d;
    return n;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::add(const Elem& a, const Elem& b) const {
    Elem c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) c[i] = (a[i] + b[i]) % factors[i];
    return c;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::neg(const Elem& a) const {
    Elem c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) c[i] = (factors[i] - a[i]) % factors[i];
    return c;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::reduce(Elem a) const {
    if (a.size() != factors.size()) throw ValidationError("element tuple has wrong length");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        a[i] %= factors[i];
        if (a[i] < 0) a[i] += factors[i];
    }
    return a;
}

std::int64_t FiniteAbelianGroup::elem_index(const Elem& a) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + a[i];
    return idx;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::elem_at(std::int64_t idx) const {
    Elem a(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        a[i] = idx % factors[i];
        idx /= factors[i];
    }
    return a;
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " x " : "") << "C" << factors[i];
    return os.str();
}

FiniteAbelianGroup make_group(std::vector<std::int64_t> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) throw ValidationError("invariant factors must be >= 2");
        if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
            throw ValidationError("invariant factors must form a divisor chain d_1 | d_2 | ...");
    }
    return FiniteAbelianGroup{std::move(factors)};
}

std::int64_t SubgroupLattice::index_in(std::size_t h, std::size_t k) const {
    if (!leq(h, k)) throw ValidationError("index_in: not a subgroup pair");
    return nodes[k].order / nodes[h].order;
}

std::size_t SubgroupLattice::meet(std::size_t h, std::size_t k) const {
    std::vector<std::int64_t> out;
    std::set_intersection(nodes[h].elems.begin(), nodes[h].elems.end(), nodes[k].elems.begin(), nodes[k].elems.end(),
                          std::back_inserter(out));
    return node_of(std::move(out));
}

std::size_t SubgroupLattice::join(std::size_t h, std::size_t k) const {
    // abelian: HK = { h + k } is already a subgroup
    std::set<std::int64_t> prod;
    for (std::int64_t a : nodes[h].elems)
        for (std::int64_t b : nodes[k].elems)
            prod.insert(group.elem_index(group.add(group.elem_at(a), group.elem_at(b))));
    return node_of(std::vector<std::int64_t>(prod.begin(), prod.end()));
}

std::vector<std::size_t> SubgroupLattice::subgroups_of(std::size_t ambient) const {
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < nodes.size(); ++h)
        if (leq(h, ambient)) out.push_back(h);
    return out;
}

std::vector<std::size_t> SubgroupLattice::minimal_overgroups_within(std::size_t h, std::size_t ambient) const {
    std::vector<std::size_t> over;
    for (std::size_t k = 0; k < nodes.size(); ++k)
        if (k != h && leq(h, k) && leq(k, ambient)) over.push_back(k);
    std::vector<std::size_t> minimal;
    for (std::size_t k : over) {
        bool is_min = true;
        for (std::size_t l : over)
            if (l != k && leq(l, k)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(k);
    }
    return minimal;
}

std::size_t SubgroupLattice::node_of(std::vector<std::int64_t> sorted_elem_indices) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].elems == sorted_elem_indices) return i;
    throw ValidationError("element set is not a subgroup of the ambient group");
}

std::size_t SubgroupLattice::node_generated_by(const std::vector<FiniteAbelianGroup::Elem>& gens) const {
    std::set<std::int64_t> closure{group.elem_index(group.zero())};
    std::vector<FiniteAbelianGroup::Elem> frontier{group.zero()};
    while (!frontier.empty()) {
        FiniteAbelianGroup::Elem x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            FiniteAbelianGroup::Elem y = group.add(x, group.reduce(g));
            if (closure.insert(group.elem_index(y)).second) frontier.push_back(y);
        }
    }
    return node_of(std::vector<std::int64_t>(closure.begin(), closure.end()));
}

std::string SubgroupLattice::subgroup_name(std::size_t h) const {
    if (h == trivial()) return "e";
    if (h == full()) return "G";
    return "H" + std::to_string(h);
}

SubgroupLattice enumerate_subgroups(const FiniteAbelianGroup& g, std::int64_t order_bound) {
    if (g.order() > order_bound)
        throw ResourceError("group order " + std::to_string(g.order()) + " exceeds the configured bound " +
                            std::to_string(order_bound));
    SubgroupLattice lat;
    lat.group = g;

    // closure search: extend known subgroups by one generator at a time
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::vector<std::int64_t>> work;
    std::vector<std::int64_t> triv{g.elem_index(g.zero())};
    seen.insert(triv);
    work.push_back(triv);
    const std::int64_t n = g.order();
    while (!work.empty()) {
        std::vector<std::int64_t> h = work.back();
        work.pop_back();
        for (std::int64_t e = 0; e < n; ++e) {
            if (std::binary_search(h.begin(), h.end(), e)) continue;
            // close h together with e under addition
            std::set<std::int64_t> cl(h.begin(), h.end());
            std::vector<std::int64_t> frontier{e};
            cl.insert(e);
            while (!frontier.empty()) {
                std::int64_t x = frontier.back();
                frontier.pop_back();
                for (std::int64_t y : std::vector<std::int64_t>(cl.begin(), cl.end())) {
                    std::int64_t z = g.elem_index(g.add(g.elem_at(x), g.elem_at(y)));
                    if (cl.insert(z).second) frontier.push_back(z);
                }
            }
            std::vector<std::int64_t> key(cl.begin(), cl.end());
            if (seen.insert(key).second) work.push_back(key);
        }
    }

    for (const auto& elems : seen)
        lat.nodes.push_back(SubgroupLattice::Node{elems, static_cast<std::int64_t>(elems.size())});
    std::sort(lat.nodes.begin(), lat.nodes.end(), [](const auto& a, const auto& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.elems < b.elems;
    });

    lat.contains_.assign(lat.nodes.size(), std::vector<bool>(lat.nodes.size(), false));
    for (std::size_t i = 0; i < lat.nodes.size(); ++i)
        for (std::size_t j = 0; j < lat.nodes.size(); ++j)
            lat.contains_[i][j] = std::includes(lat.nodes[j].elems.begin(), lat.nodes[j].elems.end(),
                                                lat.nodes[i].elems.begin(), lat.nodes[i].elems.end());
    return lat;
}

QuotientGroup quotient_by(const SubgroupLattice& lat, std::size_t h) {
    const FiniteAbelianGroup& g = lat.group;
    const std::size_t r = g.rank();
    // G/H = Z^r / (diag(d) + lifts of H); Smith gives both the abstract
    // invariant factors and the projection on tuples.
    IntMat rel(r, r + lat.nodes[h].elems.size());
    for (std::size_t i = 0; i < r; ++i) rel(i, i) = g.factors[i];
    for (std::size_t j = 0; j < lat.nodes[h].elems.size(); ++j) {
        auto e = g.elem_at(lat.nodes[h].elems[j]);
        for (std::size_t i = 0; i < r; ++i) rel(i, r + j) = e[i];
    }
    SmithResult snf = smith_normal_form(rel);
    QuotientGroup q;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < snf.rank(); ++i)
        if (snf.invariants[i] > 1) keep.push_back(i);
    std::vector<std::int64_t> qfactors;
    for (std::size_t i : keep) qfactors.push_back(static_cast<std::int64_t>(snf.invariants[i]));
    q.quotient = FiniteAbelianGroup{qfactors};
    q.proj = IntMat(keep.size(), r);
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t j = 0; j < r; ++j) q.proj(a, j) = snf.u(keep[a], j);
    return q;
}

FiniteAbelianGroup::Elem QuotientGroup::project(const FiniteAbelianGroup& g, const FiniteAbelianGroup::Elem& a) const {
    FiniteAbelianGroup::Elem checked = g.reduce(a);
    FiniteAbelianGroup::Elem out(quotient.rank());
    for (std::size_t i = 0; i < quotient.rank(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < g.rank(); ++j) acc += proj(i, j) * checked[j];
        Int m = acc % quotient.factors[i];
        if (m < 0) m += quotient.factors[i];
        out[i] = static_cast<std::int64_t>(m);
    }
    return out;
}

} // namespace equistab
