#include "equistab/reps.hpp"

#include "equistab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace equistab {

Character canonical_character(const FiniteAbelianGroup& g, std::vector<std::int64_t> coeffs) {
    if (coeffs.size() != g.rank()) throw ValidationError("character has wrong number of coefficients");
    std::vector<std::int64_t> c = g.reduce(coeffs);
    std::vector<std::int64_t> nc = g.neg(c);
    return Character{std::min(c, nc)};
}

bool character_is_real(const FiniteAbelianGroup& g, const Character& chi) {
    for (std::size_t i = 0; i < g.rank(); ++i)
        if ((2 * chi.coeffs[i]) % g.factors[i] != 0) return false;
    return true;
}

namespace {

// chi(a) as a residue mod L where L = lcm of the invariant factors
std::int64_t char_value_num(const FiniteAbelianGroup& g, const Character& chi, const FiniteAbelianGroup::Elem& a,
                            std::int64_t l) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) v = (v + chi.coeffs[i] * a[i] % l * (l / g.factors[i])) % l;
    return v;
}

std::int64_t lcm_of_factors(const FiniteAbelianGroup& g) {
    std::int64_t l = 1;
    for (std::int64_t d : g.factors) l = std::lcm(l, d);
    return l;
}

} // namespace

bool character_trivial_on(const SubgroupLattice& lat, const Character& chi, std::size_t h) {
    const FiniteAbelianGroup& g = lat.group;
    std::int64_t l = lcm_of_factors(g);
    for (std::int64_t e : lat.nodes[h].elems)
        if (char_value_num(g, chi, g.elem_at(e), l) != 0) return false;
    return true;
}

RealRepresentation make_representation(const FiniteAbelianGroup& g,
                                       const std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>& chars) {
    std::map<std::vector<std::int64_t>, std::int64_t> acc;
    for (const auto& [coeffs, mult] : chars) {
        if (mult < 0) throw ValidationError("character multiplicity must be nonnegative");
        Character c = canonical_character(g, coeffs);
        acc[c.coeffs] += mult;
    }
    RealRepresentation v;
    v.group = g;
    for (const auto& [coeffs, mult] : acc) {
        if (mult == 0) continue;
        Character c{coeffs};
        v.summands.push_back(RealSummand{c, character_is_real(g, c) ? 1 : 2, mult});
    }
    return v;
}

RealRepresentation regular_rep(const FiniteAbelianGroup& g, std::int64_t n) {
    if (n < 1) throw ValidationError("regular_rep: multiplicity must be >= 1");
    // one summand per realified irreducible: chi and -chi give the same
    // plane, so enumerate canonical representatives once each
    std::map<std::vector<std::int64_t>, bool> seen;
    std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> chars;
    for (std::int64_t i = 0; i < g.order(); ++i) {
        Character c = canonical_character(g, g.elem_at(i));
        if (!seen.emplace(c.coeffs, true).second) continue;
        chars.emplace_back(c.coeffs, n);
    }
    return make_representation(g, chars);
}

std::int64_t total_dim(const RealRepresentation& v) {
    std::int64_t d = 0;
    for (const auto& s : v.summands) d += s.realified_dim * s.mult;
    return d;
}

std::int64_t fixed_dim(const SubgroupLattice& lat, const RealRepresentation& v, std::size_t h) {
    std::int64_t d = 0;
    for (const auto& s : v.summands)
        if (character_trivial_on(lat, s.chi, h)) d += s.realified_dim * s.mult;
    return d;
}

std::vector<Stratum> isotropy_strata(const SubgroupLattice& lat, const RealRepresentation& v, std::size_t ambient) {
    std::vector<Stratum> out;
    for (std::size_t h = 0; h < lat.size(); ++h) {
        if (!lat.leq(h, ambient)) continue;
        std::vector<std::size_t> over = lat.minimal_overgroups_within(h, ambient);
        std::int64_t dh = fixed_dim(lat, v, h);
        bool stratum;
        if (h == ambient) {
            stratum = true; // at least the origin
        } else {
            stratum = true;
            for (std::size_t k : over)
                if (fixed_dim(lat, v, k) >= dh) {
                    stratum = false;
                    break;
                }
        }
        if (stratum) out.push_back(Stratum{h, dh, std::move(over)});
    }
    return out;
}

bool is_H_stabilizable(const SubgroupLattice& lat, const RealRepresentation& v, std::size_t h, std::size_t ambient) {
    if (!lat.leq(h, ambient)) throw ValidationError("is_H_stabilizable: H is not a subgroup of the ambient group");
    std::int64_t dh = fixed_dim(lat, v, h);
    if (dh < 1) return false;
    for (std::size_t k : lat.minimal_overgroups_within(h, ambient))
        if (fixed_dim(lat, v, k) >= dh) return false;
    return true;
}

} // namespace equistab
