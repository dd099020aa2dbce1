#include "equistab/errors.hpp"
#include "equistab/reps.hpp"

#include "support/cyclotomic.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace equistab;

namespace {

std::int64_t lcm_factors(const FiniteAbelianGroup& g) {
    std::int64_t l = 1;
    for (std::int64_t d : g.factors) l = std::lcm(l, d);
    return l;
}

// character value c(h) as k/m with the fixed common denominator m
std::int64_t char_num(const FiniteAbelianGroup& g, const Character& chi, const FiniteAbelianGroup::Elem& h,
                      std::int64_t m) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) v = (v + chi.coeffs[i] * h[i] % m * (m / g.factors[i])) % m;
    return v;
}

// Independent oracle: dim V^H = (1/|H|) sum_{h in H} chi_V(h), evaluated
// exactly in Z[x]/(Phi_m).  The reduced sum must be a constant polynomial.
std::int64_t fixed_dim_oracle(const SubgroupLattice& lat, const RealRepresentation& v, std::size_t h) {
    const FiniteAbelianGroup& g = lat.group;
    std::int64_t m = std::max<std::int64_t>(lcm_factors(g), 1);
    testsupport::Poly sum;
    auto add_power = [&](std::int64_t k, std::int64_t mult) {
        k = ((k % m) + m) % m;
        if (sum.size() <= static_cast<std::size_t>(k)) sum.resize(k + 1, 0);
        sum[k] += mult;
    };
    for (std::int64_t e : lat.nodes[h].elems) {
        auto he = g.elem_at(e);
        for (const RealSummand& s : v.summands) {
            std::int64_t val = char_num(g, s.chi, he, m);
            if (s.realified_dim == 1) {
                add_power(val, s.mult);
            } else {
                add_power(val, s.mult);
                add_power(m - val, s.mult);
            }
        }
    }
    testsupport::Poly reduced = m == 1 ? testsupport::trim(sum) : testsupport::reduce_mod_cyclotomic(sum, m);
    for (std::size_t i = 1; i < reduced.size(); ++i) REQUIRE(reduced[i] == 0);
    std::int64_t constant = reduced.empty() ? 0 : reduced[0];
    REQUIRE(constant % lat.subgroup_order(h) == 0);
    return constant / lat.subgroup_order(h);
}

// exact stabilizer of a vector supported on the given set of summands
std::size_t stabilizer_of_pattern(const SubgroupLattice& lat, const RealRepresentation& v,
                                  const std::vector<bool>& support) {
    std::vector<std::int64_t> stab;
    const FiniteAbelianGroup& g = lat.group;
    std::int64_t m = std::max<std::int64_t>(lcm_factors(g), 1);
    for (std::int64_t e = 0; e < g.order(); ++e) {
        bool fixes = true;
        for (std::size_t i = 0; i < v.summands.size() && fixes; ++i)
            if (support[i] && char_num(g, v.summands[i].chi, g.elem_at(e), m) != 0) fixes = false;
        if (fixes) stab.push_back(e);
    }
    return lat.node_of(stab);
}

} // namespace

TEST_CASE("regular representation dimensions") {
    // C2: rho = trivial + sign, total 2, fixed under C2 is 1
    SubgroupLattice c2 = enumerate_subgroups(make_group({2}));
    RealRepresentation rho2 = regular_rep(c2.group, 1);
    CHECK(total_dim(rho2) == 2);
    CHECK(fixed_dim(c2, rho2, c2.full()) == 1);
    CHECK(fixed_dim(c2, rho2, c2.trivial()) == 2);

    // C3: one trivial line plus one conjugate pair, total 3
    SubgroupLattice c3 = enumerate_subgroups(make_group({3}));
    RealRepresentation rho3 = regular_rep(c3.group, 1);
    CHECK(total_dim(rho3) == 3);
    CHECK(fixed_dim(c3, rho3, c3.full()) == 1);
}

TEST_CASE("fixed_dim of n rho is n [G:H], cross-checked by the cyclotomic oracle") {
    for (auto factors : {std::vector<std::int64_t>{2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}}) {
        SubgroupLattice lat = enumerate_subgroups(make_group(factors));
        for (std::int64_t n = 1; n <= 3; ++n) {
            RealRepresentation v = regular_rep(lat.group, n);
            CHECK(total_dim(v) == n * lat.group.order());
            for (std::size_t h = 0; h < lat.size(); ++h) {
                std::int64_t expect = n * lat.index_in(h, lat.full());
                CHECK(fixed_dim(lat, v, h) == expect);
                CHECK(fixed_dim_oracle(lat, v, h) == expect);
            }
        }
    }
}

TEST_CASE("fixed_dim: sign representation and the trivial subgroup") {
    SubgroupLattice c2 = enumerate_subgroups(make_group({2}));
    RealRepresentation sign = make_representation(c2.group, {{{1}, 1}});
    CHECK(total_dim(sign) == 1);
    CHECK(fixed_dim(c2, sign, c2.full()) == 0);
    CHECK(fixed_dim(c2, sign, c2.trivial()) == 1);
    CHECK(fixed_dim_oracle(c2, sign, c2.full()) == 0);
}

TEST_CASE("fixed_dim is antitone along inclusions") {
    for (auto factors : {std::vector<std::int64_t>{8}, {2, 4}}) {
        SubgroupLattice lat = enumerate_subgroups(make_group(factors));
        RealRepresentation v =
            lat.group.rank() == 1 ? make_representation(lat.group, {{{1}, 1}, {{2}, 2}, {{0}, 1}})
                                  : make_representation(lat.group, {{{1, 0}, 1}, {{0, 1}, 2}, {{1, 2}, 1}});
        for (std::size_t h = 0; h < lat.size(); ++h)
            for (std::size_t k = 0; k < lat.size(); ++k)
                if (lat.leq(h, k)) CHECK(fixed_dim(lat, v, k) <= fixed_dim(lat, v, h));
    }
}

TEST_CASE("character canonicalization folds chi with -chi") {
    FiniteAbelianGroup c4 = make_group({4});
    RealRepresentation v = make_representation(c4, {{{1}, 1}, {{3}, 1}});
    // chi and -chi are the same realified plane: one summand, mult 2, dim 2
    REQUIRE(v.summands.size() == 1);
    CHECK(v.summands[0].mult == 2);
    CHECK(v.summands[0].realified_dim == 2);
    CHECK(total_dim(v) == 4);
}

TEST_CASE("isotropy strata: worked cases") {
    SubgroupLattice c2 = enumerate_subgroups(make_group({2}));
    RealRepresentation rho = regular_rep(c2.group, 1);
    auto strata = isotropy_strata(c2, rho, c2.full());
    REQUIRE(strata.size() == 2);
    CHECK(strata[0].subgroup == c2.trivial());
    CHECK(strata[1].subgroup == c2.full());

    RealRepresentation triv = make_representation(c2.group, {{{0}, 2}});
    auto ts = isotropy_strata(c2, triv, c2.full());
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].subgroup == c2.full());

    RealRepresentation sign = make_representation(c2.group, {{{1}, 1}});
    auto ss = isotropy_strata(c2, sign, c2.full());
    REQUIRE(ss.size() == 2);
    CHECK(ss[1].subgroup == c2.full());
    CHECK(ss[1].fixed_dimension == 0); // origin only
}

TEST_CASE("strata match the realized exact stabilizers of support patterns") {
    for (auto factors : {std::vector<std::int64_t>{4}, {2, 2}, {6}}) {
        SubgroupLattice lat = enumerate_subgroups(make_group(factors));
        RealRepresentation v = regular_rep(lat.group, 1);
        REQUIRE(v.summands.size() <= 6);
        // stabilizers realized by nonzero vectors: all support patterns
        std::set<std::size_t> realized;
        for (std::uint32_t mask = 1; mask < (1u << v.summands.size()); ++mask) {
            std::vector<bool> support(v.summands.size());
            for (std::size_t i = 0; i < v.summands.size(); ++i) support[i] = mask & (1u << i);
            realized.insert(stabilizer_of_pattern(lat, v, support));
        }
        // ... plus the origin, which realizes the full group
        realized.insert(lat.full());
        std::set<std::size_t> strata;
        for (const Stratum& s : isotropy_strata(lat, v, lat.full())) strata.insert(s.subgroup);
        CHECK(strata == realized);
    }
}

TEST_CASE("is_H_stabilizable: worked cases") {
    SubgroupLattice c2 = enumerate_subgroups(make_group({2}));
    RealRepresentation rho = regular_rep(c2.group, 1);
    CHECK(is_H_stabilizable(c2, rho, c2.trivial(), c2.full()));
    CHECK(is_H_stabilizable(c2, rho, c2.full(), c2.full()));

    RealRepresentation sign = make_representation(c2.group, {{{1}, 1}});
    CHECK(!is_H_stabilizable(c2, sign, c2.full(), c2.full()));
    CHECK(is_H_stabilizable(c2, sign, c2.trivial(), c2.full()));
}

TEST_CASE("n rho is H-stabilizable for every H in every small group") {
    for (auto factors : {std::vector<std::int64_t>{2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}}) {
        SubgroupLattice lat = enumerate_subgroups(make_group(factors));
        for (std::int64_t n = 1; n <= 2; ++n) {
            RealRepresentation v = regular_rep(lat.group, n);
            for (std::size_t h = 0; h < lat.size(); ++h) CHECK(is_H_stabilizable(lat, v, h, lat.full()));
        }
    }
}
