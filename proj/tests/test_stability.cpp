#include "equistab/confstab/assembly.hpp"
#include "equistab/confstab/oracle.hpp"
#include "equistab/errors.hpp"
#include "equistab/stability/polyring.hpp"
#include "equistab/stability/sequence.hpp"

#include "support/corpus.hpp"

#include <doctest.h>

using namespace equistab;
using namespace testsupport;

namespace {

const FgAbGroup Z{1, {}};

GradedSequence min_n_3_sequence(std::size_t len) {
    GradedSequence s;
    for (std::size_t n = 0; n < len; ++n)
        s.pieces.push_back(BasedGroup{std::vector<Int>(std::min<std::size_t>(n, 3), Int(0))});
    for (std::size_t n = 0; n + 1 < len; ++n) {
        IntMat f(s.pieces[n + 1].size(), s.pieces[n].size());
        for (std::size_t i = 0; i < s.pieces[n].size(); ++i) f(i, i) = 1;
        s.maps.push_back(std::move(f));
    }
    return s;
}

} // namespace

TEST_CASE("check_stabilization: worked cases") {
    BasedGroup z{{Int(0)}};
    GradedSequence ident = constant_sequence(z, IntMat::identity(1), 10);
    StabilizationReport r = check_stabilization(ident);
    CHECK(r.stable);
    CHECK(r.stable_from == 0);
    CHECK(r.failing.empty());

    GradedSequence stairs = min_n_3_sequence(10);
    r = check_stabilization(stairs);
    CHECK(r.stable);
    CHECK(r.stable_from == 3);
    CHECK(r.failing == std::vector<std::size_t>{0, 1, 2});

    // Z^n inclusions: never stable, witness everywhere
    GradedSequence growing;
    for (std::size_t n = 0; n < 8; ++n) growing.pieces.push_back(BasedGroup{std::vector<Int>(n, Int(0))});
    for (std::size_t n = 0; n + 1 < 8; ++n) {
        IntMat f(n + 1, n);
        for (std::size_t i = 0; i < n; ++i) f(i, i) = 1;
        growing.maps.push_back(std::move(f));
    }
    r = check_stabilization(growing);
    CHECK(!r.stable);
    CHECK(r.failing.size() == growing.maps.size());
}

TEST_CASE("fg_witness_from_stability: generators, trimming, planted defect") {
    BasedGroup z{{Int(0)}};
    GradedSequence ident = constant_sequence(z, IntMat::identity(1), 10);
    WitnessReport w = fg_witness_from_stability(ident);
    CHECK(w.valid);
    CHECK(w.total_generators == 1);

    GradedSequence stairs = min_n_3_sequence(10);
    w = fg_witness_from_stability(stairs);
    CHECK(w.valid);
    CHECK(w.total_generators <= 6);
    CHECK(w.total_generators >= 3);

    // planted extra class: replace the piece at stable_from + 2 by a larger
    // group while keeping the witness point from the healthy sequence
    GradedSequence corrupted = stairs;
    corrupted.pieces[5] = BasedGroup{std::vector<Int>(4, Int(0))};
    IntMat in(4, 3), out(3, 4);
    for (std::size_t i = 0; i < 3; ++i) in(i, i) = 1;
    for (std::size_t i = 0; i < 3; ++i) out(i, i) = 1;
    corrupted.maps[4] = in;
    corrupted.maps[5] = out;
    WitnessReport bad = fg_witness_from_stability(corrupted, 3);
    CHECK(!bad.valid);
    REQUIRE(bad.failure_degree.has_value());
    CHECK(*bad.failure_degree == 5);

    CHECK_THROWS_AS(fg_witness_from_stability(constant_sequence(z, IntMat(1, 1), 5)), ValidationError);
}

TEST_CASE("cokernel_profile: worked cases") {
    BasedGroup z{{Int(0)}};
    auto all_zero = cokernel_profile(constant_sequence(z, IntMat::identity(1), 8));
    for (const FgAbGroup& c : all_zero) CHECK(c.is_zero());

    IntMat two(1, 1);
    two(0, 0) = 2;
    auto halves = cokernel_profile(constant_sequence(z, two, 8));
    for (const FgAbGroup& c : halves) CHECK(c == FgAbGroup{0, {Int(2)}});

    GradedSequence growing;
    for (std::size_t n = 0; n < 8; ++n) growing.pieces.push_back(BasedGroup{std::vector<Int>(n, Int(0))});
    for (std::size_t n = 0; n + 1 < 8; ++n) {
        IntMat f(n + 1, n);
        for (std::size_t i = 0; i < n; ++i) f(i, i) = 1;
        growing.maps.push_back(std::move(f));
    }
    for (const FgAbGroup& c : cokernel_profile(growing)) CHECK(c == Z);
}

TEST_CASE("algebraic stability equivalence on the whole corpus") {
    for (const CorpusEntry& entry : sequence_corpus()) {
        StabilizationReport stab = check_stabilization(entry.seq);
        FgReport fg = fg_check(sequence_as_module(entry.seq), 2);
        CHECK_MESSAGE(stab.stable == entry.expect_stable, entry.name);
        CHECK_MESSAGE(fg.finitely_generated == entry.expect_stable, entry.name, ": ", fg.pattern);
        CHECK_MESSAGE(stab.stable == fg.finitely_generated, entry.name);
        if (stab.stable) {
            WitnessReport w = fg_witness_from_stability(entry.seq);
            CHECK_MESSAGE(w.valid, entry.name);
        }
    }
}

TEST_CASE("restrict_polynomial: worked cases") {
    SubgroupLattice c4 = enumerate_subgroups(make_group({4}));
    std::size_t c2 = 1;
    PolyRingMap p = restrict_polynomial(c4, c4.full(), c2);
    // sigma_{C4/e} -> sigma_{C2/e}^2
    REQUIRE(p.images.size() == 3);
    CHECK(p.images[0].source_subgroup == c4.trivial());
    CHECK(p.images[0].target_subgroup == c4.trivial());
    CHECK(p.images[0].exponent == 2);
    // sigma_{C4/C2} -> sigma_{C2/C2}^2 (H <= K case: exponent [G:K])
    CHECK(p.images[1].target_subgroup == c2);
    CHECK(p.images[1].exponent == 2);
    // sigma_{C4/C4} -> sigma_{C2/C2}
    CHECK(p.images[2].target_subgroup == c2);
    CHECK(p.images[2].exponent == 1);
}

TEST_CASE("restrict_polynomial exponents equal brute-force K-orbit counts") {
    for (auto factors : {std::vector<std::int64_t>{2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}}) {
        SubgroupLattice lat = enumerate_subgroups(make_group(factors));
        for (std::size_t k = 0; k < lat.size(); ++k) {
            PolyRingMap p = restrict_polynomial(lat, lat.full(), k);
            CHECK(integrality_witness(lat, p));
            for (const auto& img : p.images) {
                GSetClass orbit = orbit_gset(lat, lat.full(), img.source_subgroup);
                if (gset_cardinality(lat, orbit) > static_cast<std::int64_t>(kOracleSizeBound)) {
                    // restriction of classes carries the same content
                    GSetClass r = restrict_gset(lat, orbit, k);
                    CHECK(r.mult[img.target_subgroup] == img.exponent);
                    CHECK(orbit_count(r) == img.exponent);
                    continue;
                }
                ConcreteGSet x = realize_gset(lat, orbit);
                x.ambient = k;
                GSetClass decomposed = classify_concrete(lat, x);
                CHECK(orbit_count(decomposed) == img.exponent);
                CHECK(decomposed.mult[img.target_subgroup] == img.exponent);
            }
        }
    }
}

TEST_CASE("restrict_polynomial composes along chains") {
    for (auto factors : {std::vector<std::int64_t>{8}, {2, 4}, {2, 2, 2}}) {
        SubgroupLattice lat = enumerate_subgroups(make_group(factors));
        for (std::size_t k = 0; k < lat.size(); ++k)
            for (std::size_t l = 0; l < lat.size(); ++l) {
                if (!lat.leq(l, k)) continue;
                PolyRingMap gk = restrict_polynomial(lat, lat.full(), k);
                PolyRingMap kl = restrict_polynomial(lat, k, l);
                PolyRingMap direct = restrict_polynomial(lat, lat.full(), l);
                PolyRingMap comp = compose(lat, gk, kl);
                REQUIRE(comp.images.size() == direct.images.size());
                for (std::size_t i = 0; i < comp.images.size(); ++i) {
                    CHECK(comp.images[i].target_subgroup == direct.images[i].target_subgroup);
                    CHECK(comp.images[i].exponent == direct.images[i].exponent);
                }
            }
    }
}

TEST_CASE("fg_check verdict is invariant under grade permutation") {
    SubgroupLattice c2 = enumerate_subgroups(make_group({2}));
    ManifoldDescriptor rho = rho_model(c2, c2.full(), 1);
    GradedModule mod = geometric_module(c2, rho, 0, 6);
    // permute the grades
    std::vector<std::size_t> perm(mod.pieces.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = (i * 7 + 3) % perm.size();
    bool bijective = true;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t p : perm) {
        if (seen[p]) bijective = false;
        seen[p] = true;
    }
    REQUIRE(bijective);
    GradedModule shuffled;
    shuffled.op_names = mod.op_names;
    shuffled.op_shift = mod.op_shift;
    shuffled.grade_names.resize(mod.pieces.size());
    shuffled.grade_degree.resize(mod.pieces.size());
    shuffled.pieces.resize(mod.pieces.size());
    for (std::size_t i = 0; i < mod.pieces.size(); ++i) {
        shuffled.grade_names[perm[i]] = mod.grade_names[i];
        shuffled.grade_degree[perm[i]] = mod.grade_degree[i];
        shuffled.pieces[perm[i]] = mod.pieces[i];
    }
    for (const auto& e : mod.edges)
        shuffled.edges.push_back(GradedModule::Edge{e.op, perm[e.src], perm[e.dst], e.f});
    FgReport a = fg_check(mod);
    FgReport b = fg_check(shuffled);
    CHECK(a.finitely_generated == b.finitely_generated);
    CHECK(a.nonzero_cokernels.size() == b.nonzero_cokernels.size());
}

TEST_CASE("mackey_fg_check: levelwise verdicts for the rho model at d = 0") {
    for (auto factors : {std::vector<std::int64_t>{2}, {3}}) {
        SubgroupLattice lat = enumerate_subgroups(make_group(factors));
        ManifoldDescriptor rho = rho_model(lat, lat.full(), 1);
        std::vector<MackeyFgLevel> levels;
        for (std::size_t k : lat.subgroups_of(lat.full())) {
            ManifoldDescriptor mk = restrict_descriptor(lat, rho, k);
            levels.push_back(MackeyFgLevel{k, geometric_module(lat, mk, 0, 8)});
        }
        MackeyFgReport rep = mackey_fg_check(lat, lat.full(), levels);
        CHECK(rep.finitely_generated);
        for (const auto& [k, r] : rep.levels) CHECK_MESSAGE(r.finitely_generated, lat.subgroup_name(k));
    }
}

TEST_CASE("mackey_fg_check: trivial group reduces to a single-level check") {
    SubgroupLattice triv = enumerate_subgroups(make_group({}));
    ManifoldDescriptor rho = rho_model(triv, triv.full(), 1);
    std::vector<MackeyFgLevel> levels{{triv.full(), geometric_module(triv, rho, 0, 8)}};
    MackeyFgReport rep = mackey_fg_check(triv, triv.full(), levels);
    CHECK(rep.finitely_generated);
    REQUIRE(rep.levels.size() == 1);
}

TEST_CASE("non-commuting operators are rejected") {
    // two operators on a 2x2 grade grid whose square does not commute
    GradedModule m;
    BasedGroup z{{Int(0)}};
    for (int i = 0; i < 4; ++i) {
        m.grade_names.push_back("g" + std::to_string(i));
        m.grade_degree.push_back(i == 0 ? 0 : (i == 3 ? 2 : 1));
        m.pieces.push_back(z);
    }
    m.op_names = {"a", "b"};
    m.op_shift = {1, 1};
    IntMat one = IntMat::identity(1), two(1, 1);
    two(0, 0) = 2;
    // a: g0 -> g1, g2 -> g3; b: g0 -> g2, g1 -> g3 with a mismatch
    m.edges.push_back(GradedModule::Edge{0, 0, 1, one});
    m.edges.push_back(GradedModule::Edge{0, 2, 3, one});
    m.edges.push_back(GradedModule::Edge{1, 0, 2, one});
    m.edges.push_back(GradedModule::Edge{1, 1, 3, two});
    CHECK_THROWS_AS(validate_commuting(m), ValidationError);
    CHECK_THROWS_AS(fg_check(m), ValidationError);
    // repairing the mismatch makes it pass
    m.edges[3].f = one;
    CHECK_NOTHROW(validate_commuting(m));
}

TEST_CASE("mackey_fg_check: a planted unbounded level is caught and named") {
    SubgroupLattice c2 = enumerate_subgroups(make_group({2}));
    ManifoldDescriptor rho = rho_model(c2, c2.full(), 1);
    std::vector<MackeyFgLevel> levels;
    for (std::size_t k : c2.subgroups_of(c2.full())) {
        ManifoldDescriptor mk = restrict_descriptor(c2, rho, k);
        levels.push_back(MackeyFgLevel{k, geometric_module(c2, mk, 0, 8)});
    }
    // plant: cripple the level-e module by zeroing every operator matrix,
    // so nothing is ever in the image
    for (auto& lvl : levels) {
        if (lvl.level != c2.trivial()) continue;
        for (auto& e : lvl.module.edges) e.f = IntMat(e.f.rows(), e.f.cols());
    }
    MackeyFgReport rep = mackey_fg_check(c2, c2.full(), levels);
    CHECK(!rep.finitely_generated);
    CHECK(rep.first_failing_level == "e");
    CHECK_THROWS_AS(mackey_fg_check(c2, c2.full(), {levels[1]}), ValidationError);
}
