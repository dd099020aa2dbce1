// Acceptance suite: one check per headline requirement, each printing a
// single PASS/FAIL line with its wall time.  Exact arithmetic throughout;
// time limits are enforced.

#include "equistab/bredon.hpp"
#include "equistab/confstab/assembly.hpp"
#include "equistab/confstab/h0.hpp"
#include "equistab/confstab/oracle.hpp"
#include "equistab/core/snf.hpp"
#include "equistab/stability/polyring.hpp"
#include "equistab/stability/sequence.hpp"

#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/tables.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace equistab;
using namespace testsupport;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

#define ACCEPT(cond)                                                                  \
    do {                                                                              \
        if (!(cond)) {                                                                \
            ok = false;                                                               \
            g_notes.push_back(std::string("  failed: ") + #cond + " at line " +       \
                              std::to_string(__LINE__));                              \
        }                                                                             \
    } while (0)

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int n, const std::string& what, bool ok, double ms, double limit_ms) {
    if (ms > limit_ms) {
        ok = false;
        g_notes.push_back("  time limit exceeded: " + std::to_string(ms) + " ms > " + std::to_string(limit_ms) +
                          " ms");
    }
    std::printf("criterion %d: %s — %s (%.0f ms)\n", n, ok ? "PASS" : "FAIL", what.c_str(), ms);
    for (const std::string& note : g_notes) std::printf("%s\n", note.c_str());
    g_notes.clear();
    if (!ok) ++g_failures;
}

const FgAbGroup Z{1, {}};

std::vector<std::vector<std::int64_t>> groups_up_to_8() {
    return {{}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}};
}

// ---------------------------------------------------------------------------
// 1. single-variable stabilization <=> finite generation, on the corpus

void criterion1() {
    Timer t;
    bool ok = true;
    auto corpus = sequence_corpus();
    ACCEPT(corpus.size() >= 30);
    for (const CorpusEntry& entry : corpus) {
        StabilizationReport stab = check_stabilization(entry.seq);
        FgReport fg = fg_check(sequence_as_module(entry.seq), 2);
        if (stab.stable != entry.expect_stable || fg.finitely_generated != entry.expect_stable ||
            stab.stable != fg.finitely_generated) {
            ok = false;
            g_notes.push_back("  disagreement on corpus entry: " + entry.name);
        }
    }
    report(1, "sequence stabilization agrees with single-variable finite generation on " +
                  std::to_string(corpus.size()) + " synthetic sequences",
           ok, t.ms(), 5000);
}

// ---------------------------------------------------------------------------
// 2. degree-zero instability over the trivial-orbit operator alone, and
//    recovery over the full operator ring

void criterion2() {
    Timer t;
    bool ok = true;
    for (std::int64_t p : {2, 3}) {
        SubgroupLattice lat = enumerate_subgroups(make_group({p}));
        ManifoldDescriptor rho = rho_model(lat, lat.full(), 1);
        std::int64_t bound = 12 * p;
        H0Presentation pres = bredon_h0_presentation(lat, rho, bound);

        // the single trivial-orbit operator: persistent cokernels at the
        // grades of i [G/e], i.e. every multiple of p
        std::size_t gg_op = pres.module.op_names.size();
        for (std::size_t i = 0; i < pres.module.op_names.size(); ++i)
            if (pres.module.op_names[i] == "sigma[G/G]") gg_op = i;
        ACCEPT(gg_op < pres.module.op_names.size());
        std::vector<std::size_t> only{gg_op};
        FgReport narrow = fg_check(pres.module, -1, &only);
        ACCEPT(!narrow.finitely_generated);
        std::vector<bool> bad(bound + 1, false);
        for (const auto& info : narrow.nonzero_cokernels) bad[pres.module.grade_degree[info.grade]] = true;
        for (std::int64_t i = 1; i <= 12; ++i) ACCEPT(bad[p * i]);
        for (std::int64_t n = 1; n <= bound; ++n)
            if (n % p != 0) ACCEPT(!bad[n]);

        // the full ring: finitely generated with small generators
        FgReport full = fg_check(pres.module);
        ACCEPT(full.finitely_generated);
        ACCEPT(full.max_generator_degree <= p);
    }
    report(2, "H_0 instability over Z[sigma_{G/G}] for C_2 and C_3 (cokernels at every i[G/e] up to 12) and finite "
              "generation over the full ring",
           ok, t.ms(), 10000);
}

// ---------------------------------------------------------------------------
// 3. degree-zero finite generation for the regular models, plus the
//    levelwise (Mackey) version

void criterion3() {
    Timer t;
    bool ok = true;
    for (auto factors : {std::vector<std::int64_t>{2}, {3}, {4}, {2, 2}}) {
        SubgroupLattice lat = enumerate_subgroups(make_group(factors));
        ManifoldDescriptor rho = rho_model(lat, lat.full(), 1);
        GradedModule mod = geometric_module(lat, rho, 0, 12);
        FgReport rep = fg_check(mod);
        ACCEPT(rep.finitely_generated);
        ACCEPT(rep.nonzero_cokernels.size() == 1);
        if (!rep.nonzero_cokernels.empty()) {
            ACCEPT(mod.grade_degree[rep.nonzero_cokernels[0].grade] == 0);
            ACCEPT(rep.nonzero_cokernels[0].cokernel == Z);
        }

        std::vector<MackeyFgLevel> levels;
        for (std::size_t k : lat.subgroups_of(lat.full())) {
            ManifoldDescriptor mk = restrict_descriptor(lat, rho, k);
            levels.push_back(MackeyFgLevel{k, geometric_module(lat, mk, 0, 12)});
        }
        MackeyFgReport mrep = mackey_fg_check(lat, lat.full(), levels);
        ACCEPT(mrep.finitely_generated);
        for (const auto& [k, r] : mrep.levels) {
            (void)k;
            ACCEPT(r.finitely_generated);
        }
    }
    report(3, "degree-zero modules of the regular models for C2, C3, C4, C2xC2 are free of rank one over the full "
              "operator ring, levelwise included",
           ok, t.ms(), 30000);
}

// ---------------------------------------------------------------------------
// 4. discrete census equals the closed-form binomial product

void criterion4() {
    Timer t;
    bool ok = true;
    std::mt19937 rng(271828);
    std::vector<std::vector<std::int64_t>> pool = {{2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}};
    auto binomial = [](std::int64_t n, std::int64_t k) {
        if (k < 0 || k > n) return std::int64_t(0);
        std::int64_t r = 1;
        for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    int done = 0;
    while (done < 50) {
        SubgroupLattice lat = enumerate_subgroups(make_group(pool[rng() % pool.size()]));
        GSetClass xcls = empty_gset(lat, lat.full());
        for (std::size_t h : lat.subgroups_of(lat.full())) xcls.mult[h] = rng() % 3;
        std::int64_t size = gset_cardinality(lat, xcls);
        if (size == 0 || size > 12) continue;
        ConcreteGSet x = realize_gset(lat, xcls);
        for (std::int64_t n = 0; n <= size; ++n) {
            auto census = discrete_config_oracle(lat, x, n);
            std::map<GSetClass, std::int64_t> counted;
            for (const auto& e : census) counted[e.cls] = e.count;
            for (const GSetClass& cls : enumerate_gsets(lat, lat.full(), n)) {
                std::int64_t expect = 1;
                for (std::size_t h = 0; h < cls.mult.size(); ++h) expect *= binomial(xcls.mult[h], cls.mult[h]);
                auto it = counted.find(cls);
                std::int64_t got = it == counted.end() ? 0 : it->second;
                if (got != expect) {
                    ok = false;
                    g_notes.push_back("  census mismatch at " + gset_to_string(lat, cls));
                }
            }
        }
        ++done;
    }
    report(4, "brute-force censuses of 50 random discrete models match the component enumeration with binomial "
              "counts exactly",
           ok, t.ms(), 60000);
}

// ---------------------------------------------------------------------------
// 5. Bredon homology regression with the cofiber oracle

void criterion5() {
    Timer t;
    bool ok = true;
    SubgroupLattice c2 = enumerate_subgroups(make_group({2}));
    MackeyFunctorData z = constant_Z(c2);

    auto h_point = homology(assemble_bredon_complex(c2, point_complex(c2), z));
    ACCEPT(h_point.size() == 1);
    ACCEPT(h_point[0] == Z);

    auto h_free = homology(assemble_bredon_complex(c2, free_orbit_complex(c2), z));
    ACCEPT(h_free[0] == Z);

    auto h_disk = homology(assemble_bredon_complex(c2, sign_disk(c2), z));
    ACCEPT(h_disk[0] == Z);
    ACCEPT(h_disk[1].is_zero());
    ACCEPT(h_disk[0] == h_point[0]); // homotopy invariance witness

    auto h_circle = homology(assemble_bredon_complex(c2, sign_circle(c2), z));
    ACCEPT(h_circle[0] == (FgAbGroup{1, {Int(2)}}));
    ACCEPT(h_circle[1].is_zero());

    // independent cofiber-sequence oracle: reduced H_0 = coker(Z -2-> Z)
    IntMat two(1, 1);
    two(0, 0) = 2;
    CokernelShape c = cokernel_shape(two);
    FgAbGroup expected = canonical_fg(1 + c.free_rank, c.torsion);
    ACCEPT(h_circle[0] == expected);

    report(5, "Bredon homology regression: point, free orbit, disk, sign circle (with the cofiber cokernel oracle)",
           ok, t.ms(), 5000);
}

// ---------------------------------------------------------------------------
// 6. assembled stabilization maps are isomorphisms exactly in the stable
//    range dictated by the input tables

void criterion6() {
    Timer t;
    bool ok = true;
    SubgroupLattice c2 = enumerate_subgroups(make_group({2}));
    ManifoldDescriptor m = synthetic_descriptor(c2, stable_range_table(14, 3));

    for (std::size_t h : c2.subgroups_of(c2.full())) {
        RangeCheckReport rep = stability_range_check(c2, m, h, 3, 10);
        ACCEPT(rep.input_maps_iso_in_range);
        ACCEPT(rep.violations.empty());
        bool found_planted = false;
        for (const RangeCheckRow& r : rep.rows) {
            if (r.guaranteed && !r.iso) {
                ok = false;
                g_notes.push_back("  in-range non-iso at S = " + gset_to_string(c2, r.s) + ", d = " +
                                  std::to_string(r.d));
            }
            // the planted non-iso outside the range: four copies of the
            // orbit, degree three
            if (r.k == 4 && r.d == 3 && orbit_count(r.s) == 4 && r.s.mult[h] == 4) {
                found_planted = true;
                ACCEPT(!r.iso);
                ACCEPT(!r.guaranteed);
            }
        }
        ACCEPT(found_planted);
    }
    report(6, "assembled sigma maps are isomorphisms for all d <= k/2 with S up to cardinality 10, and the planted "
              "non-iso outside the range is flagged",
           ok, t.ms(), 30000);
}

// ---------------------------------------------------------------------------
// 7. polynomial-ring restriction equals brute-force orbit decomposition

void criterion7() {
    Timer t;
    bool ok = true;
    for (auto factors : groups_up_to_8()) {
        SubgroupLattice lat = enumerate_subgroups(make_group(factors));
        for (std::size_t a = 0; a < lat.size(); ++a)
            for (std::size_t k = 0; k < lat.size(); ++k) {
                if (!lat.leq(k, a)) continue;
                PolyRingMap p = restrict_polynomial(lat, a, k);
                ACCEPT(integrality_witness(lat, p));
                for (const auto& img : p.images) {
                    GSetClass orbit = orbit_gset(lat, a, img.source_subgroup);
                    ConcreteGSet x = realize_gset(lat, orbit);
                    x.ambient = k;
                    GSetClass decomposed = classify_concrete(lat, x);
                    ACCEPT(orbit_count(decomposed) == img.exponent);
                    ACCEPT(decomposed.mult[img.target_subgroup] == img.exponent);
                }
            }
    }
    report(7, "ring restriction maps equal brute-force orbit decompositions for every subgroup pair of every "
              "abelian group of order <= 8, with integrality witnesses",
           ok, t.ms(), 10000);
}

// ---------------------------------------------------------------------------
// 8. Mackey axioms for both built-in coefficient systems

void criterion8() {
    Timer t;
    bool ok = true;
    for (auto factors : groups_up_to_8()) {
        SubgroupLattice lat = enumerate_subgroups(make_group(factors));
        MackeyFunctorData z = constant_Z(lat);
        MackeyReport rz = verify_mackey_axioms(lat, z);
        if (!rz.pass) {
            ok = false;
            g_notes.push_back("  constant Z fails on " + lat.group.to_string() + ": " + rz.first_failure);
        }
        // transfer-equals-index law, asserted directly on the matrices
        for (std::size_t h = 0; h < lat.size(); ++h)
            for (std::size_t k = 0; k < lat.size(); ++k)
                if (lat.leq(h, k)) ACCEPT(z.tr_at(h, k)(0, 0) == lat.index_in(h, k));
        MackeyReport ra = verify_mackey_axioms(lat, burnside_mackey(lat));
        if (!ra.pass) {
            ok = false;
            g_notes.push_back("  burnside fails on " + lat.group.to_string() + ": " + ra.first_failure);
        }
    }
    report(8, "constant Z and burnside coefficient systems satisfy every Mackey axiom for all abelian groups of "
              "order <= 8",
           ok, t.ms(), 10000);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures == 0)
        std::printf("all 8 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
