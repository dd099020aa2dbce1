#include "equistab/confstab/assembly.hpp"

#include "equistab/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace equistab {

std::vector<GSetClass> components_of_fixed_config(const SubgroupLattice& lat, const ManifoldDescriptor& m,
                                                  std::int64_t n) {
    std::vector<GSetClass> out;
    for (GSetClass& s : enumerate_gsets(lat, m.ambient, n)) {
        bool ok = true;
        for (std::size_t h = 0; h < s.mult.size(); ++h)
            if (s.mult[h] != 0 && !m.strata[h].nonempty) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(s));
    }
    return out;
}

std::vector<CsFactor> cs_decomposition(const SubgroupLattice& lat, const GSetClass& s, const ManifoldDescriptor& m) {
    if (s.ambient != m.ambient) throw ValidationError("cs_decomposition: class and descriptor ambient mismatch");
    std::vector<CsFactor> out;
    for (std::size_t h = 0; h < s.mult.size(); ++h) {
        if (s.mult[h] == 0) continue;
        if (!m.strata[h].nonempty)
            throw ValidationError("class is not realizable: stratum " + lat.subgroup_name(h) + " is empty");
        out.push_back(CsFactor{h, s.mult[h]});
    }
    return out;
}

namespace {

// graded homology of one factor C_k(M_(H)/A), degrees 0..dmax
GradedBased factor_graded(const SubgroupLattice& lat, const ManifoldDescriptor& m, std::size_t h, std::int64_t k,
                          int dmax) {
    GradedBased g;
    g.deg.resize(dmax + 1);
    for (int d = 0; d <= dmax; ++d) g.deg[d] = BasedGroup::from_fg(table_entry(lat, m, h, k, d));
    return g;
}

GradedMap factor_sigma(const SubgroupLattice& lat, const ManifoldDescriptor& m, std::size_t h, std::int64_t k,
                       int dmax) {
    GradedMap f;
    f.deg.resize(dmax + 1);
    for (int d = 0; d <= dmax; ++d) f.deg[d] = table_map(lat, m, h, k, d);
    return f;
}

} // namespace

GradedBased csg_graded(const SubgroupLattice& lat, const GSetClass& s, const ManifoldDescriptor& m, int dmax) {
    GradedBased acc = graded_point(dmax);
    for (const CsFactor& f : cs_decomposition(lat, s, m))
        acc = kunneth_pair(acc, factor_graded(lat, m, f.subgroup, f.k, dmax));
    return acc;
}

FgAbGroup homology_of_CSG(const SubgroupLattice& lat, const GSetClass& s, const ManifoldDescriptor& m, int d) {
    // value route: iterated gcd-rule Kunneth on canonical values
    std::vector<FgAbGroup> acc(d + 1);
    acc[0] = FgAbGroup{1, {}};
    for (const CsFactor& f : cs_decomposition(lat, s, m)) {
        std::vector<FgAbGroup> fac(d + 1);
        for (int i = 0; i <= d; ++i) fac[i] = table_entry(lat, m, f.subgroup, f.k, i);
        std::vector<FgAbGroup> next(d + 1);
        for (int i = 0; i <= d; ++i) next[i] = kunneth(acc, fac, i);
        acc = std::move(next);
    }
    return acc[d];
}

GSetClass stabilize_component(const SubgroupLattice& lat, const GSetClass& s, std::size_t h,
                              const ManifoldDescriptor& m) {
    if (s.ambient != m.ambient) throw ValidationError("stabilize_component: ambient mismatch");
    if (!lat.leq(h, s.ambient) || !m.strata[h].stabilizable)
        throw ValidationError("stabilize_component: M is not " + lat.subgroup_name(h) + "-stabilizable");
    return disjoint_union(lat, s, orbit_gset(lat, s.ambient, h));
}

GradedMap stabilize_map(const SubgroupLattice& lat, const GSetClass& s, std::size_t h, const ManifoldDescriptor& m,
                        int dmax) {
    GSetClass t = stabilize_component(lat, s, h, m);
    // fold maps in the same factor order as csg_graded, with the sigma on
    // the H factor and identities elsewhere
    GradedBased acc_src = graded_point(dmax);
    GradedBased acc_dst = graded_point(dmax);
    GradedMap acc_map = graded_identity(acc_src);
    for (const CsFactor& f : cs_decomposition(lat, t, m)) {
        std::int64_t k_src = (f.subgroup == h) ? f.k - 1 : f.k;
        GradedBased fac_src = factor_graded(lat, m, f.subgroup, k_src, dmax);
        GradedBased fac_dst = factor_graded(lat, m, f.subgroup, f.k, dmax);
        GradedMap fac_map;
        if (f.subgroup == h)
            fac_map = factor_sigma(lat, m, f.subgroup, k_src, dmax);
        else
            fac_map = graded_identity(fac_src);
        acc_map = kunneth_pair_map(acc_src, acc_dst, fac_src, fac_dst, acc_map, fac_map);
        acc_src = kunneth_pair(acc_src, fac_src);
        acc_dst = kunneth_pair(acc_dst, fac_dst);
    }
    return acc_map;
}

RangeCheckReport stability_range_check(const SubgroupLattice& lat, const ManifoldDescriptor& m, std::size_t h,
                                       int dmax, std::int64_t kmax) {
    if (!m.strata[h].stabilizable)
        throw ValidationError("stability_range_check: M is not " + lat.subgroup_name(h) + "-stabilizable");
    RangeCheckReport rep;

    // do the input table maps hit the classical range d <= k/2?
    for (std::int64_t k = 0; k + 1 <= kmax; ++k)
        for (int d = 1; d <= dmax && 2 * d <= k; ++d) {
            BasedGroup src = BasedGroup::from_fg(table_entry(lat, m, h, k, d));
            BasedGroup dst = BasedGroup::from_fg(table_entry(lat, m, h, k + 1, d));
            if (!hom_is_iso(dst, src, table_map(lat, m, h, k, d))) rep.input_maps_iso_in_range = false;
        }

    for (std::int64_t n = 0; n <= kmax; ++n)
        for (GSetClass& s : components_of_fixed_config(lat, m, n)) {
            std::int64_t k = s.mult[h];
            GSetClass t = stabilize_component(lat, s, h, m);
            GradedBased src = csg_graded(lat, s, m, dmax);
            GradedBased dst = csg_graded(lat, t, m, dmax);
            GradedMap f = stabilize_map(lat, s, h, m, dmax);
            for (int d = 0; d <= dmax; ++d) {
                bool iso = hom_is_iso(dst.deg[d], src.deg[d], f.deg[d]);
                bool guaranteed = (2 * d <= k);
                rep.rows.push_back(RangeCheckRow{s, d, k, iso, guaranteed});
                if (guaranteed && rep.input_maps_iso_in_range && !iso)
                    rep.violations.push_back("expected iso at S = " + gset_to_string(lat, s) +
                                             ", d = " + std::to_string(d));
            }
        }
    return rep;
}

GradedModule geometric_module(const SubgroupLattice& lat, const ManifoldDescriptor& m, int d, std::int64_t bound) {
    GradedModule mod;
    std::map<GSetClass, std::size_t> grade_of;
    std::vector<GSetClass> grades;
    for (std::int64_t n = 0; n <= bound; ++n)
        for (GSetClass& s : components_of_fixed_config(lat, m, n)) {
            grade_of[s] = grades.size();
            grades.push_back(s);
            mod.grade_names.push_back(gset_to_string(lat, s));
            mod.grade_degree.push_back(n);
            mod.pieces.push_back(csg_graded(lat, s, m, d).deg[d]);
        }
    for (std::size_t op_h = 0; op_h < lat.size(); ++op_h) {
        if (!lat.leq(op_h, m.ambient) || !m.strata[op_h].stabilizable) continue;
        std::size_t op = mod.op_names.size();
        mod.op_names.push_back("sigma[" + lat.subgroup_name(m.ambient) + "/" + lat.subgroup_name(op_h) + "]");
        mod.op_shift.push_back(lat.index_in(op_h, m.ambient));
        for (std::size_t gi = 0; gi < grades.size(); ++gi) {
            GSetClass t = stabilize_component(lat, grades[gi], op_h, m);
            auto it = grade_of.find(t);
            if (it == grade_of.end()) continue; // beyond the bound
            GradedMap f = stabilize_map(lat, grades[gi], op_h, m, d);
            mod.edges.push_back(GradedModule::Edge{op, gi, it->second, f.deg[d]});
        }
    }
    return mod;
}

} // namespace equistab
