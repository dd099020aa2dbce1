#include "equistab/confstab/descriptor.hpp"

#include "equistab/errors.hpp"

#include <string>

namespace equistab {

ManifoldDescriptor rho_model(const SubgroupLattice& lat, std::size_t ambient, std::int64_t n) {
    if (n < 1) throw ValidationError("rho_model: multiplicity must be >= 1");
    ManifoldDescriptor m;
    m.ambient = ambient;
    m.provenance = ManifoldDescriptor::Provenance::RegularModel;
    m.regular_multiplicity = n;
    m.strata.assign(lat.size(), StratumInfo{});
    for (std::size_t h = 0; h < lat.size(); ++h)
        if (lat.leq(h, ambient)) m.strata[h] = StratumInfo{true, true, true, std::nullopt};
    return m;
}

ManifoldDescriptor custom_descriptor(const SubgroupLattice& lat, std::size_t ambient) {
    ManifoldDescriptor m;
    m.ambient = ambient;
    m.strata.assign(lat.size(), StratumInfo{});
    return m;
}

ManifoldDescriptor linear_model_descriptor(const SubgroupLattice& lat, const RealRepresentation& v,
                                           std::size_t ambient) {
    ManifoldDescriptor m = custom_descriptor(lat, ambient);
    for (const Stratum& s : isotropy_strata(lat, v, ambient)) {
        // a stratum of positive dimension is nonempty as an open set; the
        // origin-only stratum (fixed dim 0) is a point, still nonempty but
        // not stabilizable and not open, so it is excluded from the
        // configuration model
        if (s.fixed_dimension >= 1 || s.subgroup == ambient) {
            m.strata[s.subgroup].nonempty = s.fixed_dimension >= 1;
            m.strata[s.subgroup].stabilizable = is_H_stabilizable(lat, v, s.subgroup, ambient);
            // connectivity of the stratum quotient is not decided here;
            // callers must set it for non-regular linear models
        }
    }
    return m;
}

ManifoldDescriptor restrict_descriptor(const SubgroupLattice& lat, const ManifoldDescriptor& m, std::size_t k) {
    if (!lat.leq(k, m.ambient)) throw ValidationError("restrict_descriptor: K is not a subgroup of the ambient group");
    if (k == m.ambient) return m;
    if (m.provenance != ManifoldDescriptor::Provenance::RegularModel)
        throw ValidationError("restrict_descriptor: only the regular model restricts exactly; supply per-level data");
    return rho_model(lat, k, m.regular_multiplicity * lat.index_in(k, m.ambient));
}

namespace {

std::string entry_name(const SubgroupLattice& lat, std::size_t h, std::int64_t k, int d) {
    return "H_" + std::to_string(d) + "(C_" + std::to_string(k) + "(M_(" + lat.subgroup_name(h) + ")/G))";
}

} // namespace

FgAbGroup table_entry(const SubgroupLattice& lat, const ManifoldDescriptor& m, std::size_t h, std::int64_t k, int d) {
    const StratumInfo& s = m.strata.at(h);
    if (!s.nonempty) throw ValidationError("table_entry: stratum " + lat.subgroup_name(h) + " is empty");
    if (k == 0) return d == 0 ? FgAbGroup{1, {}} : FgAbGroup{};
    if (d == 0) {
        if (!s.quotient_connected)
            throw ValidationError("table_entry: stratum quotient at " + lat.subgroup_name(h) +
                                  " is not flagged connected; supply H_0 data");
        return FgAbGroup{1, {}};
    }
    if (!s.table || k > s.table->kmax || d > s.table->dmax)
        throw ValidationError("missing table entries: " + entry_name(lat, h, k, d));
    return s.table->entries[k][d - 1];
}

IntMat table_map(const SubgroupLattice& lat, const ManifoldDescriptor& m, std::size_t h, std::int64_t k, int d) {
    const StratumInfo& s = m.strata.at(h);
    if (!s.nonempty) throw ValidationError("table_map: stratum " + lat.subgroup_name(h) + " is empty");
    if (d == 0) {
        if (!s.quotient_connected)
            throw ValidationError("table_map: stratum quotient at " + lat.subgroup_name(h) +
                                  " is not flagged connected; supply H_0 data");
        return IntMat::identity(1);
    }
    if (k == 0) {
        // H_d(C_0) = 0 for d >= 1: the unique map out of the zero group
        FgAbGroup tgt = table_entry(lat, m, h, 1, d);
        return IntMat(BasedGroup::from_fg(tgt).size(), 0);
    }
    if (!s.table || k >= s.table->kmax || d > s.table->dmax)
        throw ValidationError("missing table map: " + entry_name(lat, h, k, d) + " -> " +
                              entry_name(lat, h, k + 1, d));
    return s.table->maps[k][d - 1];
}

void validate_descriptor(const SubgroupLattice& lat, const ManifoldDescriptor& m) {
    if (m.strata.size() != lat.size()) throw ValidationError("descriptor strata do not match the lattice");
    for (std::size_t h = 0; h < lat.size(); ++h) {
        const StratumInfo& s = m.strata[h];
        if (s.stabilizable && !s.nonempty)
            throw ValidationError("descriptor: stratum " + lat.subgroup_name(h) +
                                  " is flagged stabilizable but empty");
        if (!lat.leq(h, m.ambient) && (s.nonempty || s.stabilizable))
            throw ValidationError("descriptor: stratum flags set outside the ambient subgroup");
        if (s.table) {
            const HomologyTable& t = *s.table;
            if (t.kmax < 0 || t.dmax < 1) throw ValidationError("descriptor: table bounds must cover k >= 0, d >= 1");
            if (static_cast<int>(t.entries.size()) != t.kmax + 1 ||
                static_cast<int>(t.maps.size()) < t.kmax)
                throw ValidationError("descriptor: table rows do not match kmax");
            for (int k = 0; k <= t.kmax; ++k) {
                if (static_cast<int>(t.entries[k].size()) != t.dmax)
                    throw ValidationError("descriptor: table row k=" + std::to_string(k) + " does not cover dmax");
                if (k >= t.kmax) continue;
                for (int d = 1; d <= t.dmax; ++d) {
                    BasedGroup src = BasedGroup::from_fg(t.entries[k][d - 1]);
                    BasedGroup dst = BasedGroup::from_fg(t.entries[k + 1][d - 1]);
                    const IntMat& f = t.maps[k][d - 1];
                    if (f.rows() != dst.size() || f.cols() != src.size())
                        throw ValidationError("descriptor: table map shape mismatch at (k=" + std::to_string(k) +
                                              ", d=" + std::to_string(d) + ")");
                    if (!hom_is_valid(dst, src, f))
                        throw ValidationError("descriptor: table map not well defined at (k=" + std::to_string(k) +
                                              ", d=" + std::to_string(d) + ")");
                }
            }
        }
    }
}

} // namespace equistab
