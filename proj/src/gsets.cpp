#include "equistab/gsets.hpp"

#include "equistab/errors.hpp"

#include <sstream>

namespace equistab {

namespace {

void require_same_ambient(const GSetClass& s, const GSetClass& t) {
    if (s.ambient != t.ambient) throw ValidationError("G-set classes live over different ambient groups");
}

} // namespace

GSetClass empty_gset(const SubgroupLattice& lat, std::size_t ambient) {
    return GSetClass{ambient, std::vector<std::int64_t>(lat.size(), 0)};
}

GSetClass orbit_gset(const SubgroupLattice& lat, std::size_t ambient, std::size_t h) {
    if (!lat.leq(h, ambient)) throw ValidationError("orbit_gset: isotropy is not a subgroup of the ambient group");
    GSetClass s = empty_gset(lat, ambient);
    s.mult[h] = 1;
    return s;
}

std::int64_t gset_cardinality(const SubgroupLattice& lat, const GSetClass& s) {
    std::int64_t n = 0;
    for (std::size_t h = 0; h < s.mult.size(); ++h)
        if (s.mult[h] != 0) n += s.mult[h] * lat.index_in(h, s.ambient);
    return n;
}

std::int64_t orbit_count(const GSetClass& s) {
    std::int64_t n = 0;
    for (std::int64_t m : s.mult) n += m;
    return n;
}

GSetClass disjoint_union(const SubgroupLattice& lat, const GSetClass& s, const GSetClass& t) {
    (void)lat;
    require_same_ambient(s, t);
    GSetClass u = s;
    for (std::size_t h = 0; h < u.mult.size(); ++h) u.mult[h] += t.mult[h];
    return u;
}

std::vector<GSetClass> enumerate_gsets(const SubgroupLattice& lat, std::size_t ambient, std::int64_t n) {
    if (n < 0) throw ValidationError("enumerate_gsets: negative cardinality");
    std::vector<std::size_t> subs = lat.subgroups_of(ambient);
    std::vector<GSetClass> out;
    GSetClass cur = empty_gset(lat, ambient);
    // lexicographic on the multiplicity vector in subgroup order
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
        if (pos == subs.size()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        std::int64_t orbit = lat.index_in(subs[pos], ambient);
        for (std::int64_t m = 0; m * orbit <= remaining; ++m) {
            cur.mult[subs[pos]] = m;
            self(self, pos + 1, remaining - m * orbit);
        }
        cur.mult[subs[pos]] = 0;
    };
    rec(rec, 0, n);
    return out;
}

GSetClass restrict_gset(const SubgroupLattice& lat, const GSetClass& s, std::size_t k) {
    if (!lat.leq(k, s.ambient)) throw ValidationError("restrict_gset: target is not a subgroup of the ambient group");
    GSetClass out = empty_gset(lat, k);
    for (std::size_t h = 0; h < s.mult.size(); ++h) {
        if (s.mult[h] == 0) continue;
        std::size_t hk = lat.join(h, k);
        std::size_t cap = lat.meet(h, k);
        std::int64_t copies = lat.subgroup_order(s.ambient) / lat.subgroup_order(hk);
        out.mult[cap] += s.mult[h] * copies;
    }
    return out;
}

IntMat table_of_marks(const SubgroupLattice& lat, std::size_t ambient) {
    std::vector<std::size_t> subs = lat.subgroups_of(ambient);
    IntMat m(subs.size(), subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = 0; j < subs.size(); ++j)
            if (lat.leq(subs[i], subs[j])) m(i, j) = lat.index_in(subs[j], ambient);
    return m;
}

GSetClass orbit_product(const SubgroupLattice& lat, std::size_t ambient, std::size_t h, std::size_t k) {
    GSetClass out = empty_gset(lat, ambient);
    std::size_t hk = lat.join(h, k);
    out.mult[lat.meet(h, k)] = lat.subgroup_order(ambient) / lat.subgroup_order(hk);
    return out;
}

GSetClass gset_product(const SubgroupLattice& lat, const GSetClass& s, const GSetClass& t) {
    require_same_ambient(s, t);
    GSetClass out = empty_gset(lat, s.ambient);
    for (std::size_t h = 0; h < s.mult.size(); ++h) {
        if (s.mult[h] == 0) continue;
        for (std::size_t k = 0; k < t.mult.size(); ++k) {
            if (t.mult[k] == 0) continue;
            GSetClass p = orbit_product(lat, s.ambient, h, k);
            for (std::size_t l = 0; l < p.mult.size(); ++l) out.mult[l] += s.mult[h] * t.mult[k] * p.mult[l];
        }
    }
    return out;
}

std::int64_t gset_fixed_points(const SubgroupLattice& lat, const GSetClass& s, std::size_t k) {
    if (!lat.leq(k, s.ambient)) throw ValidationError("gset_fixed_points: K is not a subgroup of the ambient group");
    std::int64_t n = 0;
    for (std::size_t h = 0; h < s.mult.size(); ++h)
        if (s.mult[h] != 0 && lat.leq(k, h)) n += s.mult[h] * lat.index_in(h, s.ambient);
    return n;
}

std::string gset_to_string(const SubgroupLattice& lat, const GSetClass& s) {
    std::ostringstream os;
    bool first = true;
    std::string a = lat.subgroup_name(s.ambient);
    for (std::size_t h = 0; h < s.mult.size(); ++h) {
        if (s.mult[h] == 0) continue;
        if (!first) os << " + ";
        if (s.mult[h] != 1) os << s.mult[h];
        os << "[" << a << "/" << lat.subgroup_name(h) << "]";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace equistab
