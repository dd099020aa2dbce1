#include "equistab/stability/polyring.hpp"

#include "equistab/errors.hpp"

#include <map>
#include <sstream>

namespace equistab {

PolyRingMap restrict_polynomial(const SubgroupLattice& lat, std::size_t a, std::size_t k) {
    if (!lat.leq(k, a)) throw ValidationError("restrict_polynomial: K is not a subgroup of the ambient group");
    PolyRingMap p;
    p.source_ambient = a;
    p.target_ambient = k;
    for (std::size_t h : lat.subgroups_of(a)) {
        std::size_t hk = lat.join(h, k);
        PolyRingMap::Image img;
        img.source_subgroup = h;
        img.target_subgroup = lat.meet(h, k);
        img.exponent = lat.subgroup_order(a) / lat.subgroup_order(hk);
        p.images.push_back(img);
    }
    return p;
}

PolyRingMap compose(const SubgroupLattice& lat, const PolyRingMap& ak, const PolyRingMap& kl) {
    if (ak.target_ambient != kl.source_ambient) throw ValidationError("compose: ring maps do not chain");
    PolyRingMap p;
    p.source_ambient = ak.source_ambient;
    p.target_ambient = kl.target_ambient;
    std::map<std::size_t, PolyRingMap::Image> kl_of;
    for (const auto& img : kl.images) kl_of[img.source_subgroup] = img;
    for (const auto& img : ak.images) {
        const auto& next = kl_of.at(img.target_subgroup);
        PolyRingMap::Image out;
        out.source_subgroup = img.source_subgroup;
        out.target_subgroup = next.target_subgroup;
        out.exponent = img.exponent * next.exponent;
        p.images.push_back(out);
    }
    (void)lat;
    return p;
}

bool integrality_witness(const SubgroupLattice& lat, const PolyRingMap& p) {
    // sigma_{K/L} gains a power from the source generator sigma_{A/L}
    for (std::size_t l : lat.subgroups_of(p.target_ambient)) {
        bool hit = false;
        for (const auto& img : p.images)
            if (img.target_subgroup == l && img.exponent >= 1) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

std::string polyringmap_to_string(const SubgroupLattice& lat, const PolyRingMap& p) {
    std::ostringstream os;
    std::string a = lat.subgroup_name(p.source_ambient);
    std::string k = lat.subgroup_name(p.target_ambient);
    for (std::size_t i = 0; i < p.images.size(); ++i) {
        const auto& img = p.images[i];
        if (i) os << ", ";
        os << "sigma[" << a << "/" << lat.subgroup_name(img.source_subgroup) << "] -> sigma[" << k << "/"
           << lat.subgroup_name(img.target_subgroup) << "]";
        if (img.exponent != 1) os << "^" << img.exponent;
    }
    return os.str();
}

GradedModule pull_back_module(const SubgroupLattice& lat, const GradedModule& level_module, const PolyRingMap& p) {
    std::vector<std::size_t> level_subs = lat.subgroups_of(p.target_ambient);
    if (level_module.op_names.size() != level_subs.size())
        throw ValidationError("pull_back_module: level module operators do not match subgroups of the level");

    GradedModule out;
    out.grade_names = level_module.grade_names;
    out.grade_degree = level_module.grade_degree;
    out.pieces = level_module.pieces;

    std::string a = lat.subgroup_name(p.source_ambient);
    for (const auto& img : p.images) {
        std::size_t op = out.op_names.size();
        out.op_names.push_back("sigma[" + a + "/" + lat.subgroup_name(img.source_subgroup) + "]");
        // locate the level operator for K cap H
        std::size_t level_op = 0;
        bool found = false;
        for (std::size_t i = 0; i < level_subs.size(); ++i)
            if (level_subs[i] == img.target_subgroup) {
                level_op = i;
                found = true;
                break;
            }
        if (!found) throw ValidationError("pull_back_module: image subgroup missing from level operators");
        out.op_shift.push_back(level_module.op_shift[level_op] * img.exponent);

        // edge at grade s: walk the level operator exponent-many times
        for (std::size_t s = 0; s < out.pieces.size(); ++s) {
            std::size_t cur = s;
            IntMat f = IntMat::identity(out.pieces[s].size());
            bool complete = true;
            for (std::int64_t step = 0; step < img.exponent; ++step) {
                const auto* e = level_module.edge_for(level_op, cur);
                if (!e) {
                    complete = false;
                    break;
                }
                f = e->f * f;
                cur = e->dst;
            }
            if (complete && img.exponent >= 1)
                out.edges.push_back(GradedModule::Edge{op, s, cur,
                                                       reduce_hom(out.pieces[cur], out.pieces[s], f)});
        }
    }
    return out;
}

MackeyFgReport mackey_fg_check(const SubgroupLattice& lat, std::size_t ambient,
                               const std::vector<MackeyFgLevel>& levels, std::int64_t window) {
    std::vector<std::size_t> subs = lat.subgroups_of(ambient);
    std::map<std::size_t, const GradedModule*> by_level;
    for (const auto& l : levels) by_level[l.level] = &l.module;
    for (std::size_t k : subs)
        if (!by_level.count(k))
            throw ValidationError("mackey_fg_check: missing level module for " + lat.subgroup_name(k));

    MackeyFgReport rep;
    rep.finitely_generated = true;
    for (std::size_t k : subs) {
        PolyRingMap p = restrict_polynomial(lat, ambient, k);
        GradedModule pulled = pull_back_module(lat, *by_level.at(k), p);
        FgReport r = fg_check(pulled, window);
        if (!r.finitely_generated && rep.finitely_generated) {
            rep.finitely_generated = false;
            rep.first_failing_level = lat.subgroup_name(k);
        }
        rep.levels.emplace_back(k, std::move(r));
    }
    return rep;
}

} // namespace equistab
