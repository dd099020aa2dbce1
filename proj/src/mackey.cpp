#include "equistab/mackey.hpp"

#include "equistab/gsets.hpp"

#include <sstream>
#include <stdexcept>

namespace equistab {

MackeyFunctorData constant_Z(const SubgroupLattice& lat) {
    MackeyFunctorData m;
    m.name = "Z";
    m.level_rank.assign(lat.size(), 1);
    m.basis_labels.assign(lat.size(), {"1"});
    for (std::size_t h = 0; h < lat.size(); ++h) m.weyl.push_back(IntMat::identity(1));
    for (std::size_t h = 0; h < lat.size(); ++h)
        for (std::size_t k = 0; k < lat.size(); ++k) {
            if (!lat.leq(h, k)) continue;
            IntMat r(1, 1), t(1, 1);
            r(0, 0) = 1;
            t(0, 0) = lat.index_in(h, k);
            m.res[{h, k}] = r;
            m.tr[{h, k}] = t;
        }
    return m;
}

MackeyFunctorData burnside_mackey(const SubgroupLattice& lat) {
    MackeyFunctorData m;
    m.name = "A";
    m.level_rank.assign(lat.size(), 0);
    m.basis_labels.assign(lat.size(), {});
    // level basis at H: subgroups L <= H in lattice order
    std::vector<std::vector<std::size_t>> basis(lat.size());
    for (std::size_t h = 0; h < lat.size(); ++h) {
        basis[h] = lat.subgroups_of(h);
        m.level_rank[h] = basis[h].size();
        for (std::size_t l : basis[h])
            m.basis_labels[h].push_back("[" + lat.subgroup_name(h) + "/" + lat.subgroup_name(l) + "]");
    }
    for (std::size_t h = 0; h < lat.size(); ++h) m.weyl.push_back(IntMat::identity(m.level_rank[h]));
    auto pos_in = [&](std::size_t h, std::size_t l) {
        for (std::size_t i = 0; i < basis[h].size(); ++i)
            if (basis[h][i] == l) return i;
        throw std::logic_error("burnside_mackey: basis lookup failed");
    };
    for (std::size_t h = 0; h < lat.size(); ++h)
        for (std::size_t k = 0; k < lat.size(); ++k) {
            if (!lat.leq(h, k)) continue;
            // res: [K/L] restricted to H, written in the H-basis
            IntMat r(basis[h].size(), basis[k].size());
            for (std::size_t j = 0; j < basis[k].size(); ++j) {
                GSetClass orb = orbit_gset(lat, k, basis[k][j]);
                GSetClass rest = restrict_gset(lat, orb, h);
                for (std::size_t l = 0; l < lat.size(); ++l)
                    if (rest.mult[l] != 0) r(pos_in(h, l), j) = rest.mult[l];
            }
            // tr: induction sends [H/L] to [K/L]
            IntMat t(basis[k].size(), basis[h].size());
            for (std::size_t j = 0; j < basis[h].size(); ++j) t(pos_in(k, basis[h][j]), j) = 1;
            m.res[{h, k}] = r;
            m.tr[{h, k}] = t;
        }
    return m;
}

namespace {

std::string pair_name(const SubgroupLattice& lat, std::size_t h, std::size_t k) {
    return "(" + lat.subgroup_name(h) + " <= " + lat.subgroup_name(k) + ")";
}

} // namespace

MackeyReport verify_mackey_axioms(const SubgroupLattice& lat, const MackeyFunctorData& m) {
    MackeyReport rep;
    auto fail = [&](const std::string& msg) {
        if (rep.pass) {
            rep.pass = false;
            rep.first_failure = msg;
        }
    };

    if (m.level_rank.size() != lat.size()) {
        fail("level count does not match the subgroup lattice");
        return rep;
    }
    for (std::size_t h = 0; h < lat.size(); ++h)
        for (std::size_t k = 0; k < lat.size(); ++k) {
            if (!lat.leq(h, k)) continue;
            auto ri = m.res.find({h, k});
            auto ti = m.tr.find({h, k});
            if (ri == m.res.end() || ti == m.tr.end()) {
                fail("missing res/tr at " + pair_name(lat, h, k));
                return rep;
            }
            if (ri->second.rows() != m.level_rank[h] || ri->second.cols() != m.level_rank[k])
                fail("res has wrong shape at " + pair_name(lat, h, k));
            if (ti->second.rows() != m.level_rank[k] || ti->second.cols() != m.level_rank[h])
                fail("tr has wrong shape at " + pair_name(lat, h, k));
        }
    if (!rep.pass) return rep;

    // Weyl actions must be the identity (abelian ambient group)
    if (m.weyl.size() != lat.size()) {
        fail("missing Weyl actions");
        return rep;
    }
    for (std::size_t h = 0; h < lat.size(); ++h)
        if (!m.weyl[h].is_identity() || m.weyl[h].rows() != m.level_rank[h])
            fail("Weyl action at " + lat.subgroup_name(h) + " is not the identity");

    // identity at equal pairs
    for (std::size_t h = 0; h < lat.size(); ++h) {
        if (!m.res_at(h, h).is_identity()) fail("res at " + pair_name(lat, h, h) + " is not the identity");
        if (!m.tr_at(h, h).is_identity()) fail("tr at " + pair_name(lat, h, h) + " is not the identity");
    }

    // functoriality along chains L <= H <= K
    for (std::size_t l = 0; l < lat.size(); ++l)
        for (std::size_t h = 0; h < lat.size(); ++h) {
            if (!lat.leq(l, h)) continue;
            for (std::size_t k = 0; k < lat.size(); ++k) {
                if (!lat.leq(h, k)) continue;
                if (m.res_at(l, h) * m.res_at(h, k) != m.res_at(l, k))
                    fail("res functoriality fails along " + lat.subgroup_name(l) + " <= " + lat.subgroup_name(h) +
                         " <= " + lat.subgroup_name(k));
                if (m.tr_at(h, k) * m.tr_at(l, h) != m.tr_at(l, k))
                    fail("tr functoriality fails along " + lat.subgroup_name(l) + " <= " + lat.subgroup_name(h) +
                         " <= " + lat.subgroup_name(k));
            }
        }

    // double coset identity, comparable case: res o tr = [K:H] id
    // (identity Weyl action makes the sum of translates a scalar)
    for (std::size_t h = 0; h < lat.size(); ++h)
        for (std::size_t k = 0; k < lat.size(); ++k) {
            if (!lat.leq(h, k)) continue;
            IntMat lhs = m.res_at(h, k) * m.tr_at(h, k);
            IntMat rhs = IntMat::identity(m.level_rank[h]);
            Int idx = lat.index_in(h, k);
            for (std::size_t i = 0; i < rhs.rows(); ++i) rhs(i, i) = idx;
            if (lhs != rhs) fail("double coset identity fails at " + pair_name(lat, h, k));
        }

    // mixed double coset identity inside every ambient subgroup A:
    // res^A_K tr^A_H = [A : HK] tr^K_{H cap K} res^H_{H cap K}
    for (std::size_t a = 0; a < lat.size(); ++a)
        for (std::size_t h = 0; h < lat.size(); ++h) {
            if (!lat.leq(h, a)) continue;
            for (std::size_t k = 0; k < lat.size(); ++k) {
                if (!lat.leq(k, a)) continue;
                std::size_t cap = lat.meet(h, k);
                std::size_t hk = lat.join(h, k);
                Int mult = lat.subgroup_order(a) / lat.subgroup_order(hk);
                IntMat lhs = m.res_at(k, a) * m.tr_at(h, a);
                IntMat rhs = m.tr_at(cap, k) * m.res_at(cap, h);
                for (std::size_t i = 0; i < rhs.rows(); ++i)
                    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) *= mult;
                if (lhs != rhs)
                    fail("mixed double coset identity fails for H=" + lat.subgroup_name(h) +
                         ", K=" + lat.subgroup_name(k) + " inside " + lat.subgroup_name(a));
            }
        }
    return rep;
}

} // namespace equistab
