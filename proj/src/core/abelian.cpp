#include "equistab/core/abelian.hpp"

#include "equistab/core/snf.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace equistab {

std::string FgAbGroup::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const Int& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

namespace {

std::map<Int, int> factorize(Int n) {
    std::map<Int, int> f;
    for (Int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}

} // namespace

FgAbGroup canonical_fg(std::size_t free_rank, std::vector<Int> cyclic_orders) {
    // collect prime-power content, then rebuild the divisor chain
    std::map<Int, std::vector<int>> by_prime;
    std::size_t chain_len = 0;
    for (Int& t : cyclic_orders) {
        if (t < 0) t = -t;
        if (t <= 1) continue;
        for (auto& [p, e] : factorize(t)) by_prime[p].push_back(e);
    }
    for (auto& [p, es] : by_prime) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        chain_len = std::max(chain_len, es.size());
    }
    FgAbGroup g;
    g.free_rank = free_rank;
    // slot 0 holds the largest factor; emit ascending
    std::vector<Int> chain(chain_len, Int(1));
    for (auto& [p, es] : by_prime)
        for (std::size_t i = 0; i < es.size(); ++i) {
            Int pk = 1;
            for (int k = 0; k < es[i]; ++k) pk *= p;
            chain[i] *= pk;
        }
    for (std::size_t i = chain_len; i-- > 0;) g.torsion.push_back(chain[i]);
    return g;
}

BasedGroup BasedGroup::from_fg(const FgAbGroup& g) {
    BasedGroup b;
    b.orders.assign(g.free_rank, Int(0));
    for (const Int& t : g.torsion) b.orders.push_back(t);
    return b;
}

FgAbGroup BasedGroup::canonical() const {
    std::size_t free_rank = 0;
    std::vector<Int> cyclic;
    for (const Int& t : orders) {
        if (t == 0)
            ++free_rank;
        else
            cyclic.push_back(t);
    }
    return canonical_fg(free_rank, cyclic);
}

IntMat BasedGroup::relation_matrix() const {
    std::size_t ntor = 0;
    for (const Int& t : orders)
        if (t != 0) ++ntor;
    IntMat r(orders.size(), ntor);
    std::size_t j = 0;
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (orders[i] != 0) r(i, j++) = orders[i];
    return r;
}

IntMat reduce_hom(const BasedGroup& target, const BasedGroup& source, IntMat f) {
    if (f.rows() != target.size() || f.cols() != source.size())
        throw std::invalid_argument("reduce_hom: shape mismatch");
    for (std::size_t i = 0; i < target.size(); ++i) {
        const Int& t = target.orders[i];
        if (t == 0) continue;
        for (std::size_t j = 0; j < source.size(); ++j) {
            Int r = f(i, j) % t;
            if (r < 0) r += t;
            f(i, j) = r;
        }
    }
    return f;
}

bool hom_is_valid(const BasedGroup& target, const BasedGroup& source, const IntMat& f) {
    if (f.rows() != target.size() || f.cols() != source.size()) return false;
    // a generator of finite order n must land on an element killed by n
    for (std::size_t j = 0; j < source.size(); ++j) {
        const Int& n = source.orders[j];
        if (n == 0) continue;
        for (std::size_t i = 0; i < target.size(); ++i) {
            const Int& t = target.orders[i];
            Int v = n * f(i, j);
            if (t == 0) {
                if (v != 0) return false;
            } else if (v % t != 0) {
                return false;
            }
        }
    }
    return true;
}

bool hom_equal(const BasedGroup& target, const BasedGroup& source, const IntMat& f, const IntMat& g) {
    IntMat a = reduce_hom(target, source, f);
    IntMat b = reduce_hom(target, source, g);
    return a == b;
}

bool hom_is_surjective(const BasedGroup& target, const BasedGroup& source, const IntMat& f) {
    (void)source;
    IntMat gens = target.relation_matrix().hstack(f);
    return cokernel_shape(gens).is_trivial();
}

bool hom_is_injective(const BasedGroup& target, const BasedGroup& source, const IntMat& f) {
    // H_1 of the mapping cone of the presentation chain map vanishes iff
    // ker f = 0.  Build the lift of f on relations first.
    IntMat ra = source.relation_matrix();
    IntMat rb = target.relation_matrix();
    // f1: relations of source -> relations of target with rb * f1 == f * ra
    auto f1 = solve_linear(rb, f * ra);
    if (!f1) return false; // not even a valid hom
    // cone: Z^{ra.cols} -> Z^{rb.cols + source.size} -> Z^{target.size}
    IntMat d1 = rb.hstack(f);
    IntMat d2 = (*f1).vstack(-ra);
    // H_1 = ker d1 / im d2
    IntMat k = kernel_basis(d1);
    auto y = solve_linear(k, d2);
    if (!y) throw std::logic_error("hom_is_injective: cone differential not contained in kernel");
    return cokernel_shape(*y).is_trivial();
}

bool hom_is_iso(const BasedGroup& target, const BasedGroup& source, const IntMat& f) {
    return hom_is_surjective(target, source, f) && hom_is_injective(target, source, f);
}

FgAbGroup hom_cokernel(const BasedGroup& target, const BasedGroup& source, const IntMat& f) {
    (void)source;
    IntMat gens = target.relation_matrix().hstack(f);
    CokernelShape c = cokernel_shape(gens);
    return canonical_fg(c.free_rank, c.torsion);
}

PresentedGroup present_quotient(std::size_t ngens, const IntMat& relations) {
    if (relations.rows() != ngens) throw std::invalid_argument("present_quotient: relation shape mismatch");
    SmithResult snf = smith_normal_form(relations);
    // In coordinates y = u x the quotient is  (+)_i Z/s_i  (+)  Z^{free}.
    // Keep free coordinates first, then torsion >= 2; drop s_i == 1.
    const std::size_t rk = snf.rank();
    std::vector<std::size_t> keep;
    std::vector<Int> orders;
    for (std::size_t i = rk; i < ngens; ++i) {
        keep.push_back(i);
        orders.push_back(0);
    }
    for (std::size_t i = 0; i < rk; ++i)
        if (snf.invariants[i] > 1) {
            keep.push_back(i);
            orders.push_back(snf.invariants[i]);
        }
    PresentedGroup p;
    p.group.orders = orders;
    p.to_canonical = IntMat(keep.size(), ngens);
    p.from_canonical = IntMat(ngens, keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t j = 0; j < ngens; ++j) {
            p.to_canonical(a, j) = snf.u(keep[a], j);
            p.from_canonical(j, a) = snf.uinv(j, keep[a]);
        }
    p.to_canonical = reduce_hom(p.group, BasedGroup{std::vector<Int>(ngens, Int(0))}, p.to_canonical);
    return p;
}

BasedGroup tensor_group(const BasedGroup& a, const BasedGroup& b, PairLayout* layout) {
    BasedGroup out;
    if (layout) layout->pairs.clear();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            Int g = gcd_int(a.orders[i], b.orders[j]); // gcd(0, x) == x
            if (g == 1) continue;                      // trivial summand
            out.orders.push_back(g);
            if (layout) layout->pairs.emplace_back(i, j);
        }
    return out;
}

BasedGroup tor_group(const BasedGroup& a, const BasedGroup& b, PairLayout* layout) {
    BasedGroup out;
    if (layout) layout->pairs.clear();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (a.orders[i] == 0 || b.orders[j] == 0) continue;
            Int g = gcd_int(a.orders[i], b.orders[j]);
            if (g == 1) continue;
            out.orders.push_back(g);
            if (layout) layout->pairs.emplace_back(i, j);
        }
    return out;
}

IntMat tensor_hom(const BasedGroup& a, const BasedGroup& a2, const BasedGroup& b, const BasedGroup& b2,
                  const IntMat& f, const IntMat& g) {
    PairLayout src, dst;
    BasedGroup ts = tensor_group(a, b, &src);
    BasedGroup td = tensor_group(a2, b2, &dst);
    IntMat out(td.size(), ts.size());
    for (std::size_t c = 0; c < src.pairs.size(); ++c) {
        auto [i, j] = src.pairs[c];
        for (std::size_t r = 0; r < dst.pairs.size(); ++r) {
            auto [k, l] = dst.pairs[r];
            out(r, c) = f(k, i) * g(l, j);
        }
    }
    return reduce_hom(td, ts, out);
}

IntMat tor_hom(const BasedGroup& a, const BasedGroup& a2, const BasedGroup& b, const BasedGroup& b2,
               const IntMat& f, const IntMat& g) {
    PairLayout src, dst;
    BasedGroup ts = tor_group(a, b, &src);
    BasedGroup td = tor_group(a2, b2, &dst);
    IntMat out(td.size(), ts.size());
    for (std::size_t c = 0; c < src.pairs.size(); ++c) {
        auto [i, j] = src.pairs[c];
        const Int& ti = a.orders[i];
        const Int& uj = b.orders[j];
        Int gij = gcd_int(ti, uj);
        for (std::size_t r = 0; r < dst.pairs.size(); ++r) {
            auto [k, l] = dst.pairs[r];
            const Int& tk = a2.orders[k];
            const Int& ul = b2.orders[l];
            Int gkl = gcd_int(tk, ul);
            // Tor generator (i,j) is r_i (x) (u_j/g_ij) b_j; push through the
            // resolution lift of f and g, then rewrite in the target Tor basis.
            Int num = ti * f(k, i);
            if (num % tk != 0)
                throw std::invalid_argument("tor_hom: map does not lift on relations");
            Int c1 = num / tk;               // coefficient on r'_k
            Int c2 = g(l, j) * (uj / gij);   // coefficient on b'_l
            Int coeff = c1 * c2 % ul;
            if (coeff < 0) coeff += ul;
            Int unit = ul / gkl; // target Tor generator is (u'_l/g'_kl) b'_l
            if (coeff % unit != 0)
                throw std::invalid_argument("tor_hom: image not in torsion submodule");
            out(r, c) = coeff / unit;
        }
    }
    return reduce_hom(td, ts, out);
}

} // namespace equistab
