#include "equistab/core/chain.hpp"

#include "equistab/core/snf.hpp"
#include "equistab/errors.hpp"

#include <stdexcept>
#include <string>

namespace equistab {

int IntChainComplex::first_bad_composite() const {
    for (std::size_t n = 0; n + 1 < boundaries.size(); ++n)
        if (!(boundaries[n] * boundaries[n + 1]).is_zero()) return static_cast<int>(n);
    return -1;
}

void IntChainComplex::validate() const {
    if (!ranks.empty() && boundaries.size() + 1 != ranks.size())
        throw ValidationError("chain complex: expected " + std::to_string(ranks.size() - 1) + " boundary maps, got " +
                              std::to_string(boundaries.size()));
    for (std::size_t n = 0; n < boundaries.size(); ++n)
        if (boundaries[n].rows() != ranks[n] || boundaries[n].cols() != ranks[n + 1])
            throw ValidationError("chain complex: boundary " + std::to_string(n + 1) + " has wrong shape");
    int bad = first_bad_composite();
    if (bad >= 0)
        throw ValidationError("chain complex: d^2 != 0 between degrees " + std::to_string(bad + 2) + " and " +
                              std::to_string(bad));
}

std::vector<FgAbGroup> homology(const IntChainComplex& c) {
    c.validate();
    const std::size_t degs = c.ranks.size();
    std::vector<FgAbGroup> h(degs);
    // rank and invariant factors of each boundary map
    std::vector<std::size_t> rho(degs + 1, 0);
    std::vector<std::vector<Int>> inv(degs + 1);
    for (std::size_t n = 0; n < c.boundaries.size(); ++n) {
        SmithResult s = smith_normal_form(c.boundaries[n]);
        rho[n + 1] = s.rank();
        inv[n + 1] = s.invariants;
    }
    for (std::size_t n = 0; n < degs; ++n) {
        // H_n = Z^{rank C_n - rho_n - rho_{n+1}}  +  torsion of d_{n+1}
        std::size_t out = (n == 0) ? 0 : rho[n]; // rank of d landing below
        std::size_t in = (n + 1 < degs) ? rho[n + 1] : 0;
        std::vector<Int> tors;
        if (n + 1 < degs)
            for (const Int& s : inv[n + 1])
                if (s > 1) tors.push_back(s);
        h[n] = canonical_fg(c.ranks[n] - out - in, tors);
    }
    return h;
}

ChainHomology chain_homology(const IntChainComplex& c) {
    c.validate();
    const std::size_t degs = c.ranks.size();
    ChainHomology out;
    out.degrees.resize(degs);
    for (std::size_t n = 0; n < degs; ++n) {
        IntMat k = (n < c.boundaries.size()) ? kernel_basis(c.boundaries[n]) : IntMat::identity(c.ranks[n]);
        IntMat rel(k.cols(), 0);
        if (n >= 1) {
            auto y = solve_linear(k, c.boundaries[n - 1]);
            if (!y) throw std::logic_error("chain_homology: image not contained in kernel");
            rel = *y;
        }
        PresentedGroup p = present_quotient(k.cols(), rel);
        out.degrees[n] = DegreeHomology{p.group, std::move(k), p.to_canonical, p.from_canonical};
    }
    return out;
}

IntMat induced_map(const ChainHomology& src, const ChainHomology& dst,
                   const std::vector<IntMat>& phi, std::size_t degree) {
    const DegreeHomology& a = src.degrees.at(degree);
    const DegreeHomology& b = dst.degrees.at(degree);
    // lift generators to cycles, push through phi, re-express in dst cycles
    IntMat cycles = a.cycle_basis * a.from_h;       // chain coords of src generators
    IntMat pushed = phi.at(degree) * cycles;        // chain coords downstairs
    auto y = solve_linear(b.cycle_basis, pushed);   // dst cycle coords
    if (!y) throw std::logic_error("induced_map: image of a cycle is not a cycle");
    return reduce_hom(b.h, a.h, b.to_h * (*y));
}

} // namespace equistab
