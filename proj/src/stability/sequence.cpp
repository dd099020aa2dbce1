#include "equistab/stability/sequence.hpp"

#include "equistab/core/snf.hpp"
#include "equistab/errors.hpp"

#include <string>

namespace equistab {

void GradedSequence::validate() const {
    if (!pieces.empty() && maps.size() + 1 != pieces.size())
        throw ValidationError("sequence: expected one map per consecutive pair");
    for (std::size_t n = 0; n < maps.size(); ++n) {
        if (maps[n].rows() != pieces[n + 1].size() || maps[n].cols() != pieces[n].size())
            throw ValidationError("sequence: map " + std::to_string(n) + " has wrong shape");
        if (!hom_is_valid(pieces[n + 1], pieces[n], maps[n]))
            throw ValidationError("sequence: map " + std::to_string(n) + " is not well defined");
    }
}

StabilizationReport check_stabilization(const GradedSequence& seq, std::size_t window) {
    seq.validate();
    StabilizationReport rep;
    if (window > seq.maps.size()) window = seq.maps.size();
    std::vector<bool> iso(seq.maps.size());
    for (std::size_t n = 0; n < seq.maps.size(); ++n) {
        iso[n] = hom_is_iso(seq.pieces[n + 1], seq.pieces[n], seq.maps[n]);
        if (!iso[n]) rep.failing.push_back(n);
    }
    std::size_t n = seq.maps.size();
    while (n > 0 && iso[n - 1]) --n;
    if (seq.maps.size() - n >= window) {
        rep.stable = true;
        rep.stable_from = n;
    }
    return rep;
}

WitnessReport fg_witness_from_stability(const GradedSequence& seq, std::optional<std::size_t> at) {
    seq.validate();
    std::size_t stable_from;
    if (at) {
        stable_from = *at;
    } else {
        StabilizationReport s = check_stabilization(seq);
        if (!s.stable) throw ValidationError("fg_witness_from_stability: sequence does not stabilize in range");
        stable_from = s.stable_from;
    }

    WitnessReport rep;
    rep.valid = true;
    // spanned[n]: columns (in generator coordinates of A_n) generating the
    // submodule reached so far, including the torsion relations
    std::vector<IntMat> spanned;
    for (const BasedGroup& p : seq.pieces) spanned.push_back(p.relation_matrix());

    auto push_forward = [&](std::size_t from, const IntMat& cols) {
        IntMat cur = cols;
        for (std::size_t n = from; n < seq.maps.size(); ++n) {
            cur = seq.maps[n] * cur;
            spanned[n + 1] = spanned[n + 1].hstack(cur);
        }
    };

    for (std::size_t n = 0; n <= stable_from && n < seq.length(); ++n) {
        std::size_t added = 0;
        for (std::size_t j = 0; j < seq.pieces[n].size(); ++j) {
            std::vector<Int> gen(seq.pieces[n].size(), Int(0));
            gen[j] = 1;
            if (lattice_contains(spanned[n], gen)) continue; // redundant
            IntMat col(seq.pieces[n].size(), 1);
            col(j, 0) = 1;
            spanned[n] = spanned[n].hstack(col);
            push_forward(n, col);
            ++added;
        }
        if (added > 0) rep.generators.emplace_back(n, added);
        rep.total_generators += added;
    }

    // exact span validation in every degree
    for (std::size_t n = 0; n < seq.length(); ++n)
        if (!cokernel_shape(spanned[n]).is_trivial()) {
            rep.valid = false;
            rep.failure_degree = n;
            break;
        }
    return rep;
}

std::vector<FgAbGroup> cokernel_profile(const GradedSequence& seq) {
    seq.validate();
    std::vector<FgAbGroup> out;
    for (std::size_t n = 0; n < seq.maps.size(); ++n)
        out.push_back(hom_cokernel(seq.pieces[n + 1], seq.pieces[n], seq.maps[n]));
    return out;
}

GradedModule sequence_as_module(const GradedSequence& seq) {
    seq.validate();
    GradedModule mod;
    for (std::size_t n = 0; n < seq.length(); ++n) {
        mod.grade_names.push_back("n=" + std::to_string(n));
        mod.grade_degree.push_back(static_cast<std::int64_t>(n));
        mod.pieces.push_back(seq.pieces[n]);
    }
    mod.op_names.push_back("sigma");
    mod.op_shift.push_back(1);
    for (std::size_t n = 0; n < seq.maps.size(); ++n)
        mod.edges.push_back(GradedModule::Edge{0, n, n + 1, seq.maps[n]});
    return mod;
}

} // namespace equistab
