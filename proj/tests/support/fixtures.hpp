#pragma once

// Shared G-CW fixtures for the homology tests and the acceptance suite.

#include "equistab/bredon.hpp"
#include "equistab/groups.hpp"

namespace testsupport {

using namespace equistab;

// one fixed point
inline GCWComplex point_complex(const SubgroupLattice& lat) {
    GCWComplex x;
    x.cells.push_back(GCWCell{0, lat.full()});
    return x;
}

// one free orbit of points
inline GCWComplex free_orbit_complex(const SubgroupLattice& lat) {
    GCWComplex x;
    x.cells.push_back(GCWCell{0, lat.trivial()});
    return x;
}

// Sign-representation circle for C2: fixed 0-cells a = +1 and b = -1, one
// free 1-cell orbit c with boundary b - a (the reflected cell contributes
// the same pair with the cosets swapped, which the coset bookkeeping
// handles).
inline GCWComplex sign_circle(const SubgroupLattice& c2) {
    GCWComplex x;
    x.cells.push_back(GCWCell{0, c2.full()});    // 0: a
    x.cells.push_back(GCWCell{0, c2.full()});    // 1: b
    x.cells.push_back(GCWCell{1, c2.trivial()}); // 2: free arc
    x.boundary.push_back(GCWBoundaryTerm{2, 0, 0, Int(-1)});
    x.boundary.push_back(GCWBoundaryTerm{2, 1, 0, Int(1)});
    return x;
}

// Sign-representation disk for C2: fixed midpoint m, free endpoint orbit p,
// free 1-cell orbit with boundary p - m.
inline GCWComplex sign_disk(const SubgroupLattice& c2) {
    GCWComplex x;
    x.cells.push_back(GCWCell{0, c2.full()});    // 0: m
    x.cells.push_back(GCWCell{0, c2.trivial()}); // 1: p
    x.cells.push_back(GCWCell{1, c2.trivial()}); // 2: arc
    x.boundary.push_back(GCWBoundaryTerm{2, 0, 0, Int(-1)});
    x.boundary.push_back(GCWBoundaryTerm{2, 1, 0, Int(1)});
    return x;
}

} // namespace testsupport
