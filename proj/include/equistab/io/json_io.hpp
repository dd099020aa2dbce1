#pragma once

#include "equistab/bredon.hpp"
#include "equistab/confstab/descriptor.hpp"
#include "equistab/gsets.hpp"
#include "equistab/mackey.hpp"
#include "equistab/reps.hpp"
#include "equistab/stability/module.hpp"
#include "equistab/stability/sequence.hpp"

#include <json.hpp>

#include <string>

namespace equistab::io {

using nlohmann::json;

// Ints are emitted as JSON numbers when they fit in 64 bits, otherwise as
// decimal strings; both forms parse.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const json& j);

json fg_to_json(const FgAbGroup& g);
FgAbGroup fg_from_json(const json& j);

// schema: equistab/group/v1; also accepts a bare array of invariant factors
json group_to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const json& j);

// subgroups are serialized as sorted element tuple lists
json subgroup_to_json(const SubgroupLattice& lat, std::size_t h);
std::size_t subgroup_from_json(const SubgroupLattice& lat, const json& j);

json gset_to_json(const SubgroupLattice& lat, const GSetClass& s);
GSetClass gset_from_json(const SubgroupLattice& lat, const json& j);

json rep_to_json(const RealRepresentation& v);
RealRepresentation rep_from_json(const FiniteAbelianGroup& g, const json& j);

json gcw_to_json(const SubgroupLattice& lat, const GCWComplex& x);
GCWComplex gcw_from_json(const SubgroupLattice& lat, const json& j);

json mackey_to_json(const SubgroupLattice& lat, const MackeyFunctorData& m);
MackeyFunctorData mackey_from_json(const SubgroupLattice& lat, const json& j);

json manifold_to_json(const SubgroupLattice& lat, const ManifoldDescriptor& m);
ManifoldDescriptor manifold_from_json(const SubgroupLattice& lat, const json& j);

json sequence_to_json(const GradedSequence& s);
GradedSequence sequence_from_json(const json& j);

json module_to_json(const GradedModule& m);
GradedModule module_from_json(const json& j);

json fg_report_to_json(const GradedModule& m, const FgReport& r);

// strict parse with a ValidationError on malformed input
json parse(const std::string& text);
json load_file(const std::string& path);

} // namespace equistab::io
