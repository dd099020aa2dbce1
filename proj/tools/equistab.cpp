// equistab: exact-arithmetic workbench for equivariant configuration-space
// homology.  Single binary, subcommands per area; JSON in, JSON or table
// out; identical inputs give byte-identical stdout.

#include "equistab/bredon.hpp"
#include "equistab/confstab/assembly.hpp"
#include "equistab/confstab/h0.hpp"
#include "equistab/confstab/oracle.hpp"
#include "equistab/errors.hpp"
#include "equistab/io/json_io.hpp"
#include "equistab/stability/polyring.hpp"
#include "equistab/stability/sequence.hpp"
#include "equistab/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

using namespace equistab;
using equistab::io::json;

namespace {

struct GlobalOpts {
    std::string format = "json";
    std::int64_t bound = kDefaultOrderBound;
    std::uint64_t seed = 0;
    std::string manifest_path;
    std::vector<std::pair<std::string, std::string>> inputs; // name -> raw text (for digests)
    std::string command_line;
};

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// inline JSON or a path to a JSON file
json load_arg(GlobalOpts& g, const std::string& name, const std::string& arg) {
    std::string text;
    if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) {
        text = arg;
    } else {
        text = read_file(arg);
    }
    g.inputs.emplace_back(name, text);
    return io::parse(text);
}

void write_manifest(const GlobalOpts& g, std::chrono::steady_clock::time_point start) {
    if (g.manifest_path.empty()) return;
    json m;
    m["schema"] = "equistab/manifest/v1";
    m["tool"] = std::string(kToolName) + " " + kToolVersion;
    m["command"] = g.command_line;
    m["bound"] = g.bound;
    m["seed"] = g.seed;
    json digests = json::object();
    for (const auto& [name, text] : g.inputs) {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
        digests[name] = std::string(buf);
    }
    m["input_digests"] = digests;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    m["wall_ms"] = ms.count();
    std::ofstream out(g.manifest_path);
    out << m.dump(2) << "\n";
}

void emit(const GlobalOpts& g, const json& out, const std::string& table_text) {
    if (g.format == "table")
        std::cout << table_text;
    else
        std::cout << out.dump(2) << "\n";
}

std::string fg_table(const GradedModule& mod, const FgReport& rep) {
    std::ostringstream os;
    os << (rep.finitely_generated ? "finitely generated (certified up to the bound)"
                                  : "NOT finitely generated up to the bound (evidence, not proof)")
       << "\n";
    os << "bound " << rep.bound << ", window " << rep.window << "\n";
    os << rep.pattern << "\n";
    if (rep.finitely_generated) {
        os << "generators (basis lifts of nonzero cokernels):\n";
        for (const auto& info : rep.nonzero_cokernels)
            os << "  grade " << mod.grade_names[info.grade] << ": " << info.cokernel.to_string() << "\n";
        os << "max generator degree " << rep.max_generator_degree << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- group ---

int cmd_group_subgroups(GlobalOpts& g, const std::string& group_arg) {
    SubgroupLattice lat = enumerate_subgroups(io::group_from_json(load_arg(g, "group", group_arg)), g.bound);
    json out;
    out["group"] = io::group_to_json(lat.group);
    json subs = json::array();
    for (std::size_t h = 0; h < lat.size(); ++h) {
        json s;
        s["name"] = lat.subgroup_name(h);
        s["order"] = lat.subgroup_order(h);
        s["elements"] = io::subgroup_to_json(lat, h);
        json over = json::array();
        for (std::size_t k = 0; k < lat.size(); ++k)
            if (h != k && lat.leq(h, k)) over.push_back(lat.subgroup_name(k));
        s["contained_in"] = over;
        subs.push_back(std::move(s));
    }
    out["subgroups"] = subs;
    std::ostringstream tab;
    tab << lat.group.to_string() << ": " << lat.size() << " subgroups\n";
    for (std::size_t h = 0; h < lat.size(); ++h)
        tab << "  " << lat.subgroup_name(h) << " (order " << lat.subgroup_order(h) << ")\n";
    emit(g, out, tab.str());
    return 0;
}

int cmd_group_lattice(GlobalOpts& g, const std::string& group_arg, const std::string& h_arg, const std::string& k_arg) {
    SubgroupLattice lat = enumerate_subgroups(io::group_from_json(load_arg(g, "group", group_arg)), g.bound);
    std::size_t h = io::subgroup_from_json(lat, io::parse(h_arg));
    std::size_t k = io::subgroup_from_json(lat, io::parse(k_arg));
    json out;
    out["meet"] = io::subgroup_to_json(lat, lat.meet(h, k));
    out["join"] = io::subgroup_to_json(lat, lat.join(h, k));
    out["index_of_h_in_G"] = lat.index_in(h, lat.full());
    QuotientGroup q = quotient_by(lat, h);
    out["quotient_by_h"] = io::group_to_json(q.quotient);
    std::ostringstream tab;
    tab << "meet order " << lat.subgroup_order(lat.meet(h, k)) << ", join order " << lat.subgroup_order(lat.join(h, k))
        << ", [G:H] = " << lat.index_in(h, lat.full()) << ", G/H = " << q.quotient.to_string() << "\n";
    emit(g, out, tab.str());
    return 0;
}

// ---------------------------------------------------------------- gsets ---

int cmd_gsets_enum(GlobalOpts& g, const std::string& group_arg, std::int64_t size) {
    SubgroupLattice lat = enumerate_subgroups(io::group_from_json(load_arg(g, "group", group_arg)), g.bound);
    auto classes = enumerate_gsets(lat, lat.full(), size);
    json out;
    out["count"] = classes.size();
    json arr = json::array();
    for (const GSetClass& s : classes) {
        json e = io::gset_to_json(lat, s);
        e["display"] = gset_to_string(lat, s);
        arr.push_back(std::move(e));
    }
    out["classes"] = arr;
    std::ostringstream tab;
    tab << classes.size() << " classes of cardinality " << size << "\n";
    for (const GSetClass& s : classes) tab << "  " << gset_to_string(lat, s) << "\n";
    emit(g, out, tab.str());
    return 0;
}

int cmd_gsets_restrict(GlobalOpts& g, const std::string& group_arg, const std::string& gset_arg,
                       const std::string& sub_arg) {
    SubgroupLattice lat = enumerate_subgroups(io::group_from_json(load_arg(g, "group", group_arg)), g.bound);
    GSetClass s = io::gset_from_json(lat, load_arg(g, "gset", gset_arg));
    std::size_t k = io::subgroup_from_json(lat, io::parse(sub_arg));
    GSetClass r = restrict_gset(lat, s, k);
    json out = io::gset_to_json(lat, r);
    out["display"] = gset_to_string(lat, r);
    emit(g, out, gset_to_string(lat, r) + "\n");
    return 0;
}

int cmd_gsets_marks(GlobalOpts& g, const std::string& group_arg) {
    SubgroupLattice lat = enumerate_subgroups(io::group_from_json(load_arg(g, "group", group_arg)), g.bound);
    IntMat m = table_of_marks(lat, lat.full());
    json out;
    out["matrix"] = io::matrix_to_json(m);
    json names = json::array();
    for (std::size_t h : lat.subgroups_of(lat.full())) names.push_back(lat.subgroup_name(h));
    out["subgroups"] = names;
    emit(g, out, m.to_string() + "\n");
    return 0;
}

// ----------------------------------------------------------------- reps ---

int cmd_reps_strata(GlobalOpts& g, const std::string& group_arg, const std::string& rep_arg) {
    SubgroupLattice lat = enumerate_subgroups(io::group_from_json(load_arg(g, "group", group_arg)), g.bound);
    RealRepresentation v = io::rep_from_json(lat.group, load_arg(g, "rep", rep_arg));
    json out;
    out["total_dim"] = total_dim(v);
    json arr = json::array();
    std::ostringstream tab;
    for (const Stratum& s : isotropy_strata(lat, v, lat.full())) {
        json e;
        e["subgroup"] = io::subgroup_to_json(lat, s.subgroup);
        e["name"] = lat.subgroup_name(s.subgroup);
        e["fixed_dim"] = s.fixed_dimension;
        json over = json::array();
        for (std::size_t k : s.minimal_overgroups) over.push_back(lat.subgroup_name(k));
        e["minimal_overgroups"] = over;
        arr.push_back(std::move(e));
        tab << lat.subgroup_name(s.subgroup) << ": fixed dim " << s.fixed_dimension << "\n";
    }
    out["strata"] = arr;
    emit(g, out, tab.str());
    return 0;
}

int cmd_reps_stabilizable(GlobalOpts& g, const std::string& group_arg, const std::string& rep_arg,
                          const std::string& sub_arg) {
    SubgroupLattice lat = enumerate_subgroups(io::group_from_json(load_arg(g, "group", group_arg)), g.bound);
    RealRepresentation v = io::rep_from_json(lat.group, load_arg(g, "rep", rep_arg));
    std::size_t h = io::subgroup_from_json(lat, io::parse(sub_arg));
    bool ok = is_H_stabilizable(lat, v, h, lat.full());
    json out;
    out["subgroup"] = lat.subgroup_name(h);
    out["stabilizable"] = ok;
    emit(g, out, std::string(ok ? "stabilizable" : "not stabilizable") + "\n");
    return 0;
}

// --------------------------------------------------------------- bredon ---

int cmd_bredon_homology(GlobalOpts& g, const std::string& complex_arg, const std::string& coeffs) {
    json cx = load_arg(g, "complex", complex_arg);
    if (!cx.contains("group")) throw ValidationError("complex file must carry its group");
    SubgroupLattice lat = enumerate_subgroups(io::group_from_json(cx.at("group")), g.bound);
    GCWComplex x = io::gcw_from_json(lat, cx);
    MackeyFunctorData m;
    if (coeffs == "Z")
        m = constant_Z(lat);
    else if (coeffs == "A")
        m = burnside_mackey(lat);
    else {
        m = io::mackey_from_json(lat, load_arg(g, "coeffs", coeffs));
        MackeyReport rep = verify_mackey_axioms(lat, m);
        if (!rep.pass) throw ValidationError("coefficient data fails the Mackey axioms: " + rep.first_failure);
    }
    auto h = homology(assemble_bredon_complex(lat, x, m));
    json out = json::array();
    std::ostringstream tab;
    for (std::size_t d = 0; d < h.size(); ++d) {
        json e = io::fg_to_json(h[d]);
        e["d"] = d;
        out.push_back(std::move(e));
        tab << "H_" << d << " = " << h[d].to_string() << "\n";
    }
    emit(g, out, tab.str());
    return 0;
}

int cmd_bredon_fixed(GlobalOpts& g, const std::string& complex_arg, const std::string& sub_arg) {
    json cx = load_arg(g, "complex", complex_arg);
    if (!cx.contains("group")) throw ValidationError("complex file must carry its group");
    SubgroupLattice lat = enumerate_subgroups(io::group_from_json(cx.at("group")), g.bound);
    GCWComplex x = io::gcw_from_json(lat, cx);
    std::size_t k = io::subgroup_from_json(lat, io::parse(sub_arg));
    auto h = homology(fixed_point_complex(lat, x, k));
    json out = json::array();
    std::ostringstream tab;
    for (std::size_t d = 0; d < h.size(); ++d) {
        json e = io::fg_to_json(h[d]);
        e["d"] = d;
        out.push_back(std::move(e));
        tab << "H_" << d << "(X^" << lat.subgroup_name(k) << ") = " << h[d].to_string() << "\n";
    }
    emit(g, out, tab.str());
    return 0;
}

// ----------------------------------------------------------------- conf ---

SubgroupLattice lattice_for_manifold(GlobalOpts& g, const json& mj) {
    if (!mj.contains("group")) throw ValidationError("manifold file must carry its group");
    return enumerate_subgroups(io::group_from_json(mj.at("group")), g.bound);
}

int cmd_conf_components(GlobalOpts& g, const std::string& manifold_arg, std::int64_t size) {
    json mj = load_arg(g, "manifold", manifold_arg);
    SubgroupLattice lat = lattice_for_manifold(g, mj);
    ManifoldDescriptor m = io::manifold_from_json(lat, mj);
    auto comps = components_of_fixed_config(lat, m, size);
    json out;
    out["count"] = comps.size();
    json arr = json::array();
    std::ostringstream tab;
    tab << comps.size() << " components of C_" << size << "(M)^" << lat.subgroup_name(m.ambient) << "\n";
    for (const GSetClass& s : comps) {
        json e = io::gset_to_json(lat, s);
        e["display"] = gset_to_string(lat, s);
        arr.push_back(std::move(e));
        tab << "  " << gset_to_string(lat, s) << "\n";
    }
    out["components"] = arr;
    emit(g, out, tab.str());
    return 0;
}

int cmd_conf_homology(GlobalOpts& g, const std::string& manifold_arg, const std::string& gset_arg, int degree) {
    json mj = load_arg(g, "manifold", manifold_arg);
    SubgroupLattice lat = lattice_for_manifold(g, mj);
    ManifoldDescriptor m = io::manifold_from_json(lat, mj);
    GSetClass s = io::gset_from_json(lat, load_arg(g, "gset", gset_arg));
    FgAbGroup h = homology_of_CSG(lat, s, m, degree);
    json out;
    out["gset"] = gset_to_string(lat, s);
    out["d"] = degree;
    out["homology"] = io::fg_to_json(h);
    emit(g, out, h.to_string() + "\n");
    return 0;
}

int cmd_conf_oracle(GlobalOpts& g, const std::string& group_arg, const std::string& gset_arg, std::int64_t size) {
    SubgroupLattice lat = enumerate_subgroups(io::group_from_json(load_arg(g, "group", group_arg)), g.bound);
    GSetClass xcls = io::gset_from_json(lat, load_arg(g, "gset", gset_arg));
    ConcreteGSet x = realize_gset(lat, xcls);
    auto census = discrete_config_oracle(lat, x, size);
    json out;
    out["model"] = gset_to_string(lat, xcls);
    out["n"] = size;
    std::int64_t total = 0;
    json arr = json::array();
    std::ostringstream tab;
    for (const CensusEntry& e : census) {
        json je = io::gset_to_json(lat, e.cls);
        je["display"] = gset_to_string(lat, e.cls);
        je["count"] = e.count;
        arr.push_back(std::move(je));
        total += e.count;
        tab << gset_to_string(lat, e.cls) << ": " << e.count << "\n";
    }
    out["census"] = arr;
    out["total"] = total;
    tab << "total " << total << "\n";
    emit(g, out, tab.str());
    return 0;
}

int cmd_conf_h0(GlobalOpts& g, const std::string& manifold_arg, std::int64_t bound, const std::string& emit_module) {
    json mj = load_arg(g, "manifold", manifold_arg);
    SubgroupLattice lat = lattice_for_manifold(g, mj);
    ManifoldDescriptor m = io::manifold_from_json(lat, mj);
    H0Presentation p = bredon_h0_presentation(lat, m, bound);
    json out;
    json values = json::array();
    std::ostringstream tab;
    for (std::int64_t n = 0; n <= bound; ++n) {
        json e;
        e["n"] = n;
        e["h0"] = io::fg_to_json(p.h0[n]);
        json gens = json::array();
        for (const auto& gen : p.generators[n])
            gens.push_back("x[" + lat.subgroup_name(gen.level) + "; " + gset_to_string(lat, gen.cls) + "]");
        e["generators"] = gens;
        e["relations"] = p.relations[n];
        values.push_back(std::move(e));
        tab << "H_0^G(C_" << n << "(M)) = " << p.h0[n].to_string() << "\n";
    }
    out["grades"] = values;
    out["notes"] = p.notes;
    if (!emit_module.empty()) {
        std::ofstream f(emit_module);
        f << io::module_to_json(p.module).dump(2) << "\n";
    }
    emit(g, out, tab.str());
    return 0;
}

int cmd_conf_geometric(GlobalOpts& g, const std::string& manifold_arg, int degree, std::int64_t bound,
                       const std::string& emit_module) {
    json mj = load_arg(g, "manifold", manifold_arg);
    SubgroupLattice lat = lattice_for_manifold(g, mj);
    ManifoldDescriptor m = io::manifold_from_json(lat, mj);
    GradedModule mod = geometric_module(lat, m, degree, bound);
    FgReport rep = fg_check(mod);
    json out;
    out["module_grades"] = mod.pieces.size();
    out["report"] = io::fg_report_to_json(mod, rep);
    if (!emit_module.empty()) {
        std::ofstream f(emit_module);
        f << io::module_to_json(mod).dump(2) << "\n";
    }
    emit(g, out, fg_table(mod, rep));
    return 0;
}

// ----------------------------------------------------------------- stab ---

int cmd_stab_check_seq(GlobalOpts& g, const std::string& seq_arg, std::size_t window) {
    GradedSequence seq = io::sequence_from_json(load_arg(g, "sequence", seq_arg));
    StabilizationReport rep = check_stabilization(seq, window);
    json out;
    out["stable"] = rep.stable;
    if (rep.stable) out["stable_from"] = rep.stable_from;
    out["failing"] = rep.failing;
    json profile = json::array();
    for (const FgAbGroup& c : cokernel_profile(seq)) profile.push_back(io::fg_to_json(c));
    out["cokernel_profile"] = profile;
    std::ostringstream tab;
    if (rep.stable)
        tab << "stable from " << rep.stable_from << "\n";
    else
        tab << "not stable up to " << (seq.length() - 1) << "\n";
    emit(g, out, tab.str());
    return 0;
}

int cmd_stab_fg(GlobalOpts& g, const std::string& module_arg, const std::string& ring, std::int64_t window) {
    GradedModule mod = io::module_from_json(load_arg(g, "module", module_arg));
    std::optional<std::vector<std::size_t>> ops;
    if (!ring.empty() && ring != "full") {
        ops.emplace();
        std::stringstream ss(ring);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            bool found = false;
            for (std::size_t i = 0; i < mod.op_names.size(); ++i)
                if (mod.op_names[i] == tok) {
                    ops->push_back(i);
                    found = true;
                }
            if (!found) throw ValidationError("unknown ring generator '" + tok + "'");
        }
    }
    FgReport rep = fg_check(mod, window, ops ? &*ops : nullptr);
    json out = io::fg_report_to_json(mod, rep);
    emit(g, out, fg_table(mod, rep));
    return 0;
}

int cmd_stab_restrict(GlobalOpts& g, const std::string& group_arg, const std::string& sub_arg) {
    SubgroupLattice lat = enumerate_subgroups(io::group_from_json(load_arg(g, "group", group_arg)), g.bound);
    std::size_t k = io::subgroup_from_json(lat, io::parse(sub_arg));
    PolyRingMap p = restrict_polynomial(lat, lat.full(), k);
    json out;
    out["target"] = lat.subgroup_name(k);
    json imgs = json::array();
    for (const auto& img : p.images) {
        json e;
        e["source"] = "sigma[G/" + lat.subgroup_name(img.source_subgroup) + "]";
        e["target"] =
            "sigma[" + lat.subgroup_name(k) + "/" + lat.subgroup_name(img.target_subgroup) + "]";
        e["exponent"] = img.exponent;
        imgs.push_back(std::move(e));
    }
    out["images"] = imgs;
    out["integral"] = integrality_witness(lat, p);
    emit(g, out, polyringmap_to_string(lat, p) + "\n");
    return 0;
}

int cmd_stab_mackey_fg(GlobalOpts& g, const std::string& manifold_arg, int degree, std::int64_t bound) {
    json mj = load_arg(g, "manifold", manifold_arg);
    SubgroupLattice lat = lattice_for_manifold(g, mj);
    ManifoldDescriptor m = io::manifold_from_json(lat, mj);
    std::vector<MackeyFgLevel> levels;
    for (std::size_t k : lat.subgroups_of(m.ambient)) {
        ManifoldDescriptor mk = restrict_descriptor(lat, m, k);
        levels.push_back(MackeyFgLevel{k, geometric_module(lat, mk, degree, bound)});
    }
    MackeyFgReport rep = mackey_fg_check(lat, m.ambient, levels);
    json out;
    out["finitely_generated"] = rep.finitely_generated;
    if (!rep.finitely_generated) out["first_failing_level"] = rep.first_failing_level;
    json lv = json::array();
    for (const auto& [k, r] : rep.levels) {
        json e;
        e["level"] = lat.subgroup_name(k);
        e["finitely_generated"] = r.finitely_generated;
        e["pattern"] = r.pattern;
        lv.push_back(std::move(e));
    }
    out["levels"] = lv;
    std::ostringstream tab;
    tab << (rep.finitely_generated ? "finitely generated at every level" : "NOT finitely generated at level " + rep.first_failing_level)
        << "\n";
    emit(g, out, tab.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    auto start = std::chrono::steady_clock::now();
    GlobalOpts g;
    {
        std::ostringstream cmd;
        for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
        g.command_line = cmd.str();
    }

    CLI::App app{"exact-arithmetic workbench for equivariant configuration-space homology"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.add_option("--format", g.format, "output format: json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--bound", g.bound, "group order bound");
    app.add_option("--seed", g.seed, "seed for sampling commands");
    app.add_option("--manifest", g.manifest_path, "write a reproducibility manifest to this file");
    app.require_subcommand(1);

    int rc = 0;
    std::function<int()> run;

    // group
    auto* group = app.add_subcommand("group", "finite abelian groups and subgroup lattices");
    group->require_subcommand(1);
    {
        static std::string garg;
        auto* sub = group->add_subcommand("subgroups", "enumerate the subgroup lattice");
        sub->add_option("--group", garg, "group descriptor (inline JSON or file)")->required();
        sub->callback([&] { run = [&] { return cmd_group_subgroups(g, garg); }; });

        static std::string lgarg, harg, karg;
        auto* lat = group->add_subcommand("lattice", "meet, join, index, quotient");
        lat->add_option("--group", lgarg)->required();
        lat->add_option("--left", harg, "subgroup H (element tuples or name)")->required();
        lat->add_option("--right", karg, "subgroup K")->required();
        lat->callback([&] { run = [&] { return cmd_group_lattice(g, lgarg, harg, karg); }; });
    }

    // gsets
    auto* gsets = app.add_subcommand("gsets", "isomorphism classes of finite G-sets");
    gsets->require_subcommand(1);
    {
        static std::string garg;
        static std::int64_t size = 0;
        auto* en = gsets->add_subcommand("enum", "enumerate classes of a given cardinality");
        en->add_option("--group", garg)->required();
        en->add_option("--size", size)->required();
        en->callback([&] { run = [&] { return cmd_gsets_enum(g, garg, size); }; });

        static std::string rgarg, rsarg, rsub;
        auto* re = gsets->add_subcommand("restrict", "restrict a class to a subgroup");
        re->add_option("--group", rgarg)->required();
        re->add_option("--gset", rsarg)->required();
        re->add_option("--subgroup", rsub)->required();
        re->callback([&] { run = [&] { return cmd_gsets_restrict(g, rgarg, rsarg, rsub); }; });

        static std::string mgarg;
        auto* mk = gsets->add_subcommand("marks", "table of marks");
        mk->add_option("--group", mgarg)->required();
        mk->callback([&] { run = [&] { return cmd_gsets_marks(g, mgarg); }; });
    }

    // reps
    auto* reps = app.add_subcommand("reps", "real representations from character data");
    reps->require_subcommand(1);
    {
        static std::string garg, rarg;
        auto* st = reps->add_subcommand("strata", "isotropy strata of a linear model");
        st->add_option("--group", garg)->required();
        st->add_option("--rep", rarg)->required();
        st->callback([&] { run = [&] { return cmd_reps_strata(g, garg, rarg); }; });

        static std::string sgarg, srarg, ssub;
        auto* sb = reps->add_subcommand("stabilizable", "does the disk model stabilize at H?");
        sb->add_option("--group", sgarg)->required();
        sb->add_option("--rep", srarg)->required();
        sb->add_option("--subgroup", ssub)->required();
        sb->callback([&] { run = [&] { return cmd_reps_stabilizable(g, sgarg, srarg, ssub); }; });
    }

    // bredon
    auto* bredon = app.add_subcommand("bredon", "Bredon homology of finite G-CW complexes");
    bredon->require_subcommand(1);
    {
        static std::string carg, coeffs;
        auto* ho = bredon->add_subcommand("homology", "assemble and compute");
        ho->add_option("--complex", carg, "G-CW complex file")->required();
        ho->add_option("--coeffs", coeffs, "Z, A, or a Mackey data file")->required();
        ho->callback([&] { run = [&] { return cmd_bredon_homology(g, carg, coeffs); }; });

        static std::string fcarg, fsub;
        auto* fx = bredon->add_subcommand("fixed", "ordinary homology of a fixed-point subcomplex");
        fx->add_option("--complex", fcarg)->required();
        fx->add_option("--subgroup", fsub)->required();
        fx->callback([&] { run = [&] { return cmd_bredon_fixed(g, fcarg, fsub); }; });
    }

    // conf
    auto* conf = app.add_subcommand("conf", "configuration-space combinatorics and assembly");
    conf->require_subcommand(1);
    {
        static std::string marg;
        static std::int64_t size = 0;
        auto* co = conf->add_subcommand("components", "components of C_n(M)^G");
        co->add_option("--manifold", marg)->required();
        co->add_option("--size", size)->required();
        co->callback([&] { run = [&] { return cmd_conf_components(g, marg, size); }; });

        static std::string hmarg, hsarg;
        static int hdeg = 0;
        auto* ho = conf->add_subcommand("homology", "H_d of an S-configuration space");
        ho->add_option("--manifold", hmarg)->required();
        ho->add_option("--gset", hsarg)->required();
        ho->add_option("--degree", hdeg)->required();
        ho->callback([&] { run = [&] { return cmd_conf_homology(g, hmarg, hsarg, hdeg); }; });

        static std::string ogarg, osarg;
        static std::int64_t osize = 0;
        auto* orc = conf->add_subcommand("oracle", "discrete brute-force census");
        orc->add_option("--group", ogarg)->required();
        orc->add_option("--gset", osarg, "the discrete model X as a class")->required();
        orc->add_option("--size", osize)->required();
        orc->callback([&] { run = [&] { return cmd_conf_oracle(g, ogarg, osarg, osize); }; });

        static std::string pmarg, pemit;
        static std::int64_t pbound = 8;
        auto* h0 = conf->add_subcommand("h0-presentation", "degree-zero Bredon presentation over the operators");
        h0->add_option("--manifold", pmarg)->required();
        h0->add_option("--bound", pbound, "cardinality bound");
        h0->add_option("--emit-module", pemit, "write the module JSON here");
        h0->callback([&] { run = [&] { return cmd_conf_h0(g, pmarg, pbound, pemit); }; });

        static std::string gmarg, gemit;
        static int gdeg = 0;
        static std::int64_t gbound = 8;
        auto* gm = conf->add_subcommand("geometric-module", "degree-d module over the stabilization operators");
        gm->add_option("--manifold", gmarg)->required();
        gm->add_option("--degree", gdeg);
        gm->add_option("--bound", gbound, "cardinality bound");
        gm->add_option("--emit-module", gemit, "write the module JSON here");
        gm->callback([&] { run = [&] { return cmd_conf_geometric(g, gmarg, gdeg, gbound, gemit); }; });
    }

    // stab
    auto* stab = app.add_subcommand("stab", "stabilization and finite-generation checks");
    stab->require_subcommand(1);
    {
        static std::string sarg;
        static std::size_t window = 1;
        auto* cs = stab->add_subcommand("check-seq", "stabilization point of a graded sequence");
        cs->add_option("--sequence", sarg)->required();
        cs->add_option("--window", window, "isomorphisms required at the tail");
        cs->callback([&] { run = [&] { return cmd_stab_check_seq(g, sarg, window); }; });

        static std::string fmarg, fring;
        static std::int64_t fwindow = -1;
        auto* fg = stab->add_subcommand("fg", "finite generation over the operator ring (semi-decision)");
        fg->add_option("--module", fmarg)->required();
        fg->add_option("--ring", fring, "comma list of operator names, or 'full'");
        fg->add_option("--window", fwindow, "top window size (default: max shift + 1)");
        fg->callback([&] { run = [&] { return cmd_stab_fg(g, fmarg, fring, fwindow); }; });

        static std::string rgarg, rsub;
        auto* rs = stab->add_subcommand("restrict", "restriction map between stabilization rings");
        rs->add_option("--group", rgarg)->required();
        rs->add_option("--subgroup", rsub)->required();
        rs->callback([&] { run = [&] { return cmd_stab_restrict(g, rgarg, rsub); }; });

        static std::string mmarg;
        static int mdeg = 0;
        static std::int64_t mbound = 8;
        auto* mfg = stab->add_subcommand("mackey-fg", "levelwise finite generation");
        mfg->add_option("--manifold", mmarg)->required();
        mfg->add_option("--degree", mdeg);
        mfg->add_option("--bound", mbound);
        mfg->callback([&] { run = [&] { return cmd_stab_mackey_fg(g, mmarg, mdeg, mbound); }; });
    }

    try {
        app.parse(argc, argv);
        if (run) rc = run();
        write_manifest(g, start);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ResourceError& e) {
        json err;
        err["error"] = json{{"code", "resource"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        json err;
        err["error"] = json{{"code", "validation"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = json{{"code", "internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return rc;
}
