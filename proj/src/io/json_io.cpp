#include "equistab/io/json_io.hpp"

#include "equistab/errors.hpp"

#include <fstream>
#include <sstream>

namespace equistab::io {

namespace {

void check_schema(const json& j, const std::string& expect) {
    if (j.is_object() && j.contains("schema")) {
        std::string s = j.at("schema").get<std::string>();
        if (s != expect) throw ValidationError("unexpected schema '" + s + "', wanted '" + expect + "'");
    }
}

[[noreturn]] void bad(const std::string& what) { throw ValidationError("malformed input: " + what); }

} // namespace

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    bad("expected an integer");
}

json matrix_to_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["data"] = std::move(rows);
    return out;
}

IntMat matrix_from_json(const json& j) {
    if (j.is_array()) {
        // bare row-list form
        std::size_t rows = j.size();
        std::size_t cols = rows ? j[0].size() : 0;
        IntMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            if (j[i].size() != cols) bad("ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
        }
        return m;
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        bad("expected a matrix");
    IntMat m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const json& data = j.at("data");
    if (data.size() != m.rows()) bad("matrix data does not match row count");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (data[i].size() != m.cols()) bad("matrix data does not match column count");
        for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = int_from_json(data[i][c]);
    }
    return m;
}

json fg_to_json(const FgAbGroup& g) {
    json out;
    out["free"] = g.free_rank;
    json t = json::array();
    for (const Int& x : g.torsion) t.push_back(int_to_json(x));
    out["torsion"] = std::move(t);
    return out;
}

FgAbGroup fg_from_json(const json& j) {
    if (!j.is_object() || !j.contains("free") || !j.contains("torsion")) bad("expected {free, torsion}");
    std::vector<Int> torsion;
    for (const json& t : j.at("torsion")) torsion.push_back(int_from_json(t));
    FgAbGroup g = canonical_fg(j.at("free").get<std::size_t>(), torsion);
    return g;
}

json group_to_json(const FiniteAbelianGroup& g) {
    json out;
    out["schema"] = "equistab/group/v1";
    out["invariant_factors"] = g.factors;
    return out;
}

FiniteAbelianGroup group_from_json(const json& j) {
    if (j.is_array()) return make_group(j.get<std::vector<std::int64_t>>());
    check_schema(j, "equistab/group/v1");
    if (!j.is_object() || !j.contains("invariant_factors")) bad("expected invariant_factors");
    return make_group(j.at("invariant_factors").get<std::vector<std::int64_t>>());
}

json subgroup_to_json(const SubgroupLattice& lat, std::size_t h) {
    json out = json::array();
    for (std::int64_t e : lat.nodes[h].elems) out.push_back(lat.group.elem_at(e));
    return out;
}

std::size_t subgroup_from_json(const SubgroupLattice& lat, const json& j) {
    if (j.is_string()) {
        // convenience names: "e", "G", "H<k>"
        std::string s = j.get<std::string>();
        for (std::size_t h = 0; h < lat.size(); ++h)
            if (lat.subgroup_name(h) == s) return h;
        bad("unknown subgroup name '" + s + "'");
    }
    if (!j.is_array()) bad("expected a subgroup (element tuple list or name)");
    std::vector<std::int64_t> elems;
    for (const json& t : j) elems.push_back(lat.group.elem_index(lat.group.reduce(t.get<std::vector<std::int64_t>>())));
    std::sort(elems.begin(), elems.end());
    return lat.node_of(std::move(elems));
}

json gset_to_json(const SubgroupLattice& lat, const GSetClass& s) {
    json out;
    out["schema"] = "equistab/gset/v1";
    out["ambient"] = subgroup_to_json(lat, s.ambient);
    json orbits = json::array();
    for (std::size_t h = 0; h < s.mult.size(); ++h)
        if (s.mult[h] != 0) {
            json o;
            o["subgroup"] = subgroup_to_json(lat, h);
            o["mult"] = s.mult[h];
            orbits.push_back(std::move(o));
        }
    out["orbits"] = std::move(orbits);
    return out;
}

GSetClass gset_from_json(const SubgroupLattice& lat, const json& j) {
    check_schema(j, "equistab/gset/v1");
    if (!j.is_object() || !j.contains("orbits")) bad("expected {orbits: [...]}");
    std::size_t ambient = j.contains("ambient") ? subgroup_from_json(lat, j.at("ambient")) : lat.full();
    GSetClass s = empty_gset(lat, ambient);
    for (const json& o : j.at("orbits")) {
        std::size_t h = subgroup_from_json(lat, o.at("subgroup"));
        std::int64_t m = o.at("mult").get<std::int64_t>();
        if (m < 0) bad("orbit multiplicity must be nonnegative");
        if (!lat.leq(h, ambient)) bad("orbit subgroup is not contained in the ambient subgroup");
        s.mult[h] += m;
    }
    return s;
}

json rep_to_json(const RealRepresentation& v) {
    json out;
    out["schema"] = "equistab/rep/v1";
    out["group"] = group_to_json(v.group);
    json chars = json::array();
    for (const RealSummand& s : v.summands) {
        json c;
        c["coeffs"] = s.chi.coeffs;
        c["mult"] = s.mult;
        chars.push_back(std::move(c));
    }
    out["characters"] = std::move(chars);
    return out;
}

RealRepresentation rep_from_json(const FiniteAbelianGroup& g, const json& j) {
    check_schema(j, "equistab/rep/v1");
    if (j.contains("regular")) return regular_rep(g, j.at("regular").get<std::int64_t>());
    if (!j.contains("characters")) bad("expected characters or regular");
    std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> chars;
    for (const json& c : j.at("characters"))
        chars.emplace_back(c.at("coeffs").get<std::vector<std::int64_t>>(), c.at("mult").get<std::int64_t>());
    return make_representation(g, chars);
}

json gcw_to_json(const SubgroupLattice& lat, const GCWComplex& x) {
    json out;
    out["schema"] = "equistab/gcw/v1";
    out["group"] = group_to_json(lat.group);
    json cells = json::array();
    for (const GCWCell& c : x.cells) {
        json cc;
        cc["dim"] = c.dim;
        cc["isotropy"] = subgroup_to_json(lat, c.isotropy);
        cells.push_back(std::move(cc));
    }
    out["cells"] = std::move(cells);
    json bnd = json::array();
    for (const GCWBoundaryTerm& t : x.boundary) {
        json tt;
        tt["from"] = t.from;
        tt["to"] = t.to;
        tt["coset"] = lat.group.elem_at(t.coset_elem);
        tt["coeff"] = int_to_json(t.coeff);
        bnd.push_back(std::move(tt));
    }
    out["boundary"] = std::move(bnd);
    return out;
}

GCWComplex gcw_from_json(const SubgroupLattice& lat, const json& j) {
    check_schema(j, "equistab/gcw/v1");
    if (!j.is_object() || !j.contains("cells")) bad("expected {cells, boundary}");
    GCWComplex x;
    for (const json& c : j.at("cells"))
        x.cells.push_back(GCWCell{c.at("dim").get<int>(), subgroup_from_json(lat, c.at("isotropy"))});
    if (j.contains("boundary"))
        for (const json& t : j.at("boundary")) {
            GCWBoundaryTerm term;
            term.from = t.at("from").get<std::size_t>();
            term.to = t.at("to").get<std::size_t>();
            term.coset_elem =
                lat.group.elem_index(lat.group.reduce(t.at("coset").get<std::vector<std::int64_t>>()));
            term.coeff = int_from_json(t.at("coeff"));
            x.boundary.push_back(std::move(term));
        }
    return x;
}

json mackey_to_json(const SubgroupLattice& lat, const MackeyFunctorData& m) {
    json out;
    out["schema"] = "equistab/mackey/v1";
    out["group"] = group_to_json(lat.group);
    out["name"] = m.name;
    json levels = json::array();
    for (std::size_t h = 0; h < lat.size(); ++h) {
        json l;
        l["subgroup"] = subgroup_to_json(lat, h);
        l["rank"] = m.level_rank[h];
        levels.push_back(std::move(l));
    }
    out["levels"] = std::move(levels);
    json res = json::array(), tr = json::array();
    for (const auto& [key, mat] : m.res) {
        json e;
        e["lower"] = subgroup_to_json(lat, key.first);
        e["upper"] = subgroup_to_json(lat, key.second);
        e["matrix"] = matrix_to_json(mat);
        res.push_back(std::move(e));
    }
    for (const auto& [key, mat] : m.tr) {
        json e;
        e["lower"] = subgroup_to_json(lat, key.first);
        e["upper"] = subgroup_to_json(lat, key.second);
        e["matrix"] = matrix_to_json(mat);
        tr.push_back(std::move(e));
    }
    out["res"] = std::move(res);
    out["tr"] = std::move(tr);
    return out;
}

MackeyFunctorData mackey_from_json(const SubgroupLattice& lat, const json& j) {
    check_schema(j, "equistab/mackey/v1");
    if (!j.is_object() || !j.contains("levels")) bad("expected Mackey functor data");
    MackeyFunctorData m;
    m.name = j.value("name", "custom");
    m.level_rank.assign(lat.size(), 0);
    m.basis_labels.assign(lat.size(), {});
    for (const json& l : j.at("levels")) {
        std::size_t h = subgroup_from_json(lat, l.at("subgroup"));
        m.level_rank[h] = l.at("rank").get<std::size_t>();
        for (std::size_t i = 0; i < m.level_rank[h]; ++i) m.basis_labels[h].push_back("b" + std::to_string(i));
    }
    auto load = [&](const char* key, std::map<std::pair<std::size_t, std::size_t>, IntMat>& dst) {
        if (!j.contains(key)) return;
        for (const json& e : j.at(key)) {
            std::size_t lo = subgroup_from_json(lat, e.at("lower"));
            std::size_t hi = subgroup_from_json(lat, e.at("upper"));
            dst[{lo, hi}] = matrix_from_json(e.at("matrix"));
        }
    };
    load("res", m.res);
    load("tr", m.tr);
    for (std::size_t h = 0; h < lat.size(); ++h) m.weyl.push_back(IntMat::identity(m.level_rank[h]));
    return m;
}

json manifold_to_json(const SubgroupLattice& lat, const ManifoldDescriptor& m) {
    json out;
    out["schema"] = "equistab/manifold/v1";
    out["group"] = group_to_json(lat.group);
    out["ambient"] = subgroup_to_json(lat, m.ambient);
    if (m.provenance == ManifoldDescriptor::Provenance::RegularModel) {
        out["model"] = json{{"regular", m.regular_multiplicity}};
        return out;
    }
    json strata = json::array();
    for (std::size_t h = 0; h < lat.size(); ++h) {
        if (!lat.leq(h, m.ambient)) continue;
        const StratumInfo& s = m.strata[h];
        json e;
        e["subgroup"] = subgroup_to_json(lat, h);
        e["nonempty"] = s.nonempty;
        e["connected"] = s.quotient_connected;
        e["stabilizable"] = s.stabilizable;
        if (s.table) {
            json t;
            t["kmax"] = s.table->kmax;
            t["dmax"] = s.table->dmax;
            json entries = json::array(), maps = json::array();
            for (int k = 0; k <= s.table->kmax; ++k) {
                json row = json::array();
                for (int d = 1; d <= s.table->dmax; ++d) row.push_back(fg_to_json(s.table->entries[k][d - 1]));
                entries.push_back(std::move(row));
                if (k < s.table->kmax) {
                    json mrow = json::array();
                    for (int d = 1; d <= s.table->dmax; ++d) mrow.push_back(matrix_to_json(s.table->maps[k][d - 1]));
                    maps.push_back(std::move(mrow));
                }
            }
            t["entries"] = std::move(entries);
            t["maps"] = std::move(maps);
            e["table"] = std::move(t);
        }
        strata.push_back(std::move(e));
    }
    out["model"] = json{{"strata", std::move(strata)}};
    return out;
}

ManifoldDescriptor manifold_from_json(const SubgroupLattice& lat, const json& j) {
    check_schema(j, "equistab/manifold/v1");
    if (!j.is_object() || !j.contains("model")) bad("expected manifold model");
    std::size_t ambient = j.contains("ambient") ? subgroup_from_json(lat, j.at("ambient")) : lat.full();
    const json& model = j.at("model");
    if (model.contains("regular")) return rho_model(lat, ambient, model.at("regular").get<std::int64_t>());
    if (!model.contains("strata")) bad("model must be {regular: n} or {strata: [...]}");
    ManifoldDescriptor m = custom_descriptor(lat, ambient);
    for (const json& e : model.at("strata")) {
        std::size_t h = subgroup_from_json(lat, e.at("subgroup"));
        StratumInfo& s = m.strata[h];
        s.nonempty = e.value("nonempty", false);
        s.quotient_connected = e.value("connected", false);
        s.stabilizable = e.value("stabilizable", false);
        if (e.contains("table")) {
            const json& t = e.at("table");
            HomologyTable table;
            table.kmax = t.at("kmax").get<int>();
            table.dmax = t.at("dmax").get<int>();
            for (const json& row : t.at("entries")) {
                std::vector<FgAbGroup> r;
                for (const json& g : row) r.push_back(fg_from_json(g));
                table.entries.push_back(std::move(r));
            }
            for (const json& row : t.at("maps")) {
                std::vector<IntMat> r;
                for (const json& g : row) r.push_back(matrix_from_json(g));
                table.maps.push_back(std::move(r));
            }
            s.table = std::move(table);
        }
    }
    validate_descriptor(lat, m);
    return m;
}

json sequence_to_json(const GradedSequence& s) {
    json out;
    out["schema"] = "equistab/sequence/v1";
    json pieces = json::array(), maps = json::array();
    for (const BasedGroup& p : s.pieces) pieces.push_back(fg_to_json(p.canonical()));
    for (const IntMat& m : s.maps) maps.push_back(matrix_to_json(m));
    out["pieces"] = std::move(pieces);
    out["maps"] = std::move(maps);
    return out;
}

GradedSequence sequence_from_json(const json& j) {
    check_schema(j, "equistab/sequence/v1");
    if (!j.is_object() || !j.contains("pieces") || !j.contains("maps")) bad("expected {pieces, maps}");
    GradedSequence s;
    for (const json& p : j.at("pieces")) s.pieces.push_back(BasedGroup::from_fg(fg_from_json(p)));
    for (const json& m : j.at("maps")) s.maps.push_back(matrix_from_json(m));
    s.validate();
    return s;
}

json module_to_json(const GradedModule& m) {
    json out;
    out["schema"] = "equistab/module/v1";
    json grades = json::array();
    for (std::size_t i = 0; i < m.pieces.size(); ++i) {
        json g;
        g["name"] = m.grade_names[i];
        g["degree"] = m.grade_degree[i];
        g["piece"] = fg_to_json(m.pieces[i].canonical());
        // generator orders in working order, so edges stay interpretable
        json orders = json::array();
        for (const Int& o : m.pieces[i].orders) orders.push_back(int_to_json(o));
        g["orders"] = std::move(orders);
        grades.push_back(std::move(g));
    }
    out["grades"] = std::move(grades);
    json ops = json::array();
    for (std::size_t i = 0; i < m.op_names.size(); ++i) {
        json o;
        o["name"] = m.op_names[i];
        o["shift"] = m.op_shift[i];
        ops.push_back(std::move(o));
    }
    out["operators"] = std::move(ops);
    json edges = json::array();
    for (const auto& e : m.edges) {
        json ee;
        ee["op"] = e.op;
        ee["src"] = e.src;
        ee["dst"] = e.dst;
        ee["matrix"] = matrix_to_json(e.f);
        edges.push_back(std::move(ee));
    }
    out["edges"] = std::move(edges);
    return out;
}

GradedModule module_from_json(const json& j) {
    check_schema(j, "equistab/module/v1");
    if (!j.is_object() || !j.contains("grades") || !j.contains("operators")) bad("expected module data");
    GradedModule m;
    for (const json& g : j.at("grades")) {
        m.grade_names.push_back(g.at("name").get<std::string>());
        m.grade_degree.push_back(g.at("degree").get<std::int64_t>());
        BasedGroup piece;
        if (g.contains("orders"))
            for (const json& o : g.at("orders")) piece.orders.push_back(int_from_json(o));
        else
            piece = BasedGroup::from_fg(fg_from_json(g.at("piece")));
        m.pieces.push_back(std::move(piece));
    }
    for (const json& o : j.at("operators")) {
        m.op_names.push_back(o.at("name").get<std::string>());
        m.op_shift.push_back(o.at("shift").get<std::int64_t>());
    }
    if (j.contains("edges"))
        for (const json& e : j.at("edges")) {
            GradedModule::Edge edge;
            edge.op = e.at("op").get<std::size_t>();
            edge.src = e.at("src").get<std::size_t>();
            edge.dst = e.at("dst").get<std::size_t>();
            edge.f = matrix_from_json(e.at("matrix"));
            if (edge.op >= m.op_names.size() || edge.src >= m.pieces.size() || edge.dst >= m.pieces.size())
                bad("module edge indices out of range");
            m.edges.push_back(std::move(edge));
        }
    return m;
}

json fg_report_to_json(const GradedModule& m, const FgReport& r) {
    json out;
    out["finitely_generated"] = r.finitely_generated;
    out["bound"] = r.bound;
    out["window"] = r.window;
    out["pattern"] = r.pattern;
    json gens = json::array();
    for (const auto& info : r.nonzero_cokernels) {
        json g;
        g["grade"] = m.grade_names[info.grade];
        g["degree"] = m.grade_degree[info.grade];
        g["cokernel"] = fg_to_json(info.cokernel);
        gens.push_back(std::move(g));
    }
    out["nonzero_cokernels"] = std::move(gens);
    if (r.finitely_generated) out["max_generator_degree"] = r.max_generator_degree;
    return out;
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError("malformed JSON input");
    return j;
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

} // namespace equistab::io
