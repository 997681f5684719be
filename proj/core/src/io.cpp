#include "telhom/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

namespace telhom {

using nlohmann::json;

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON in " + path);
    return j;
}

std::size_t as_index(const json& j, std::size_t bound, const std::string& what) {
    if (!j.is_number_unsigned())
        throw InputError(what + " must be a non-negative integer");
    std::size_t v = j.get<std::size_t>();
    if (v >= bound) throw InputError(what + " out of range: " + std::to_string(v));
    return v;
}

Group parse_group(const json& j) {
    if (j.is_string()) return builtin_group(j.get<std::string>());
    if (!j.is_object())
        throw InputError("group must be a builtin name or an object");
    for (const auto& [k, v] : j.items()) {
        (void)v;
        if (k != "elements" && k != "table")
            throw InputError("unknown key in group: " + k);
    }
    if (!j.contains("elements") || !j["elements"].is_array())
        throw InputError("group needs an elements array");
    if (!j.contains("table") || !j["table"].is_array())
        throw InputError("group needs a multiplication table");
    std::vector<std::string> names;
    for (const json& e : j["elements"]) {
        if (!e.is_string() || e.get<std::string>().empty())
            throw InputError("group elements must be non-empty strings");
        names.push_back(e.get<std::string>());
    }
    std::size_t order = names.size();
    std::vector<std::vector<std::size_t>> table;
    for (const json& row : j["table"]) {
        if (!row.is_array() || row.size() != order)
            throw InputError("group table rows must list every element");
        std::vector<std::size_t> r;
        for (const json& e : row) r.push_back(as_index(e, order, "group table entry"));
        table.push_back(std::move(r));
    }
    if (table.size() != order)
        throw InputError("group table must have one row per element");
    try {
        return Group(std::move(names), std::move(table));
    } catch (const std::exception& e) {
        throw InputError(std::string("invalid group: ") + e.what());
    }
}

VertexAction parse_action(const json& j, const Group& g, std::size_t nverts) {
    if (!j.is_object())
        throw InputError("action must be an object keyed by group element");
    VertexAction act(g.order(), std::vector<std::size_t>(nverts));
    std::vector<bool> given(g.order(), false);
    for (std::size_t v = 0; v < nverts; ++v) act[g.identity()][v] = v;
    given[g.identity()] = true;
    for (const auto& [key, val] : j.items()) {
        auto idx = g.index_of(key);
        if (!idx) throw InputError("action names unknown group element: " + key);
        if (!val.is_array() || val.size() != nverts)
            throw InputError("action of " + key + " must list every vertex");
        std::vector<bool> hit(nverts, false);
        for (std::size_t v = 0; v < nverts; ++v) {
            std::size_t img = as_index(val[v], nverts, "action of " + key);
            if (hit[img])
                throw InputError("action of " + key + " is not a permutation");
            hit[img] = true;
            act[*idx][v] = img;
        }
        given[*idx] = true;
    }
    for (std::size_t a = 0; a < g.order(); ++a)
        if (!given[a]) throw InputError("action missing group element: " + g.name(a));
    return act;
}

json matrix_json(const f2::Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::string s(m.cols(), '0');
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) s[c] = '1';
        rows.push_back(std::move(s));
    }
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(rows);
    return j;
}

json input_json(const InputSpec& in) {
    json j;
    j["source"] = in.source;
    j["vertices"] = in.complex.vertex_count();
    j["top_dim"] = in.complex.top_dim();
    j["total_cells"] = in.complex.total_cells();
    j["group"] = in.group_name;
    j["group_order"] = in.group.order();
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

Group builtin_group(const std::string& name) {
    if (name == "trivial") return Group::trivial();
    if (name == "z2xz2") return Group::klein_four();
    if (name.size() >= 2 && name[0] == 'z' &&
        std::all_of(name.begin() + 1, name.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
        int n = std::stoi(name.substr(1));
        if (n >= 2 && n <= 12) return Group::cyclic(static_cast<std::size_t>(n));
    }
    throw InputError("unknown group: " + name + " (builtins: trivial, z2..z12, z2xz2)");
}

InputSpec load_input(const std::string& path, const std::string& group_override) {
    json j = parse_file(path);
    if (!j.is_object()) throw InputError("top level must be an object");
    for (const auto& [k, v] : j.items()) {
        (void)v;
        if (k != "vertices" && k != "facets" && k != "group" && k != "action")
            throw InputError("unknown key: " + k);
    }
    if (!j.contains("vertices") || !j["vertices"].is_number_unsigned())
        throw InputError("vertices must be a non-negative integer");
    std::size_t nverts = j["vertices"].get<std::size_t>();
    if (nverts == 0) throw InputError("need at least one vertex");

    std::vector<std::vector<std::size_t>> facets;
    if (j.contains("facets")) {
        if (!j["facets"].is_array()) throw InputError("facets must be an array");
        for (const json& f : j["facets"]) {
            if (!f.is_array() || f.empty())
                throw InputError("each facet must be a non-empty array of vertices");
            std::vector<std::size_t> verts;
            for (const json& v : f) verts.push_back(as_index(v, nverts, "facet vertex"));
            std::vector<std::size_t> sorted = verts;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw InputError("facet repeats a vertex");
            facets.push_back(std::move(verts));
        }
    }

    Group g = !group_override.empty() ? builtin_group(group_override)
              : j.contains("group")   ? parse_group(j["group"])
                                      : Group::trivial();
    std::string gname = !group_override.empty() ? group_override
                        : !j.contains("group")  ? std::string("trivial")
                        : j["group"].is_string()
                            ? j["group"].get<std::string>()
                            : "custom(" + std::to_string(g.order()) + ")";

    VertexAction act;
    if (j.contains("action")) {
        act = parse_action(j["action"], g, nverts);
    } else if (g.order() == 1) {
        act.emplace_back(nverts);
        for (std::size_t v = 0; v < nverts; ++v) act[0][v] = v;
    } else {
        throw InputError("action required for a nontrivial group");
    }

    CellComplex cx = [&] {
        try {
            return CellComplex::from_facets(nverts, facets);
        } catch (const std::exception& e) {
            throw InputError(std::string("bad complex: ") + e.what());
        }
    }();
    return InputSpec{std::move(cx), std::move(g), std::move(act), std::move(gname), path};
}

InputSpec point_input(const std::string& group_name) {
    std::string gname = group_name.empty() ? "trivial" : group_name;
    Group g = builtin_group(gname);
    VertexAction act(g.order(), std::vector<std::size_t>(1, 0));
    return InputSpec{CellComplex::point(), std::move(g), std::move(act), std::move(gname),
                     "builtin:point"};
}

std::string equivariant_report(const InputSpec& in, const EquivariantOptions& opt,
                               const EquivariantResult& r) {
    json j;
    j["mode"] = "equivariant";
    j["input"] = input_json(in);
    j["max_degree"] = opt.max_degree;
    j["stages"] = r.stages;
    j["sd_rounds"] = r.sd_rounds;
    j["stage_dims"] = r.stage_dims;
    j["stage_betti"] = r.stage_betti;
    j["stable"] = r.stable;
    j["certificate"] = r.certificate;
    j["certified"] = r.certified;
    j["telescope_betti"] = r.telescope_betti;
    j["telescope_agrees"] = r.telescope_agrees;
    json m;
    m["enabled"] = r.morse;
    m["cells_before"] = r.cells_before;
    m["cells_after"] = r.cells_after;
    j["morse"] = std::move(m);
    return dump(j);
}

std::string module_report(const InputSpec& in, const EquivariantOptions& opt,
                          const ModuleActionResult& r) {
    json j;
    j["mode"] = "module";
    j["input"] = input_json(in);
    j["max_degree"] = opt.max_degree;
    j["stages"] = r.stages;
    j["cocycle_degree"] = r.cocycle_degree;
    j["generators"] = r.generators;
    j["homology_rank"] = r.homology_rank;
    json gens = json::array();
    for (const auto& per_gen : r.matrices) {
        json acts = json::array();
        for (std::size_t idx = 0; idx < per_gen.size(); ++idx) {
            json a = matrix_json(per_gen[idx]);
            a["from_degree"] = r.cocycle_degree + idx;
            a["to_degree"] = idx;
            a["rank"] = f2::rank(per_gen[idx]);
            acts.push_back(std::move(a));
        }
        gens.push_back(std::move(acts));
    }
    j["action"] = std::move(gens);
    return dump(j);
}

std::string kirwan_report(const InputSpec& in, const EquivariantOptions& opt,
                          const KirwanResult& r) {
    json j;
    j["mode"] = "kirwan";
    j["input"] = input_json(in);
    j["max_degree"] = opt.max_degree;
    j["stages"] = r.stages;
    j["orbit_betti"] = r.orbit_betti;
    j["stage_betti"] = r.stage_betti;
    j["iso"] = r.iso;
    j["two_sided"] = r.two_sided;
    json cmp = json::array(), inv = json::array();
    for (const f2::Matrix& m : r.comparison) cmp.push_back(matrix_json(m));
    for (const f2::Matrix& m : r.inverse) inv.push_back(matrix_json(m));
    j["comparison"] = std::move(cmp);
    j["inverse"] = std::move(inv);
    return dump(j);
}

std::string verify_report(const VerifyOptions& opt, const std::vector<SuiteResult>& suites) {
    json j;
    j["mode"] = "verify";
    j["seed"] = opt.seed;
    j["runs"] = opt.runs;
    j["stages"] = opt.stages;
    j["top_degree"] = opt.top_degree;
    j["max_block"] = opt.max_block;
    bool ok = true;
    json arr = json::array();
    for (const SuiteResult& s : suites) {
        ok = ok && s.ok();
        json e;
        e["name"] = s.name;
        e["runs"] = s.runs;
        e["failures"] = s.failures;
        e["detail"] = s.detail;
        arr.push_back(std::move(e));
    }
    j["suites"] = std::move(arr);
    j["ok"] = ok;
    return dump(j);
}

std::string equivariant_tsv(const EquivariantResult& r, std::size_t max_degree) {
    std::ostringstream os;
    os << "degree";
    for (std::size_t n = 0; n < r.stage_betti.size(); ++n) os << "\tstage_" << n;
    os << "\ttelescope\n";
    for (std::size_t k = 0; k <= max_degree; ++k) {
        os << k;
        for (const auto& sb : r.stage_betti) os << '\t' << sb[k];
        os << '\t' << r.telescope_betti[k] << '\n';
    }
    return os.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write: " + tmp);
        out << content;
        out.flush();
        if (!out) throw InputError("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw InputError("cannot move report into place: " + path);
}

} // namespace telhom
