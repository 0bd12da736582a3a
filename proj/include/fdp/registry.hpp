#pragma once

// Surface-definition documents (*.surface, canonical JSON, "schema": 1),
// their validation against the cover axioms, and the built-in registry.
// Loading recomputes every derived quantity (negative curves, torsion
// twists of the generators, the canonical bundle, K^2) and cross-checks it
// against the declared values; any mismatch is a hard error.

#include "collections.hpp"
#include "registry_data.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace fdp {

using json = nlohmann::json;

struct SurfaceMeta {
    Int k2 = 0;
    bool has_k2 = false;
    std::optional<Int> h1_tx, h2_tx;
    std::string notes;
};

struct Surface {
    std::string name;
    CoverData cov;
    SurfaceY y;
    std::optional<EffSemigroup> eff;
    bool has_isometry = false;
    LineBundleX canonical;                           // valid iff has_isometry
    std::map<std::string, LineBundleX> components;   // recomputed coordinates (iff isometry)
    SurfaceMeta meta;
    std::map<std::string, NumericalCollection> numerical_presets;
    std::map<std::string, std::pair<std::string, std::vector<Vec>>> collection_presets;
    json doc;  // the parsed document, for canonical serialization

    const EffSemigroup& semigroup() const {
        if (!eff) throw error("surface " + name + " has no effective-semigroup data");
        return *eff;
    }

    NumericalCollection numerical_preset(const std::string& key) const {
        auto it = numerical_presets.find(key);
        if (it == numerical_presets.end())
            throw error("surface " + name + " has no numerical preset '" + key + "'");
        return it->second;
    }

    TwistedCollection collection_preset(const std::string& key) const {
        auto it = collection_presets.find(key);
        if (it == collection_presets.end())
            throw error("surface " + name + " has no collection preset '" + key + "'");
        auto lifted = lift_numerical(cov, numerical_preset(it->second.first));
        TwistedCollection coll;
        coll.push_back({Vec(cov.lat_y.rank, 0), cov.group.zero_t()});
        const auto& tw = it->second.second;
        if (tw.size() + 1 != lifted.size())
            throw validation_error("collection preset length mismatch in " + name);
        for (size_t i = 0; i < tw.size(); ++i)
            coll.push_back({lifted[i + 1], cov.group.reduce_t(tw[i])});
        return coll;
    }
};

namespace detail {

inline Vec parse_vec(const json& a, const char* what) {
    if (!a.is_array()) throw validation_error(std::string(what) + " must be an array");
    Vec v;
    for (const auto& x : a) {
        if (!x.is_number_integer()) throw validation_error(std::string(what) + " must hold integers");
        v.push_back(x.get<Int>());
    }
    return v;
}

inline DivisorExprX parse_expr(const std::set<std::string>& unram_names, const json& o) {
    DivisorExprX e;
    if (!o.is_object()) throw validation_error("expression must be an object of name -> coefficient");
    for (auto it = o.begin(); it != o.end(); ++it) {
        Int k = it.value().get<Int>();
        if (unram_names.count(it.key())) e.add_unram(it.key(), k);
        else e.add(it.key(), k);
    }
    return e;
}

}  // namespace detail

inline Surface load_surface(const json& doc) {
    using detail::parse_vec;
    if (!doc.is_object()) throw validation_error("surface document must be a JSON object");
    if (doc.value("template", false))
        throw validation_error("surface file is a template: fill in the Psi table before loading");
    if (doc.value("schema", 0) != 1) throw validation_error("unsupported schema version");

    Surface s;
    s.doc = doc;
    s.name = doc.at("name").get<std::string>();
    int rank = doc.at("rank").get<int>();
    Vec ky = parse_vec(doc.at("canonical_y"), "canonical_y");
    Vec ample = parse_vec(doc.at("ample_y"), "ample_y");
    PicLattice lat_y(rank, ky);

    const auto& g = doc.at("group");
    FinAbGroup group(parse_vec(g.at("orders"), "orders"), g.at("g_rank").get<int>());

    std::vector<BranchComponent> branches;
    for (const auto& b : doc.at("branches")) {
        if (b.at("psi").is_null())
            throw validation_error("surface " + s.name + ": component " +
                                   b.at("name").get<std::string>() + " has no Psi value");
        branches.push_back({b.at("name").get<std::string>(), parse_vec(b.at("class"), "class"),
                            parse_vec(b.at("psi"), "psi")});
    }
    std::vector<UnramCurve> unram;
    for (const auto& u : doc.at("unramified"))
        unram.push_back({u.at("name").get<std::string>(), parse_vec(u.at("class"), "class")});

    std::set<std::string> unram_names;
    for (const auto& u : unram) unram_names.insert(u.name);
    std::vector<std::pair<std::string, DivisorExprX>> basis;
    for (const auto& b : doc.at("basis_x"))
        basis.push_back(
            {b.at("name").get<std::string>(), detail::parse_expr(unram_names, b.at("expr"))});

    s.cov = CoverData(group, lat_y, branches, unram, basis);

    // declared Psi relations, e.g. the loops around a full line arrangement sum to zero
    for (const auto& rel : doc.value("relations", json::array())) {
        Vec sum = group.zero();
        for (const auto& n : rel)
            sum = group.add(sum, group.reduce(branches[s.cov.branch_index(n.get<std::string>())].psi));
        if (!vec_is_zero(sum)) throw validation_error("declared Psi relation does not sum to zero");
    }

    // blowup consistency: a component whose class is a coordinate vector e_i
    // is the exceptional curve over a point, so its Psi must be the sum of
    // Psi over the incident branch components.
    auto is_unit_exceptional = [&](const Vec& c) {
        if (c[0] != 0) return false;
        int ones = 0;
        for (int i = 1; i < rank; ++i) {
            if (c[i] == 1) ++ones;
            else if (c[i] != 0) return false;
        }
        return ones == 1;
    };
    auto incident_sum = [&](const Vec& cls) {
        Vec sum = group.zero();
        for (const auto& b : branches) {
            if (b.class_y == cls) continue;
            Int m = lat_y.intersect(b.class_y, cls);
            if (m > 0) sum = group.add(sum, group.reduce(vec_scale(m, b.psi)));
        }
        return sum;
    };
    for (const auto& b : branches)
        if (is_unit_exceptional(b.class_y) && group.reduce(b.psi) != incident_sum(b.class_y))
            throw validation_error("component " + b.name +
                                   ": Psi disagrees with the blowup formula");
    for (const auto& u : unram)
        if (is_unit_exceptional(u.class_y) && !vec_is_zero(incident_sum(u.class_y)))
            throw validation_error("unramified curve " + u.name +
                                   " has nonzero Psi by the blowup formula");

    std::vector<DivClass> roots;
    for (const auto& r : doc.at("neg_roots")) roots.push_back(parse_vec(r, "neg_root"));
    for (const auto& a : roots)
        for (const auto& b : roots)
            if (a != b && lat_y.intersect(a, b) < 0)
                throw validation_error("declared effective roots pair negatively");
    s.y = SurfaceY(lat_y, negative_curves(lat_y, roots), ample);

    if (auto& m = doc.at("meta"); true) {
        if (m.contains("k2")) {
            s.meta.k2 = m.at("k2").get<Int>();
            s.meta.has_k2 = true;
            Int k2 = s.cov.x_intersect(s.cov.canonical_expr(), s.cov.canonical_expr());
            if (k2 != s.meta.k2)
                throw validation_error("declared K^2 = " + std::to_string(s.meta.k2) +
                                       " but the cover computes " + std::to_string(k2));
        }
        if (m.contains("h1_tx")) s.meta.h1_tx = m.at("h1_tx").get<Int>();
        if (m.contains("h2_tx")) s.meta.h2_tx = m.at("h2_tx").get<Int>();
        s.meta.notes = m.value("notes", "");
    }

    s.has_isometry = s.cov.has_basis();
    if (s.has_isometry) {
        s.canonical = canonical_x(s.cov, s.y);
        const json& declared = doc.at("declared");
        if (declared.contains("canonical")) {
            LineBundleX want{parse_vec(declared.at("canonical").at("multidegree"), "multidegree"),
                             parse_vec(declared.at("canonical").at("torsion"), "torsion")};
            if (!(s.canonical == want))
                throw validation_error("recomputed K_X " + to_string(s.canonical) +
                                       " differs from declared " + to_string(want));
        }
        for (const auto& b : branches) {
            DivisorExprX e;
            e.add(b.name, 1);
            LineBundleX got = coordinates_of(s.cov, s.y, e);
            s.components[b.name] = got;
            if (declared.contains("torsion") && declared.at("torsion").contains(b.name)) {
                Vec want = parse_vec(declared.at("torsion").at(b.name), "torsion");
                if (group.reduce_t(want) != got.tors)
                    throw validation_error("component " + b.name + ": recomputed torsion " +
                                           bracket(got.tors) + " differs from declared " +
                                           bracket(want));
            }
        }
    } else if (doc.at("declared").contains("torsion") || doc.at("declared").contains("canonical")) {
        throw validation_error("declared coordinates require basis_x data");
    }

    std::vector<std::string> gen_names;
    for (const auto& n : doc.at("eff_generators")) gen_names.push_back(n.get<std::string>());
    if (!gen_names.empty()) {
        if (!s.has_isometry)
            throw validation_error("effective generators require the lattice isometry");
        std::vector<EffGenerator> gens;
        for (const auto& n : gen_names) {
            DivisorExprX e;
            if (s.cov.is_branch(n)) {
                e.add(n, 1);
                gens.push_back({n, e, s.components.at(n)});
            } else {
                e.add_unram(n, 1);
                LineBundleX got = coordinates_of(s.cov, s.y, e);
                if (!vec_is_zero(got.tors))
                    throw validation_error("pullback generator " + n + " has nonzero torsion");
                gens.push_back({n, e, got});
            }
        }
        s.eff.emplace(std::move(gens), ample, s.cov.lat_x(), group);
    }

    const json& presets = doc.at("presets");
    const json numerical = presets.value("numerical", json::object());
    for (auto it = numerical.begin(); it != numerical.end(); ++it) {
        NumericalCollection nc;
        for (const auto& c : it.value()) nc.push_back(parse_vec(c, "numerical class"));
        s.numerical_presets[it.key()] = std::move(nc);
    }
    const json collections = presets.value("collections", json::object());
    for (auto it = collections.begin(); it != collections.end(); ++it) {
        std::vector<Vec> twists;
        for (const auto& t : it.value().at("twists")) twists.push_back(parse_vec(t, "twist"));
        s.collection_presets[it.key()] = {it.value().at("numerical").get<std::string>(),
                                          std::move(twists)};
        s.collection_preset(it.key());  // validates lengths now
    }
    return s;
}

inline std::string serialize_surface(const Surface& s) { return s.doc.dump(2) + "\n"; }

class Registry {
  public:
    // Built-in surfaces always load; directories may add or override.
    Registry() {
        for (const char* text : data::kBuiltins) {
            auto sp = std::make_shared<Surface>(load_surface(json::parse(text)));
            surfaces_[sp->name] = sp;
        }
    }

    void add_directory(const std::string& dir) {
        namespace fs = std::filesystem;
        std::vector<fs::path> files;
        for (const auto& ent : fs::directory_iterator(dir))
            if (ent.path().extension() == ".surface") files.push_back(ent.path());
        std::sort(files.begin(), files.end());
        for (const auto& p : files) {
            std::ifstream in(p);
            if (!in) throw error("cannot read " + p.string());
            json doc = json::parse(in);
            auto sp = std::make_shared<Surface>(load_surface(doc));
            surfaces_[sp->name] = sp;
        }
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& [n, _] : surfaces_) out.push_back(n);
        return out;
    }

    const Surface& get(const std::string& name) const {
        auto it = surfaces_.find(name);
        if (it == surfaces_.end()) throw error("unknown surface: " + name);
        return *it->second;
    }

  private:
    std::map<std::string, std::shared_ptr<Surface>> surfaces_;
};

}  // namespace fdp
