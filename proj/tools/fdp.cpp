// fdp — exact line-bundle calculus on abelian covers of (weak) del Pezzo
// surfaces: pushforwards, cohomology, effectivity, acyclic sets and the
// exhaustive search for exceptional collections of line bundles.

#include <fdp/registry.hpp>
#include <fdp/verify.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace fdp;

// ------------------------------------------------------------- parsing

Vec parse_int_list(const std::string& text, const char* what) {
    Vec out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw error(std::string("empty entry in ") + what);
            out.push_back(std::stoll(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    return out;
}

// Signed combinations of component names: "2D1+D2-E1+2E2", with "K" for the
// canonical divisor expression.
DivisorExprX parse_expr(const Surface& s, const std::string& text) {
    DivisorExprX e;
    size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw error("cannot parse expression '" + text + "': " + why);
    };
    while (i < text.size()) {
        Int sign = 1;
        while (i < text.size() && (text[i] == '+' || text[i] == '-' || std::isspace(static_cast<unsigned char>(text[i])))) {
            if (text[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= text.size()) break;
        Int coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            coeff = std::stoll(text.substr(i, j - i));
            i = j;
            if (i < text.size() && text[i] == '*') ++i;
        }
        size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
            ++j;
        if (j == i) fail("expected a component name at position " + std::to_string(i));
        std::string name = text.substr(i, j - i);
        i = j;
        if (name == "K") {
            e = expr_scale_add(std::move(e), sign * coeff, s.cov.canonical_expr());
        } else if (s.cov.is_branch(name)) {
            e.add(name, sign * coeff);
        } else if (s.cov.is_unram(name)) {
            e.add_unram(name, sign * coeff);
        } else {
            fail("unknown component '" + name + "'");
        }
    }
    return e;
}

// "default" (preset) or inline "0,0,0,0;1,-1,0,0;...".
NumericalCollection parse_numerical(const Surface& s, const std::string& spec) {
    if (spec.find(';') == std::string::npos && spec.find(',') == std::string::npos)
        return s.numerical_preset(spec);
    NumericalCollection nc;
    std::string cur;
    for (char ch : spec + ";") {
        if (ch == ';') {
            if (!cur.empty()) nc.push_back(parse_int_list(cur, "numerical class"));
            cur.clear();
        } else cur += ch;
    }
    return nc;
}

// "paper" (preset) or inline "0,0,0,0[0,0,0];-1,1,0,0[2,2,0];...".
TwistedCollection parse_collection(const Surface& s, const std::string& spec) {
    if (spec.find('[') == std::string::npos) return s.collection_preset(spec);
    TwistedCollection coll;
    std::string cur;
    for (char ch : spec + ";") {
        if (ch == ';') {
            if (cur.empty()) continue;
            auto lb = cur.find('[');
            auto rb = cur.find(']');
            if (lb == std::string::npos || rb == std::string::npos || rb < lb)
                throw error("bundle spec must look like d1,..,dn[t1,..,tk]: " + cur);
            Vec deg = parse_int_list(cur.substr(0, lb), "multidegree");
            Vec tors = parse_int_list(cur.substr(lb + 1, rb - lb - 1), "torsion");
            coll.push_back({deg, s.cov.group.reduce_t(tors)});
            cur.clear();
        } else cur += ch;
    }
    if (coll.empty() || !vec_is_zero(coll[0].deg) || !vec_is_zero(coll[0].tors))
        throw error("collection must be normalized: first bundle O_X");
    return coll;
}

// ------------------------------------------------------------- printing

std::string poly_str(const CohomDims& c) {
    std::string s;
    auto term = [&](Int d, int k) {
        if (d == 0) return;
        if (!s.empty()) s += "+";
        if (d != 1 || k == 0) s += std::to_string(d);
        if (k == 1) s += "q";
        if (k == 2) s += "q^2";
    };
    term(c.h0, 0);
    term(c.h1, 1);
    term(c.h2, 2);
    return s.empty() ? "0" : s;
}

json vec_json(const Vec& v) { return json(v); }

json vecs_json(const std::vector<Vec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(v);
    return a;
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

struct Options {
    bool json = false;
    int jobs = 1;
    std::vector<std::string> paths;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact line-bundle calculus on abelian covers of del Pezzo surfaces"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output with canonical key order");
    app.add_option("--jobs", opt.jobs, "worker threads (never changes output)")->default_val(1);
    app.add_option("--surface-path", opt.paths, "extra directories of *.surface files");

    std::string name, expr_text, d_text, t_text, method = "semigroup", mode = "semigroup";
    std::string numerical_spec = "default", collection_spec = "paper", suite = "paper", filter;
    bool counts = false, list_mode = false;

    auto* c_surfaces = app.add_subcommand("surfaces", "list surfaces or show one");
    auto* c_list = c_surfaces->add_subcommand("list", "list available surfaces");
    auto* c_show = c_surfaces->add_subcommand("show", "print a surface document");
    c_show->add_option("name", name)->required();
    c_surfaces->require_subcommand(1);
    (void)c_list;
    (void)list_mode;

    auto* c_push = app.add_subcommand("pushforward", "decompose phi_* O(EXPR - t)");
    c_push->add_option("-s,--surface", name)->required();
    c_push->add_option("-D,--divisor", expr_text, "e.g. 2D1+D2+E1+2E2 or K+A1")->required();
    c_push->add_option("-t,--torsion", t_text, "character twist tau (push O(EXPR) (x) bundle(tau)^{-1})");

    auto* c_cohom = app.add_subcommand("cohom", "cohomology of O(d) (x) [t]");
    c_cohom->add_option("-s,--surface", name)->required();
    c_cohom->add_option("-d,--multidegree", d_text)->required();
    c_cohom->add_option("-t,--torsion", t_text);

    auto* c_acyclic = app.add_subcommand("acyclic", "acyclic set of a multidegree");
    c_acyclic->add_option("-s,--surface", name)->required();
    c_acyclic->add_option("-d,--multidegree", d_text)->required();
    c_acyclic->add_option("--method", method)->check(CLI::IsMember({"semigroup", "pushforward", "both"}));

    auto* c_eff = app.add_subcommand("effective", "effectivity of O(d) (x) [t]");
    c_eff->add_option("-s,--surface", name)->required();
    c_eff->add_option("-d,--multidegree", d_text)->required();
    c_eff->add_option("-t,--torsion", t_text);
    c_eff->add_option("--mode", mode)->check(CLI::IsMember({"semigroup", "pushforward", "both"}));

    auto* c_decomp = app.add_subcommand("decomp", "decompositions of a multidegree in the semigroup");
    c_decomp->add_option("-s,--surface", name)->required();
    c_decomp->add_option("-d,--multidegree", d_text)->required();

    auto* c_cone = app.add_subcommand("cone", "extreme rays of the dual cone P");
    c_cone->add_option("-s,--surface", name)->required();

    auto* c_enum = app.add_subcommand("enumerate", "all exceptional collections of a numerical type");
    c_enum->add_option("-s,--surface", name)->required();
    c_enum->add_option("--numerical", numerical_spec, "preset name or inline classes");

    auto* c_ext = app.add_subcommand("ext-table", "Ext-table of a collection (anticanonically extended)");
    c_ext->add_option("-s,--surface", name)->required();
    c_ext->add_option("--collection", collection_spec);

    auto* c_ph = app.add_subcommand("pseudoheight", "pseudoheight and witness chains");
    c_ph->add_option("-s,--surface", name)->required();
    c_ph->add_option("--collection", collection_spec);

    auto* c_formal = app.add_subcommand("formality", "formality of the A-infinity algebra by degrees");
    c_formal->add_option("-s,--surface", name)->required();
    c_formal->add_option("--collection", collection_spec);

    auto* c_weyl = app.add_subcommand("weyl-orbit", "Weyl orbit of a numerical collection");
    c_weyl->add_option("-s,--surface", name)->required();
    c_weyl->add_option("--numerical", numerical_spec);
    c_weyl->add_flag("--counts", counts, "enumerate exceptional collections per orbit element");

    auto* c_verify = app.add_subcommand("verify", "run a reproduction suite");
    c_verify->add_option("--suite", suite)->check(CLI::IsMember({"paper"}));
    c_verify->add_option("--filter", filter, "run only checks whose name contains this");

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
        sc->fallthrough();
        for (auto* nested : sc->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        Registry reg;
        for (const auto& p : opt.paths) reg.add_directory(p);

        auto tau_of = [&](const Surface& s) {
            return t_text.empty() ? s.cov.group.zero_t()
                                  : s.cov.group.reduce_t(parse_int_list(t_text, "torsion"));
        };

        if (c_surfaces->parsed()) {
            if (c_show->parsed()) {
                const Surface& s = reg.get(name);
                if (opt.json) {
                    std::cout << s.doc.dump(2) << "\n";
                } else {
                    std::ostringstream os;
                    os << s.name << ": K^2 = " << s.meta.k2 << ", |G| = " << s.cov.cover_degree()
                       << ", |T| = " << s.cov.group.t_size() << "\n";
                    os << "  components (class on Y, Psi, coordinates):\n";
                    for (const auto& b : s.cov.branches) {
                        os << "    " << b.name << "  " << paren(b.class_y) << "  Psi=" << bracket(b.psi);
                        if (s.has_isometry) os << "  O(" << b.name << ") = " << to_string(s.components.at(b.name));
                        os << "\n";
                    }
                    for (const auto& u : s.cov.unram)
                        os << "    " << u.name << "  " << paren(u.class_y) << "  (unramified)\n";
                    if (s.has_isometry) os << "  K_X = " << to_string(s.canonical) << "\n";
                    if (!s.meta.notes.empty()) os << "  " << s.meta.notes << "\n";
                    std::cout << os.str();
                }
            } else {
                json j{{"surfaces", reg.names()}};
                std::string text;
                for (const auto& n : reg.names()) text += n + "\n";
                emit(opt.json, j, text);
            }
        } else if (c_push->parsed()) {
            const Surface& s = reg.get(name);
            DivisorExprX e = parse_expr(s, expr_text);
            Vec tau = tau_of(s);
            auto classes = pushforward(s.cov, e, tau);
            auto chars = s.cov.group.g_characters();
            json summands = json::array();
            std::ostringstream os;
            for (size_t i = 0; i < classes.size(); ++i) {
                summands.push_back({{"chi", vec_json(chars[i])}, {"class", vec_json(classes[i])}});
                os << "  chi=" << paren(chars[i]) << "  M = O_Y" << paren(classes[i]) << "\n";
            }
            emit(opt.json,
                 json{{"surface", s.name}, {"expr", to_string(e)}, {"tau", vec_json(tau)}, {"summands", summands}},
                 "phi_* O(" + to_string(e) + (vec_is_zero(tau) ? "" : " - " + bracket(tau)) + "):\n" + os.str());
        } else if (c_cohom->parsed()) {
            const Surface& s = reg.get(name);
            LineBundleX l{parse_int_list(d_text, "multidegree"), tau_of(s)};
            CohomDims c = cohomology_x(s.cov, s.y, l);
            emit(opt.json, json{{"h0", c.h0}, {"h1", c.h1}, {"h2", c.h2}},
                 "h(" + to_string(l) + ") = " + to_string(c) + "\n");
        } else if (c_acyclic->parsed()) {
            const Surface& s = reg.get(name);
            Vec d = parse_int_list(d_text, "multidegree");
            AcyclicMethod m = method == "semigroup" ? AcyclicMethod::semigroup
                              : method == "pushforward" ? AcyclicMethod::pushforward
                                                        : AcyclicMethod::both;
            auto taus = acyclic_set(s.cov, s.y, s.semigroup(), s.canonical, d, m);
            std::ostringstream os;
            for (const auto& t : taus) os << "  " << bracket(t) << "\n";
            emit(opt.json, json{{"multidegree", vec_json(d)}, {"method", method}, {"taus", vecs_json(taus)}},
                 "A" + paren(d) + " has " + std::to_string(taus.size()) + " elements:\n" + os.str());
        } else if (c_eff->parsed()) {
            const Surface& s = reg.get(name);
            LineBundleX l{parse_int_list(d_text, "multidegree"), tau_of(s)};
            EffMode m = mode == "semigroup" ? EffMode::semigroup
                        : mode == "pushforward" ? EffMode::pushforward
                                                : EffMode::both;
            bool eff = is_effective_x(s.semigroup(), s.cov, s.y, l, m);
            emit(opt.json, json{{"bundle", to_string(l)}, {"effective", eff}},
                 to_string(l) + (eff ? " is effective\n" : " is not effective\n"));
        } else if (c_decomp->parsed()) {
            const Surface& s = reg.get(name);
            Vec d = parse_int_list(d_text, "multidegree");
            const auto& eff = s.semigroup();
            auto decomps = eff.decompositions(d);
            json arr = json::array();
            std::ostringstream os;
            for (const auto& c : decomps) {
                json coeffs = json::object();
                Vec t = s.cov.group.zero_t();
                std::string line = "  ";
                bool first = true;
                for (size_t i = 0; i < eff.gens.size(); ++i) {
                    if (c[i] == 0) continue;
                    coeffs[eff.gens[i].name] = c[i];
                    t = s.cov.group.add_t(t, s.cov.group.reduce_t(vec_scale(c[i], eff.gens[i].bundle.tors)));
                    if (!first) line += "+";
                    if (c[i] != 1) line += std::to_string(c[i]) + "*";
                    line += eff.gens[i].name;
                    first = false;
                }
                if (first) line += "0";
                line += "   t = " + bracket(t) + "\n";
                os << line;
                arr.push_back({{"coeffs", coeffs}, {"torsion", vec_json(t)}});
            }
            emit(opt.json, json{{"multidegree", vec_json(d)}, {"decompositions", arr}},
                 "E" + paren(d) + " has " + std::to_string(decomps.size()) + " decompositions:\n" + os.str());
        } else if (c_cone->parsed()) {
            const Surface& s = reg.get(name);
            auto cone = cone_extreme_rays(s.semigroup());
            std::ostringstream os;
            for (const auto& rr : cone.rays) os << "  " << paren(rr) << "\n";
            emit(opt.json, json{{"rays", vecs_json(cone.rays)}},
                 std::to_string(cone.rays.size()) + " extreme rays:\n" + os.str());
        } else if (c_enum->parsed()) {
            const Surface& s = reg.get(name);
            auto lifted = lift_numerical(s.cov, parse_numerical(s, numerical_spec));
            auto tuples = enumerate_twists(s.cov, s.y, s.semigroup(), s.canonical, lifted, opt.jobs);
            json arr = json::array();
            std::ostringstream os;
            for (const auto& tup : tuples) {
                arr.push_back(vecs_json(tup));
                os << "  ";
                for (const auto& t : tup) os << bracket(t) << " ";
                os << "\n";
            }
            emit(opt.json, json{{"count", tuples.size()}, {"tuples", arr}},
                 std::to_string(tuples.size()) + " exceptional collections:\n" + os.str());
        } else if (c_ext->parsed()) {
            const Surface& s = reg.get(name);
            auto coll = parse_collection(s, collection_spec);
            auto table = ext_table(s.cov, s.y, coll, s.canonical);
            const size_t n = table.n;
            json rows = json::array();
            std::ostringstream os;
            for (size_t i = 0; i < n; ++i) {
                json row = json::array();
                os << "  ";
                for (size_t j = 0; j < n; ++j) {
                    const auto& c = table.at(i, i + j);
                    row.push_back({c.h0, c.h1, c.h2});
                    os << poly_str(c) << (i + j >= n ? "*" : "") << "\t";
                }
                os << "\n";
                rows.push_back(row);
            }
            emit(opt.json, json{{"n", n}, {"rows", rows}},
                 "Ext-table (entry (i,j) = Ext(E_i, E_{i+j}); * marks the anticanonical extension):\n" +
                     os.str());
        } else if (c_ph->parsed()) {
            const Surface& s = reg.get(name);
            auto coll = parse_collection(s, collection_spec);
            auto ph = pseudoheight(s.cov, s.y, coll, s.canonical);
            json wit = json::array();
            std::ostringstream os;
            for (const auto& w : ph.witnesses) {
                wit.push_back(w);
                os << "  chain (";
                for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << "E" << w[i];
                os << ")\n";
            }
            emit(opt.json,
                 json{{"pseudoheight", ph.ph}, {"witnesses", wit}, {"numeric_bound", ph.numeric_bound_holds}},
                 "pseudoheight = " + std::to_string(ph.ph) +
                     (ph.numeric_bound_holds ? " (numeric lower bound ph >= 3 applies)" : "") +
                     "\nminimizing chains:\n" + os.str());
        } else if (c_formal->parsed()) {
            const Surface& s = reg.get(name);
            auto coll = parse_collection(s, collection_spec);
            auto table = ext_table(s.cov, s.y, coll, s.canonical);
            auto f = formality_check(table);
            json pairs = json::array();
            std::ostringstream os;
            for (const auto& p : f.ext1_pairs) {
                pairs.push_back({{p.first.first, p.first.second}, {p.second.first, p.second.second}});
                os << "  Ext1(E" << p.first.first << ",E" << p.first.second << ") o Ext1(E"
                   << p.second.first << ",E" << p.second.second << ")\n";
            }
            json homs = json::array();
            for (const auto& h : f.hom_witnesses) homs.push_back({h.first, h.second});
            emit(opt.json, json{{"formal", f.formal}, {"ext1_pairs", pairs}, {"hom_witnesses", homs}},
                 std::string(f.formal ? "formal (by the degree argument)\n"
                                      : "not decided by the degree argument; blocking pairs:\n") +
                     os.str());
        } else if (c_weyl->parsed()) {
            const Surface& s = reg.get(name);
            auto orbit = weyl_orbit(s.cov.lat_y, parse_numerical(s, numerical_spec));
            json j{{"size", orbit.size()}};
            std::ostringstream os;
            os << "orbit size " << orbit.size() << "\n";
            if (counts) {
                std::vector<Int> cnt(orbit.size());
                parallel_for(orbit.size(), opt.jobs, [&](size_t i) {
                    auto lifted = lift_numerical(s.cov, orbit[i]);
                    cnt[i] = static_cast<Int>(
                        enumerate_twists(s.cov, s.y, s.semigroup(), s.canonical, lifted).size());
                });
                std::set<Int> distinct(cnt.begin(), cnt.end());
                j["counts"] = cnt;
                j["distinct"] = std::vector<Int>(distinct.begin(), distinct.end());
                for (size_t i = 0; i < orbit.size(); ++i)
                    os << "  element " << i << ": " << cnt[i] << " exceptional collections\n";
            }
            emit(opt.json, j, os.str());
        } else if (c_verify->parsed()) {
            auto results = paper_suite(reg, filter, opt.jobs);
            int failed = 0;
            std::ostringstream os;
            for (const auto& c : results) {
                os << (c.pass ? "PASS " : "FAIL ") << c.name << " — " << c.detail << "\n";
                if (!c.pass) ++failed;
            }
            os << (failed == 0 ? "all checks passed\n"
                               : std::to_string(failed) + " check(s) failed\n");
            emit(opt.json, suite_json(results), os.str());
            if (failed > 0) return 1;
        }
        return 0;
    } catch (const fdp::validation_error& e) {
        std::cerr << "data validation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
