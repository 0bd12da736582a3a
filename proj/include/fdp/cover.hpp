#pragma once

// Abelian cover data phi: X -> Y and the pushforward calculus.
//
// A cover is described by the split Galois group G~ = G (+) T of the maximal
// Galois cover A -> Y, the branch components with their classes on Y and
// Psi-values in G~, and (when the surface satisfies assumption (A)) a basis
// of Pic X / Tors X by reduced-pullback expressions. The key operation is
//
//   phi_* O_X(sum k_i D_i + sum c_u phi^* U_u - tau)
//     = (+)_{chi in G*} L_{chi+tau}^{-1}(Delta_I + projection twists),
//
// where D_i is the reduced pullback of the branch component Delta_i, the
// U_u are unramified curves pulled back whole, and chi runs through G* in
// lexicographic order.

#include "delpezzo.hpp"
#include "groups.hpp"
#include "linsolve.hpp"

#include <map>
#include <optional>
#include <set>

namespace fdp {

struct BranchComponent {
    std::string name;
    DivClass class_y;
    Vec psi;  // Psi(Delta_i) in G~
};

struct UnramCurve {
    std::string name;
    DivClass class_y;
};

// Finitely supported integer combination: reduced-pullback multiplicities on
// branch components, full-pullback multiplicities on unramified curves.
struct DivisorExprX {
    std::map<std::string, Int> branch;
    std::map<std::string, Int> unram;

    DivisorExprX& add(const std::string& name, Int k) {
        branch[name] += k;
        if (branch[name] == 0) branch.erase(name);
        return *this;
    }
    DivisorExprX& add_unram(const std::string& name, Int k) {
        unram[name] += k;
        if (unram[name] == 0) unram.erase(name);
        return *this;
    }
    bool operator==(const DivisorExprX&) const = default;
};

inline DivisorExprX expr_scale_add(DivisorExprX acc, Int c, const DivisorExprX& e) {
    for (const auto& [n, k] : e.branch) acc.add(n, c * k);
    for (const auto& [n, k] : e.unram) acc.add_unram(n, c * k);
    return acc;
}

inline std::string to_string(const DivisorExprX& e) {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const std::string& n, Int k) {
        if (k == 0) return;
        if (k > 0 && !first) os << "+";
        if (k == -1) os << "-";
        else if (k != 1) os << k << "*";
        os << n;
        first = false;
    };
    for (const auto& [n, k] : e.branch) put(n, k);
    for (const auto& [n, k] : e.unram) put(n, k);
    if (first) os << "0";
    return os.str();
}

// A line bundle on X: multidegree in the chosen basis of Pic X / Tors X,
// torsion twist in T (the paper's [a,b,c] labels).
struct LineBundleX {
    DivClass deg;
    Vec tors;
    bool operator==(const LineBundleX&) const = default;
    bool operator<(const LineBundleX& o) const {
        return deg != o.deg ? deg < o.deg : tors < o.tors;
    }
};

inline std::string to_string(const LineBundleX& l) {
    return paren(l.deg) + bracket(l.tors);
}

class CoverData {
  public:
    FinAbGroup group;  // G~ with positional split
    PicLattice lat_y;
    std::vector<BranchComponent> branches;
    std::vector<UnramCurve> unram;
    std::vector<std::pair<std::string, DivisorExprX>> basis;

    CoverData() = default;
    CoverData(FinAbGroup g, PicLattice ly, std::vector<BranchComponent> br,
              std::vector<UnramCurve> un, std::vector<std::pair<std::string, DivisorExprX>> bas)
        : group(std::move(g)),
          lat_y(std::move(ly)),
          branches(std::move(br)),
          unram(std::move(un)),
          basis(std::move(bas)) {
        finalize();
    }

    bool has_basis() const { return !basis.empty(); }
    size_t branch_count() const { return branches.size(); }
    Int inertia_order(size_t i) const { return orders_[i]; }
    Int cover_degree() const { return group.g_size(); }
    const PicLattice& lat_x() const {
        if (!has_basis()) throw error("cover has no lattice isometry (assumption (A) data absent)");
        return lat_x_;
    }
    const std::vector<Vec>& basis_y_classes() const { return basis_class_; }
    const Vec& unram_pullback_coords(size_t u) const { return unram_coords_[u]; }

    size_t branch_index(const std::string& name) const {
        auto it = branch_index_.find(name);
        if (it == branch_index_.end()) throw error("unknown branch component: " + name);
        return it->second;
    }
    bool is_branch(const std::string& name) const { return branch_index_.count(name) > 0; }
    size_t unram_index(const std::string& name) const {
        auto it = unram_index_.find(name);
        if (it == unram_index_.end()) throw error("unknown unramified curve: " + name);
        return it->second;
    }
    bool is_unram(const std::string& name) const { return unram_index_.count(name) > 0; }

    // Coordinate vector (in the ambient Y-coordinates) of the class of the
    // expression's bundle in Pic X / Tors X.
    Vec multidegree(const DivisorExprX& e) const {
        Vec m(lat_y.rank, 0);
        for (const auto& [n, k] : e.branch)
            m = vec_add(m, vec_scale(k, branches[branch_index(n)].class_y));
        for (const auto& [n, k] : e.unram)
            m = vec_add(m, vec_scale(k, unram_coords_[unram_index(n)]));
        return m;
    }

    // Exact intersection number on X of two reduced-pullback expressions,
    // via (1/n_i phi^* A).(1/n_j phi^* B) = |G| / (n_i n_j) A.B on Y.
    Int x_intersect(const DivisorExprX& a, const DivisorExprX& b) const {
        Int N = scale_N_;
        Int acc = 0;
        auto each = [&](const DivisorExprX& e, auto&& fn) {
            for (const auto& [n, k] : e.branch) {
                size_t i = branch_index(n);
                fn(k * (N / orders_[i]), branches[i].class_y);
            }
            for (const auto& [n, k] : e.unram) fn(k * N, unram[unram_index(n)].class_y);
        };
        each(a, [&](Int wa, const DivClass& ca) {
            each(b, [&](Int wb, const DivClass& cb) { acc += wa * wb * lat_y.intersect(ca, cb); });
        });
        acc *= cover_degree();
        if (acc % (N * N) != 0) throw error("x_intersect: non-integral intersection number");
        return acc / (N * N);
    }

    // Riemann-Roch on X for the bundle of an expression (torsion-blind).
    Int euler_char_expr(const DivisorExprX& e) const {
        Int d2 = x_intersect(e, e);
        Int dk = x_intersect(e, canonical_expr());
        Int t = d2 - dk;
        if (posmod(t, 2) != 0) throw error("euler_char_expr: odd parity");
        return 1 + t / 2;
    }

    // K_X as a divisor expression: phi^*(K_Y) + sum (n_i - 1) D_i.
    const DivisorExprX& canonical_expr() const {
        if (!canonical_) {
            auto a = branch_solver_.solve(lat_y.canonical);
            if (!a) throw error("canonical_expr: K_Y is not a combination of branch classes");
            DivisorExprX e;
            for (size_t i = 0; i < branches.size(); ++i)
                e.add(branches[i].name, (*a)[i] * orders_[i] + (orders_[i] - 1));
            canonical_ = std::move(e);
        }
        return *canonical_;
    }

    // Expression with the given multidegree, assembled from the basis.
    DivisorExprX expr_of_multidegree(const Vec& d) const {
        Vec coords = basis_coordinates(d);
        DivisorExprX e;
        for (size_t i = 0; i < basis.size(); ++i)
            e = expr_scale_add(std::move(e), coords[i], basis[i].second);
        return e;
    }

    // Expansion of a Y-coordinate class over the basis classes (which form an
    // orthogonal diag(1,-1,...) basis); verified exact.
    Vec basis_coordinates(const Vec& d) const {
        if (!has_basis()) throw error("cover has no lattice isometry (assumption (A) data absent)");
        check_same_length(d, lat_y.canonical, "basis_coordinates");
        Vec coords(basis.size(), 0);
        Vec chk(lat_y.rank, 0);
        for (size_t i = 0; i < basis.size(); ++i) {
            Int s = lat_y.intersect(d, basis_class_[i]);
            coords[i] = (i == 0) ? s : -s;
            chk = vec_add(chk, vec_scale(coords[i], basis_class_[i]));
        }
        if (chk != d) throw error("basis_coordinates: class " + paren(d) + " not in basis span");
        return coords;
    }

    // Integral combination of branch classes equal to the given Y-class.
    std::optional<Vec> solve_branch_combination(const Vec& target) const {
        return branch_solver_.solve(target);
    }

  private:
    void finalize() {
        std::set<std::string> names;
        for (const auto& b : branches) {
            if (!names.insert(b.name).second) throw validation_error("duplicate component name " + b.name);
            check_same_length(b.psi, Vec(group.rank()), "psi");
            check_same_length(b.class_y, lat_y.canonical, "branch class");
            if (vec_is_zero(group.reduce(b.psi)))
                throw validation_error("branch component " + b.name + " has trivial Psi");
            Int n = group.element_order(group.reduce(b.psi));
            Int ng = 1;
            {
                // order of the G-projection
                Vec pg = group.embed_g(group.proj_g(group.reduce(b.psi)));
                ng = group.element_order(pg);
            }
            if (n != ng)
                throw validation_error("component " + b.name +
                                       ": order of Psi differs from order of its G-projection");
            orders_.push_back(n);
        }
        for (const auto& u : unram) {
            if (!names.insert(u.name).second) throw validation_error("duplicate component name " + u.name);
            check_same_length(u.class_y, lat_y.canonical, "unramified class");
        }
        for (size_t i = 0; i < branches.size(); ++i) branch_index_[branches[i].name] = i;
        for (size_t i = 0; i < unram.size(); ++i) unram_index_[unram[i].name] = i;

        scale_N_ = 1;
        for (Int n : orders_) scale_N_ = lcm_ll(scale_N_, n);

        std::vector<Vec> cls;
        for (const auto& b : branches) cls.push_back(b.class_y);
        branch_solver_ = ZSolver(cls);
        if (!branch_solver_.spans_unimodularly())
            throw validation_error("(A1) fails: branch classes do not generate Pic Y over Z");

        for (const auto& u : unram) {
            auto a = branch_solver_.solve(u.class_y);
            if (!a) throw validation_error("unramified class not in branch span: " + u.name);
            Vec coords(lat_y.rank, 0);
            for (size_t i = 0; i < branches.size(); ++i)
                coords = vec_add(coords, vec_scale((*a)[i] * orders_[i], branches[i].class_y));
            unram_coords_.push_back(std::move(coords));
        }

        if (!basis.empty()) {
            if (basis.size() != static_cast<size_t>(lat_y.rank))
                throw validation_error("basis size does not match lattice rank");
            for (auto& [bn, be] : basis) {
                for (const auto& [n, k] : be.branch) branch_index(n);
                for (const auto& [n, k] : be.unram) unram_index(n);
                basis_class_.push_back(multidegree(be));
            }
            // (A3): the pullback intersection arithmetic must produce the
            // unimodular form diag(1,-1,...,-1) on X, and the same shape on Y
            // so that multidegrees expand over the basis classes.
            for (size_t i = 0; i < basis.size(); ++i) {
                for (size_t j = 0; j < basis.size(); ++j) {
                    Int expect = (i != j) ? 0 : (i == 0 ? 1 : -1);
                    if (x_intersect(basis[i].second, basis[j].second) != expect)
                        throw validation_error("(A3) fails: basis Gram matrix is not diag(1,-1,...)");
                    if (lat_y.intersect(basis_class_[i], basis_class_[j]) != expect)
                        throw validation_error("basis classes are not orthonormal on Y");
                }
            }
            lat_x_ = PicLattice(lat_y.rank, vec_neg(lat_y.canonical));
        }
    }

    std::map<std::string, size_t> branch_index_, unram_index_;
    std::vector<Int> orders_;
    Int scale_N_ = 1;
    ZSolver branch_solver_;
    std::vector<Vec> unram_coords_;
    std::vector<Vec> basis_class_;
    PicLattice lat_x_;
    mutable std::optional<DivisorExprX> canonical_;
};

// Pardini's formula, uniformly over G~: the character sheaf L_chi of the
// cover A -> Y, d L_chi = sum_i chi(Psi(Delta_i)) Delta_i.
inline DivClass character_sheaf(const CoverData& cov, const Vec& chi_full) {
    Vec chi = cov.group.reduce(chi_full);
    Int N = 1;
    for (size_t i = 0; i < cov.branch_count(); ++i) N = lcm_ll(N, cov.inertia_order(i));
    Vec acc(cov.lat_y.rank, 0);
    for (size_t i = 0; i < cov.branch_count(); ++i) {
        Int n = cov.inertia_order(i);
        Int k = cov.group.char_eval(chi, cov.group.reduce(cov.branches[i].psi));
        acc = vec_add(acc, vec_scale(k * (N / n), cov.branches[i].class_y));
    }
    for (Int& x : acc) {
        if (posmod(x, N) != 0) throw error("character_sheaf: non-integral class, inconsistent cover data");
        x /= N;
    }
    return acc;
}

// Psi-image of the exceptional curve of a blowup at a point where the named
// components meet: Psi(E) = sum Psi(Delta_{i_j}).
inline Vec blowup_image(const CoverData& cov, const std::vector<std::string>& through) {
    Vec s = cov.group.zero();
    for (const auto& n : through) {
        if (cov.is_branch(n))
            s = cov.group.add(s, cov.group.reduce(cov.branches[cov.branch_index(n)].psi));
        else if (cov.is_unram(n))
            ;  // unramified curves have Psi = 0
        else
            throw error("unknown component: " + n);
    }
    return s;
}

// The pushforward theorem. Returns the classes M_chi on Y of
//   phi_* O_X(expr - tau) = (+)_{chi in G*} M_chi,
// indexed by chi in G* in lexicographic order. Arbitrary integer
// multiplicities are handled by the projection-formula split k = np + kbar.
inline std::vector<DivClass> pushforward(const CoverData& cov, const DivisorExprX& expr,
                                         const Vec& tau) {
    Vec tau_full = cov.group.embed_t(cov.group.reduce_t(tau));
    // projection twists and the reduced multiplicities
    Vec base(cov.lat_y.rank, 0);
    std::vector<std::pair<size_t, Int>> kbar;  // (branch index, kbar > 0)
    for (const auto& [name, k] : expr.branch) {
        size_t i = cov.branch_index(name);
        Int n = cov.inertia_order(i);
        Int p = floordiv(k, n);
        Int kb = k - p * n;
        if (p != 0) base = vec_add(base, vec_scale(p, cov.branches[i].class_y));
        if (kb != 0) kbar.push_back({i, kb});
    }
    for (const auto& [name, c] : expr.unram) {
        size_t u = cov.unram_index(name);
        base = vec_add(base, vec_scale(c, cov.unram[u].class_y));
    }
    std::vector<DivClass> out;
    for (const Vec& chi : cov.group.g_characters()) {
        Vec chi_full = cov.group.add(cov.group.embed_g(chi), tau_full);
        DivClass m = vec_sub(base, character_sheaf(cov, chi_full));
        for (const auto& [i, kb] : kbar) {
            Int n = cov.inertia_order(i);
            Int v = cov.group.char_eval(chi_full, cov.group.reduce(cov.branches[i].psi));
            if (v >= n - kb) m = vec_add(m, cov.branches[i].class_y);
        }
        out.push_back(std::move(m));
    }
    return out;
}

// Sum of h^0 over the pushforward summands: h^0(X, O(expr - tau)).
inline Int h0_expr(const CoverData& cov, const SurfaceY& y, const DivisorExprX& expr,
                   const Vec& tau) {
    Int s = 0;
    for (const auto& m : pushforward(cov, expr, tau)) s += h0_reduce(y, m);
    return s;
}

// Multidegree and torsion twist of the bundle of an expression: the
// multidegree is the expansion over the basis classes, and the torsion twist
// is the unique tau in T for which expr - (basis combination) - tau has a
// section (uniqueness per the h^0(tau) != 0 => tau = 0 lemma).
inline LineBundleX coordinates_of(const CoverData& cov, const SurfaceY& y,
                                  const DivisorExprX& expr) {
    Vec coords = cov.basis_coordinates(cov.multidegree(expr));
    DivisorExprX residual = expr;
    for (size_t i = 0; i < cov.basis.size(); ++i)
        residual = expr_scale_add(std::move(residual), -coords[i], cov.basis[i].second);
    std::optional<Vec> found;
    for (const Vec& t : cov.group.t_elements()) {
        if (h0_expr(cov, y, residual, t) > 0) {
            if (found) throw error("coordinates_of: torsion twist not unique for " + to_string(expr));
            found = t;
        }
    }
    if (!found) throw error("coordinates_of: no torsion twist with a section for " + to_string(expr));
    return {coords, *found};
}

// O_X(K_X) in coordinates. The multidegree is -K_Y under the (A3) isometry;
// both it and the torsion twist are recomputed from the canonical expression.
inline LineBundleX canonical_x(const CoverData& cov, const SurfaceY& y) {
    LineBundleX k = coordinates_of(cov, y, cov.canonical_expr());
    Vec expect = cov.basis_coordinates(vec_neg(cov.lat_y.canonical));
    if (k.deg != expect)
        throw error("canonical_x: multidegree of K_X is not -K_Y, cover data inconsistent");
    return k;
}

}  // namespace fdp
