#pragma once

// Cohomology of line bundles on X through the pushforward:
//   h^p(L (x) tau) = sum_{chi in G*} h^p(M_chi),
// acyclic sets A(d) = { tau : O(d) (x) tau acyclic } by both the semigroup
// route (effectivity of the h^0 and Serre-dual h^2 graded pieces) and the
// direct pushforward route, Ext-groups between line bundles
// (Ext^k(A,B) = H^k(B (x) A^{-1})) and the anticanonically extended
// Ext-table of a collection.

#include "effective.hpp"

namespace fdp {

// h^*(X, O(expr) (x) bundle(tau)^{-1}) -- the theorem's O(expr - tau).
inline CohomDims cohomology_expr(const CoverData& cov, const SurfaceY& y, const DivisorExprX& e,
                                 const Vec& tau) {
    CohomDims acc;
    for (const auto& m : pushforward(cov, e, tau)) {
        CohomDims c = cohomology_y(y, m);
        acc.h0 += c.h0;
        acc.h1 += c.h1;
        acc.h2 += c.h2;
    }
    return acc;
}

// h^*(X, O(d) (x) [t]).
inline CohomDims cohomology_x(const CoverData& cov, const SurfaceY& y, const LineBundleX& l) {
    return cohomology_expr(cov, y, cov.expr_of_multidegree(l.deg),
                           cov.group.neg_t(cov.group.reduce_t(l.tors)));
}

enum class AcyclicMethod { semigroup, pushforward, both };

// A(d) = { tau in T : O(d) (x) tau is acyclic }, sorted. Empty unless d is
// numerically acyclic. The semigroup route removes the torsion twists that
// make h^0 nonzero (the image of t on E_d) and, via Serre duality, those
// that make h^2 nonzero (tau_K - t(E_{K-d})).
inline std::vector<Vec> acyclic_set(const CoverData& cov, const SurfaceY& y, const EffSemigroup& s,
                                    const LineBundleX& canonical, const Vec& d,
                                    AcyclicMethod method = AcyclicMethod::semigroup) {
    if (cov.lat_x().euler_char(d) != 0) return {};
    auto semigroup = [&]() {
        std::vector<Vec> out;
        auto h0img = s.torsion_image(d);
        auto h2img = s.torsion_image(vec_sub(canonical.deg, d));
        std::vector<Vec> h2excl;
        for (const auto& t : h2img) h2excl.push_back(s.group.sub_t(canonical.tors, t));
        std::sort(h2excl.begin(), h2excl.end());
        for (const auto& t : cov.group.t_elements())
            if (!std::binary_search(h0img.begin(), h0img.end(), t) &&
                !std::binary_search(h2excl.begin(), h2excl.end(), t))
                out.push_back(t);
        return out;
    };
    auto pushfwd = [&]() {
        std::vector<Vec> out;
        for (const auto& t : cov.group.t_elements())
            if (cohomology_x(cov, y, {d, t}).is_zero()) out.push_back(t);
        return out;
    };
    switch (method) {
        case AcyclicMethod::semigroup: return semigroup();
        case AcyclicMethod::pushforward: return pushfwd();
        case AcyclicMethod::both: {
            auto a = semigroup(), b = pushfwd();
            if (a != b)
                throw error("acyclic_set methods disagree for multidegree " + paren(d));
            return a;
        }
    }
    throw error("bad method");
}

// Ext^k(A, B) = H^k(X, B (x) A^{-1}) for line bundles.
inline CohomDims ext_groups(const CoverData& cov, const SurfaceY& y, const LineBundleX& a,
                            const LineBundleX& b) {
    return cohomology_x(cov, y, {vec_sub(b.deg, a.deg), cov.group.sub_t(b.tors, a.tors)});
}

// Ext-table over the anticanonical extension E_{n+i} = E_i(-K_X).
struct ExtTable {
    size_t n = 0;  // collection length; table is (2n) x (2n)
    std::vector<CohomDims> entries;

    const CohomDims& at(size_t i, size_t j) const { return entries[i * 2 * n + j]; }
    CohomDims& at(size_t i, size_t j) { return entries[i * 2 * n + j]; }
    bool in_extension(size_t i, size_t j) const { return j >= n; }  // below the zigzag
};

inline ExtTable ext_table(const CoverData& cov, const SurfaceY& y,
                          const std::vector<LineBundleX>& e, const LineBundleX& canonical) {
    ExtTable t;
    t.n = e.size();
    std::vector<LineBundleX> ext = e;
    for (const auto& b : e)
        ext.push_back({vec_sub(b.deg, canonical.deg), cov.group.sub_t(b.tors, canonical.tors)});
    t.entries.resize(4 * t.n * t.n);
    for (size_t i = 0; i < 2 * t.n; ++i)
        for (size_t j = 0; j < 2 * t.n; ++j) t.at(i, j) = ext_groups(cov, y, ext[i], ext[j]);
    return t;
}

}  // namespace fdp
