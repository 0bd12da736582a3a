#pragma once

// Exceptional collections of line bundles: numerical lifts from Y, the
// exhaustive search for torsion twists satisfying the acyclicity
// conditions
//   -tau_i in A(L_i^{-1}),   tau_i - tau_j in A(L_j^{-1} (x) L_i)  (i < j),
// the dihedral and Weyl group actions, the pseudoheight with its witness
// chains, and the formality-by-degree check on an Ext-table.

#include "cohom.hpp"
#include "parallel.hpp"

#include <set>

namespace fdp {

using NumericalCollection = std::vector<DivClass>;      // classes on Y
using TwistedCollection = std::vector<LineBundleX>;     // bundles[0] = O_X

// L_i = f(Lambda_i)^{-1}: negate coordinates under the (A3) isometry.
inline std::vector<DivClass> lift_numerical(const CoverData& cov, const NumericalCollection& nc) {
    std::vector<DivClass> out;
    for (const auto& c : nc) {
        check_same_length(c, cov.lat_y.canonical, "numerical collection class");
        out.push_back(vec_neg(c));
    }
    return out;
}

// chi(E_j, E_i) = 0 for i < j, i.e. chi_X(L_i - L_j) = 0.
inline bool numerically_exceptional(const PicLattice& lat_x, const std::vector<DivClass>& l) {
    for (size_t i = 0; i < l.size(); ++i)
        for (size_t j = i + 1; j < l.size(); ++j)
            if (lat_x.euler_char(vec_sub(l[i], l[j])) != 0) return false;
    return true;
}

// All twist tuples (tau_1, ..., tau_n) making L_0 = O, L_i (x) tau_i an
// exceptional collection, by depth-first search with pairwise pruning over
// precomputed acyclic sets. Tuples are returned sorted.
inline std::vector<std::vector<Vec>> enumerate_twists(const CoverData& cov, const SurfaceY& y,
                                                      const EffSemigroup& s,
                                                      const LineBundleX& canonical,
                                                      const std::vector<DivClass>& lifted,
                                                      int jobs = 1) {
    if (lifted.empty() || !vec_is_zero(lifted[0]))
        throw error("enumerate_twists: collection must start with O_X (zero class)");
    if (!numerically_exceptional(cov.lat_x(), lifted))
        throw error("enumerate_twists: collection is not numerically exceptional");
    const size_t n = lifted.size() - 1;
    const auto telems = cov.group.t_elements();
    const size_t tn = telems.size();
    std::map<Vec, size_t> tidx;
    for (size_t i = 0; i < tn; ++i) tidx[telems[i]] = i;
    std::vector<std::vector<size_t>> sub(tn, std::vector<size_t>(tn));
    for (size_t a = 0; a < tn; ++a)
        for (size_t b = 0; b < tn; ++b)
            sub[a][b] = tidx.at(cov.group.sub_t(telems[a], telems[b]));

    // acyc[i][j] over T indices, for 0 <= i < j <= n: A(L_i - L_j)
    std::vector<std::vector<std::vector<char>>> acyc(n + 1,
                                                     std::vector<std::vector<char>>(n + 1));
    for (size_t i = 0; i <= n; ++i) {
        for (size_t j = i + 1; j <= n; ++j) {
            auto a = acyclic_set(cov, y, s, canonical, vec_sub(lifted[i], lifted[j]));
            std::vector<char> mark(tn, 0);
            for (const auto& t : a) mark[tidx.at(t)] = 1;
            acyc[i][j] = std::move(mark);
        }
    }

    const size_t zero_idx = tidx.at(cov.group.zero_t());
    std::vector<std::vector<std::vector<size_t>>> results(tn);
    parallel_for(tn, jobs, [&](size_t first) {
        if (n == 0) return;
        if (!acyc[0][1][sub[zero_idx][first]]) return;
        std::vector<size_t> cur(n + 1, zero_idx);
        cur[1] = first;
        auto& mine = results[first];
        auto rec = [&](auto&& self, size_t depth) -> void {
            if (depth == n + 1) {
                mine.push_back(std::vector<size_t>(cur.begin() + 1, cur.end()));
                return;
            }
            for (size_t t = 0; t < tn; ++t) {
                bool ok = true;
                for (size_t i = 0; i < depth && ok; ++i) ok = acyc[i][depth][sub[cur[i]][t]];
                if (!ok) continue;
                cur[depth] = t;
                self(self, depth + 1);
            }
        };
        rec(rec, 2);
    });
    std::vector<std::vector<Vec>> out;
    for (const auto& bucket : results)
        for (const auto& tup : bucket) {
            std::vector<Vec> v;
            for (size_t idx : tup) v.push_back(telems[idx]);
            out.push_back(std::move(v));
        }
    std::sort(out.begin(), out.end());
    return out;
}

enum class DihedralOp { rotate, invert };

// The dihedral action on normalized exceptional collections:
//   rotate: (E_1, ..., E_{n-1}, E_0(-K_X)), renormalized to start at O;
//   invert: (E_{n-1}^{-1}, ..., E_0^{-1}), renormalized.
inline TwistedCollection dihedral_act(const CoverData& cov, const LineBundleX& canonical,
                                      const TwistedCollection& e, DihedralOp op) {
    if (e.empty() || !vec_is_zero(e[0].deg) || !vec_is_zero(cov.group.reduce_t(e[0].tors)))
        throw error("dihedral_act: collection must be normalized with E_0 = O_X");
    const size_t n = e.size();
    TwistedCollection f;
    if (op == DihedralOp::rotate) {
        for (size_t i = 1; i < n; ++i) f.push_back(e[i]);
        f.push_back({vec_sub(e[0].deg, canonical.deg), cov.group.sub_t(e[0].tors, canonical.tors)});
    } else {
        for (size_t i = 0; i < n; ++i)
            f.push_back({vec_neg(e[n - 1 - i].deg), cov.group.neg_t(e[n - 1 - i].tors)});
    }
    LineBundleX base = f[0];
    for (auto& b : f) b = {vec_sub(b.deg, base.deg), cov.group.sub_t(b.tors, base.tors)};
    return f;
}

// Closure of {Lambda} under componentwise reflection at every root.
inline std::vector<NumericalCollection> weyl_orbit(const PicLattice& lat,
                                                   const NumericalCollection& nc,
                                                   size_t cap = 1000000) {
    auto roots = lat.roots();
    std::set<NumericalCollection> seen;
    std::vector<NumericalCollection> queue{nc};
    seen.insert(nc);
    while (!queue.empty()) {
        NumericalCollection cur = std::move(queue.back());
        queue.pop_back();
        for (const auto& alpha : roots) {
            NumericalCollection img;
            for (const auto& c : cur) img.push_back(lat.reflect(alpha, c));
            if (seen.insert(img).second) {
                if (seen.size() > cap) throw error("weyl_orbit exceeds cap; unexpected lattice input");
                queue.push_back(std::move(img));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

constexpr Int kNoExt = -1;  // e(F,F') when every Ext group vanishes

struct PseudoheightResult {
    Int ph = 0;
    std::vector<std::vector<size_t>> witnesses;  // minimizing chains, sorted
    std::vector<std::vector<Int>> e;             // e-matrix over the extended sequence
    bool numeric_bound_holds = false;            // E_i.K >= E_j.K for i < j implies ph >= 3
};

// ph(E) = min over chains a_0 < ... < a_p of
//   e(E_{a_0},E_{a_1}) + ... + e(E_{a_p}, E_{a_0}(-K_X)) - p + 2.
inline PseudoheightResult pseudoheight(const CoverData& cov, const SurfaceY& y,
                                       const TwistedCollection& coll,
                                       const LineBundleX& canonical) {
    const size_t n = coll.size();
    ExtTable t = ext_table(cov, y, coll, canonical);
    auto e_of = [](const CohomDims& c) -> Int {
        if (c.h0 > 0) return 0;
        if (c.h1 > 0) return 1;
        if (c.h2 > 0) return 2;
        return kNoExt;
    };
    PseudoheightResult r;
    r.e.assign(2 * n, std::vector<Int>(2 * n, kNoExt));
    for (size_t i = 0; i < 2 * n; ++i)
        for (size_t j = 0; j < 2 * n; ++j) r.e[i][j] = e_of(t.at(i, j));

    Int best = -1;
    std::vector<std::vector<size_t>> chains;
    for (uint64_t massk = 1; massk < (uint64_t{1} << n); ++massk) {
        std::vector<size_t> chain;
        for (size_t i = 0; i < n; ++i)
            if (massk & (uint64_t{1} << i)) chain.push_back(i);
        Int total = 0;
        bool ok = true;
        for (size_t k = 0; k + 1 < chain.size() && ok; ++k) {
            Int v = r.e[chain[k]][chain[k + 1]];
            if (v == kNoExt) ok = false;
            else total += v;
        }
        if (ok) {
            Int v = r.e[chain.back()][chain.front() + n];
            if (v == kNoExt) ok = false;
            else total += v;
        }
        if (!ok) continue;
        total += -static_cast<Int>(chain.size() - 1) + 2;
        if (best < 0 || total < best) {
            best = total;
            chains.clear();
        }
        if (total == best) chains.push_back(chain);
    }
    r.ph = best;
    std::sort(chains.begin(), chains.end());
    r.witnesses = std::move(chains);

    r.numeric_bound_holds = true;
    std::vector<Int> dk;
    const auto& lat = cov.lat_x();
    for (size_t i = 0; i < n; ++i) dk.push_back(lat.intersect(coll[i].deg, lat.canonical));
    for (size_t i = 0; i < n; ++i)
        dk.push_back(lat.intersect(vec_sub(coll[i].deg, canonical.deg), lat.canonical));
    for (size_t i = 0; i + 1 < dk.size(); ++i)
        if (dk[i] < dk[i + 1]) r.numeric_bound_holds = false;
    return r;
}

struct FormalityResult {
    bool formal = false;
    // composable nonzero Ext^1 arrows (i->j, j->k) blocking the degree argument
    std::vector<std::pair<std::pair<size_t, size_t>, std::pair<size_t, size_t>>> ext1_pairs;
    // nonzero off-diagonal Hom groups within the collection
    std::vector<std::pair<size_t, size_t>> hom_witnesses;
};

// Sufficient condition for formality of the A_infinity algebra of the
// collection: no off-diagonal degree-0 morphisms and no composable pair of
// nonzero Ext^1 arrows; every higher product then vanishes for degree
// reasons. `false` means "not decided by the degree argument".
inline FormalityResult formality_check(const ExtTable& t) {
    FormalityResult r;
    const size_t n = t.n;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && t.at(i, j).h0 > 0) r.hom_witnesses.push_back({i, j});
    std::vector<std::pair<size_t, size_t>> arrows;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && t.at(i, j).h1 > 0) arrows.push_back({i, j});
    for (const auto& a : arrows)
        for (const auto& b : arrows)
            if (a.second == b.first) r.ext1_pairs.push_back({a, b});
    r.formal = r.hom_witnesses.empty() && r.ext1_pairs.empty();
    return r;
}

}  // namespace fdp
