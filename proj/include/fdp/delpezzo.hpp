#pragma once

// Cohomology of divisor classes on a (weak) del Pezzo surface Y.
//
// h^0 is computed by negative-curve reduction: while some irreducible
// negative curve C has D.C < 0, C lies in the base locus and h^0(D) =
// h^0(D-C); once no curve violates, D is nef and h^0 = chi(D) by
// Kawamata-Viehweg vanishing. h^2 goes through Serre duality, h^1 through
// Riemann-Roch. All exact integer arithmetic.

#include "lattice.hpp"

namespace fdp {

struct CohomDims {
    Int h0 = 0, h1 = 0, h2 = 0;
    bool operator==(const CohomDims&) const = default;
    bool is_zero() const { return h0 == 0 && h1 == 0 && h2 == 0; }
    Int euler() const { return h0 - h1 + h2; }
};

inline std::string to_string(const CohomDims& c) {
    return paren({c.h0, c.h1, c.h2});
}

struct SurfaceY {
    PicLattice lat;
    std::vector<DivClass> neg_curves;  // sorted; irreducible classes with c^2 in {-1,-2}
    DivClass ample;

    SurfaceY() = default;
    SurfaceY(PicLattice l, std::vector<DivClass> curves, DivClass amp)
        : lat(std::move(l)), neg_curves(std::move(curves)), ample(std::move(amp)) {
        std::sort(neg_curves.begin(), neg_curves.end());
        for (const auto& c : neg_curves) {
            Int c2 = lat.intersect(c, c);
            Int ck = lat.intersect(c, lat.canonical);
            if (!((c2 == -1 && ck == -1) || (c2 == -2 && ck == 0)))
                throw validation_error("neg curve is neither a (-1)- nor a (-2)-class: " + paren(c));
            if (lat.intersect(ample, c) < 1)
                throw validation_error("ample class not positive on " + paren(c));
        }
        if (lat.intersect(ample, ample) <= 0)
            throw validation_error("ample class has non-positive self-intersection");
    }
};

// Irreducible negative curves of the weak del Pezzo determined by the
// declared effective (-2)-classes: those roots together with every
// (-1)-class pairing >= 0 with each of them.
inline std::vector<DivClass> negative_curves(const PicLattice& lat,
                                             const std::vector<DivClass>& effective_roots) {
    for (const auto& r : effective_roots) {
        if (!lat.is_root(r)) throw validation_error("declared effective root is not a root: " + paren(r));
        for (const auto& s : effective_roots)
            if (vec_is_zero(vec_add(r, s)))
                throw validation_error("effective roots contain both alpha and -alpha");
    }
    std::vector<DivClass> out = effective_roots;
    // (-1)-classes: c^2 = -1, c.K = -1; |c_0| <= 3 and sum_{i>=1} c_i^2 = c_0^2 + 1.
    DivClass c(lat.rank, 0);
    std::vector<DivClass> minus_one;
    struct Rec {
        const PicLattice& lat;
        std::vector<DivClass>& out;
        void go(DivClass& c, int pos, Int budget) {
            if (pos == lat.rank) {
                if (budget == 0 && lat.intersect(c, lat.canonical) == -1) out.push_back(c);
                return;
            }
            Int cap = 0;
            while ((cap + 1) * (cap + 1) <= budget) ++cap;
            for (Int v = -cap; v <= cap; ++v) {
                c[pos] = v;
                go(c, pos + 1, budget - v * v);
            }
            c[pos] = 0;
        }
    } rec{lat, minus_one};
    for (Int c0 = -3; c0 <= 3; ++c0) {
        c[0] = c0;
        rec.go(c, 1, c0 * c0 + 1);
    }
    for (const auto& m : minus_one) {
        bool ok = true;
        for (const auto& r : effective_roots)
            if (lat.intersect(m, r) < 0) { ok = false; break; }
        if (ok) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// h^0 by reduction. `order` optionally permutes the curve-selection
// priority; h^0 is selection-independent (tested), the default is the
// lexicographically first violating curve.
inline Int h0_reduce(const SurfaceY& y, DivClass d, const std::vector<size_t>* order = nullptr) {
    const Int start = y.lat.intersect(y.ample, d);
    Int guard = start + 2;
    while (true) {
        if (y.lat.intersect(y.ample, d) < 0) return 0;
        const DivClass* pick = nullptr;
        if (order) {
            for (size_t idx : *order)
                if (y.lat.intersect(d, y.neg_curves[idx]) < 0) { pick = &y.neg_curves[idx]; break; }
        } else {
            for (const auto& ccur : y.neg_curves)
                if (y.lat.intersect(d, ccur) < 0) { pick = &ccur; break; }
        }
        if (!pick) return y.lat.euler_char(d);  // nef now
        d = vec_sub(d, *pick);
        if (--guard < 0) throw error("h0_reduce failed to terminate; bad surface data");
    }
}

inline CohomDims cohomology_y(const SurfaceY& y, const DivClass& d) {
    CohomDims r;
    r.h0 = h0_reduce(y, d);
    r.h2 = h0_reduce(y, vec_sub(y.lat.canonical, d));
    r.h1 = r.h0 + r.h2 - y.lat.euler_char(d);
    if (r.h1 < 0)
        throw error("cohomology_y: negative h1 for " + paren(d) + ", vanishing assumption violated");
    return r;
}

}  // namespace fdp
