#pragma once

// The semigroup E of effective divisors on X, generated by the reduced
// pullbacks of branch components plus pullbacks of the remaining negative
// curves on Y. Graded pieces are enumerated exhaustively (bounded by the
// declared ample functional), the torsion homomorphism t is evaluated on
// them, and effectivity of a bundle is decided either through t or through
// h^0 of the pushforward. The dual cone P = {D : D.g >= 0 for all
// generators} is computed by the double description method in exact integer
// arithmetic.

#include "cover.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>

namespace fdp {

struct EffGenerator {
    std::string name;
    DivisorExprX expr;
    LineBundleX bundle;  // multidegree + torsion twist under t
};

class EffSemigroup {
  public:
    std::vector<EffGenerator> gens;
    Vec ample;
    PicLattice lat;    // X-coordinate lattice (same form as Y)
    FinAbGroup group;  // for torsion arithmetic

    EffSemigroup() = default;
    EffSemigroup(std::vector<EffGenerator> g, Vec amp, PicLattice l, FinAbGroup grp)
        : gens(std::move(g)),
          ample(std::move(amp)),
          lat(std::move(l)),
          group(std::move(grp)),
          cache_(std::make_unique<Cache>()) {
        for (const auto& gen : gens) {
            if (vec_is_zero(gen.bundle.deg))
                throw validation_error("effective generator with zero multidegree: " + gen.name);
            if (lat.intersect(ample, gen.bundle.deg) < 1)
                throw validation_error("ample functional not positive on generator " + gen.name);
        }
    }

    Int ample_degree(const Vec& d) const { return lat.intersect(ample, d); }

    // All nonnegative integer coefficient vectors c with
    // sum c_i gen_i.deg = d; coefficients bounded by the ample degree.
    std::vector<Vec> decompositions(const Vec& d) const {
        std::vector<Vec> out;
        if (ample_degree(d) < 0) return out;
        Vec c(gens.size(), 0);
        Vec rem = d;
        search(0, c, rem, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    // { sum c_i t(gen_i) : c a decomposition of d }, sorted without repeats.
    std::vector<Vec> torsion_image(const Vec& d) const {
        {
            std::shared_lock lk(cache_->mtx);
            auto it = cache_->map.find(d);
            if (it != cache_->map.end()) return it->second;
        }
        std::vector<Vec> ts;
        for (const auto& c : decompositions(d)) {
            Vec t = group.zero_t();
            for (size_t i = 0; i < gens.size(); ++i)
                if (c[i] != 0)
                    t = group.add_t(t, group.reduce_t(vec_scale(c[i], gens[i].bundle.tors)));
            ts.push_back(std::move(t));
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        std::unique_lock lk(cache_->mtx);
        return cache_->map.emplace(d, std::move(ts)).first->second;
    }

  private:
    void search(size_t i, Vec& c, Vec& rem, std::vector<Vec>& out) const {
        if (i == gens.size()) {
            if (vec_is_zero(rem)) out.push_back(c);
            return;
        }
        const Vec& g = gens[i].bundle.deg;
        Int w = lat.intersect(ample, g);
        Int budget = lat.intersect(ample, rem);
        for (Int k = 0; k * w <= budget; ++k) {
            if (k > 0) rem = vec_sub(rem, g);
            c[i] = k;
            search(i + 1, c, rem, out);
        }
        if (c[i] > 0) rem = vec_add(rem, vec_scale(c[i], g));
        c[i] = 0;
    }

    struct Cache {
        std::map<Vec, std::vector<Vec>> map;
        std::shared_mutex mtx;
    };
    mutable std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

enum class EffMode { semigroup, pushforward, both };

// Effectivity of O(d) (x) [t]: semigroup mode tests t against the torsion
// image of the graded piece E_d; pushforward mode tests sum h^0(M_chi) > 0.
inline bool is_effective_x(const EffSemigroup& s, const CoverData& cov, const SurfaceY& y,
                           const LineBundleX& l, EffMode mode = EffMode::semigroup) {
    auto semi = [&]() {
        auto img = s.torsion_image(l.deg);
        Vec t = s.group.reduce_t(l.tors);
        return std::binary_search(img.begin(), img.end(), t);
    };
    auto push = [&]() {
        DivisorExprX e = cov.expr_of_multidegree(l.deg);
        return h0_expr(cov, y, e, s.group.neg_t(l.tors)) > 0;
    };
    switch (mode) {
        case EffMode::semigroup: return semi();
        case EffMode::pushforward: return push();
        case EffMode::both: {
            bool a = semi(), b = push();
            if (a != b)
                throw error("effectivity methods disagree on " + to_string(l) + ": semigroup=" +
                            std::to_string(a) + " pushforward=" + std::to_string(b));
            return a;
        }
    }
    throw error("bad mode");
}

struct ConeRays {
    std::vector<Vec> rays;  // primitive, sorted
};

// Double description (Fukuda-Prodon): maintain minimal generators (rays R,
// lineality L) of {x : a_j.x >= 0, j processed}. Adjacency of rays is decided
// combinatorially from the sets of tight constraints.
class DoubleDescription {
  public:
    explicit DoubleDescription(int dim) {
        for (int i = 0; i < dim; ++i) {
            Vec e(dim, 0);
            e[i] = 1;
            lineality_.push_back(e);
        }
    }

    void add_halfspace(const Vec& a) {
        size_t bit = nconstraints_++;
        if (nconstraints_ > 64) throw error("double description limited to 64 constraints");
        size_t piv = SIZE_MAX;
        for (size_t i = 0; i < lineality_.size(); ++i)
            if (dot(a, lineality_[i]) != 0) { piv = i; break; }
        if (piv != SIZE_MAX) {
            // constraint cuts the lineality space: one basis vector becomes a ray
            Vec l0 = lineality_[piv];
            Int al0 = dot(a, l0);
            if (al0 < 0) { l0 = vec_neg(l0); al0 = -al0; }
            std::vector<Vec> nl;
            for (size_t i = 0; i < lineality_.size(); ++i) {
                if (i == piv) continue;
                Int ali = dot(a, lineality_[i]);
                nl.push_back(primitive(vec_sub(vec_scale(al0, lineality_[i]), vec_scale(ali, l0))));
            }
            lineality_ = std::move(nl);
            for (auto& r : rays_) {
                Int ar = dot(a, r.v);
                if (ar != 0) r.v = primitive(vec_sub(vec_scale(al0, r.v), vec_scale(ar, l0)));
                r.tight |= (uint64_t{1} << bit);
            }
            rays_.push_back({primitive(l0), low_bits(bit)});
            dedupe();
            return;
        }
        std::vector<Ray> plus, zero, minus;
        for (auto& r : rays_) {
            Int ar = dot(a, r.v);
            if (ar > 0) plus.push_back(r);
            else if (ar < 0) minus.push_back(r);
            else {
                Ray z = r;
                z.tight |= (uint64_t{1} << bit);
                zero.push_back(z);
            }
        }
        std::vector<Ray> next = plus;
        next.insert(next.end(), zero.begin(), zero.end());
        for (const auto& p : plus) {
            for (const auto& m : minus) {
                if (!adjacent(p, m)) continue;
                Int ap = dot(a, p.v), am = dot(a, m.v);
                Vec nv = primitive(vec_sub(vec_scale(ap, m.v), vec_scale(am, p.v)));
                next.push_back({nv, (p.tight & m.tight) | (uint64_t{1} << bit)});
            }
        }
        rays_ = std::move(next);
        dedupe();
    }

    bool pointed() const { return lineality_.empty(); }

    std::vector<Vec> rays() const {
        std::vector<Vec> out;
        for (const auto& r : rays_) out.push_back(r.v);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

  private:
    struct Ray {
        Vec v;
        uint64_t tight = 0;  // processed constraints vanishing on the ray
    };

    static Int dot(const Vec& a, const Vec& b) {
        Int s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }

    static uint64_t low_bits(size_t bit) { return bit == 0 ? 0 : ((uint64_t{1} << bit) - 1); }

    bool adjacent(const Ray& p, const Ray& m) const {
        uint64_t z = p.tight & m.tight;
        for (const auto& r : rays_) {
            if (r.v == p.v || r.v == m.v) continue;
            if ((z & ~r.tight) == 0) return false;
        }
        return true;
    }

    void dedupe() {
        std::sort(rays_.begin(), rays_.end(),
                  [](const Ray& a, const Ray& b) { return a.v < b.v; });
        rays_.erase(std::unique(rays_.begin(), rays_.end(),
                                [](const Ray& a, const Ray& b) { return a.v == b.v; }),
                    rays_.end());
    }

    size_t nconstraints_ = 0;
    std::vector<Vec> lineality_;
    std::vector<Ray> rays_;
};

// Primitive extreme rays of {D : D.g >= 0 for every generator g}, where the
// pairing is the lattice intersection form. Generators are inserted in
// lexicographic order of their classes; rays are normalized to positive
// ample pairing and returned sorted.
inline ConeRays cone_extreme_rays(const EffSemigroup& s) {
    int n = s.lat.rank;
    // halfspace normals for the euclidean dot: g' = (g0, -g1, ..., -gn)
    std::vector<Vec> normals;
    for (const auto& g : s.gens) {
        Vec v = g.bundle.deg;
        for (int i = 1; i < n; ++i) v[i] = -v[i];
        normals.push_back(std::move(v));
    }
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    DoubleDescription dd(n);
    for (const auto& a : normals) dd.add_halfspace(a);
    if (!dd.pointed())
        throw error("cone_extreme_rays: generator set is degenerate (cone has lineality)");
    ConeRays out;
    for (auto& r : dd.rays()) {
        if (s.lat.intersect(s.ample, r) < 0) r = vec_neg(r);
        out.rays.push_back(r);
    }
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

}  // namespace fdp
