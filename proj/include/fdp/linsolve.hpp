#pragma once

// Exact integer linear solver over Z: given generators g_1..g_m in Z^n,
// decide whether a target t is an integral combination sum x_i g_i and
// produce one such x. Row echelon form via extended-gcd row operations
// (unimodular), with the combination of original generators tracked
// alongside each row.

#include "vec.hpp"

#include <optional>

namespace fdp {

class ZSolver {
  public:
    ZSolver() = default;

    explicit ZSolver(const std::vector<Vec>& gens) {
        if (gens.empty()) return;
        m_ = gens.size();
        n_ = gens[0].size();
        std::vector<Row> rows;
        for (size_t i = 0; i < gens.size(); ++i) {
            check_same_length(gens[i], gens[0], "ZSolver generators");
            Vec combo(gens.size(), 0);
            combo[i] = 1;
            rows.push_back({gens[i], std::move(combo)});
        }
        for (size_t col = 0; col < n_; ++col) {
            size_t pivot = SIZE_MAX;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].v[col] == 0) continue;
                if (pivot == SIZE_MAX) { pivot = i; continue; }
                gcd_combine(rows[pivot], rows[i], col);
            }
            if (pivot == SIZE_MAX) continue;
            if (rows[pivot].v[col] < 0) {
                rows[pivot].v = vec_neg(rows[pivot].v);
                rows[pivot].combo = vec_neg(rows[pivot].combo);
            }
            echelon_.push_back({col, rows[pivot]});
            rows.erase(rows.begin() + pivot);
        }
    }

    // Span equals all of Z^n iff every pivot is 1 and there are n pivots.
    bool spans_unimodularly() const {
        if (echelon_.size() != n_) return false;
        for (const auto& [col, row] : echelon_)
            if (row.v[col] != 1) return false;
        return true;
    }

    std::optional<Vec> solve(const Vec& target) const {
        if (target.size() != n_) throw error("ZSolver: target length mismatch");
        Vec t = target;
        Vec x(m_, 0);
        for (const auto& [col, row] : echelon_) {
            if (t[col] == 0) continue;
            if (posmod(t[col], row.v[col]) != 0) return std::nullopt;
            Int q = t[col] / row.v[col];
            t = vec_sub(t, vec_scale(q, row.v));
            x = vec_add(x, vec_scale(q, row.combo));
        }
        if (!vec_is_zero(t)) return std::nullopt;
        return x;
    }

  private:
    struct Row {
        Vec v, combo;
    };

    // Replace (a, b) by (u a + w b, (-b_c/g) a + (a_c/g) b) so the second
    // row vanishes in column `col`; the transformation is unimodular.
    static void gcd_combine(Row& a, Row& b, size_t col) {
        Int x = a.v[col], y = b.v[col];
        Int u, w;
        Int g = ext_gcd(x, y, u, w);
        Vec nv = vec_add(vec_scale(u, a.v), vec_scale(w, b.v));
        Vec nc = vec_add(vec_scale(u, a.combo), vec_scale(w, b.combo));
        Vec mv = vec_add(vec_scale(-y / g, a.v), vec_scale(x / g, b.v));
        Vec mc = vec_add(vec_scale(-y / g, a.combo), vec_scale(x / g, b.combo));
        a = {std::move(nv), std::move(nc)};
        b = {std::move(mv), std::move(mc)};
    }

    static Int ext_gcd(Int a, Int b, Int& u, Int& v) {
        if (b == 0) {
            u = (a < 0) ? -1 : 1;
            v = 0;
            return a < 0 ? -a : a;
        }
        Int u1, v1;
        Int g = ext_gcd(b, posmod(a, b), u1, v1);
        u = v1;
        v = u1 - floordiv(a, b) * v1;
        return g;
    }

    size_t m_ = 0, n_ = 0;
    std::vector<std::pair<size_t, Row>> echelon_;
};

}  // namespace fdp
