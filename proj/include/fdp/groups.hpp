#pragma once

// Finite abelian groups presented as products of cyclic groups, with a
// positional split G~ = G (+) T: the first g_rank cyclic factors form the
// Galois group G of the cover X -> Y, the rest form the torsion block T.
// Elements and characters share the coefficient-vector representation;
// the pairing is the diagonal one, chi(g) = exp(2*pi*i * sum chi_j g_j / n_j).

#include "vec.hpp"

namespace fdp {

struct FinAbGroup {
    std::vector<Int> orders;
    int g_rank = 0;

    FinAbGroup() = default;
    FinAbGroup(std::vector<Int> ord, int split) : orders(std::move(ord)), g_rank(split) {
        for (Int n : orders)
            if (n < 2) throw validation_error("group order must be >= 2");
        if (g_rank < 0 || static_cast<size_t>(g_rank) > orders.size())
            throw validation_error("g_rank out of range");
    }

    size_t rank() const { return orders.size(); }
    size_t t_rank() const { return orders.size() - static_cast<size_t>(g_rank); }

    Int exponent() const {
        Int e = 1;
        for (Int n : orders) e = lcm_ll(e, n);
        return e;
    }

    Int g_size() const {
        Int s = 1;
        for (int i = 0; i < g_rank; ++i) s *= orders[i];
        return s;
    }

    Int t_size() const {
        Int s = 1;
        for (size_t i = g_rank; i < orders.size(); ++i) s *= orders[i];
        return s;
    }

    Vec zero() const { return Vec(rank(), 0); }
    Vec zero_t() const { return Vec(t_rank(), 0); }

    Vec reduce(Vec a) const {
        check_same_length(a, Vec(rank()), "group element");
        for (size_t i = 0; i < a.size(); ++i) a[i] = posmod(a[i], orders[i]);
        return a;
    }

    Vec add(const Vec& a, const Vec& b) const { return reduce(vec_add(a, b)); }
    Vec sub(const Vec& a, const Vec& b) const { return reduce(vec_sub(a, b)); }
    Vec neg(const Vec& a) const { return reduce(vec_neg(a)); }

    // T-block arithmetic on short vectors of length t_rank().
    Vec reduce_t(Vec a) const {
        if (a.size() != t_rank()) throw error("length mismatch in torsion element");
        for (size_t i = 0; i < a.size(); ++i) a[i] = posmod(a[i], orders[g_rank + i]);
        return a;
    }
    Vec add_t(const Vec& a, const Vec& b) const { return reduce_t(vec_add(a, b)); }
    Vec sub_t(const Vec& a, const Vec& b) const { return reduce_t(vec_sub(a, b)); }
    Vec neg_t(const Vec& a) const { return reduce_t(vec_neg(a)); }

    Vec embed_g(const Vec& a) const {
        if (a.size() != static_cast<size_t>(g_rank)) throw error("length mismatch in embed_g");
        Vec r = zero();
        std::copy(a.begin(), a.end(), r.begin());
        return reduce(std::move(r));
    }

    Vec embed_t(const Vec& a) const {
        if (a.size() != t_rank()) throw error("length mismatch in embed_t");
        Vec r = zero();
        std::copy(a.begin(), a.end(), r.begin() + g_rank);
        return reduce(std::move(r));
    }

    Vec proj_g(const Vec& a) const {
        check_same_length(a, Vec(rank()), "proj_g");
        return Vec(a.begin(), a.begin() + g_rank);
    }

    Vec proj_t(const Vec& a) const {
        check_same_length(a, Vec(rank()), "proj_t");
        return Vec(a.begin() + g_rank, a.end());
    }

    // All tuples over the given cyclic orders, in lexicographic order.
    static std::vector<Vec> tuples(const std::vector<Int>& ords) {
        std::vector<Vec> out;
        Vec cur(ords.size(), 0);
        while (true) {
            out.push_back(cur);
            size_t i = ords.size();
            while (i > 0) {
                --i;
                if (++cur[i] < ords[i]) break;
                cur[i] = 0;
                if (i == 0) return out;
            }
            if (ords.empty()) return out;
        }
    }

    // Characters of G (length g_rank), lexicographic.
    std::vector<Vec> g_characters() const {
        return tuples(std::vector<Int>(orders.begin(), orders.begin() + g_rank));
    }

    // Elements of the torsion block T (length t_rank), lexicographic.
    std::vector<Vec> t_elements() const {
        return tuples(std::vector<Int>(orders.begin() + g_rank, orders.end()));
    }

    Int element_order(const Vec& x) const {
        check_same_length(x, Vec(rank()), "element_order");
        Int m = 1;
        for (size_t i = 0; i < x.size(); ++i) {
            Int c = posmod(x[i], orders[i]);
            m = lcm_ll(m, orders[i] / gcd_ll(orders[i], c == 0 ? orders[i] : c));
        }
        return m;
    }

    // chi(g) = exp(2*pi*i*k/n) with n = ord(g); returns k in [0, n-1].
    // This single normalization realizes both the rescaled chi o Phi of the
    // character-sheaf formula and the S-set test of the pushforward theorem.
    Int char_eval(const Vec& chi, const Vec& g) const {
        check_same_length(chi, g, "char_eval");
        check_same_length(chi, Vec(rank()), "char_eval");
        Int L = exponent();
        Int s = 0;
        for (size_t i = 0; i < rank(); ++i)
            s = posmod(s + chi[i] * g[i] * (L / orders[i]), L);
        Int n = element_order(g);
        if ((s * n) % L != 0) throw error("char_eval: value not in mu_n");
        return (s * n / L) % n;
    }
};

}  // namespace fdp
