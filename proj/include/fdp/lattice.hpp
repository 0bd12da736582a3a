#pragma once

// The Picard lattice Z^{1,n} with intersection form diag(1,-1,...,-1),
// Riemann-Roch Euler characteristics (chi(O) = 1 throughout), root
// enumeration and Weyl reflections r_alpha(L) = L + (L.alpha) alpha.

#include "vec.hpp"

namespace fdp {

using DivClass = Vec;

struct PicLattice {
    int rank = 0;
    DivClass canonical;  // class K in these coordinates

    PicLattice() = default;
    PicLattice(int r, DivClass K) : rank(r), canonical(std::move(K)) {
        if (rank < 1) throw validation_error("lattice rank must be >= 1");
        if (canonical.size() != static_cast<size_t>(rank))
            throw validation_error("canonical class has wrong length");
    }

    Int intersect(const DivClass& a, const DivClass& b) const {
        check_same_length(a, b, "intersect");
        check_same_length(a, canonical, "intersect");
        Int s = a[0] * b[0];
        for (int i = 1; i < rank; ++i) s -= a[i] * b[i];
        return s;
    }

    // chi(D) = 1 + D.(D-K)/2
    Int euler_char(const DivClass& d) const {
        Int e = intersect(d, vec_sub(d, canonical));
        if (posmod(e, 2) != 0) throw error("euler_char: D.(D-K) is odd, corrupt lattice data");
        return 1 + e / 2;
    }

    bool is_root(const DivClass& a) const {
        return intersect(a, a) == -2 && intersect(a, canonical) == 0;
    }

    // All alpha with alpha^2 = -2 and alpha.K = 0. Bounded search: any root
    // has |a_0| <= 3 on these lattices, and sum a_i^2 = a_0^2 + 2.
    std::vector<DivClass> roots() const {
        std::vector<DivClass> out;
        DivClass a(rank, 0);
        for (Int a0 = -3; a0 <= 3; ++a0) {
            a[0] = a0;
            root_search(a, 1, a0 * a0 + 2, out);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    DivClass reflect(const DivClass& alpha, const DivClass& l) const {
        if (!is_root(alpha)) throw error("reflect: alpha is not a root");
        return vec_add(l, vec_scale(intersect(l, alpha), alpha));
    }

  private:
    void root_search(DivClass& a, int pos, Int budget, std::vector<DivClass>& out) const {
        if (pos == rank) {
            if (budget == 0 && intersect(a, canonical) == 0) out.push_back(a);
            return;
        }
        Int cap = 0;
        while ((cap + 1) * (cap + 1) <= budget) ++cap;
        for (Int v = -cap; v <= cap; ++v) {
            a[pos] = v;
            root_search(a, pos + 1, budget - v * v, out);
        }
        a[pos] = 0;
    }
};

}  // namespace fdp
