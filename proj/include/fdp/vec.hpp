#pragma once

// Small integer-vector helpers shared by the lattice and group modules.
// Everything is exact int64 arithmetic; inputs are tiny (ranks <= 8,
// coefficients of modest size), so overflow is not a practical concern,
// but the few places that multiply accumulated sums assert divisibility.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdp {

using Int = long long;
using Vec = std::vector<Int>;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct validation_error : error {
    explicit validation_error(const std::string& msg) : error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw error(msg);
}

inline void check_same_length(const Vec& a, const Vec& b, const char* what) {
    if (a.size() != b.size())
        throw error(std::string("length mismatch in ") + what);
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    check_same_length(a, b, "vec_add");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    check_same_length(a, b, "vec_sub");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec vec_scale(Int c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

inline Int floordiv(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline Int posmod(Int a, Int b) { return a - b * floordiv(a, b); }

inline Int gcd_ll(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm_ll(Int a, Int b) { return std::lcm(a, b); }

// Divide out the gcd of the entries; zero vector is returned unchanged.
inline Vec primitive(Vec a) {
    Int g = 0;
    for (Int x : a) g = gcd_ll(g, x < 0 ? -x : x);
    if (g > 1)
        for (Int& x : a) x /= g;
    return a;
}

// The paper's torsion notation: [a,b,c].
inline std::string bracket(const Vec& a) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ']';
    return os.str();
}

// Multidegree notation: (a,b,c).
inline std::string paren(const Vec& a) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ')';
    return os.str();
}

}  // namespace fdp
