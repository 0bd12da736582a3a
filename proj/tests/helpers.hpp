#pragma once

#include <fdp/registry.hpp>

#include <doctest.h>

// One registry for the whole test binary; construction already runs the
// load-time cross-checks for every built-in surface.
inline const fdp::Registry& test_registry() {
    static fdp::Registry reg;
    return reg;
}

inline std::vector<fdp::Vec> sorted_copy(std::vector<fdp::Vec> v) {
    std::sort(v.begin(), v.end());
    return v;
}
