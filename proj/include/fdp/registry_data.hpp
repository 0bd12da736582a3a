#pragma once

// Built-in surface documents. Content matches the files shipped under
// surfaces/; `fdp surfaces show NAME --json` reprints the canonical form.

namespace fdp::data {

inline constexpr const char* kCampedelli = R"json({
  "schema": 1,
  "name": "campedelli",
  "rank": 1,
  "canonical_y": [-3],
  "ample_y": [1],
  "group": {"orders": [2, 2, 2, 2, 2, 2], "g_rank": 3},
  "branches": [
    {"name": "D1", "class": [1], "psi": [1, 0, 0, 0, 0, 0]},
    {"name": "D2", "class": [1], "psi": [0, 1, 0, 0, 0, 0]},
    {"name": "D3", "class": [1], "psi": [0, 0, 1, 0, 0, 0]},
    {"name": "D4", "class": [1], "psi": [1, 1, 0, 1, 0, 0]},
    {"name": "D5", "class": [1], "psi": [1, 0, 1, 0, 1, 0]},
    {"name": "D6", "class": [1], "psi": [0, 1, 1, 0, 0, 1]},
    {"name": "D7", "class": [1], "psi": [1, 1, 1, 1, 1, 1]}
  ],
  "unramified": [],
  "basis_x": [],
  "neg_roots": [],
  "eff_generators": [],
  "relations": [["D1", "D2", "D3", "D4", "D5", "D6", "D7"]],
  "declared": {},
  "meta": {
    "k2": 2,
    "notes": "(Z/2)^3-cover of P^2 branched over seven general lines; no lattice isometry with P^2, so only the pushforward calculus applies."
  },
  "presets": {}
})json";

inline constexpr const char* kKulikov = R"json({
  "schema": 1,
  "name": "kulikov",
  "rank": 4,
  "canonical_y": [-3, 1, 1, 1],
  "ample_y": [3, -1, -1, -1],
  "group": {"orders": [3, 3, 3, 3, 3], "g_rank": 2},
  "branches": [
    {"name": "D1", "class": [1, 0, -1, -1], "psi": [1, 0, 0, 0, 0]},
    {"name": "D2", "class": [1, -1, 0, -1], "psi": [1, 0, 1, 0, 0]},
    {"name": "D3", "class": [1, -1, -1, 0], "psi": [1, 0, 2, 1, 0]},
    {"name": "D4", "class": [1, -1, 0, 0], "psi": [0, 1, 0, 2, 0]},
    {"name": "D5", "class": [1, 0, -1, 0], "psi": [1, 1, 0, 0, 1]},
    {"name": "D6", "class": [1, 0, 0, -1], "psi": [2, 1, 0, 0, 2]},
    {"name": "E1", "class": [0, 1, 0, 0], "psi": [2, 1, 0, 0, 0]},
    {"name": "E2", "class": [0, 0, 1, 0], "psi": [0, 1, 2, 1, 1]},
    {"name": "E3", "class": [0, 0, 0, 1], "psi": [1, 1, 1, 0, 2]}
  ],
  "unramified": [],
  "basis_x": [
    {"name": "e0", "expr": {"D1": 1, "E2": 1, "E3": 1}},
    {"name": "e1", "expr": {"E1": 1}},
    {"name": "e2", "expr": {"E2": 1}},
    {"name": "e3", "expr": {"E3": 1}}
  ],
  "neg_roots": [],
  "eff_generators": ["D1", "D2", "D3", "D4", "D5", "D6", "E1", "E2", "E3"],
  "relations": [["D1", "D2", "D3", "D4", "D5", "D6"]],
  "declared": {
    "torsion": {
      "D1": [0, 0, 0],
      "D2": [1, 0, 2],
      "D3": [2, 0, 2],
      "D4": [2, 1, 2],
      "D5": [2, 1, 0],
      "D6": [2, 1, 1],
      "E1": [0, 0, 0],
      "E2": [0, 0, 0],
      "E3": [0, 0, 0]
    },
    "canonical": {"multidegree": [3, -1, -1, -1], "torsion": [0, 0, 2]}
  },
  "meta": {
    "k2": 6,
    "h1_tx": 1,
    "h2_tx": 3,
    "notes": "(Z/3)^2-cover of the degree-6 del Pezzo surface branched over six lines in special position plus the three exceptional curves; Tors X = (Z/3)^3."
  },
  "presets": {
    "numerical": {
      "default": [
        [0, 0, 0, 0],
        [1, -1, 0, 0],
        [1, 0, -1, 0],
        [1, 0, 0, -1],
        [2, -1, -1, -1],
        [1, 0, 0, 0]
      ]
    },
    "collections": {
      "paper": {
        "numerical": "default",
        "twists": [[2, 2, 0], [2, 1, 2], [0, 0, 1], [1, 1, 1], [2, 2, 1]]
      }
    }
  }
})json";

inline constexpr const char* kBurniat4n = R"json({
  "schema": 1,
  "name": "burniat4n",
  "rank": 6,
  "canonical_y": [-3, 1, 1, 1, 1, 1],
  "ample_y": [7, -1, -3, -3, -2, -2],
  "group": {"orders": [2, 2, 2, 2, 2, 2], "g_rank": 2},
  "branches": [
    {"name": "A0", "class": [1, -1, -1, 0, 0, 0], "psi": [1, 0, 0, 0, 0, 0]},
    {"name": "A1", "class": [1, -1, 0, 0, -1, -1], "psi": [1, 0, 1, 0, 0, 0]},
    {"name": "A2", "class": [1, -1, 0, 0, 0, 0], "psi": [1, 0, 0, 1, 0, 0]},
    {"name": "B0", "class": [1, 0, -1, -1, 0, 0], "psi": [0, 1, 0, 0, 0, 0]},
    {"name": "B1", "class": [1, 0, -1, 0, -1, 0], "psi": [0, 1, 0, 0, 1, 0]},
    {"name": "B2", "class": [1, 0, -1, 0, 0, -1], "psi": [0, 1, 0, 0, 0, 1]},
    {"name": "C0", "class": [1, -1, 0, -1, 0, 0], "psi": [1, 1, 1, 1, 0, 0]},
    {"name": "C1", "class": [1, 0, 0, -1, 0, -1], "psi": [1, 1, 1, 0, 0, 1]},
    {"name": "C2", "class": [1, 0, 0, -1, -1, 0], "psi": [1, 1, 1, 0, 1, 0]},
    {"name": "E1", "class": [0, 1, 0, 0, 0, 0], "psi": [0, 1, 0, 0, 0, 0]},
    {"name": "E2", "class": [0, 0, 1, 0, 0, 0], "psi": [1, 1, 0, 0, 1, 1]},
    {"name": "E3", "class": [0, 0, 0, 1, 0, 0], "psi": [1, 0, 1, 1, 1, 1]}
  ],
  "unramified": [
    {"name": "E4", "class": [0, 0, 0, 0, 1, 0]},
    {"name": "E5", "class": [0, 0, 0, 0, 0, 1]}
  ],
  "basis_x": [
    {"name": "e0", "expr": {"C0": 1, "E1": 1, "E3": 1}},
    {"name": "e1", "expr": {"E1": 1}},
    {"name": "e2", "expr": {"E2": 1}},
    {"name": "e3", "expr": {"E3": 1}},
    {"name": "e4", "expr": {"C0": 1, "C2": -1, "E1": 1}},
    {"name": "e5", "expr": {"B0": 1, "B2": -1, "E3": 1}}
  ],
  "neg_roots": [[1, -1, 0, 0, -1, -1]],
  "eff_generators": ["A0", "A1", "A2", "B0", "B1", "B2", "C0", "C1", "C2", "E1", "E2", "E3", "E4", "E5"],
  "relations": [["A0", "A1", "A2", "B0", "B1", "B2", "C0", "C1", "C2"]],
  "declared": {
    "torsion": {
      "A0": [1, 1, 0, 0],
      "A1": [1, 0, 1, 0],
      "A2": [0, 1, 0, 0],
      "B0": [0, 0, 1, 1],
      "B1": [0, 0, 1, 0],
      "B2": [0, 0, 1, 1],
      "C0": [0, 0, 0, 0],
      "C1": [0, 0, 1, 0],
      "C2": [0, 0, 0, 0],
      "E1": [0, 0, 0, 0],
      "E2": [0, 0, 0, 0],
      "E3": [0, 0, 0, 0]
    },
    "canonical": {"multidegree": [3, -1, -1, -1, -1, -1], "torsion": [0, 0, 1, 0]}
  },
  "meta": {
    "k2": 4,
    "notes": "Nodal secondary Burniat surface: (Z/2)^2-cover of the weak del Pezzo of degree 4 with a (-2)-curve (the strict transform of the line through P1, P4, P5); Tors X = (Z/2)^4."
  },
  "presets": {
    "numerical": {
      "default": [
        [0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0],
        [2, 0, 0, 0, 0, 0]
      ]
    },
    "collections": {}
  }
})json";

inline constexpr const char* kBurniat4 = R"json({
  "schema": 1,
  "name": "burniat4",
  "rank": 6,
  "canonical_y": [-3, 1, 1, 1, 1, 1],
  "ample_y": [3, -1, -1, -1, -1, -1],
  "group": {"orders": [2, 2, 2, 2, 2, 2], "g_rank": 2},
  "branches": [
    {"name": "A0", "class": [1, -1, -1, 0, 0, 0], "psi": [1, 0, 0, 0, 0, 0]},
    {"name": "A1", "class": [1, -1, 0, 0, -1, 0], "psi": [1, 0, 1, 0, 0, 0]},
    {"name": "A2", "class": [1, -1, 0, 0, 0, -1], "psi": [1, 0, 0, 1, 0, 0]},
    {"name": "B0", "class": [1, 0, -1, -1, 0, 0], "psi": [0, 1, 0, 0, 0, 0]},
    {"name": "B1", "class": [1, 0, -1, 0, -1, 0], "psi": [0, 1, 0, 0, 1, 0]},
    {"name": "B2", "class": [1, 0, -1, 0, 0, -1], "psi": [0, 1, 0, 0, 0, 1]},
    {"name": "C0", "class": [1, -1, 0, -1, 0, 0], "psi": [1, 1, 0, 0, 0, 0]},
    {"name": "C1", "class": [1, 0, 0, -1, 0, -1], "psi": [1, 1, 0, 1, 0, 1]},
    {"name": "C2", "class": [1, 0, 0, -1, -1, 0], "psi": [1, 1, 1, 0, 1, 0]},
    {"name": "E1", "class": [0, 1, 0, 0, 0, 0], "psi": [0, 1, 1, 1, 0, 0]},
    {"name": "E2", "class": [0, 0, 1, 0, 0, 0], "psi": [1, 1, 0, 0, 1, 1]},
    {"name": "E3", "class": [0, 0, 0, 1, 0, 0], "psi": [1, 0, 1, 1, 1, 1]}
  ],
  "unramified": [
    {"name": "E4", "class": [0, 0, 0, 0, 1, 0]},
    {"name": "E5", "class": [0, 0, 0, 0, 0, 1]},
    {"name": "F45", "class": [1, 0, 0, 0, -1, -1]},
    {"name": "Q", "class": [2, -1, -1, -1, -1, -1]}
  ],
  "basis_x": [
    {"name": "e0", "expr": {"C0": 1, "E1": 1, "E3": 1}},
    {"name": "e1", "expr": {"E1": 1}},
    {"name": "e2", "expr": {"E2": 1}},
    {"name": "e3", "expr": {"E3": 1}},
    {"name": "e4", "expr": {"C0": 1, "C2": -1, "E1": 1}},
    {"name": "e5", "expr": {"B0": 1, "B2": -1, "E3": 1}}
  ],
  "neg_roots": [],
  "eff_generators": ["A0", "A1", "A2", "B0", "B1", "B2", "C0", "C1", "C2", "E1", "E2", "E3", "E4", "E5", "F45", "Q"],
  "relations": [["A0", "A1", "A2", "B0", "B1", "B2", "C0", "C1", "C2"]],
  "declared": {
    "torsion": {
      "A0": [1, 1, 0, 0],
      "A1": [1, 0, 0, 0],
      "A2": [0, 1, 1, 0],
      "B0": [0, 0, 1, 1],
      "B1": [0, 0, 1, 0],
      "B2": [0, 0, 1, 1],
      "C0": [0, 0, 0, 0],
      "C1": [0, 0, 1, 0],
      "C2": [0, 0, 0, 0],
      "E1": [0, 0, 0, 0],
      "E2": [0, 0, 0, 0],
      "E3": [0, 0, 0, 0]
    },
    "canonical": {"multidegree": [3, -1, -1, -1, -1, -1], "torsion": [0, 0, 1, 0]}
  },
  "meta": {
    "k2": 4,
    "notes": "Non-nodal secondary Burniat surface: (Z/2)^2-cover of the del Pezzo surface of degree 4; the line through P4 and P5 and the conic through all five points are unramified.",
    "line_p45": "F45",
    "conic": "Q"
  },
  "presets": {
    "numerical": {
      "default": [
        [0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0],
        [2, 0, 0, 0, 0, 0]
      ]
    },
    "collections": {}
  }
})json";

inline constexpr const char* kBuiltins[] = {kCampedelli, kKulikov, kBurniat4n, kBurniat4};

}  // namespace fdp::data
