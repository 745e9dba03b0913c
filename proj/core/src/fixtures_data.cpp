#include "fixtures_data.hpp"

namespace darboux::detail {
namespace {

// Each document uses the analysis-config schema (see README): the verbatim
// differential form and curve list, the marked points with their local data,
// the checks to run, and the expected values.  Affine `local` entries are
// [milnor, tjurina]; infinity-chart entries are [t_z, i].  Point coordinates
// are exact literals in the document field, except that points conjugate
// over the rationals are stored as residues at the recorded prime (they are
// only used by the finite-field local block).

const char* kDoc96 = R"json({
  "id": "9.6",
  "field": "Q",
  "prime": 10007,
  "degree": 3,
  "form": {
    "P": "-40*x^2*y-36*x*y^2-4*y^3-80*x^2-102*x*y-34*y^2-60*x-72*y-40",
    "Q": "24*x^3+16*x^2*y+2*x^2+12*x*y-9*x+2*y-2",
    "d": 3
  },
  "curves": {
    "L1": "y+2",
    "L2": "4*x+y+4",
    "L3": "4*x+1",
    "L4": "2*x+1",
    "Q": "2*x^2+2*x*y+x+2*y+2"
  },
  "points": [
    {"label": "C", "chart": "affine", "coords": ["-1/2", "-2"], "declared_type": "ordinary-quadruple"},
    {"label": "E", "chart": "affine", "coords": ["-1/4", "-2"], "declared_type": "node"},
    {"label": "F", "chart": "affine", "coords": ["-1/4", "-3"], "declared_type": "node"},
    {"label": "H", "chart": "affine", "coords": ["2", "-2"], "declared_type": "node"},
    {"label": "I", "chart": "affine", "coords": ["-2", "4"], "declared_type": "node"},
    {"label": "J", "chart": "affine", "coords": ["-1/4", "-5/4"], "declared_type": "node"},
    {"label": "D", "chart": "infinity", "coords": ["0", "1", "0"], "declared_type": "ordinary-triple"},
    {"label": "Z1", "chart": "infinity", "coords": ["1", "0", "0"], "declared_type": "smooth"},
    {"label": "Z2", "chart": "infinity", "coords": ["1", "-4", "0"], "declared_type": "smooth"},
    {"label": "Z3", "chart": "infinity", "coords": ["1", "-1", "0"], "declared_type": "smooth"}
  ],
  "checks": ["integral_curves", "union_degree", "square_free", "no_infinity_component",
             "deg_X", "linkage", "local", "local_crosscheck", "delta", "dim_V",
             "dimension_formula", "eta", "certificate", "genericity", "rigidity"],
  "options": {
    "groups": {"Gamma": ["L1", "L2", "L3", "Q"]},
    "union": ["L1", "L2", "L3", "L4", "Q"],
    "certificate": {"curves": ["L4", "Gamma"]},
    "eta_curves": ["L4", "Gamma"],
    "genericity": {"points": ["C", "E", "F", "H", "I", "J"], "degree": 2},
    "rigidity": {"curve": "Q"},
    "focal": {"equilibrium": ["5", "-13/2"], "extension": false, "order": 10},
    "jacobian": {"ambient": "default"}
  },
  "expected": {
    "integral_curves": true,
    "e": 6,
    "square_free": true,
    "no_infinity_component": true,
    "deg_X": 20,
    "deg_Y": 5,
    "delta": 1,
    "dim_V": 1,
    "dimension_formula": true,
    "local": {
      "C": [9, 9], "E": [1, 1], "F": [1, 1], "H": [1, 1], "I": [1, 1], "J": [1, 1],
      "D": [6, 3], "Z1": [0, 1], "Z2": [0, 1], "Z3": [0, 1]
    },
    "eta": {
      "C": [1, 3, 2], "E": [0, 1, 1], "F": [0, 1, 1],
      "H": [0, 1, 1], "I": [0, 1, 1], "J": [0, 1, 1]
    },
    "certificate": "(1, -1 | 1)",
    "genericity": true,
    "rigidity": 1,
    "focal_equilibria": 7,
    "focal_s": ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    "jacobian": {"ambient": 14, "rank": 9, "tangent_dimension": 5}
  },
  "meta": {"family": "", "role": "Construction"}
})json";

const char* kDoc98 = R"json({
  "id": "9.8",
  "field": "Q",
  "prime": 10007,
  "degree": 3,
  "form": {
    "P": "-11*x^2*y+3*x*y^2+y^3-2*x^2+x*y+5*y^2-2*x+4*y",
    "Q": "11*x^3-3*x^2*y-x*y^2+10*x^2-4*x*y-y^2-x-y",
    "d": 3
  },
  "curves": {
    "L": "-7*x+2*y+1",
    "C": "x^2*y^2-2*x^2*y*(x+y+1)-2*x*y^2*(x+y+1)+x^2*(x+y+1)^2-2*x*y*(x+y+1)^2+y^2*(x+y+1)^2"
  },
  "points": [
    {"label": "R", "chart": "affine", "coords": ["0", "0"], "declared_type": "cusp"},
    {"label": "S", "chart": "affine", "coords": ["-1", "0"], "declared_type": "cusp"},
    {"label": "T", "chart": "affine", "coords": ["0", "-1"], "declared_type": "cusp"},
    {"label": "B", "chart": "affine", "coords": ["-1", "-4"], "declared_type": "tacnode"},
    {"label": "N1", "chart": "affine", "coords": ["6939", "4272"], "declared_type": "node"},
    {"label": "N2", "chart": "affine", "coords": ["8178", "3605"], "declared_type": "node"},
    {"label": "W", "chart": "infinity", "coords": ["2", "7", "0"], "declared_type": "smooth"}
  ],
  "checks": ["integral_curves", "union_degree", "square_free", "no_infinity_component",
             "deg_X", "linkage", "local", "local_crosscheck", "delta", "dim_V",
             "dimension_formula", "eta", "eta_infinity", "certificate", "genericity"],
  "options": {
    "union": ["L", "C"],
    "certificate": {"curves": ["L", "C"]},
    "eta_curves": ["L", "C"],
    "genericity": {"points": ["R", "S", "T", "B"], "degree": 1},
    "focal": {"equilibrium": ["-1", "2"], "extension": true, "order": 10}
  },
  "expected": {
    "integral_curves": true,
    "e": 5,
    "square_free": true,
    "no_infinity_component": true,
    "deg_X": 11,
    "deg_Y": 5,
    "delta": 1,
    "dim_V": 1,
    "dimension_formula": true,
    "local": {
      "R": [2, 2], "S": [2, 2], "T": [2, 2], "B": [3, 3],
      "N1": [1, 1], "N2": [1, 1], "W": [0, 1]
    },
    "eta": {"R": [0, 6, 5], "S": [0, 6, 5], "T": [0, 6, 5], "B": [2, 2, 3]},
    "eta_infinity": [1, 4, 4],
    "certificate": "(4, 5 | -6)",
    "genericity": true,
    "focal_equilibria": 7,
    "focal_s": ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]
  },
  "meta": {"family": "", "role": "Construction"}
})json";

const char* kDoc99 = R"json({
  "id": "9.9",
  "field": "Q",
  "prime": 10007,
  "degree": 3,
  "form": {
    "P": "-2*x*y^2-2*y^3+2*x*y+2*y",
    "Q": "4*x^3+2*x^2*y+x*y^2-4*x*y-y^2-x-y",
    "d": 3
  },
  "curves": {
    "Q": "y-x^2",
    "T_H": "y",
    "T_I": "2*x+y+1",
    "T_J": "2*x-y-1"
  },
  "points": [
    {"label": "H", "chart": "affine", "coords": ["0", "0"], "declared_type": "tacnode"},
    {"label": "I", "chart": "affine", "coords": ["-1", "1"], "declared_type": "tacnode"},
    {"label": "J", "chart": "affine", "coords": ["1", "1"], "declared_type": "tacnode"},
    {"label": "D", "chart": "affine", "coords": ["1/2", "0"], "declared_type": "node"},
    {"label": "E", "chart": "affine", "coords": ["-1/2", "0"], "declared_type": "node"},
    {"label": "F", "chart": "affine", "coords": ["0", "-1"], "declared_type": "node"},
    {"label": "G", "chart": "infinity", "coords": ["0", "1", "0"], "declared_type": "tangent-smooth"},
    {"label": "Z1", "chart": "infinity", "coords": ["1", "0", "0"], "declared_type": "smooth"},
    {"label": "Z2", "chart": "infinity", "coords": ["1", "-2", "0"], "declared_type": "smooth"},
    {"label": "Z3", "chart": "infinity", "coords": ["1", "2", "0"], "declared_type": "smooth"}
  ],
  "checks": ["integral_curves", "union_degree", "square_free", "no_infinity_component",
             "deg_X", "linkage", "local", "local_crosscheck", "delta", "dim_V",
             "dimension_formula", "eta", "certificate", "genericity"],
  "options": {
    "groups": {"T": ["T_H", "T_I", "T_J"]},
    "union": ["Q", "T_H", "T_I", "T_J"],
    "certificate": {"curves": ["Q", "T"]},
    "eta_curves": ["Q", "T"],
    "genericity": {"points": ["H", "I", "J", "D", "E", "F"], "degree": 2},
    "focal": {"equilibrium": ["-1/2", "1"], "extension": true, "order": 10}
  },
  "expected": {
    "integral_curves": true,
    "e": 5,
    "square_free": true,
    "no_infinity_component": true,
    "deg_X": 13,
    "deg_Y": 3,
    "delta": 3,
    "dim_V": 3,
    "dimension_formula": true,
    "local": {
      "H": [3, 3], "I": [3, 3], "J": [3, 3], "D": [1, 1], "E": [1, 1], "F": [1, 1],
      "G": [1, 2], "Z1": [0, 1], "Z2": [0, 1], "Z3": [0, 1]
    },
    "eta": {
      "H": [2, 2, 3], "I": [2, 2, 3], "J": [2, 2, 3],
      "D": [0, 1, 1], "E": [0, 1, 1], "F": [0, 1, 1]
    },
    "certificate": "(1, 2 | -2)",
    "genericity": true,
    "focal_equilibria": 7,
    "focal_s": ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]
  },
  "meta": {"family": "", "role": "Construction"}
})json";

const char* kDoc910 = R"json({
  "id": "9.10",
  "field": "Q",
  "prime": 10007,
  "degree": 2,
  "form": {
    "P": "-x^2+20*x*y+5*y^2+x-5*y",
    "Q": "-5*x^2-20*x*y+y^2+5*x-y",
    "d": 2
  },
  "curves": {
    "C": "x^2*y^2-2*x^2*y*(1/8*(x+y-1))-2*x*y^2*(1/8*(x+y-1))+x^2*(1/8*(x+y-1))^2-2*x*y*(1/8*(x+y-1))^2+y^2*(1/8*(x+y-1))^2"
  },
  "points": [
    {"label": "R", "chart": "affine", "coords": ["0", "0"], "declared_type": "cusp"},
    {"label": "S", "chart": "affine", "coords": ["1", "0"], "declared_type": "cusp"},
    {"label": "T", "chart": "affine", "coords": ["0", "1"], "declared_type": "cusp"},
    {"label": "B", "chart": "infinity", "coords": ["1", "1", "0"], "declared_type": "tangent-smooth"}
  ],
  "checks": ["integral_curves", "union_degree", "square_free", "no_infinity_component",
             "deg_X", "linkage", "local", "local_crosscheck", "delta", "dim_V",
             "dimension_formula", "eta", "certificate", "genericity",
             "extension_certificate", "extension_equilibria"],
  "options": {
    "union": ["C"],
    "certificate": {"curves": ["C"]},
    "eta_curves": ["C"],
    "genericity": {"points": ["R", "S", "T"], "degree": 1},
    "extension": {
      "P": "(x+1)*(-x^2+20*x*y+5*y^2+x-5*y)",
      "Q": "(x+1)*(-5*x^2-20*x*y+y^2+5*x-y)",
      "d": 3,
      "curves": {
        "L": "x+1",
        "C": "x^2*y^2-2*x^2*y*(1/8*(x+y-1))-2*x*y^2*(1/8*(x+y-1))+x^2*(1/8*(x+y-1))^2-2*x*y*(1/8*(x+y-1))^2+y^2*(1/8*(x+y-1))^2"
      }
    },
    "focal": {"equilibrium": ["1/6", "1/6"], "extension": true, "order": 10}
  },
  "expected": {
    "integral_curves": true,
    "e": 4,
    "square_free": true,
    "no_infinity_component": true,
    "deg_X": 7,
    "deg_Y": 2,
    "delta": 1,
    "dim_V": 1,
    "dimension_formula": true,
    "local": {"R": [2, 2], "S": [2, 2], "T": [2, 2], "B": [1, 2]},
    "eta": {"R": [6, 5], "S": [6, 5], "T": [6, 5]},
    "certificate": "(5 | -6)",
    "genericity": true,
    "extension_certificate": "(6, 5 | -6)",
    "extension_equilibria": "PositiveDimensionalZeroSet",
    "focal_equilibria": 4,
    "focal_s": ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]
  },
  "meta": {"family": "", "role": "Construction"}
})json";

const char* kDoc914 = R"json({
  "id": "9.14",
  "field": "Q",
  "prime": 10007,
  "degree": 3,
  "form": {
    "P": "-68*x^3-168*x^2*y-216*x*y^2-64*y^3-41*x^2-98*x*y-16*y^2+57*x+46*y",
    "Q": "-52*x^3+32*x^2*y+32*x*y^2+20*x^2+24*x*y+80*x+24*y",
    "d": 3
  },
  "curves": {
    "L": "x+2*y",
    "Q1": "2*x^2+4*x*y+x+1",
    "Q2": "15*x^2-19*x-4*y"
  },
  "points": [
    {"label": "n0", "chart": "affine", "coords": ["-1", "1/2"], "declared_type": "node"},
    {"label": "n1", "chart": "affine", "coords": ["0", "0"], "declared_type": "node"},
    {"label": "n2", "chart": "affine", "coords": ["17/15", "-17/30"], "declared_type": "node"},
    {"label": "n3", "chart": "affine", "coords": ["1", "-1"], "declared_type": "node"},
    {"label": "n4", "chart": "affine", "coords": ["-1/5", "11/10"], "declared_type": "node"},
    {"label": "n5", "chart": "affine", "coords": ["1/3", "-7/6"], "declared_type": "node"},
    {"label": "A", "chart": "infinity", "coords": ["2", "-1", "0"], "declared_type": "node"},
    {"label": "B", "chart": "infinity", "coords": ["0", "1", "0"], "declared_type": "tangent-node"}
  ],
  "checks": ["integral_curves", "union_degree", "square_free", "no_infinity_component",
             "deg_X", "linkage", "local", "local_crosscheck", "delta", "dim_V",
             "dimension_formula", "eta", "certificate", "genericity", "incidence"],
  "options": {
    "groups": {"U": ["L", "Q1", "Q2"]},
    "union": ["L", "Q1", "Q2"],
    "certificate": {"curves": ["U"]},
    "eta_curves": ["U"],
    "genericity": {"points": ["n0", "n1", "n2", "n3", "n4", "n5"], "degree": 2},
    "incidence": {"curves": ["L", "Q1", "Q2"]},
    "focal": {"equilibrium": ["2403", "5882"], "extension": false, "order": 10}
  },
  "expected": {
    "integral_curves": true,
    "e": 5,
    "square_free": true,
    "no_infinity_component": true,
    "deg_X": 11,
    "deg_Y": 5,
    "delta": 1,
    "dim_V": 1,
    "dimension_formula": true,
    "local": {
      "n0": [1, 1], "n1": [1, 1], "n2": [1, 1], "n3": [1, 1], "n4": [1, 1], "n5": [1, 1],
      "A": [2, 2], "B": [3, 3]
    },
    "eta": {
      "n0": [1, 1], "n1": [1, 1], "n2": [1, 1], "n3": [1, 1], "n4": [1, 1], "n5": [1, 1]
    },
    "certificate": "(1 | -1)",
    "genericity": true,
    "incidence": {
      "matrix": [[0, 1], [1, 1], [2, 0]],
      "kernel": [["2", "-2", "1"]]
    },
    "focal_equilibria": 9,
    "focal_s": ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]
  },
  "meta": {"family": "(CD_28)", "role": "Construction"}
})json";

const char* kDocQuartic = R"json({
  "id": "quartic-d2",
  "field": "Q",
  "prime": 10007,
  "degree": 2,
  "curves": {
    "C": "x^2*y^2-2*x^2*y*(1/8*(x+y-1))-2*x*y^2*(1/8*(x+y-1))+x^2*(1/8*(x+y-1))^2-2*x*y*(1/8*(x+y-1))^2+y^2*(1/8*(x+y-1))^2"
  },
  "points": [
    {"label": "R", "chart": "affine", "coords": ["0", "0"], "declared_type": "cusp"},
    {"label": "S", "chart": "affine", "coords": ["1", "0"], "declared_type": "cusp"},
    {"label": "T", "chart": "affine", "coords": ["0", "1"], "declared_type": "cusp"},
    {"label": "B", "chart": "infinity", "coords": ["1", "1", "0"], "declared_type": "tangent-smooth"}
  ],
  "checks": ["union_degree", "square_free", "no_infinity_component", "deg_X", "linkage",
             "local", "local_crosscheck", "delta", "dim_V", "dimension_formula"],
  "options": {
    "union": ["C"]
  },
  "expected": {
    "e": 4,
    "square_free": true,
    "no_infinity_component": true,
    "deg_X": 7,
    "deg_Y": 2,
    "delta": 1,
    "dim_V": 1,
    "dimension_formula": true,
    "local": {"R": [2, 2], "S": [2, 2], "T": [2, 2], "B": [1, 2]}
  },
  "meta": {"family": "", "role": "Example"}
})json";

}  // namespace

const std::vector<FixtureEntry>& fixture_table() {
  static const std::vector<FixtureEntry> table = {
      {"9.6", kDoc96},   {"9.8", kDoc98},   {"9.9", kDoc99},
      {"9.10", kDoc910}, {"9.14", kDoc914}, {"quartic-d2", kDocQuartic},
  };
  return table;
}

}  // namespace darboux::detail
