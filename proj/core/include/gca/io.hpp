#pragma once

// JSON / CSV export of scalars, states, matrices and check reports.
//
//   scalar  {"order": m, "coeffs": [[k, "p/q"], ...], "approx": {"re": f, "im": f}}
//   state   {"N": N, "n": n, "terms": [{"index": [a1, ...], "amp": <scalar>}, ...]}
//   matrix  [[<scalar>, ...], ...]           (rows in basis order, a_1 slowest)
//   report  {"N": N, "n": n, "zeta_exp": e, "checks": [{"name", "passed", "counterexample"}]}
//
// CSV matrices carry one line per row, each entry written as two columns
// "re,im" rounded to 12 significant digits.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "gca/axioms.hpp"
#include "gca/cyclo.hpp"
#include "gca/rep.hpp"

namespace gca {

nlohmann::json to_json(const CycloScalar& s);
nlohmann::json to_json(const QuditState& v);
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json report_to_json(const AlgebraContext& ctx, const std::vector<CheckReport>& reports);

std::string matrix_to_csv(const Matrix& m);

CycloScalar scalar_from_json(const nlohmann::json& j);

// 12 significant digits.
std::string format_float(double x);

}  // namespace gca
