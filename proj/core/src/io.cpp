#include "gca/io.hpp"

#include <cmath>
#include <cstdio>

#include "gca/error.hpp"

namespace gca {

std::string format_float(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;  // avoid printing "-0" and round-off noise
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

double rounded(double x) { return std::stod(format_float(x)); }

}  // namespace

nlohmann::json to_json(const CycloScalar& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [k, c] : s.terms()) coeffs.push_back({k, rational_to_string(c)});
  const auto z = s.to_complex();
  return {{"order", s.order()},
          {"coeffs", std::move(coeffs)},
          {"approx", {{"re", rounded(z.real())}, {"im", rounded(z.imag())}}}};
}

nlohmann::json to_json(const QuditState& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [flat, amp] : v.amplitudes())
    terms.push_back({{"index", v.digits(flat)}, {"amp", to_json(amp)}});
  return {{"N", v.context().N}, {"n", v.context().n}, {"terms", std::move(terms)}};
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& entry : row) r.push_back(to_json(entry));
    rows.push_back(std::move(r));
  }
  return rows;
}

nlohmann::json report_to_json(const AlgebraContext& ctx, const std::vector<CheckReport>& reports) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json c{{"name", r.check_name},
                     {"passed", r.passed},
                     {"counterexample", r.counterexample ? nlohmann::json(*r.counterexample)
                                                         : nlohmann::json(nullptr)}};
    if (r.seed) c["seed"] = *r.seed;
    checks.push_back(std::move(c));
  }
  return {{"N", ctx.N}, {"n", ctx.n}, {"zeta_exp", ctx.zeta_exp}, {"checks", std::move(checks)}};
}

std::string matrix_to_csv(const Matrix& m) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto z = row[j].to_complex();
      if (j) out += ',';
      out += format_float(z.real()) + "," + format_float(z.imag());
    }
    out += '\n';
  }
  return out;
}

CycloScalar scalar_from_json(const nlohmann::json& j) {
  try {
    const int order = j.at("order").get<int>();
    CycloScalar s(order);
    for (const auto& entry : j.at("coeffs")) {
      const long long k = entry.at(0).get<long long>();
      Rational c(entry.at(1).get<std::string>());
      c.canonicalize();
      s += CycloScalar::root_power(order, k, c);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed scalar JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("malformed rational in scalar JSON: ") + e.what());
  }
}

}  // namespace gca
