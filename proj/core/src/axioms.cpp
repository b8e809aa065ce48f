#include "gca/axioms.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "gca/error.hpp"
#include "gca/print.hpp"
#include "gca/symbolic.hpp"

namespace gca {

namespace {

CheckReport make_report(const AlgebraContext& ctx, std::string name) {
  CheckReport r;
  r.N = ctx.N;
  r.n = ctx.n;
  r.zeta_exp = ctx.zeta_exp;
  r.check_name = std::move(name);
  return r;
}

void fail(CheckReport& r, const std::string& what) {
  r.passed = false;
  r.counterexample = what;
}

std::string mismatch(const std::string& what, const QuditState& lhs, const QuditState& rhs) {
  return what + ": lhs = " + print_canonical(lhs) + ", rhs = " + print_canonical(rhs);
}

std::string generator_name(int i) { return "c[" + std::to_string(i) + "]"; }

// Calls fn(basis state) for every basis state until fn returns false.
void for_each_basis(const AlgebraContext& ctx, const std::function<bool(const Digits&)>& fn) {
  const std::uint64_t dim = ctx.dimension();
  QuditState probe(ctx);
  for (std::uint64_t flat = 0; flat < dim; ++flat)
    if (!fn(probe.digits(flat))) return;
}

}  // namespace

CheckReport check_lemma_zeta(int N, int zeta_exp) {
  if (N < 2) throw ValidationError("check_lemma_zeta: N must be at least 2");
  const int order = 2 * N;
  CheckReport r;
  r.N = N;
  r.zeta_exp = zeta_exp;
  r.check_name = "lemma_zeta";

  const CycloScalar one = CycloScalar::from_rational(order, 1);
  const CycloScalar z = CycloScalar::root_power(order, zeta_exp);
  const CycloScalar q_val = CycloScalar::root_power(order, 2);
  const long long n_sq = static_cast<long long>(N) * N;
  std::ostringstream why;
  if (!(z * z == q_val)) why << "zeta^2 != q for zeta = omega^" << zeta_exp << "; ";
  if (!(z.pow(n_sq) == one)) why << "zeta^{N^2} != 1 for zeta = omega^" << zeta_exp << "; ";
  if (N % 2 == 1) {
    // The other square root of q, -zeta = omega^{zeta_exp + N}.
    const CycloScalar rejected = -z;
    if (!(rejected.pow(n_sq) == -one))
      why << "rejected root omega^" << (zeta_exp + N) % order << " does not give -1; ";
  }
  if (!why.str().empty()) fail(r, why.str());
  return r;
}

CheckReport check_unitarity(const Representation& rep) {
  const AlgebraContext& ctx = rep.context();
  CheckReport r = make_report(ctx, "unitarity");
  for (int i = 1; i <= ctx.generator_count() && r.passed; ++i) {
    for_each_basis(ctx, [&](const Digits& d) {
      const QuditState v = QuditState::basis(ctx, d);
      const QuditState dag_c = rep.apply_generator_adjoint(i, rep.apply_generator(i, v));
      const QuditState c_dag = rep.apply_generator(i, rep.apply_generator_adjoint(i, v));
      if (!(dag_c == v)) {
        fail(r, mismatch(generator_name(i) + "' " + generator_name(i) + " " + ket_label(d), dag_c, v));
        return false;
      }
      if (!(c_dag == v)) {
        fail(r, mismatch(generator_name(i) + " " + generator_name(i) + "' " + ket_label(d), c_dag, v));
        return false;
      }
      return true;
    });
  }
  return r;
}

CheckReport check_order(const Representation& rep) {
  const AlgebraContext& ctx = rep.context();
  CheckReport r = make_report(ctx, "order");
  for (int i = 1; i <= ctx.generator_count() && r.passed; ++i) {
    for_each_basis(ctx, [&](const Digits& d) {
      const QuditState v = QuditState::basis(ctx, d);
      QuditState w = v;
      for (int e = 0; e < ctx.N; ++e) w = rep.apply_generator(i, w);
      if (!(w == v)) {
        fail(r, mismatch(generator_name(i) + "^" + std::to_string(ctx.N) + " " + ket_label(d), w, v));
        return false;
      }
      return true;
    });
  }
  return r;
}

CheckReport check_commutation(const Representation& rep) {
  const AlgebraContext& ctx = rep.context();
  CheckReport r = make_report(ctx, "commutation");
  const CycloScalar q_val = q(ctx);
  for (int i = 1; i <= ctx.generator_count() && r.passed; ++i) {
    for (int j = i + 1; j <= ctx.generator_count() && r.passed; ++j) {
      for_each_basis(ctx, [&](const Digits& d) {
        const QuditState v = QuditState::basis(ctx, d);
        const QuditState lhs = rep.apply_generator(i, rep.apply_generator(j, v));
        const QuditState rhs = q_val * rep.apply_generator(j, rep.apply_generator(i, v));
        if (!(lhs - rhs).is_zero()) {
          fail(r, mismatch(generator_name(i) + " " + generator_name(j) + " vs q " + generator_name(j) +
                               " " + generator_name(i) + " on " + ket_label(d),
                           lhs, rhs));
          return false;
        }
        return true;
      });
    }
  }
  return r;
}

CheckReport check_ground_identity(const Representation& rep) {
  const AlgebraContext& ctx = rep.context();
  CheckReport r = make_report(ctx, "ground_identity");
  const QuditState ground = QuditState::ground(ctx);
  for (int k = 1; k <= ctx.n; ++k) {
    const QuditState lhs = rep.apply_odd(k, ground);
    const QuditState rhs = zeta(ctx) * rep.apply_even(k, ground);
    if (!(lhs == rhs)) {
      fail(r, mismatch("k=" + std::to_string(k) + ", c[2k-1] Omega vs zeta c[2k] Omega", lhs, rhs));
      break;
    }
  }
  return r;
}

CheckReport check_projector_identity(const Representation& rep) {
  const AlgebraContext& ctx = rep.context();
  CheckReport r = make_report(ctx, "projector_identity");
  const CycloScalar z = zeta(ctx);
  for (int k = 1; k <= ctx.n && r.passed; ++k) {
    for_each_basis(ctx, [&](const Digits& d) {
      const QuditState projected = rep.apply_projector(k, QuditState::basis(ctx, d));
      const QuditState lhs = rep.apply_odd(k, projected);
      const QuditState rhs = z * rep.apply_even(k, projected);
      if (!(lhs == rhs)) {
        fail(r, mismatch("k=" + std::to_string(k) + ", c[2k-1] E[k] vs zeta c[2k] E[k] on " +
                             ket_label(d),
                         lhs, rhs));
        return false;
      }
      return true;
    });
  }
  return r;
}

CheckReport check_axiom2_basis(const Representation& rep, std::uint64_t cap) {
  const AlgebraContext& ctx = rep.context();
  CheckReport r = make_report(ctx, "axiom2_basis");
  const CycloScalar one = scalar(ctx, 1);

  // Each vector is a single basis ket with a unit-modulus amplitude.
  for_each_basis(ctx, [&](const Digits& d) {
    const QuditState v = rep.ordered_basis_vector(d);
    if (v.size() != 1) {
      fail(r, "ordered basis vector for " + ket_label(d) + " is not a single term: " +
                  print_canonical(v));
      return false;
    }
    const CycloScalar& amp = v.amplitudes().begin()->second;
    if (!(amp.conj() * amp == one)) {
      fail(r, "ordered basis vector for " + ket_label(d) + " has non-unit amplitude: " +
                  print_canonical(v));
      return false;
    }
    return true;
  });
  if (!r.passed) return r;

  const Matrix g = gram_matrix(rep, cap);
  QuditState probe(ctx);
  for (std::size_t i = 0; i < g.size() && r.passed; ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const bool ok = i == j ? g[i][j] == one : g[i][j].is_zero();
      if (!ok) {
        fail(r, "Gram entry (" + ket_label(probe.digits(i)) + ", " + ket_label(probe.digits(j)) +
                    ") = " + print_canonical(g[i][j], ctx));
        break;
      }
    }
  }
  return r;
}

CheckReport check_power_formula(const Representation& rep) {
  const AlgebraContext& ctx = rep.context();
  CheckReport r = make_report(ctx, "power_formula");
  for (int k = 1; k <= ctx.n && r.passed; ++k) {
    for_each_basis(ctx, [&](const Digits& d) {
      long long below = 0;
      for (int i = 0; i < k - 1; ++i) below += d[i];
      const long long a_k = d[k - 1];
      QuditState v = QuditState::basis(ctx, d);
      for (long long m = 0; m <= 2LL * ctx.N; ++m) {
        // zeta^m q^{m a_k + m(m-1)/2 - m sum_{i<k} a_i}, in omega units
        const long long exponent = m * ctx.zeta_exp + 2 * (m * a_k + m * (m - 1) / 2 - m * below);
        Digits target = d;
        target[k - 1] = static_cast<int>((a_k + m) % ctx.N);
        QuditState expected(ctx);
        expected.add_amplitude(target, omega_pow(ctx, exponent));
        if (!(v == expected)) {
          fail(r, mismatch("c[" + std::to_string(2 * k - 1) + "]^" + std::to_string(m) + " " +
                               ket_label(d),
                           v, expected));
          return false;
        }
        v = rep.apply_odd(k, v);
      }
      return true;
    });
  }
  return r;
}

CheckReport check_homomorphism(const Representation& rep, int trials, int max_len,
                               std::uint64_t seed) {
  if (trials < 1) throw ValidationError("check_homomorphism: trials must be at least 1");
  if (max_len < 0) throw ValidationError("check_homomorphism: max_len must be non-negative");
  const AlgebraContext& ctx = rep.context();
  CheckReport r = make_report(ctx, "homomorphism");
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(1, ctx.generator_count());
  for (int t = 0; t < trials && r.passed; ++t) {
    std::vector<int> letters(static_cast<std::size_t>(length_dist(rng)));
    for (int& l : letters) l = letter_dist(rng);
    const GeneratorWord word(ctx, letters);
    const AlgebraElement normal(normal_order(word));
    for_each_basis(ctx, [&](const Digits& d) {
      const QuditState v = QuditState::basis(ctx, d);
      const QuditState lhs = rep.apply_word(word, v);
      const QuditState rhs = rep.apply_element(normal, v);
      if (!(lhs == rhs)) {
        std::ostringstream what;
        what << "seed " << seed << ", trial " << t << ", word [";
        for (std::size_t i = 0; i < letters.size(); ++i) what << (i ? "," : "") << letters[i];
        what << "] on " << ket_label(d);
        fail(r, mismatch(what.str(), lhs, rhs));
        return false;
      }
      return true;
    });
  }
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "lemma_zeta",         "unitarity",    "order",         "commutation", "ground_identity",
      "projector_identity", "axiom2_basis", "power_formula", "homomorphism"};
  return names;
}

bool is_check_name(const std::string& name) {
  const auto& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckReport> run_suite(const Representation& rep,
                                   const std::optional<std::vector<std::string>>& selection,
                                   const SuiteOptions& options) {
  const std::vector<std::string>& wanted = selection ? *selection : check_names();
  for (const auto& name : wanted)
    if (!is_check_name(name)) throw ValidationError("unknown check name: " + name);

  const AlgebraContext& ctx = rep.context();
  std::vector<CheckReport> reports;
  for (const auto& name : check_names()) {
    if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    CheckReport r;
    if (name == "lemma_zeta") {
      r = check_lemma_zeta(ctx.N, ctx.zeta_exp);
      r.n = ctx.n;
    } else if (name == "unitarity") {
      r = check_unitarity(rep);
    } else if (name == "order") {
      r = check_order(rep);
    } else if (name == "commutation") {
      r = check_commutation(rep);
    } else if (name == "ground_identity") {
      r = check_ground_identity(rep);
    } else if (name == "projector_identity") {
      r = check_projector_identity(rep);
    } else if (name == "axiom2_basis") {
      r = check_axiom2_basis(rep);
    } else if (name == "power_formula") {
      r = check_power_formula(rep);
    } else {
      r = check_homomorphism(rep, options.trials, options.max_len, options.seed);
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<CheckReport> run_suite(const AlgebraContext& ctx,
                                   const std::optional<std::vector<std::string>>& selection,
                                   const SuiteOptions& options) {
  return run_suite(Representation(ctx), selection, options);
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace gca
