#pragma once

/**
 * @file axioms.hpp
 * @brief Exhaustive, exact verification of the model's defining identities.
 *
 * Every operator identity is checked by applying both sides to every basis
 * state; no floating point and no tolerances are involved.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gca/cyclo.hpp"
#include "gca/rep.hpp"

namespace gca {

struct CheckReport {
  int N = 0;
  int n = 0;
  int zeta_exp = 0;
  std::string check_name;
  bool passed = true;
  // Present iff the check failed.
  std::optional<std::string> counterexample;
  // Set by randomized checks.
  std::optional<std::uint64_t> seed;
};

struct SuiteOptions {
  std::uint64_t seed = 20240229;
  int trials = 200;
  int max_len = 12;
};

// zeta = omega^zeta_exp with omega = exp(i*pi/N): zeta^2 = q and zeta^{N^2} = 1;
// for odd N also that the other root gives -1.
CheckReport check_lemma_zeta(int N, int zeta_exp);

// c c^dagger = c^dagger c = 1 for every generator.
CheckReport check_unitarity(const Representation& rep);
// c^N = 1 for every generator.
CheckReport check_order(const Representation& rep);
// c_i c_j = q c_j c_i for every i < j.
CheckReport check_commutation(const Representation& rep);
// c_{2k-1} |0...0> = zeta c_{2k} |0...0> for every k.
CheckReport check_ground_identity(const Representation& rep);
// c_{2k-1} E_k = zeta c_{2k} E_k for every k.
CheckReport check_projector_identity(const Representation& rep);
// Gram matrix of c_2^{a_1} ... c_{2n}^{a_n}|0...0> is the identity.
CheckReport check_axiom2_basis(const Representation& rep, std::uint64_t cap = kDefaultDenseCap);
// c_{2k-1}^m |a> = zeta^m q^{m a_k + m(m-1)/2 - m sum_{i<k} a_i} |a + m e_k>, m in [0, 2N].
CheckReport check_power_formula(const Representation& rep);
// Seeded random words: letter-by-letter application vs normal form.
CheckReport check_homomorphism(const Representation& rep, int trials, int max_len,
                               std::uint64_t seed);

// Names accepted by run_suite, in report order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

// Runs the selected checks (all when selection is nullopt). Throws
// ValidationError on an unknown name.
std::vector<CheckReport> run_suite(const Representation& rep,
                                   const std::optional<std::vector<std::string>>& selection =
                                       std::nullopt,
                                   const SuiteOptions& options = {});
std::vector<CheckReport> run_suite(const AlgebraContext& ctx,
                                   const std::optional<std::vector<std::string>>& selection =
                                       std::nullopt,
                                   const SuiteOptions& options = {});

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace gca
