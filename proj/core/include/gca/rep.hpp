#pragma once

/**
 * @file rep.hpp
 * @brief The explicit qudit model of C_{2n}^{(N)}.
 *
 * States live on the basis |a_1, ..., a_n>, a_i in [0, N), with exact
 * cyclotomic amplitudes. The generators act as generalized permutations:
 *
 *   c_{2k}   |a> = q^{-sum_{i<k} a_i}               |..., a_k + 1, ...>
 *   c_{2k-1} |a> = zeta q^{a_k} q^{-sum_{i<k} a_i}  |..., a_k + 1, ...>
 *   E_k      |a> = delta_{a_k, 0} |a>
 *
 * with digit arithmetic mod N. Basis states are enumerated row-major with
 * a_1 the slowest digit.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "gca/cyclo.hpp"
#include "gca/symbolic.hpp"

namespace gca {

// (a_1, ..., a_n), each digit in [0, N).
using Digits = std::vector<int>;

inline constexpr std::uint64_t kDefaultDenseCap = 4096;

class QuditState {
 public:
  // Keyed by flat basis index (a_1 slowest), so iteration follows basis order.
  using AmpMap = std::map<std::uint64_t, CycloScalar>;

  // The zero state.
  explicit QuditState(const AlgebraContext& ctx);

  static QuditState ground(const AlgebraContext& ctx);
  static QuditState basis(const AlgebraContext& ctx, const Digits& digits);

  const AlgebraContext& context() const noexcept { return ctx_; }
  const AmpMap& amplitudes() const noexcept { return amps_; }
  bool is_zero() const noexcept { return amps_.empty(); }
  std::size_t size() const noexcept { return amps_.size(); }

  CycloScalar amplitude(const Digits& digits) const;
  void add_amplitude(std::uint64_t flat, const CycloScalar& amp);
  void add_amplitude(const Digits& digits, const CycloScalar& amp);

  std::uint64_t flat_index(const Digits& digits) const;
  Digits digits(std::uint64_t flat) const;

  QuditState& operator+=(const QuditState& rhs);
  QuditState& operator-=(const QuditState& rhs);
  friend QuditState operator+(QuditState a, const QuditState& b) { return a += b; }
  friend QuditState operator-(QuditState a, const QuditState& b) { return a -= b; }
  friend QuditState operator*(const CycloScalar& s, const QuditState& v);
  friend bool operator==(const QuditState& a, const QuditState& b);

 private:
  friend class Representation;

  AlgebraContext ctx_;
  std::uint64_t dim_;
  AmpMap amps_;
};

/// Generator action of the model. The phases are virtual so that checks can
/// be run against deliberately broken variants.
class Representation {
 public:
  explicit Representation(const AlgebraContext& ctx);
  virtual ~Representation() = default;

  const AlgebraContext& context() const noexcept { return ctx_; }

  // Phase of c_{2k} on |digits>, as an exponent of omega.
  virtual long long even_phase(int k, std::span<const int> digits) const;
  // Phase of c_{2k-1} on |digits>, as an exponent of omega.
  virtual long long odd_phase(int k, std::span<const int> digits) const;

  QuditState apply_even(int k, const QuditState& s) const;
  QuditState apply_odd(int k, const QuditState& s) const;
  // c_i for i in [1, 2n].
  QuditState apply_generator(int i, const QuditState& s) const;
  // c_i^dagger, the conjugate transpose of the generator matrix.
  QuditState apply_generator_adjoint(int i, const QuditState& s) const;
  QuditState apply_projector(int k, const QuditState& s) const;
  // Rightmost letter acts first.
  QuditState apply_word(const GeneratorWord& w, const QuditState& s) const;
  QuditState apply_element(const AlgebraElement& x, const QuditState& s) const;

  // c_2^{a_1} c_4^{a_2} ... c_{2n}^{a_n} |0, ..., 0>.
  QuditState ordered_basis_vector(const Digits& digits) const;

 private:
  QuditState shift(int k, const QuditState& s, bool odd) const;
  void require_qudit(int k) const;

  AlgebraContext ctx_;
};

QuditState ground_state(const AlgebraContext& ctx);
QuditState basis_state(const AlgebraContext& ctx, const Digits& digits);

QuditState apply_even(int k, const QuditState& s);
QuditState apply_odd(int k, const QuditState& s);
QuditState apply_projector(int k, const QuditState& s);
QuditState apply_word(const GeneratorWord& w, const QuditState& s);
QuditState apply_element(const AlgebraElement& x, const QuditState& s);
QuditState ordered_basis_vector(const AlgebraContext& ctx, const Digits& digits);

// sum over shared indices of conj(a) * b; conjugate-linear in the first slot.
CycloScalar scalar_product(const QuditState& a, const QuditState& b);

using Matrix = std::vector<std::vector<CycloScalar>>;

// Column j is the image of the j-th basis state.
Matrix dense_matrix(const AlgebraContext& ctx,
                    const std::function<QuditState(const QuditState&)>& op,
                    std::uint64_t cap = kDefaultDenseCap);
Matrix dense_matrix(const AlgebraElement& x, std::uint64_t cap = kDefaultDenseCap);
Matrix dense_matrix(const Representation& rep, const AlgebraElement& x,
                    std::uint64_t cap = kDefaultDenseCap);

Matrix matmul(const Matrix& a, const Matrix& b);

// Gram matrix of the ordered basis vectors.
Matrix gram_matrix(const Representation& rep, std::uint64_t cap = kDefaultDenseCap);

}  // namespace gca
