#pragma once

// Canonical text forms, readable back by gca::parse.
//
//   scalar   sums of  [r *] [q^a *] [zeta *] ...         e.g. "-1/2 * q^2 * zeta"
//   element  sums of  [r *] [q^a *] [zeta *] c[i]^e ...  e.g. "q^2 * c[1] c[2]"
//   state    sums of  [r *] [q^a *] [zeta *] |a1,...,an> e.g. "zeta * |1,0>"
//
// Element coefficients write omega^k as q^{k div 2} zeta^{k mod 2} (times -1
// when zeta = -omega), so q exponents lie in [0, N). Scalars and state
// amplitudes use the shortest +-q^a zeta^b form instead; for odd N zeta is
// itself a power of q, and the shortest form keeps zeta visible.

#include <string>

#include "gca/cyclo.hpp"
#include "gca/rep.hpp"
#include "gca/symbolic.hpp"

namespace gca {

std::string print_canonical(const CycloScalar& s, const AlgebraContext& ctx);
std::string print_canonical(const AlgebraElement& x);
std::string print_canonical(const QuditState& v);

// "|a1,...,an>"
std::string ket_label(const Digits& digits);

}  // namespace gca
