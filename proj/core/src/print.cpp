#include "gca/print.hpp"

#include <optional>
#include <vector>

#include "gca/error.hpp"

namespace gca {

namespace {

struct PrintedTerm {
  Rational coeff;
  std::vector<std::string> factors;
};

std::string magnitude(const Rational& r) {
  Rational a = abs(r);
  return a.get_den() == 1 ? a.get_num().get_str() : a.get_str();
}

enum class PhaseStyle {
  // omega^k as q^{k div 2} zeta^{k mod 2}: q exponents in [0, N), zeta at most once.
  QNormalized,
  // Shortest of +-q^a zeta^b; prefers zeta over the equal power of q.
  Shortest,
};

struct Phase {
  bool negative = false;
  int q_exp = 0;
  bool has_zeta = false;
};

Phase decompose(int k, const AlgebraContext& ctx, PhaseStyle style) {
  if (style == PhaseStyle::QNormalized) {
    Phase p{false, k / 2, k % 2 == 1};
    if (p.has_zeta && ctx.zeta_sign() < 0) p.negative = true;
    return p;
  }
  // Solve N [negative] + zeta_exp [has_zeta] + 2 q_exp = k (mod 2N); cost = q_exp + has_zeta.
  std::optional<Phase> best;
  for (int neg = 0; neg < 2; ++neg) {
    for (int z = 0; z < 2; ++z) {
      long long rest = k - static_cast<long long>(neg) * ctx.N - static_cast<long long>(z) * ctx.zeta_exp;
      rest %= ctx.order();
      if (rest < 0) rest += ctx.order();
      if (rest % 2 != 0) continue;
      Phase p{neg == 1, static_cast<int>(rest / 2), z == 1};
      const auto cost = [](const Phase& x) { return 4 * (x.q_exp + x.has_zeta) + 2 * x.negative; };
      if (!best || cost(p) < cost(*best)) best = p;
    }
  }
  return *best;
}

// Splits a scalar into signed rational * q^a * zeta^b pieces, one per omega power.
std::vector<PrintedTerm> phase_terms(const CycloScalar& s, const AlgebraContext& ctx,
                                     PhaseStyle style) {
  if (s.order() != ctx.order()) throw ContextMismatch("scalar order does not match context");
  std::vector<PrintedTerm> out;
  for (const auto& [k, c] : s.terms()) {
    const Phase p = decompose(k, ctx, style);
    PrintedTerm t{p.negative ? Rational(-c) : c, {}};
    if (p.q_exp == 1) t.factors.emplace_back("q");
    if (p.q_exp > 1) t.factors.push_back("q^" + std::to_string(p.q_exp));
    if (p.has_zeta) t.factors.emplace_back("zeta");
    out.push_back(std::move(t));
  }
  return out;
}

std::string join(const std::vector<PrintedTerm>& terms, const std::string& zero) {
  if (terms.empty()) return zero;
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const PrintedTerm& t = terms[i];
    const bool negative = t.coeff < 0;
    if (i == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string body;
    if (abs(t.coeff) != 1 || t.factors.empty()) body = magnitude(t.coeff);
    for (const auto& f : t.factors) body += (body.empty() ? "" : " * ") + f;
    out += body;
  }
  return out;
}

}  // namespace

std::string ket_label(const Digits& digits) {
  std::string out = "|";
  for (std::size_t i = 0; i < digits.size(); ++i) out += (i ? "," : "") + std::to_string(digits[i]);
  return out + ">";
}

std::string print_canonical(const CycloScalar& s, const AlgebraContext& ctx) {
  return join(phase_terms(s, ctx, PhaseStyle::Shortest), "0");
}

std::string print_canonical(const AlgebraElement& x) {
  std::vector<PrintedTerm> terms;
  for (const auto& [exps, coeff] : x.terms()) {
    std::string gens;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!gens.empty()) gens += ' ';
      gens += "c[" + std::to_string(i + 1) + "]";
      if (exps[i] != 1) gens += "^" + std::to_string(exps[i]);
    }
    for (PrintedTerm t : phase_terms(coeff, x.context(), PhaseStyle::QNormalized)) {
      if (!gens.empty()) t.factors.push_back(gens);
      terms.push_back(std::move(t));
    }
  }
  return join(terms, "0");
}

std::string print_canonical(const QuditState& v) {
  std::vector<PrintedTerm> terms;
  for (const auto& [flat, amp] : v.amplitudes()) {
    const std::string ket = ket_label(v.digits(flat));
    for (PrintedTerm t : phase_terms(amp, v.context(), PhaseStyle::Shortest)) {
      t.factors.push_back(ket);
      terms.push_back(std::move(t));
    }
  }
  if (terms.empty()) return "0 * " + ket_label(Digits(static_cast<std::size_t>(v.context().n), 0));
  return join(terms, "0");
}

}  // namespace gca
