#include "gaiotto/agt.hpp"

#include "gaiotto/errors.hpp"
#include "gaiotto/field.hpp"
#include "gaiotto/jack.hpp"
#include "gaiotto/virops.hpp"
#include "gaiotto/whittaker.hpp"

namespace gaiotto {

AgtContext params_from_gauge(const GaugeParams& gp) {
  gp.validate();
  if (gp.rank() != 2) throw std::invalid_argument("the AGT dictionary needs rank 2");
  AgtContext ctx;
  ctx.gp = gp;
  const Rational& e1 = gp.eps1;
  const Rational& e2 = gp.eps2;
  const Rational da = gp.a[1] - gp.a[0];
  ctx.beta = -e1 / e2;
  ctx.h = ((e1 + e2) * (e1 + e2) - da * da) / (Rational(4) * e1 * e2);
  ctx.c = central_charge(ctx.beta);
  ctx.u = (-(e1 + e2) + da) / e2;
  ctx.u_prime = (-(e1 + e2) - da) / e2;
  ctx.x_per_lambda4 = (e1 * e2) * (e1 * e2);
  return ctx;
}

namespace {

std::vector<Rational> coefficient_vector(int d, const Rational& beta, const Rational& u) {
  const auto e = gaiotto_coeffs_recursive(d, beta, u);
  std::vector<Rational> out;
  for (const auto& lambda : canonical_partitions(d)) out.push_back(e.at(lambda));
  return out;
}

// ⟨P_λ^{(1/β)}, P_μ^{(1/β)}⟩_{−2/β} for λ, μ ⊢ d.
Matrix<Rational> pairing_matrix(int d, const Rational& beta) {
  const auto t = jack_table(d, Rational(1) / beta);
  const Rational b = Rational(-2) / beta;
  const auto& parts = t->partitions;
  const std::size_t n = parts.size();
  std::vector<Rational> w(n);
  for (std::size_t r = 0; r < n; ++r)
    w[r] = Rational(z_of(parts[r])) * pow_of(b, parts[r].length());
  Matrix<Rational> q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s;
      for (std::size_t r = 0; r < n; ++r)
        if (!t->power_sum(i, r).is_zero() && !t->power_sum(j, r).is_zero())
          s += t->power_sum(i, r) * t->power_sum(j, r) * w[r];
      q(i, j) = s;
    }
  return q;
}

}  // namespace

Rational agt_lhs_degree(int d, const AgtContext& ctx, Pairing pairing) {
  if (d == 0) return Rational(1);
  const auto ket = coefficient_vector(d, ctx.beta, ctx.u);
  const auto bra =
      pairing == Pairing::Conjugate ? coefficient_vector(d, ctx.beta, ctx.u_prime) : ket;
  const Matrix<Rational> q = pairing_matrix(d, ctx.beta);
  Rational total;
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < bra.size(); ++j) total += ket[i] * bra[j] * q(i, j);
  return total;
}

Rational agt_rhs_degree(int d, const AgtContext& ctx) {
  return pow_of(ctx.x_per_lambda4, d) * z_degree(d, ctx.gp);
}

Rational agt_alt_degree(int d, const AgtContext& ctx) {
  if (d == 0) return Rational(1);
  const auto ket = coefficient_vector(d, ctx.beta, ctx.u);
  const auto bra = coefficient_vector(d, ctx.beta, ctx.u_prime);
  const Rational from = Rational(1) / ctx.beta;
  const Rational to = Rational(-2) / ctx.beta;
  const auto& parts = canonical_partitions(d);
  std::vector<std::map<Partition, Rational>> gamma;
  for (const auto& lambda : parts) gamma.push_back(jack_reexpand(lambda, from, to));
  Rational total;
  for (const auto& nu : parts) {
    Rational left, right;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto it = gamma[i].find(nu);
      if (it == gamma[i].end()) continue;
      left += ket[i] * it->second;
      right += bra[i] * it->second;
    }
    if (left.is_zero() || right.is_zero()) continue;
    total += left * right * jack_norm_closed(nu, to);
  }
  return total;
}

bool AgtReport::ok() const {
  for (const auto& r : degrees)
    if (!r.pass) return false;
  return true;
}

AgtReport agt_check(int d_max, const AgtContext& ctx, Pairing pairing, bool with_alt) {
  AgtReport report;
  for (int d = 0; d <= d_max; ++d) {
    AgtDegreeResult r;
    r.d = d;
    auto attempt = [&](auto&& side, std::optional<Rational>& slot) {
      try {
        slot = side();
      } catch (const Error& e) {
        if (!r.error.empty()) r.error += "; ";
        r.error += e.what();
      }
    };
    attempt([&] { return agt_lhs_degree(d, ctx, pairing); }, r.lhs);
    attempt([&] { return agt_rhs_degree(d, ctx); }, r.rhs);
    if (with_alt) attempt([&] { return agt_alt_degree(d, ctx); }, r.alt);
    r.pass = r.error.empty() && *r.lhs == *r.rhs && (!with_alt || *r.alt == *r.lhs);
    report.degrees.push_back(std::move(r));
  }
  return report;
}

}  // namespace gaiotto
