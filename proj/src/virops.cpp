#include "gaiotto/virops.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "gaiotto/errors.hpp"
#include "gaiotto/field.hpp"
#include "gaiotto/ratfunc.hpp"

namespace gaiotto {

template <class F>
GradedOperator<F>::GradedOperator(int shift, int cap)
    : shift_(shift), cap_(cap), blocks_(static_cast<std::size_t>(cap + 1)) {
  if (cap < 0) throw std::invalid_argument("negative degree cap");
  for (int d = 0; d <= cap; ++d)
    if (target_in_range(d))
      blocks_[static_cast<std::size_t>(d)].emplace(canonical_partitions(d - shift).size(),
                                                   canonical_partitions(d).size());
}

template <class F>
bool GradedOperator<F>::has_block(int d) const {
  return d >= 0 && d <= cap_ && blocks_[static_cast<std::size_t>(d)].has_value();
}

template <class F>
const Matrix<F>& GradedOperator<F>::block(int d) const {
  if (!has_block(d)) throw std::out_of_range("operator has no block at degree " + std::to_string(d));
  return *blocks_[static_cast<std::size_t>(d)];
}

template <class F>
Matrix<F>& GradedOperator<F>::block(int d) {
  if (!has_block(d)) throw std::out_of_range("operator has no block at degree " + std::to_string(d));
  return *blocks_[static_cast<std::size_t>(d)];
}

template <class F>
SymFunc<F> GradedOperator<F>::apply(const SymFunc<F>& f) const {
  if (f.cap() > cap_ && f.max_degree() > cap_) throw DegreeCapExceeded(f.max_degree(), cap_);
  const SymFunc<F> g = to_power_sum(f);
  SymFunc<F> out(Basis<F>::power_sum(), cap_);
  for (int d = 0; d <= std::min(cap_, g.max_degree()); ++d) {
    const auto& terms = g.degree(d);
    if (terms.empty() || !has_block(d)) continue;
    const auto& src = canonical_partitions(d);
    std::vector<F> x(src.size());
    for (const auto& [lambda, c] : terms) x[canonical_index(lambda)] = c;
    const std::vector<F> y = block(d).apply(x);
    const auto& dst = canonical_partitions(d - shift_);
    for (std::size_t i = 0; i < y.size(); ++i) out.add(dst[i], y[i]);
  }
  return out;
}

template <class F>
GradedOperator<F>& GradedOperator<F>::operator+=(const GradedOperator& o) {
  if (shift_ != o.shift_ || cap_ != o.cap_) throw std::invalid_argument("operator shape mismatch");
  for (int d = 0; d <= cap_; ++d)
    if (has_block(d)) block(d) += o.block(d);
  return *this;
}

template <class F>
GradedOperator<F>& GradedOperator<F>::operator-=(const GradedOperator& o) {
  if (shift_ != o.shift_ || cap_ != o.cap_) throw std::invalid_argument("operator shape mismatch");
  for (int d = 0; d <= cap_; ++d)
    if (has_block(d)) block(d) -= o.block(d);
  return *this;
}

template <class F>
GradedOperator<F>& GradedOperator<F>::operator*=(const F& s) {
  for (int d = 0; d <= cap_; ++d)
    if (has_block(d)) block(d) *= s;
  return *this;
}

template <class F>
bool GradedOperator<F>::operator==(const GradedOperator& o) const {
  return shift_ == o.shift_ && cap_ == o.cap_ && blocks_ == o.blocks_;
}

template <class F>
GradedOperator<F> GradedOperator<F>::identity(int cap) {
  GradedOperator op(0, cap);
  for (int d = 0; d <= cap; ++d) op.block(d) = Matrix<F>::identity(canonical_partitions(d).size());
  return op;
}

template <class F>
GradedOperator<F> GradedOperator<F>::degree_operator(int cap) {
  GradedOperator op = identity(cap);
  for (int d = 0; d <= cap; ++d) op.block(d) *= F(d);
  return op;
}

template <class F>
GradedOperator<F> GradedOperator<F>::multiplication(int k, int cap) {
  if (k < 1) throw std::invalid_argument("power sum index must be positive");
  GradedOperator op(-k, cap);
  for (int d = 0; d + k <= cap; ++d) {
    const auto& src = canonical_partitions(d);
    for (std::size_t j = 0; j < src.size(); ++j)
      op.block(d)(canonical_index(with_part(src[j], k)), j) = F(1);
  }
  return op;
}

template <class F>
GradedOperator<F> compose(const GradedOperator<F>& a, const GradedOperator<F>& b) {
  if (a.cap() != b.cap()) throw std::invalid_argument("operator caps differ");
  GradedOperator<F> out(a.shift() + b.shift(), a.cap());
  for (int d = 0; d <= a.cap(); ++d) {
    if (!out.has_block(d) || !b.has_block(d)) continue;
    const int mid = d - b.shift();
    if (!a.has_block(mid)) continue;
    out.block(d) = a.block(mid) * b.block(d);
  }
  return out;
}

template <class F>
GradedOperator<F> commutator(const GradedOperator<F>& a, const GradedOperator<F>& b) {
  return compose(a, b) - compose(b, a);
}

template <class F>
GradedOperator<F> from_diff_terms(const std::vector<DiffTerm<F>>& terms, int shift, int cap) {
  GradedOperator<F> op(shift, cap);
  for (const auto& t : terms) {
    int s = 0;
    for (int k : t.annihilators) s += k;
    for (int k : t.creators) s -= k;
    if (s != shift) throw std::invalid_argument("differential term has the wrong degree shift");
  }
  for (int d = 0; d <= cap; ++d) {
    if (!op.has_block(d)) continue;
    const auto& src = canonical_partitions(d);
    Matrix<F>& m = op.block(d);
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        Partition cur = src[j];
        long factor = 1;
        for (int k : t.annihilators) {
          const int mult = cur.multiplicity(k);
          if (mult == 0) {
            factor = 0;
            break;
          }
          factor *= mult;
          cur = without_part(cur, k);
        }
        if (factor == 0) continue;
        for (int k : t.creators) cur = with_part(cur, k);
        m(canonical_index(cur), j) += t.coeff * F(factor);
      }
  }
  return op;
}

template <class F>
DiffTerm<F> transport(const ModeWord<F>& w, const F& beta) {
  DiffTerm<F> t{w.coeff, {}, {}};
  int e = w.s_power;
  for (int m : w.modes) {
    if (m == 0) throw std::invalid_argument("a_0 must be replaced by its eigenvalue");
    if (m < 0) {
      t.creators.push_back(-m);
      ++e;
    } else {
      t.annihilators.push_back(m);
      t.coeff *= F(m);
      --e;
    }
  }
  if (e % 2 != 0)
    throw std::logic_error("odd power of sqrt(beta/2) survives transport; entries would not be rational");
  t.coeff *= pow_of(beta / F(2), e / 2);
  return t;
}

template <class F>
F highest_weight(const F& beta, const F& u) {
  return u * (u - F(2) * beta + F(2)) / (F(4) * beta);
}

template <class F>
F central_charge(const F& beta) {
  return F(13) - F(6) * (beta + F(1) / beta);
}

namespace {

template <class F>
std::vector<ModeWord<F>> virasoro_words(int n, const F& beta, const F& u, int cap) {
  // α = (u/2)·s⁻¹ and ρ = ((β−1)/2)·s⁻¹ with s = √(β/2)
  const F alpha = u / F(2);
  const F rho = (beta - F(1)) / F(2);
  const F half = F(1) / F(2);
  const int range = cap + std::abs(n);
  std::vector<ModeWord<F>> words;
  for (int m = -range; m <= range; ++m) {
    const int k = n - m;
    if (std::abs(k) > range) continue;
    if (m == 0 && k == 0) {
      words.push_back({half * alpha * alpha, -2, {}});
    } else if (m == 0 || k == 0) {
      words.push_back({half * alpha, -1, {m == 0 ? k : m}});
    } else {
      words.push_back({half, 0, {std::min(m, k), std::max(m, k)}});
    }
  }
  if (n == 0)
    words.push_back({-(rho * alpha), -2, {}});
  else
    words.push_back({-(F(n + 1) * rho), -1, {n}});
  return words;
}

}  // namespace

template <class F>
const GradedOperator<F>& virasoro_mode(int n, const F& beta, const F& u, int cap) {
  if (std::abs(n) > cap) throw DegreeCapExceeded(std::abs(n), cap);
  static std::mutex mu;
  static std::map<std::tuple<int, std::string, std::string, int>, std::unique_ptr<GradedOperator<F>>>
      memo;
  std::lock_guard lock(mu);
  auto& slot = memo[{n, field_str(beta), field_str(u), cap}];
  if (!slot) {
    std::vector<DiffTerm<F>> terms;
    for (const auto& w : virasoro_words(n, beta, u, cap)) terms.push_back(transport(w, beta));
    slot = std::make_unique<GradedOperator<F>>(from_diff_terms(terms, n, cap));
  }
  return *slot;
}

template <class F>
bool virasoro_bracket_holds(int m, int n, const F& beta, const F& u, int cap) {
  auto inside = [&](int d) { return d >= 0 && d <= cap; };
  std::vector<int> degrees;
  for (int d = 0; d <= cap; ++d)
    if (inside(d - m) && inside(d - n) && inside(d - m - n)) degrees.push_back(d);
  if (degrees.empty()) return true;
  const GradedOperator<F> lhs =
      commutator(virasoro_mode(m, beta, u, cap), virasoro_mode(n, beta, u, cap));
  GradedOperator<F> rhs = virasoro_mode(m + n, beta, u, cap) * F(m - n);
  if (m + n == 0)
    rhs += GradedOperator<F>::identity(cap) * (central_charge(beta) * F(m * (m * m - 1)) / F(12));
  for (int d : degrees)
    if (!(lhs.block(d) == rhs.block(d))) return false;
  return true;
}

template <class F>
GradedOperator<F> e_operator(const F& beta, int cap) {
  std::vector<DiffTerm<F>> terms;
  for (int m = 1; m <= cap; ++m)
    for (int n = 1; m + n <= cap; ++n) {
      terms.push_back({F(m * n), {m + n}, {m, n}});
      terms.push_back({beta * F(m + n), {m, n}, {m + n}});
    }
  for (int n = 1; n <= cap; ++n) terms.push_back({(F(1) - beta) * F(n * n), {n}, {n}});
  return from_diff_terms(terms, 0, cap);
}

template <class F>
GradedOperator<F> e_operator_split(const F& beta, const F& u, int cap) {
  GradedOperator<F> out =
      GradedOperator<F>::degree_operator(cap) * (beta - F(1) - u);
  for (int n = 1; n <= cap; ++n)
    out += compose(GradedOperator<F>::multiplication(n, cap), virasoro_mode(n, beta, u, cap)) * beta;
  return out;
}

template <class F>
GradedOperator<F> cubic_hamiltonian(const F& beta, int n_vars, int cap) {
  std::vector<ModeWord<F>> words;
  for (int m = 1; m <= cap; ++m)
    for (int n = 1; m + n <= cap; ++n) {
      words.push_back({F(1), 1, {-(m + n), m, n}});  // t′ = s
      words.push_back({beta, -1, {-m, -n, m + n}});  // t/t′ = β·s⁻¹
    }
  for (int n = 1; n <= cap; ++n)
    words.push_back({F(n) * (F(1) - beta) + F(n_vars) * beta, 0, {-n, n}});
  std::vector<DiffTerm<F>> terms;
  for (const auto& w : words) terms.push_back(transport(w, beta));
  return from_diff_terms(terms, 0, cap);
}

template <class F>
F eps_eigenvalue(const Partition& lambda, const F& beta) {
  F e;
  for (int i = 1; i <= lambda.length(); ++i) {
    const int li = lambda.row(i);
    e += F(li * li) + beta * F((1 - 2 * i) * li);
  }
  return e;
}

template <class F>
F eps_eigenvalue_finite(const Partition& lambda, const F& t, int n_vars) {
  F e;
  for (int i = 1; i <= lambda.length(); ++i) {
    const int li = lambda.row(i);
    e += F(li * li) + t * F((n_vars + 1 - 2 * i) * li);
  }
  return e;
}

template <class F>
NVarPoly<F> restrict_to_variables(const SymFunc<F>& f, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("need at least one variable");
  const SymFunc<F> m = to_monomial(f);
  NVarPoly<F> out;
  for (int d = 0; d <= m.cap(); ++d)
    for (const auto& [lambda, c] : m.degree(d)) {
      if (lambda.length() > n_vars) continue;
      std::vector<int> e(lambda.parts().begin(), lambda.parts().end());
      e.resize(static_cast<std::size_t>(n_vars), 0);
      std::sort(e.begin(), e.end());
      do {
        out[e] += c;
      } while (std::next_permutation(e.begin(), e.end()));
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

template <class F>
NVarPoly<F> cs_apply(const NVarPoly<F>& f, int n_vars, const F& t) {
  const auto n = static_cast<std::size_t>(n_vars);
  for (const auto& [e, c] : f) {
    if (e.size() != n) throw std::invalid_argument("exponent vector has the wrong length");
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (e[i] == e[i + 1]) continue;
      auto s = e;
      std::swap(s[i], s[i + 1]);
      auto it = f.find(s);
      if (it == f.end() || !(it->second == c))
        throw NonSymmetricInput("polynomial is not symmetric under x" + std::to_string(i + 1) +
                                " <-> x" + std::to_string(i + 2));
    }
  }
  NVarPoly<F> out;
  for (const auto& [e, c] : f) {
    long diag = 0;
    for (int k : e) diag += static_cast<long>(k) * k;
    if (diag != 0) out[e] += c * F(diag);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const int a = e[i], b = e[j];
        if (a <= b) continue;
        // the partner monomial with x_i, x_j swapped carries the same c
        const F w = c * t * F(a - b);
        auto put = [&](int ei, int ej, const F& v) {
          auto g = e;
          g[i] = ei;
          g[j] = ej;
          out[g] += v;
        };
        put(a, b, w);
        put(b, a, w);
        for (int r = 1; r < a - b; ++r) put(a - r, b + r, w * F(2));
      }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

#define GAIOTTO_INSTANTIATE_VIROPS(F)                                                          \
  template class GradedOperator<F>;                                                            \
  template GradedOperator<F> compose(const GradedOperator<F>&, const GradedOperator<F>&);      \
  template GradedOperator<F> commutator(const GradedOperator<F>&, const GradedOperator<F>&);   \
  template GradedOperator<F> from_diff_terms(const std::vector<DiffTerm<F>>&, int, int);       \
  template DiffTerm<F> transport(const ModeWord<F>&, const F&);                                \
  template const GradedOperator<F>& virasoro_mode(int, const F&, const F&, int);               \
  template F highest_weight(const F&, const F&);                                               \
  template F central_charge(const F&);                                                         \
  template bool virasoro_bracket_holds(int, int, const F&, const F&, int);                      \
  template GradedOperator<F> e_operator(const F&, int);                                        \
  template GradedOperator<F> e_operator_split(const F&, const F&, int);                        \
  template GradedOperator<F> cubic_hamiltonian(const F&, int, int);                            \
  template F eps_eigenvalue(const Partition&, const F&);                                       \
  template F eps_eigenvalue_finite(const Partition&, const F&, int);                           \
  template NVarPoly<F> restrict_to_variables(const SymFunc<F>&, int);                          \
  template NVarPoly<F> cs_apply(const NVarPoly<F>&, int, const F&);

GAIOTTO_INSTANTIATE_VIROPS(Rational)
GAIOTTO_INSTANTIATE_VIROPS(RatFunc)

}  // namespace gaiotto
