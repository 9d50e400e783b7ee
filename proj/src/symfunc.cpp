#include "gaiotto/symfunc.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "gaiotto/cache.hpp"
#include "gaiotto/errors.hpp"
#include "gaiotto/field.hpp"
#include "gaiotto/jack.hpp"
#include "gaiotto/ratfunc.hpp"

namespace gaiotto {

template <class F>
SymFunc<F>::SymFunc(Basis<F> basis, int cap)
    : basis_(std::move(basis)), cap_(cap), by_degree_(static_cast<std::size_t>(cap + 1)) {
  if (cap < 0) throw std::invalid_argument("negative degree cap");
}

template <class F>
SymFunc<F> SymFunc<F>::one(int cap) {
  return basis_element(Basis<F>::power_sum(), Partition{}, cap);
}

template <class F>
SymFunc<F> SymFunc<F>::basis_element(Basis<F> basis, const Partition& lambda, int cap) {
  SymFunc f(std::move(basis), cap);
  f.set(lambda, F(1));
  return f;
}

template <class F>
F SymFunc<F>::coeff(const Partition& lambda) const {
  if (lambda.size() > cap_) return F();
  const auto& terms = by_degree_[static_cast<std::size_t>(lambda.size())];
  auto it = terms.find(lambda);
  return it == terms.end() ? F() : it->second;
}

template <class F>
void SymFunc<F>::set(const Partition& lambda, const F& value) {
  if (lambda.size() > cap_) throw DegreeCapExceeded(lambda.size(), cap_);
  auto& terms = by_degree_[static_cast<std::size_t>(lambda.size())];
  if (value.is_zero())
    terms.erase(lambda);
  else
    terms[lambda] = value;
}

template <class F>
void SymFunc<F>::add(const Partition& lambda, const F& value) {
  if (value.is_zero()) return;
  if (lambda.size() > cap_) throw DegreeCapExceeded(lambda.size(), cap_);
  auto& terms = by_degree_[static_cast<std::size_t>(lambda.size())];
  auto [it, inserted] = terms.try_emplace(lambda, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms.erase(it);
  }
}

template <class F>
int SymFunc<F>::max_degree() const {
  for (int d = cap_; d >= 0; --d)
    if (!by_degree_[static_cast<std::size_t>(d)].empty()) return d;
  return -1;
}

template <class F>
std::size_t SymFunc<F>::term_count() const {
  std::size_t n = 0;
  for (const auto& t : by_degree_) n += t.size();
  return n;
}

template <class F>
SymFunc<F> SymFunc<F>::homogeneous_part(int d) const {
  SymFunc out(basis_, cap_);
  if (d >= 0 && d <= cap_) out.by_degree_[static_cast<std::size_t>(d)] = degree(d);
  return out;
}

template <class F>
void SymFunc<F>::check_compatible(const SymFunc& o) const {
  if (!(basis_ == o.basis_)) throw std::invalid_argument("symmetric functions in different bases");
  if (o.max_degree() > cap_) throw DegreeCapExceeded(o.max_degree(), cap_);
}

template <class F>
SymFunc<F>& SymFunc<F>::operator+=(const SymFunc& o) {
  check_compatible(o);
  for (int d = 0; d <= std::min(cap_, o.cap_); ++d)
    for (const auto& [p, c] : o.degree(d)) add(p, c);
  return *this;
}

template <class F>
SymFunc<F>& SymFunc<F>::operator-=(const SymFunc& o) {
  check_compatible(o);
  for (int d = 0; d <= std::min(cap_, o.cap_); ++d)
    for (const auto& [p, c] : o.degree(d)) add(p, -c);
  return *this;
}

template <class F>
SymFunc<F>& SymFunc<F>::operator*=(const F& s) {
  if (s.is_zero()) {
    for (auto& t : by_degree_) t.clear();
    return *this;
  }
  for (auto& t : by_degree_)
    for (auto& [p, c] : t) c *= s;
  return *this;
}

template <class F>
bool SymFunc<F>::operator==(const SymFunc& o) const {
  if (!(basis_ == o.basis_)) return false;
  const int top = std::max(max_degree(), o.max_degree());
  if (top > cap_ || top > o.cap_) return false;
  for (int d = 0; d <= top; ++d)
    if (degree(d) != o.degree(d)) return false;
  return true;
}

namespace {

using MonomialTerms = std::map<Partition, Rational>;

// m_μ · p_k in the monomial basis.
void multiply_monomial_by_power(const Partition& mu, const Rational& c, int k, MonomialTerms& out) {
  int last = -1;
  for (int v : mu.parts()) {
    if (v == last) continue;
    last = v;
    const Partition nu = with_part(without_part(mu, v), v + k);
    out[nu] += c * Rational(nu.multiplicity(v + k));
  }
  const Partition nu = with_part(mu, k);
  out[nu] += c * Rational(nu.multiplicity(k));
}

Json matrix_to_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<Matrix<Rational>> matrix_from_json(const Json& rows, std::size_t n) {
  if (!rows.is_array() || rows.size() != n) return std::nullopt;
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rational_from_json(rows[i][j]);
  }
  return m;
}

Matrix<Rational> build_power_to_monomial(int degree) {
  const auto& parts = canonical_partitions(degree);
  Matrix<Rational> m(parts.size(), parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& [nu, c] : power_sum_in_monomials(parts[i]))
      if (!c.is_zero()) m(i, canonical_index(nu)) = c;
  return m;
}

std::string transition_key(int degree, Direction direction) {
  return std::string(direction == Direction::PowerToMonomial ? "p2m" : "m2p") + "-d" +
         std::to_string(degree);
}

std::unique_ptr<TransitionTable> make_transition(int degree, Direction direction) {
  auto t = std::make_unique<TransitionTable>();
  t->degree = degree;
  t->direction = direction;
  t->partitions = canonical_partitions(degree);
  const std::string key = transition_key(degree, direction);
  const auto disk = active_disk_cache();
  if (disk) {
    if (auto doc = disk->load(key)) {
      if (auto m = matrix_from_json((*doc)["entries"], t->partitions.size())) {
        t->matrix = std::move(*m);
        return t;
      }
    }
  }
  if (direction == Direction::PowerToMonomial)
    t->matrix = build_power_to_monomial(degree);
  else
    t->matrix = inverse(transition_table(degree, Direction::PowerToMonomial).matrix);
  if (disk) {
    Json header;
    header["kind"] = "transition";
    header["direction"] = direction == Direction::PowerToMonomial ? "p_to_m" : "m_to_p";
    header["degree"] = degree;
    disk->store(key, std::move(header), matrix_to_json(t->matrix));
  }
  return t;
}

}  // namespace

std::map<Partition, Rational> power_sum_in_monomials(const Partition& rho) {
  MonomialTerms cur{{Partition{}, Rational(1)}};
  for (int k : rho.parts()) {
    MonomialTerms next;
    for (const auto& [mu, c] : cur) multiply_monomial_by_power(mu, c, k, next);
    cur = std::move(next);
  }
  std::erase_if(cur, [](const auto& kv) { return kv.second.is_zero(); });
  return cur;
}

const TransitionTable& transition_table(int degree, Direction direction) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  static std::recursive_mutex mu;
  static std::map<std::pair<int, Direction>, std::unique_ptr<TransitionTable>> tables;
  std::lock_guard lock(mu);
  auto& slot = tables[{degree, direction}];
  if (!slot) slot = make_transition(degree, direction);
  return *slot;
}

namespace {

template <class F>
SymFunc<F> apply_rational_table(const SymFunc<F>& f, Direction direction, Basis<F> target) {
  SymFunc<F> out(std::move(target), f.cap());
  for (int d = 0; d <= f.cap(); ++d) {
    const auto& terms = f.degree(d);
    if (terms.empty()) continue;
    const auto& t = transition_table(d, direction);
    for (const auto& [lambda, c] : terms) {
      const std::size_t i = canonical_index(lambda);
      for (std::size_t j = 0; j < t.partitions.size(); ++j) {
        const Rational& a = t.matrix(i, j);
        if (!a.is_zero()) out.add(t.partitions[j], c * F(a));
      }
    }
  }
  return out;
}

template <class F>
SymFunc<F> apply_jack_table(const SymFunc<F>& f, bool to_power, Basis<F> target) {
  SymFunc<F> out(std::move(target), f.cap());
  for (int d = 0; d <= f.cap(); ++d) {
    const auto& terms = f.degree(d);
    if (terms.empty()) continue;
    const auto table = jack_table(d, f.basis().jack_parameter);
    const Matrix<F>& m = to_power ? table->power_sum : table->monomial;
    for (const auto& [lambda, c] : terms) {
      const std::size_t i = canonical_index(lambda);
      for (std::size_t j = 0; j < table->partitions.size(); ++j) {
        const F& a = m(i, j);
        if (!a.is_zero()) out.add(table->partitions[j], c * a);
      }
    }
  }
  return out;
}

}  // namespace

template <class F>
SymFunc<F> p_to_m(const SymFunc<F>& f) {
  if (f.basis().kind != BasisKind::PowerSum) throw std::invalid_argument("p_to_m: not in power sums");
  return apply_rational_table(f, Direction::PowerToMonomial, Basis<F>::monomial());
}

template <class F>
SymFunc<F> m_to_p(const SymFunc<F>& f) {
  if (f.basis().kind != BasisKind::Monomial) throw std::invalid_argument("m_to_p: not in monomials");
  return apply_rational_table(f, Direction::MonomialToPower, Basis<F>::power_sum());
}

template <class F>
SymFunc<F> to_power_sum(const SymFunc<F>& f) {
  switch (f.basis().kind) {
    case BasisKind::PowerSum:
      return f;
    case BasisKind::Monomial:
      return m_to_p(f);
    case BasisKind::Jack:
      return apply_jack_table(f, true, Basis<F>::power_sum());
  }
  return f;
}

template <class F>
SymFunc<F> to_monomial(const SymFunc<F>& f) {
  switch (f.basis().kind) {
    case BasisKind::PowerSum:
      return p_to_m(f);
    case BasisKind::Monomial:
      return f;
    case BasisKind::Jack:
      return apply_jack_table(f, false, Basis<F>::monomial());
  }
  return f;
}

template <class F>
SymFunc<F> multiply_by_power_sum(const SymFunc<F>& f, int k) {
  if (k < 1) throw std::invalid_argument("power sum index must be positive");
  const SymFunc<F> g = to_power_sum(f);
  SymFunc<F> out(Basis<F>::power_sum(), f.cap());
  for (int d = 0; d <= f.cap(); ++d)
    for (const auto& [lambda, c] : g.degree(d)) out.add(with_part(lambda, k), c);
  return out;
}

template <class F>
F inner_product(const SymFunc<F>& f, const SymFunc<F>& g, const F& b) {
  const SymFunc<F> pf = to_power_sum(f);
  const SymFunc<F> pg = to_power_sum(g);
  F total;
  const int top = std::min(pf.max_degree(), pg.max_degree());
  for (int d = 0; d <= top; ++d) {
    const auto& tg = pg.degree(d);
    for (const auto& [lambda, c] : pf.degree(d)) {
      auto it = tg.find(lambda);
      if (it == tg.end()) continue;
      total += c * it->second * F(Rational(z_of(lambda))) * pow_of(b, lambda.length());
    }
  }
  return total;
}

template <class F>
Matrix<F> monomial_gram_matrix(int degree, const F& b) {
  const auto& t = transition_table(degree, Direction::MonomialToPower);
  const std::size_t n = t.partitions.size();
  std::vector<F> weight(n);
  for (std::size_t r = 0; r < n; ++r)
    weight[r] = F(Rational(z_of(t.partitions[r]))) * pow_of(b, t.partitions[r].length());
  Matrix<F> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      F s;
      for (std::size_t r = 0; r < n; ++r) {
        const Rational& a = t.matrix(i, r);
        const Rational& c = t.matrix(j, r);
        if (a.is_zero() || c.is_zero()) continue;
        s += F(a * c) * weight[r];
      }
      g(i, j) = s;
      if (i != j) g(j, i) = s;
    }
  return g;
}

#define GAIOTTO_INSTANTIATE_SYMFUNC(F)                                      \
  template class SymFunc<F>;                                                \
  template SymFunc<F> p_to_m(const SymFunc<F>&);                            \
  template SymFunc<F> m_to_p(const SymFunc<F>&);                            \
  template SymFunc<F> to_power_sum(const SymFunc<F>&);                      \
  template SymFunc<F> to_monomial(const SymFunc<F>&);                       \
  template SymFunc<F> multiply_by_power_sum(const SymFunc<F>&, int);        \
  template F inner_product(const SymFunc<F>&, const SymFunc<F>&, const F&); \
  template Matrix<F> monomial_gram_matrix(int, const F&);

GAIOTTO_INSTANTIATE_SYMFUNC(Rational)
GAIOTTO_INSTANTIATE_SYMFUNC(RatFunc)

}  // namespace gaiotto
