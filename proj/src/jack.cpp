#include "gaiotto/jack.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "gaiotto/cache.hpp"
#include "gaiotto/errors.hpp"
#include "gaiotto/field.hpp"
#include "gaiotto/ratfunc.hpp"
#include "gaiotto/serialize.hpp"

namespace gaiotto {

namespace {

std::vector<std::size_t> extension_order(const std::vector<Partition>& parts, LinearExtension order) {
  std::vector<std::size_t> idx(parts.size());
  std::iota(idx.begin(), idx.end(), 0);
  if (order == LinearExtension::Lexicographic) {
    // canonical order is reverse-lexicographic
    std::reverse(idx.begin(), idx.end());
  } else {
    std::vector<Partition> conj;
    conj.reserve(parts.size());
    for (const auto& p : parts) conj.push_back(conjugate(p));
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return conj[b] < conj[a]; });
  }
  return idx;
}

template <class F>
std::vector<F> times(const Matrix<F>& g, const std::vector<F>& v) {
  return g.apply(v);
}

template <class F>
void fill_power_sum(JackTable<F>& t) {
  const auto& m2p = transition_table(t.degree, Direction::MonomialToPower).matrix;
  const std::size_t n = t.partitions.size();
  Matrix<F> conv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m2p(i, j).is_zero()) conv(i, j) = F(m2p(i, j));
  t.power_sum = t.monomial * conv;
}

std::string parameter_digest(const Json& param) {
  return DiskCache::content_hash(param).substr(0, 16);
}

template <class F>
Json jack_entries(const JackTable<F>& t) {
  Json rows = Json::array();
  const std::size_t n = t.partitions.size();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(to_json(t.monomial(i, j)));
    rows.push_back(std::move(row));
  }
  Json norms = Json::array();
  for (const auto& x : t.norms) norms.push_back(to_json(x));
  Json e;
  e["monomial"] = std::move(rows);
  e["norms"] = std::move(norms);
  return e;
}

template <class F>
std::optional<JackTable<F>> jack_from_doc(const Json& doc, int degree, const F& b) {
  if (doc.value("kind", "") != "jack" || doc.value("degree", -1) != degree ||
      doc.value("parameter", Json()) != to_json(b))
    return std::nullopt;
  const Json& e = doc["entries"];
  JackTable<F> t;
  t.degree = degree;
  t.b = b;
  t.partitions = canonical_partitions(degree);
  const std::size_t n = t.partitions.size();
  if (!e.contains("monomial") || !e.contains("norms") || e["monomial"].size() != n ||
      e["norms"].size() != n)
    return std::nullopt;
  t.monomial = Matrix<F>(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = e["monomial"][i];
    if (row.size() != n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) t.monomial(i, j) = scalar_from_json<F>(row[j]);
    t.norms.push_back(scalar_from_json<F>(e["norms"][i]));
  }
  fill_power_sum(t);
  return t;
}

}  // namespace

template <class F>
JackTable<F> build_jack_table(int degree, const F& b, LinearExtension order) {
  JackTable<F> t;
  t.degree = degree;
  t.b = b;
  t.partitions = canonical_partitions(degree);
  const std::size_t n = t.partitions.size();
  const Matrix<F> gram = monomial_gram_matrix(degree, b);

  std::vector<std::vector<F>> p(n);  // P_λ on m, by canonical index
  std::vector<std::vector<F>> gp(n); // gram · P_λ
  t.norms.assign(n, F());
  std::vector<std::size_t> done;
  for (std::size_t lam : extension_order(t.partitions, order)) {
    std::vector<F> v(n);
    v[lam] = F(1);
    for (std::size_t mu : done) {
      const F& ip = gp[mu][lam];
      if (ip.is_zero()) continue;
      const F c = ip / t.norms[mu];
      for (std::size_t j = 0; j < n; ++j)
        if (!p[mu][j].is_zero()) v[j] -= c * p[mu][j];
    }
    gp[lam] = times(gram, v);
    if (gp[lam][lam].is_zero())
      throw DegenerateParameter("vanishing Jack norm for " + t.partitions[lam].str() +
                                " at b = " + field_str(b));
    t.norms[lam] = gp[lam][lam];
    p[lam] = std::move(v);
    done.push_back(lam);
  }
  t.monomial = Matrix<F>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.monomial(i, j) = p[i][j];
  fill_power_sum(t);
  return t;
}

template <class F>
std::shared_ptr<const JackTable<F>> jack_table(int degree, const F& b) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, std::shared_ptr<const JackTable<F>>> tables;
  const std::string param = field_str(b);
  std::lock_guard lock(mu);
  auto& slot = tables[{degree, param}];
  if (slot) return slot;

  const Json param_json = to_json(b);
  const std::string key =
      "jack-" + field_tag(b) + "-d" + std::to_string(degree) + "-" + parameter_digest(param_json);
  const auto disk = active_disk_cache();
  if (disk) {
    if (auto doc = disk->load(key)) {
      if (auto t = jack_from_doc<F>(*doc, degree, b)) {
        slot = std::make_shared<const JackTable<F>>(std::move(*t));
        return slot;
      }
    }
  }
  auto built = std::make_shared<const JackTable<F>>(build_jack_table(degree, b));
  if (disk) {
    Json header;
    header["kind"] = "jack";
    header["degree"] = degree;
    header["mode"] = field_tag(b);
    header["parameter"] = param_json;
    disk->store(key, std::move(header), jack_entries(*built));
  }
  slot = built;
  return slot;
}

template <class F>
SymFunc<F> jack(const Partition& lambda, const F& b, int cap) {
  if (lambda.size() > cap) throw DegreeCapExceeded(lambda.size(), cap);
  const auto t = jack_table(lambda.size(), b);
  SymFunc<F> out(Basis<F>::monomial(), cap);
  const std::size_t i = t->index(lambda);
  for (std::size_t j = 0; j < t->partitions.size(); ++j)
    out.set(t->partitions[j], t->monomial(i, j));
  return out;
}

template <class F>
F pieri_p1_closed(const Partition& lambda, const Partition& mu, const F& beta) {
  if (lambda.size() != mu.size() + 1 || !contained_in(mu, lambda))
    throw NotOneBoxCover(lambda.str() + " does not cover " + mu.str() + " by one box");
  int row = 1;
  while (lambda.row(row) == mu.row(row)) ++row;
  const int li = lambda.row(row);
  F result(1);
  for (int i = 1; i < row; ++i) {
    const F d(lambda.row(i) - li);
    const F k(row - i);
    result *= (d + beta * (k + F(1))) / (d + F(1) + beta * k);
    result *= (d + F(1) + beta * (k - F(1))) / (d + beta * k);
  }
  return result;
}

template <class F>
std::map<Partition, F> pieri_power_sum(const Partition& mu, int k, const F& b) {
  if (k < 1) throw std::invalid_argument("power sum index must be positive");
  const int d = mu.size() + k;
  std::map<Partition, F> f;  // p_k·P_μ in power sums
  if (mu.empty()) {
    f.emplace(Partition{k}, F(1));
  } else {
    const auto small = jack_table(mu.size(), b);
    const std::size_t i = small->index(mu);
    for (std::size_t j = 0; j < small->partitions.size(); ++j)
      if (!small->power_sum(i, j).is_zero())
        f.emplace(with_part(small->partitions[j], k), small->power_sum(i, j));
  }
  const auto big = jack_table(d, b);
  std::map<Partition, F> weighted;
  for (const auto& [rho, c] : f)
    weighted.emplace(rho, c * F(Rational(z_of(rho))) * pow_of(b, rho.length()));

  std::map<Partition, F> out;
  for (std::size_t l = 0; l < big->partitions.size(); ++l) {
    F ip;
    for (const auto& [rho, w] : weighted) {
      const F& a = big->power_sum(l, canonical_index(rho));
      if (!a.is_zero()) ip += w * a;
    }
    if (!ip.is_zero()) out.emplace(big->partitions[l], ip / big->norms[l]);
  }
  return out;
}

template <class F>
std::map<Partition, F> pieri_p2(const Partition& nu, const F& b) {
  static std::mutex mu;
  static std::map<std::pair<Partition, std::string>, std::map<Partition, F>> memo;
  const std::pair<Partition, std::string> key{nu, field_str(b)};
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto value = pieri_power_sum(nu, 2, b);
  std::lock_guard lock(mu);
  return memo.emplace(key, std::move(value)).first->second;
}

template <class F>
F jack_norm_closed(const Partition& nu, const F& b) {
  F result(1);
  for (const auto& box : boxes(nu)) {
    const auto [a, l] = arm_leg(nu, box.row, box.col);
    const F den = b * F(a) + F(l + 1);
    if (den.is_zero())
      throw DegenerateParameter("Jack norm denominator vanishes for " + nu.str());
    result *= (b * F(a + 1) + F(l)) / den;
  }
  return result;
}

template <class F>
F jack_norm_swapped_orientation(const Partition& nu, const F& b) {
  F result(1);
  for (const auto& box : boxes(nu)) {
    const auto [a, l] = arm_leg(nu, box.row, box.col);
    const F den = F(a) + b * F(l) + b;
    if (den.is_zero())
      throw DegenerateParameter("Jack norm denominator vanishes for " + nu.str());
    result *= (F(a) + b * F(l) + F(1)) / den;
  }
  return result;
}

template <class F>
std::map<Partition, F> jack_reexpand(const Partition& lambda, const F& from, const F& to) {
  const int d = lambda.size();
  const auto src = jack_table(d, from);
  const auto dst = jack_table(d, to);
  const std::size_t n = src->partitions.size();
  const Matrix<F> inv = inverse(dst->monomial);
  const std::size_t i = src->index(lambda);
  std::map<Partition, F> out;
  for (std::size_t nu = 0; nu < n; ++nu) {
    F g;
    for (std::size_t j = 0; j < n; ++j)
      if (!src->monomial(i, j).is_zero() && !inv(j, nu).is_zero())
        g += src->monomial(i, j) * inv(j, nu);
    if (!g.is_zero()) out.emplace(src->partitions[nu], std::move(g));
  }
  return out;
}

#define GAIOTTO_INSTANTIATE_JACK(F)                                                      \
  template JackTable<F> build_jack_table(int, const F&, LinearExtension);                \
  template std::shared_ptr<const JackTable<F>> jack_table(int, const F&);                \
  template SymFunc<F> jack(const Partition&, const F&, int);                             \
  template F pieri_p1_closed(const Partition&, const Partition&, const F&);              \
  template std::map<Partition, F> pieri_power_sum(const Partition&, int, const F&);      \
  template std::map<Partition, F> pieri_p2(const Partition&, const F&);                  \
  template F jack_norm_closed(const Partition&, const F&);                               \
  template F jack_norm_swapped_orientation(const Partition&, const F&);                  \
  template std::map<Partition, F> jack_reexpand(const Partition&, const F&, const F&);

GAIOTTO_INSTANTIATE_JACK(Rational)
GAIOTTO_INSTANTIATE_JACK(RatFunc)

}  // namespace gaiotto
