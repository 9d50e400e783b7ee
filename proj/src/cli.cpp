#include "gaiotto/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "gaiotto/agt.hpp"
#include "gaiotto/cache.hpp"
#include "gaiotto/errors.hpp"
#include "gaiotto/field.hpp"
#include "gaiotto/identities.hpp"
#include "gaiotto/identity_test.hpp"
#include "gaiotto/jack.hpp"
#include "gaiotto/nekrasov.hpp"
#include "gaiotto/serialize.hpp"
#include "gaiotto/virops.hpp"
#include "gaiotto/whittaker.hpp"

namespace gaiotto {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  Json json = Json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int status = kExitPass;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"[] \n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.json.dump() << "\n";
    return;
  }
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
      out << "\n";
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
    return;
  }
  std::vector<std::size_t> width(r.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], cells[i].size());
  };
  measure(r.header);
  for (const auto& row : r.rows) measure(row);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "");
      if (i + 1 < cells.size())
        out << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
      else
        out << cells[i];
    }
    out << "\n";
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
}

Rational parse_q(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw UsageError(what + ": not a rational number: '" + text + "'");
  }
}

std::vector<Rational> parse_list(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_q(item, what));
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int d = std::stoi(text);
      return {d, d};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("degree range must look like 0..4: '" + text + "'");
  }
}

void check_cap(int d, const std::string& what) {
  if (d < 0) throw UsageError(what + " must be nonnegative");
  if (d > kMaxDegreeCap)
    throw UsageError(what + " = " + std::to_string(d) + " exceeds the ceiling " +
                     std::to_string(kMaxDegreeCap));
}

Partition parse_shape(const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// --- coefficient commands ---------------------------------------------------

struct CoeffOptions {
  int dmax = 0;
  std::string beta;
  std::string u;
  std::string theta = "0";
  bool symbolic = false;
  std::string method = "recursive";
  bool check = false;
};

template <class F>
Report coefficient_report(const WhittakerExpansion<F>& e, bool check) {
  Report r;
  r.json["beta"] = to_json(e.beta);
  r.json["u"] = to_json(e.u);
  if (e.kind == WhittakerKind::NonDegenerate) r.json["theta"] = to_json(e.theta);
  Json degrees = Json::array();
  r.header = {"degree", "partition", "coefficient"};
  for (int n = 0; n <= e.cap; ++n) {
    Json coeffs = Json::object();
    for (const auto& lambda : canonical_partitions(n)) {
      coeffs[lambda.str()] = to_json(e.at(lambda));
      r.rows.push_back({std::to_string(n), lambda.str(), field_str(e.at(lambda))});
    }
    Json d;
    d["degree"] = n;
    d["coefficients"] = std::move(coeffs);
    degrees.push_back(std::move(d));
  }
  r.json["degrees"] = std::move(degrees);
  if (check) {
    const PropertyReport p = whittaker_property_check(e, e.cap);
    Json failures = Json::array();
    for (const auto& f : p.failures) failures.push_back(f.relation);
    r.json["property"] = {{"checked", p.checked}, {"failures", failures}, {"pass", p.ok()}};
    if (!p.ok()) r.status = kExitVerificationFailure;
  }
  return r;
}

template <class F>
Report run_coefficients(const CoeffOptions& o, const F& beta, const F& u, const F& theta, bool whittaker) {
  if (whittaker) return coefficient_report(whittaker_coeffs_recursive(o.dmax, beta, u, theta), o.check);
  if (o.method == "closed") return coefficient_report(gaiotto_coeffs_closed(o.dmax, beta, u), o.check);
  return coefficient_report(gaiotto_coeffs_recursive(o.dmax, beta, u), o.check);
}

Report coefficients_command(const CoeffOptions& o, bool whittaker) {
  check_cap(o.dmax, "--dmax");
  const Rational u = parse_q(o.u, "--u");
  const Rational theta = parse_q(o.theta, "--theta");
  if (o.symbolic) {
    if (!o.beta.empty()) throw UsageError("--beta cannot be combined with --symbolic");
    return run_coefficients<RatFunc>(o, RatFunc::variable(), RatFunc(u), RatFunc(theta), whittaker);
  }
  if (o.beta.empty()) throw UsageError("--beta is required unless --symbolic is given");
  return run_coefficients<Rational>(o, parse_q(o.beta, "--beta"), u, theta, whittaker);
}

// --- jack-table and pieri ----------------------------------------------------

template <class F>
Report jack_report(int degree, const F& b, const std::string& basis) {
  const auto t = jack_table(degree, b);
  const auto& m = basis == "power-sum" ? t->power_sum : t->monomial;
  Report r;
  r.json["degree"] = degree;
  r.json["b"] = to_json(b);
  r.json["basis"] = basis;
  Json rows = Json::object();
  Json norms = Json::object();
  r.header = {"lambda", "mu", "coefficient"};
  for (std::size_t i = 0; i < t->partitions.size(); ++i) {
    Json row = Json::object();
    for (std::size_t j = 0; j < t->partitions.size(); ++j) {
      if (m(i, j).is_zero()) continue;
      row[t->partitions[j].str()] = to_json(m(i, j));
      r.rows.push_back({t->partitions[i].str(), t->partitions[j].str(), field_str(m(i, j))});
    }
    rows[t->partitions[i].str()] = std::move(row);
    norms[t->partitions[i].str()] = to_json(t->norms[i]);
  }
  r.json["rows"] = std::move(rows);
  r.json["norms"] = std::move(norms);
  return r;
}

template <class F>
Report pieri_report(const Partition& mu, int k, const F& beta) {
  const F b = F(1) / beta;
  const auto oracle = pieri_power_sum(mu, k, b);
  Report r;
  r.json["mu"] = to_json(mu);
  r.json["k"] = k;
  r.json["beta"] = to_json(beta);
  Json coeffs = Json::object();
  for (const auto& [lambda, c] : oracle) coeffs[lambda.str()] = to_json(c);
  r.json["coefficients"] = std::move(coeffs);
  if (k == 1) {
    r.header = {"lambda", "inner_product", "closed_form"};
    Json closed = Json::object();
    bool agree = true;
    for (const auto& lambda : grow_by_one(mu)) {
      const F c = pieri_p1_closed(lambda, mu, beta);
      closed[lambda.str()] = to_json(c);
      auto it = oracle.find(lambda);
      const F o = it == oracle.end() ? F() : it->second;
      agree = agree && o == c;
      r.rows.push_back({lambda.str(), field_str(o), field_str(c)});
    }
    agree = agree && oracle.size() <= closed.size();
    r.json["closed"] = std::move(closed);
    r.json["agree"] = agree;
    if (!agree) r.status = kExitVerificationFailure;
  } else {
    r.header = {"lambda", "inner_product"};
    for (const auto& [lambda, c] : oracle) r.rows.push_back({lambda.str(), field_str(c)});
  }
  return r;
}

// --- gauge side ---------------------------------------------------------------

GaugeParams gauge_from(const std::string& eps1, const std::string& eps2, const std::string& a, int r) {
  GaugeParams gp{parse_q(eps1, "--eps1"), parse_q(eps2, "--eps2"), parse_list(a, "--a")};
  if (gp.rank() != r)
    throw UsageError("--a lists " + std::to_string(gp.rank()) + " values but r = " + std::to_string(r));
  try {
    gp.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return gp;
}

Report nekrasov_command(const GaugeParams& gp, const std::string& degrees) {
  const auto [lo, hi] = parse_range(degrees);
  check_cap(hi, "--degrees upper end");
  if (lo < 0 || lo > hi) throw UsageError("bad degree range " + degrees);
  Report r;
  r.header = {"d", "value"};
  for (int d = lo; d <= hi; ++d) {
    try {
      const Rational z = z_degree(d, gp);
      r.json[std::to_string(d)] = to_json(z);
      r.rows.push_back({std::to_string(d), z.str()});
    } catch (const VanishingDenominator& e) {
      r.json[std::to_string(d)] = {{"error", e.what()}};
      r.rows.push_back({std::to_string(d), std::string("error: ") + e.what()});
      r.status = kExitUsage;
    }
  }
  return r;
}

Report agt_command(const GaugeParams& gp, int dmin, int dmax, bool alt, const std::string& pairing) {
  check_cap(dmax, "--dmax");
  const AgtContext ctx = params_from_gauge(gp);
  const AgtReport rep =
      agt_check(dmax, ctx, pairing == "literal" ? Pairing::Literal : Pairing::Conjugate, alt);
  Report r;
  r.header = {"d", "lhs", "rhs", "pass"};
  if (alt) r.header.insert(r.header.begin() + 3, "alt");
  bool any_error = false, any_fail = false;
  for (const auto& d : rep.degrees) {
    if (d.d < dmin) continue;
    Json entry = Json::object();
    entry["lhs"] = d.lhs ? to_json(*d.lhs) : Json();
    entry["rhs"] = d.rhs ? to_json(*d.rhs) : Json();
    if (alt) entry["alt"] = d.alt ? to_json(*d.alt) : Json();
    entry["pass"] = d.pass;
    if (!d.error.empty()) entry["error"] = d.error;
    r.json["d=" + std::to_string(d.d)] = std::move(entry);
    std::vector<std::string> row{std::to_string(d.d), d.lhs ? d.lhs->str() : "-",
                                 d.rhs ? d.rhs->str() : "-"};
    if (alt) row.push_back(d.alt ? d.alt->str() : "-");
    row.push_back(d.pass ? "true" : (d.error.empty() ? "false" : "error: " + d.error));
    r.rows.push_back(std::move(row));
    any_error = any_error || !d.error.empty();
    any_fail = any_fail || !d.pass;
  }
  r.status = any_error ? kExitUsage : (any_fail ? kExitVerificationFailure : kExitPass);
  return r;
}

// --- verification commands ----------------------------------------------------

Report identity_command(int max_size, const std::string& mode, std::uint64_t seed, int trials) {
  check_cap(max_size, "--max-size");
  const bool sampled = mode == "sampled";
  const IdentityReport rep =
      verify_identities(max_size, sampled ? IdentityMode::Sampled : IdentityMode::Symbolic, seed, trials);
  Report r;
  r.json["mode"] = mode;
  r.json["max_size"] = max_size;
  if (sampled) {
    r.json["seed"] = seed;
    r.json["trials"] = trials;
  }
  r.json["partitions"] = rep.partitions;
  Json failures = Json::array();
  r.header = {"partition", "identity"};
  for (const auto& f : rep.failures) {
    failures.push_back({{"partition", to_json(f.lambda)}, {"identity", f.identity}});
    r.rows.push_back({f.lambda.str(), f.identity});
  }
  r.json["failures"] = std::move(failures);
  r.json["pass"] = rep.ok();
  if (!rep.ok()) r.status = kExitVerificationFailure;
  return r;
}

Report virasoro_command(int dmax, int range, int points, std::uint64_t seed, const std::string& beta_s,
                        const std::string& u_s) {
  check_cap(dmax, "--dmax");
  if (range < 0 || range > dmax) throw UsageError("--range must lie in [0, dmax]");
  std::vector<std::pair<Rational, Rational>> samples;
  if (!beta_s.empty() || !u_s.empty()) {
    if (beta_s.empty() || u_s.empty()) throw UsageError("--beta and --u must be given together");
    samples.emplace_back(parse_q(beta_s, "--beta"), parse_q(u_s, "--u"));
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < points; ++i) {
      Rational b = random_rational(rng);
      Rational u = random_rational(rng);
      samples.emplace_back(b, u);
    }
  }
  Report r;
  r.json["seed"] = seed;
  r.json["dmax"] = dmax;
  r.json["range"] = range;
  r.header = {"beta", "u", "bracket", "e_split"};
  Json pts = Json::array();
  bool all = true;
  for (const auto& [beta, u] : samples) {
    if (beta.is_zero()) throw UsageError("--beta must be nonzero");
    bool bracket = true;
    for (int m = -range; m <= range; ++m)
      for (int n = -range; n <= range; ++n) bracket = bracket && virasoro_bracket_holds(m, n, beta, u, dmax);
    const bool split = e_operator(beta, dmax) == e_operator_split(beta, u, dmax);
    pts.push_back({{"beta", to_json(beta)},
                   {"u", to_json(u)},
                   {"c", to_json(central_charge(beta))},
                   {"h", to_json(highest_weight(beta, u))},
                   {"bracket", bracket},
                   {"e_split", split}});
    r.rows.push_back({beta.str(), u.str(), bracket ? "true" : "false", split ? "true" : "false"});
    all = all && bracket && split;
  }
  r.json["points"] = std::move(pts);
  r.json["pass"] = all;
  if (!all) r.status = kExitVerificationFailure;
  return r;
}

Report cache_command(const std::string& action) {
  const auto disk = active_disk_cache();
  if (!disk)
    throw UsageError("no cache directory: pass --cache-dir or set " + std::string(kCacheDirEnv));
  Report r;
  r.json["directory"] = disk->directory().string();
  if (action == "clear") {
    const std::size_t n = disk->clear();
    r.json["removed"] = n;
    r.header = {"removed"};
    r.rows.push_back({std::to_string(n)});
    return r;
  }
  Json entries = Json::array();
  r.header = {"key", "bytes", "intact"};
  for (const auto& e : disk->inspect()) {
    entries.push_back({{"key", e.key}, {"bytes", e.bytes}, {"intact", e.intact}});
    r.rows.push_back({e.key, std::to_string(e.bytes), e.intact ? "true" : "false"});
  }
  r.json["entries"] = std::move(entries);
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Whittaker-vector, Jack and AGT computations", "gaiotto"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string cache_dir;
  std::uint64_t seed = 1;
  app.add_option("--format", format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--cache-dir", cache_dir, std::string("table cache directory (default: $") + kCacheDirEnv + ")");
  app.add_option("--seed", seed, "seed for randomized sampling");

  CoeffOptions co;
  auto add_coeff_options = [&](CLI::App* sub, bool whittaker) {
    sub->add_option("--dmax", co.dmax, "degree cap")->required();
    sub->add_option("--beta", co.beta, "beta as p/q");
    sub->add_option("--u", co.u, "u as p/q")->required();
    sub->add_flag("--symbolic", co.symbolic, "keep beta as a formal variable");
    sub->add_flag("--check", co.check, "verify the Whittaker property with the Virasoro operators");
    if (whittaker)
      sub->add_option("--theta", co.theta, "L_2 eigenvalue")->required();
    else
      sub->add_option("--method", co.method, "recursive or closed")
          ->check(CLI::IsMember({"recursive", "closed"}));
  };
  auto* gaiotto_cmd = app.add_subcommand("gaiotto-coeffs", "Gaiotto-state coefficients on the Jack basis");
  add_coeff_options(gaiotto_cmd, false);
  auto* whittaker_cmd = app.add_subcommand("whittaker-coeffs", "non-degenerate Whittaker coefficients");
  add_coeff_options(whittaker_cmd, true);

  int degree = 0;
  std::string b_text, basis = "monomial";
  bool symbolic = false;
  auto* jack_cmd = app.add_subcommand("jack-table", "Jack functions of one degree");
  jack_cmd->add_option("--degree", degree)->required();
  jack_cmd->add_option("--b", b_text, "Jack parameter as p/q");
  jack_cmd->add_flag("--symbolic", symbolic, "keep b as a formal variable");
  jack_cmd->add_option("--basis", basis)->check(CLI::IsMember({"monomial", "power-sum"}));

  std::string mu_text, beta_text;
  int k = 1;
  auto* pieri_cmd = app.add_subcommand("pieri", "p_k P_mu on the Jack basis at parameter 1/beta");
  pieri_cmd->add_option("--mu", mu_text, "partition, e.g. 2,1")->required();
  pieri_cmd->add_option("--k", k)->check(CLI::IsMember({1, 2}));
  pieri_cmd->add_option("--beta", beta_text);
  pieri_cmd->add_flag("--symbolic", symbolic);

  std::string eps1, eps2, a_text, degrees = "0..4", pairing = "conjugate";
  int r = 2, dmax = 4, dmin = 1;
  bool alt = false;
  auto* nek_cmd = app.add_subcommand("nekrasov", "Nekrasov partition function degree by degree");
  nek_cmd->add_option("--r", r);
  nek_cmd->add_option("--eps1", eps1)->required();
  nek_cmd->add_option("--eps2", eps2)->required();
  nek_cmd->add_option("--a", a_text, "comma-separated Coulomb parameters")->required();
  nek_cmd->add_option("--degrees", degrees, "range such as 0..4");

  auto* agt_cmd = app.add_subcommand("agt-check", "degree-wise AGT equality");
  agt_cmd->add_option("--eps1", eps1)->required();
  agt_cmd->add_option("--eps2", eps2)->required();
  agt_cmd->add_option("--a", a_text)->required();
  agt_cmd->add_option("--dmax", dmax);
  agt_cmd->add_option("--dmin", dmin);
  agt_cmd->add_flag("--alt", alt, "also evaluate the reexpansion form");
  agt_cmd->add_option("--pairing", pairing)->check(CLI::IsMember({"conjugate", "literal"}));

  int max_size = 8, trials = 5;
  std::string mode = "symbolic";
  auto* id_cmd = app.add_subcommand("identity-check", "corner-sum identities F1 and F2");
  id_cmd->add_option("--max-size", max_size);
  id_cmd->add_option("--mode", mode)->check(CLI::IsMember({"symbolic", "sampled"}));
  id_cmd->add_option("--trials", trials);

  int range = 3, points = 10;
  std::string u_text;
  dmax = 8;
  auto* vir_cmd = app.add_subcommand("virasoro-check", "Virasoro relations of the transported modes");
  int vir_dmax = 8;
  vir_cmd->add_option("--dmax", vir_dmax);
  vir_cmd->add_option("--range", range, "check |m|, |n| <= range");
  vir_cmd->add_option("--points", points);
  vir_cmd->add_option("--beta", beta_text);
  vir_cmd->add_option("--u", u_text);

  std::string action;
  auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the table cache");
  cache_cmd->add_option("action", action)->required()->check(CLI::IsMember({"inspect", "clear"}));

  std::vector<std::string> argv_store{"gaiotto"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "gaiotto: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!cache_dir.empty()) set_cache_directory(std::filesystem::path(cache_dir));

  try {
    Report rep;
    if (gaiotto_cmd->parsed()) {
      rep = coefficients_command(co, false);
    } else if (whittaker_cmd->parsed()) {
      rep = coefficients_command(co, true);
    } else if (jack_cmd->parsed()) {
      check_cap(degree, "--degree");
      if (symbolic)
        rep = jack_report(degree, RatFunc::variable(), basis);
      else if (b_text.empty())
        throw UsageError("--b is required unless --symbolic is given");
      else
        rep = jack_report(degree, parse_q(b_text, "--b"), basis);
    } else if (pieri_cmd->parsed()) {
      const Partition mu = parse_shape(mu_text);
      check_cap(mu.size() + k, "|mu| + k");
      if (symbolic)
        rep = pieri_report(mu, k, RatFunc::variable());
      else if (beta_text.empty())
        throw UsageError("--beta is required unless --symbolic is given");
      else
        rep = pieri_report(mu, k, parse_q(beta_text, "--beta"));
    } else if (nek_cmd->parsed()) {
      rep = nekrasov_command(gauge_from(eps1, eps2, a_text, r), degrees);
    } else if (agt_cmd->parsed()) {
      rep = agt_command(gauge_from(eps1, eps2, a_text, 2), dmin, dmax, alt, pairing);
    } else if (id_cmd->parsed()) {
      rep = identity_command(max_size, mode, seed, trials);
    } else if (vir_cmd->parsed()) {
      rep = virasoro_command(vir_dmax, range, points, seed, beta_text, u_text);
    } else if (cache_cmd->parsed()) {
      rep = cache_command(action);
    }
    emit(rep, format, out);
    return rep.status;
  } catch (const UsageError& e) {
    err << "gaiotto: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "gaiotto: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gaiotto
