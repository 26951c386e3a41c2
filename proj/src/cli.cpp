#include "lue/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lue/airyfred.hpp"
#include "lue/asymptotics.hpp"
#include "lue/errors.hpp"
#include "lue/exactprob.hpp"
#include "lue/mcsample.hpp"
#include "lue/painleve.hpp"
#include "lue/version.hpp"

namespace lue::cli {

namespace {

using nlohmann::json;

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_double(v[i]);
  }
  return s;
}

std::string timestamp_now() {
  std::time_t t;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Evaluates f(i) for i < count on `threads` workers; results keep index order
// and the first failure (by index) is rethrown.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& f) {
  std::vector<std::optional<T>> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<T> result;
  result.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    result.push_back(std::move(*out[i]));
  }
  return result;
}

using Row = std::vector<Cell>;

double order_between(double d_prev, double d, double x_prev, double x) {
  if (!(d_prev > 0) || !(d > 0)) return std::nan("");
  return std::log(d_prev / d) / std::log(x / x_prev);
}

struct Options {
  unsigned threads = 1;
  std::string format = "csv";
  std::string out_path;

  int n = 0;
  std::vector<int> n_list;
  double gamma = 0.0;
  std::vector<double> alpha;
  std::vector<double> t;
  std::vector<double> s;
  std::string method = "projection";
  std::string formula;
  double step = 1e-3;
  std::optional<double> integrate_from;
  std::size_t samples = 100000;
  unsigned long long seed = 0;
  bool scaled = false;
  std::size_t grid_points = 2000;
  std::string dump_path;
  std::size_t nodes = 80;
};

exact::EnsembleParams params_of(const Options& o) { return {o.n, o.gamma}; }

Table cmd_exact(const Options& o, Manifest& m) {
  const auto params = params_of(o);
  exact::validate(params);
  if (o.alpha.empty() == o.t.empty()) throw DomainError("exact: give exactly one of --alpha or --t");
  if (o.method != "projection" && o.method != "hankel") throw DomainError("exact: --method must be projection or hankel");
  m.parameters = {{"n", std::to_string(o.n)}, {"gamma", format_double(o.gamma)}, {"method", o.method}};
  if (!o.alpha.empty()) m.parameters["alpha"] = join(o.alpha);
  else m.parameters["t"] = join(o.t);

  const bool by_alpha = !o.alpha.empty();
  const auto& grid = by_alpha ? o.alpha : o.t;
  Table table{{"alpha", "t", "log_p", "p"}, {}};
  table.rows = parallel_map<Row>(grid.size(), o.threads, [&](std::size_t i) {
    const double t = by_alpha ? 4.0 * o.n * grid[i] : grid[i];
    if (!(t > 0.0)) throw DomainError("exact: alpha and t must be positive");
    const auto lp = o.method == "hankel" ? exact::phat_hankel_oracle(params, t) : exact::phat_projection(params, t);
    return Row{t / (4.0 * o.n), t, lp.log_value, lp.probability()};
  });
  return table;
}

Table cmd_asympt(const Options& o, Manifest& m) {
  m.parameters = {{"formula", o.formula}};
  Table table;
  if (o.formula == "airy-tail") {
    if (o.s.empty()) throw DomainError("asympt: airy-tail needs --s");
    m.parameters["s"] = join(o.s);
    table.columns = {"s", "value", "remainder"};
    for (double s : o.s) table.rows.push_back({s, asympt::airy_tail(s), std::string("O(s^-3)")});
    return table;
  }
  exact::validate(params_of(o));
  if (o.alpha.empty()) throw DomainError("asympt: --alpha is required for " + o.formula);
  m.parameters["n"] = std::to_string(o.n);
  m.parameters["gamma"] = format_double(o.gamma);
  m.parameters["alpha"] = join(o.alpha);
  if (o.formula == "lemma" || o.formula == "theorem") {
    table.columns = {"n", "gamma", "alpha", "value", "remainder"};
    for (double a : o.alpha) {
      const auto r = o.formula == "lemma" ? asympt::dlnp_dalpha(o.n, o.gamma, a) : asympt::lnp_theorem(o.n, o.gamma, a);
      table.rows.push_back({static_cast<long long>(o.n), o.gamma, a, r.value, r.remainder_order});
    }
  } else if (o.formula == "small-alpha") {
    table.columns = {"n", "gamma", "alpha", "value", "value_expanded", "remainder"};
    for (double a : o.alpha)
      table.rows.push_back({static_cast<long long>(o.n), o.gamma, a, asympt::lnp_small_alpha(o.n, o.gamma, a),
                            asympt::lnp_small_alpha_expanded(o.n, o.gamma, a), std::string("o(1) as alpha->0")});
  } else {
    throw DomainError("asympt: unknown --formula " + o.formula);
  }
  return table;
}

Table cmd_compare(const Options& o, Manifest& m) {
  if (!(o.gamma > -1.0)) throw DomainError("compare: gamma must exceed -1");
  m.parameters = {{"formula", o.formula}, {"gamma", format_double(o.gamma)}};
  Table table{{"n", "gamma", "x", "exact", "asymptotic", "difference", "order"}, {}};

  if (o.formula == "small-alpha") {
    // sweep alpha at fixed n; the order column is the exponent of alpha
    if (o.n_list.size() != 1 || o.alpha.empty())
      throw DomainError("compare: small-alpha needs a single --n and an --alpha list");
    const int n = o.n_list.front();
    m.parameters["n"] = std::to_string(n);
    m.parameters["alpha"] = join(o.alpha);
    const exact::EnsembleParams p{n, o.gamma};
    exact::validate(p);
    auto rows = parallel_map<Row>(o.alpha.size(), o.threads, [&](std::size_t i) {
      const double a = o.alpha[i];
      const double ex = exact::p_scaled(p, a).log_value;
      const double as = asympt::lnp_small_alpha(n, o.gamma, a);
      return Row{static_cast<long long>(n), o.gamma, a, ex, as, std::abs(ex - as), std::nan("")};
    });
    for (std::size_t i = 1; i < rows.size(); ++i)
      rows[i][6] = order_between(std::get<double>(rows[i - 1][5]), std::get<double>(rows[i][5]),
                                 1.0 / o.alpha[i - 1], 1.0 / o.alpha[i]);
    table.rows = std::move(rows);
    return table;
  }

  if (o.n_list.empty()) throw DomainError("compare: --n list is required");
  std::string ns;
  for (std::size_t i = 0; i < o.n_list.size(); ++i) ns += (i ? "," : "") + std::to_string(o.n_list[i]);
  m.parameters["n"] = ns;

  std::vector<double> xs;
  std::function<std::pair<double, double>(int, double)> eval;
  if (o.formula == "lemma") {
    xs = o.alpha;
    m.parameters["alpha"] = join(xs);
    m.parameters["step"] = format_double(o.step);
    eval = [&](int n, double a) {
      const exact::EnsembleParams p{n, o.gamma};
      auto f = [&](double x) { return exact::p_scaled(p, x).log_value; };
      const double h = o.step;
      const double fd = (f(a - 2 * h) - 8 * f(a - h) + 8 * f(a + h) - f(a + 2 * h)) / (12 * h);
      return std::make_pair(fd, asympt::dlnp_dalpha(n, o.gamma, a).value);
    };
  } else if (o.formula == "theorem") {
    xs = o.alpha;
    m.parameters["alpha"] = join(xs);
    eval = [&](int n, double a) {
      return std::make_pair(exact::p_scaled({n, o.gamma}, a).log_value, asympt::lnp_theorem(n, o.gamma, a).value);
    };
  } else if (o.formula == "airy-chain") {
    xs = o.s.empty() ? std::vector<double>{2.0} : o.s;
    m.parameters["s"] = join(xs);
    m.parameters["nodes"] = std::to_string(o.nodes);
    eval = [&](int n, double s) {
      const double a = asympt::soft_edge_alpha(n, s);
      return std::make_pair(exact::p_scaled({n, o.gamma}, a).log_value,
                            airy::airy_fredholm_logdet(s, o.nodes).log_det);
    };
  } else {
    throw DomainError("compare: unknown --formula " + o.formula);
  }
  if (xs.empty()) throw DomainError("compare: empty alpha/s grid");

  const std::size_t nn = o.n_list.size();
  auto rows = parallel_map<Row>(xs.size() * nn, o.threads, [&](std::size_t k) {
    const double x = xs[k / nn];
    const int n = o.n_list[k % nn];
    const auto [ex, as] = eval(n, x);
    return Row{static_cast<long long>(n), o.gamma, x, ex, as, std::abs(ex - as), std::nan("")};
  });
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k % nn == 0) continue;
    rows[k][6] = order_between(std::get<double>(rows[k - 1][5]), std::get<double>(rows[k][5]),
                               o.n_list[k % nn - 1], o.n_list[k % nn]);
  }
  table.rows = std::move(rows);
  return table;
}

Table cmd_painleve(const Options& o, Manifest& m) {
  const auto params = params_of(o);
  exact::validate(params);
  if (o.t.empty()) throw DomainError("painleve: --t is required");
  m.parameters = {{"n", std::to_string(o.n)}, {"gamma", format_double(o.gamma)}, {"t", join(o.t)}};
  Table table{{"t", "sigma", "sigma_prime", "sigma_double_prime", "sigma_residual", "sigma_residual_rel", "S", "S_prime",
               "S_double_prime", "pv_residual", "pv_residual_rel", "sigma_bridge", "bridge_rel"},
              {}};
  table.rows = parallel_map<Row>(o.t.size(), o.threads, [&](std::size_t i) {
    const double t = o.t[i];
    const auto sv = exact::sigma_exact(params, t);
    const double res = painleve::sigma_form_residual(sv, o.n, o.gamma);
    const double ts2 = t * sv.sigma_double_prime;
    const auto ps = painleve::s_state_numeric(o.n, o.gamma, t);
    const double pv = painleve::pv_residual(ps, o.n, o.gamma);
    const double bridge = painleve::sigma_from_s(t, ps.S, ps.S_prime, o.n, o.gamma);
    return Row{t,  sv.sigma, sv.sigma_prime, sv.sigma_double_prime, res, std::abs(res) / (ts2 * ts2 + 1),
               ps.S, ps.S_prime, ps.S_double_prime, pv, std::abs(pv) / (1 + std::abs(ps.S_double_prime)),
               bridge, std::abs(bridge - sv.sigma) / std::max(std::abs(sv.sigma), 1e-300)};
  });

  if (o.integrate_from) {
    const double t0 = *o.integrate_from;
    m.parameters["integrate_from"] = format_double(t0);
    const auto init = exact::sigma_exact(params, t0);
    const double t1 = t0 > o.t.front() ? *std::min_element(o.t.begin(), o.t.end())
                                       : *std::max_element(o.t.begin(), o.t.end());
    const auto path = painleve::integrate_sigma_form(o.n, o.gamma, init, t1, o.t);
    table.columns.push_back("sigma_ode");
    table.columns.push_back("ode_rel");
    for (std::size_t i = 0; i < o.t.size(); ++i) {
      const double sig = std::get<double>(table.rows[i][1]);
      table.rows[i].push_back(path.samples[i].sigma);
      table.rows[i].push_back(std::abs(path.samples[i].sigma - sig) / std::max(std::abs(sig), 1e-300));
    }
  }
  return table;
}

Table cmd_mc(const Options& o, Manifest& m) {
  const auto params = params_of(o);
  exact::validate(params);
  if (o.samples < 1) throw DomainError("mc: --samples must be positive");
  m.parameters = {{"n", std::to_string(o.n)},
                  {"gamma", format_double(o.gamma)},
                  {"samples", std::to_string(o.samples)},
                  {"scaling", o.scaled ? "scaled" : "unscaled"},
                  {"grid_points", std::to_string(o.grid_points)}};
  m.has_seed = true;
  m.seed = o.seed;
  const mc::SamplerConfig cfg{params, o.samples, o.seed, o.scaled ? mc::Scaling::scaled : mc::Scaling::unscaled};
  auto draws = mc::draw_largest(cfg, o.threads);
  if (!o.dump_path.empty()) {
    std::ofstream f(o.dump_path);
    if (!f) throw DomainError("mc: cannot open dump file " + o.dump_path);
    f << "# manifest: " << manifest_json(m) << '\n';
    mc::write_samples_csv(f, cfg, draws);
  }
  double mean = 0;
  for (double v : draws) mean += v;
  mean /= static_cast<double>(draws.size());
  const mc::EmpiricalCDF ecdf(std::move(draws));
  const auto grid = mc::quantile_grid(ecdf, o.grid_points);
  const auto cdf_vals = parallel_map<double>(grid.size(), o.threads, [&](std::size_t i) {
    return o.scaled ? exact::p_scaled(params, grid[i]).probability()
                    : exact::phat_projection(params, grid[i]).probability();
  });
  const double ks = mc::ks_distance(
      ecdf,
      [&](double x) {
        const auto i = static_cast<std::size_t>(std::lower_bound(grid.begin(), grid.end(), x) - grid.begin());
        return cdf_vals.at(i);
      },
      grid);
  const double band = 1.63 / std::sqrt(static_cast<double>(o.samples));
  return Table{{"n", "gamma", "samples", "seed", "scaling", "ks", "band_99", "within_band", "mean", "q999"},
               {{static_cast<long long>(o.n), o.gamma, static_cast<long long>(o.samples),
                 std::to_string(o.seed), std::string(o.scaled ? "scaled" : "unscaled"), ks, band,
                 static_cast<long long>(ks <= band), mean, ecdf.quantile(0.999)}}};
}

Table cmd_tw(const Options& o, Manifest& m) {
  const auto s_values = o.s.empty() ? std::vector<double>{6, 8, 10} : o.s;
  m.parameters = {{"s", join(s_values)}, {"nodes", std::to_string(o.nodes)}};
  const auto fit = airy::extract_tw_constant(s_values, o.nodes);
  const double ref = asympt::tracy_widom_constant();
  Table table{{"s", "log_det", "airy_tail", "tail_difference", "c_s", "c0_fit", "b_fit", "fit_rms", "c0_reference",
               "c0_error"},
              {}};
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    const double s = s_values[i];
    const double ld = fit.c_values[i] - s * s * s / 12 - std::log(s) / 8;
    const double tail = asympt::airy_tail(s);
    table.rows.push_back({s, ld, tail, ld - tail, fit.c_values[i], fit.c0, fit.b, fit.residual_rms, ref,
                          std::abs(fit.c0 - ref)});
  }
  return table;
}

void write_table(std::ostream& out, const std::string& format, const Manifest& m, const Table& t) {
  if (format == "json") write_json(out, m, t);
  else write_csv(out, m, t);
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("LUE_THREADS"); env && *env) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string q = "\"";
  for (char c : field) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string manifest_json(const Manifest& m) {
  json j;
  j["subcommand"] = m.subcommand;
  j["parameters"] = m.parameters;
  j["version"] = m.version;
  j["seed"] = m.has_seed ? json(m.seed) : json(nullptr);
  j["timestamp"] = m.timestamp;
  return j.dump();
}

void write_csv(std::ostream& out, const Manifest& m, const Table& t) {
  out << "# manifest: " << manifest_json(m) << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_quote(t.columns[i]);
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) out << format_double(v);
            else if constexpr (std::is_same_v<V, long long>) out << v;
            else out << csv_quote(v);
          },
          row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Manifest& m, const Table& t) {
  json doc;
  doc["manifest"] = json::parse(manifest_json(m));
  doc["columns"] = t.columns;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) r[t.columns[i]] = std::isfinite(v) ? json(v) : json(nullptr);
            else r[t.columns[i]] = v;
          },
          row[i]);
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Largest-eigenvalue distribution of the Laguerre unitary ensemble", "lue"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  o.threads = default_threads();
  app.add_option("--threads", o.threads, "worker threads (default: LUE_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", o.out_path, "output file (default: stdout)");
  app.set_version_flag("--version", std::string(kVersion));

  auto* exact_cmd = app.add_subcommand("exact", "exact finite-n ln P");
  exact_cmd->add_option("--n", o.n)->required();
  exact_cmd->add_option("--gamma", o.gamma);
  exact_cmd->add_option("--alpha", o.alpha)->delimiter(',');
  exact_cmd->add_option("--t", o.t)->delimiter(',');
  exact_cmd->add_option("--method", o.method)->check(CLI::IsMember({"projection", "hankel"}));

  auto* asympt_cmd = app.add_subcommand("asympt", "large-n and tail formulas");
  asympt_cmd->add_option("--formula", o.formula)
      ->required()
      ->check(CLI::IsMember({"lemma", "theorem", "small-alpha", "airy-tail"}));
  asympt_cmd->add_option("--n", o.n);
  asympt_cmd->add_option("--gamma", o.gamma);
  asympt_cmd->add_option("--alpha", o.alpha)->delimiter(',');
  asympt_cmd->add_option("--s", o.s)->delimiter(',');

  auto* compare_cmd = app.add_subcommand("compare", "exact vs asymptotic differences and observed orders");
  compare_cmd->add_option("--formula", o.formula)
      ->required()
      ->check(CLI::IsMember({"lemma", "theorem", "small-alpha", "airy-chain"}));
  compare_cmd->add_option("--n", o.n_list)->delimiter(',');
  compare_cmd->add_option("--gamma", o.gamma);
  compare_cmd->add_option("--alpha", o.alpha)->delimiter(',');
  compare_cmd->add_option("--s", o.s)->delimiter(',');
  compare_cmd->add_option("--step", o.step, "five-point difference step in alpha (lemma)");
  compare_cmd->add_option("--nodes", o.nodes, "Airy determinant nodes (airy-chain)");

  auto* pv_cmd = app.add_subcommand("painleve", "sigma-form, PV and bridge residuals");
  pv_cmd->add_option("--n", o.n)->required();
  pv_cmd->add_option("--gamma", o.gamma);
  pv_cmd->add_option("--t", o.t)->delimiter(',')->required();
  pv_cmd->add_option("--integrate-from", o.integrate_from, "also integrate the sigma-form from this t");

  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo largest eigenvalue vs exact CDF");
  mc_cmd->add_option("--n", o.n)->required();
  mc_cmd->add_option("--gamma", o.gamma);
  mc_cmd->add_option("--samples", o.samples);
  mc_cmd->add_option("--seed", o.seed);
  mc_cmd->add_flag("--scaled", o.scaled, "weight x^gamma e^{-4nx}");
  mc_cmd->add_option("--grid-points", o.grid_points);
  mc_cmd->add_option("--dump", o.dump_path, "write the samples as CSV");

  auto* tw_cmd = app.add_subcommand("tw", "Tracy-Widom constant from the Airy determinant tail");
  tw_cmd->add_option("--s", o.s)->delimiter(',');
  tw_cmd->add_option("--nodes", o.nodes);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "lue: " << e.what() << '\n';
    return kDomainError;
  }

  Manifest m;
  m.version = kVersion;
  m.timestamp = timestamp_now();
  try {
    Table table;
    const auto* sub = app.get_subcommands().front();
    m.subcommand = sub->get_name();
    if (sub == exact_cmd) table = cmd_exact(o, m);
    else if (sub == asympt_cmd) table = cmd_asympt(o, m);
    else if (sub == compare_cmd) table = cmd_compare(o, m);
    else if (sub == pv_cmd) table = cmd_painleve(o, m);
    else if (sub == mc_cmd) table = cmd_mc(o, m);
    else table = cmd_tw(o, m);

    if (o.out_path.empty()) {
      write_table(out, o.format, m, table);
    } else {
      std::ofstream f(o.out_path);
      if (!f) throw DomainError("cannot open output file " + o.out_path);
      write_table(f, o.format, m, table);
    }
    return kSuccess;
  } catch (const DomainError& e) {
    err << "lue: domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::domain_error& e) {
    err << "lue: domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const CapabilityError& e) {
    err << "lue: unsupported: " << e.what() << '\n';
    return kDomainError;
  } catch (const ConditioningError& e) {
    err << "lue: conditioning error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const NumericalError& e) {
    err << "lue: numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const AccuracyError& e) {
    err << "lue: not converged: " << e.what() << " (coarse " << format_double(e.coarse()) << ", fine "
        << format_double(e.fine()) << ")\n";
    return kNonConvergence;
  } catch (const IntegrationError& e) {
    err << "lue: integration failed at t = " << format_double(e.location()) << ": " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::exception& e) {
    err << "lue: error: " << e.what() << '\n';
    return kNumericalError;
  }
}

}  // namespace lue::cli
