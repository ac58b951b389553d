#include "qortho/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qortho/climit.hpp"
#include "qortho/operators.hpp"
#include "qortho/polynomials.hpp"

namespace qortho {

namespace {

constexpr long kCrossDegree = 20;
constexpr double kCrossTol = 1e-10;
constexpr double kSeriesTol = 1e-10;
constexpr long kLimitPolyMax = 6;
constexpr long kLimitOperatorMax = 5;
constexpr std::size_t kSpectrumPoints = 10;

VerificationReport error_record(const Task& t, const QParams& p, const std::string& what) {
  VerificationReport r;
  r.identity_id = t.identity_id;
  r.params = p;
  r.i = t.i;
  r.j = t.j;
  r.lhs = std::numeric_limits<double>::quiet_NaN();
  r.rhs = std::numeric_limits<double>::quiet_NaN();
  r.residual = std::numeric_limits<double>::quiet_NaN();
  r.status = Status::Failed;
  r.note = "error: " + what;
  return r;
}

Task single(std::string id, long i, long j, std::function<VerificationReport()> f) {
  return Task{std::move(id), i, j, [f = std::move(f)] { return std::vector<VerificationReport>{f()}; }};
}

void add_verify_tasks(std::vector<Task>& tasks, const RunConfig& c) {
  const QParams p = c.params;
  const long N = c.index_max;
  const Truncation t{};
  VerifyOptions o;
  o.tolerance = c.tolerance;
  o.precision = c.precision;
  const std::string& id = c.identity;
  auto want = [&](const char* name) { return id == "all" || id == name; };

  if (want("sears")) tasks.push_back(single("sears", 0, 0, [=] { return verify_identity_3637(p, t, o); }));
  for (long i = 0; i <= N; ++i) {
    for (long j = i; j <= N; ++j) {
      if (want("big-laguerre"))
        tasks.push_back(single("big-laguerre", i, j, [=] { return verify_big_laguerre_orthogonality(i, j, p, t, o); }));
      if (want("unitarity"))
        tasks.push_back(
            single("unitarity-rows", i, j, [=] { return verify_unitarity(RowCol::Rows, i, j, p, t, o); }));
      if (want("dual")) {
        tasks.push_back(
            single("dual-ff", i, j, [=] { return verify_dual_orthogonality(DualKind::FF, i, j, p, t, o); }));
        tasks.push_back(
            single("dual-gg", i, j, [=] { return verify_dual_orthogonality(DualKind::GG, i, j, p, t, o); }));
      }
      if (want("meixner"))
        tasks.push_back(single("meixner", i, j, [=] { return verify_meixner_orthogonality(i, j, p, t, o); }));
      if (want("meixner-negb"))
        tasks.push_back(
            single("meixner-negb", i, j, [=] { return verify_negative_b_meixner_orthogonality(i, j, p, t, o); }));
    }
    for (long j = 0; j <= N; ++j) {
      if (want("dual"))
        tasks.push_back(
            single("dual-fg", i, j, [=] { return verify_dual_orthogonality(DualKind::FG, i, j, p, t, o); }));
      if (want("eq-zero"))
        tasks.push_back(single("eq-zero", i, j, [=] { return verify_Eq_zero_identity(i, j, p, t, o); }));
    }
  }
  // Z-labelled eigenbasis: n >= 0 on the upper branch, n < 0 on the lower one.
  for (long i = -N - 1; i <= N; ++i) {
    for (long j = -N - 1; j <= N; ++j) {
      if (want("unitarity") && j >= i)
        tasks.push_back(
            single("unitarity-columns", i, j, [=] { return verify_unitarity(RowCol::Columns, i, j, p, t, o); }));
      if (want("biortho"))
        tasks.push_back(single("biortho", i, j, [=] { return verify_biorthogonality(i, j, p, t, o); }));
    }
  }
}

void add_table_tasks(std::vector<Task>& tasks, const RunConfig& c) {
  const QParams p = c.params;
  const long K = std::max(c.index_max, 8L);
  const long nmax = std::max(c.index_max, kCrossDegree);
  // Series, recurrence and generating-function routes at each spectral point.
  for (long k = 0; k <= K; ++k) {
    for (int branch : {1, -1}) {
      long label = branch > 0 ? k : -k - 1;
      tasks.push_back(Task{"cross-definition", label, nmax, [=] {
                             double x = spectral_point_z<double>(label, p);
                             auto rec = big_q_laguerre_recurrence<double>(nmax, x, p);
                             auto gen = big_q_laguerre_generating<double>(nmax, x, p);
                             std::vector<VerificationReport> out;
                             VerificationReport r;
                             r.identity_id = "cross-definition";
                             r.params = p;
                             r.i = label;
                             r.j = nmax;
                             r.tolerance = kCrossTol;
                             double worst = 0, worst_gen = 0, worst_two = 0;
                             for (long n = 0; n <= nmax; ++n) {
                               double s = big_q_laguerre<double>(n, x, p);
                               double two = big_q_laguerre_two_phi_one<double>(n, x, p);
                               double m = std::max(1.0, std::abs(two));
                               double e_rec = std::abs(s - rec[n]) / m, e_gen = std::abs(gen[n] - rec[n]) / m;
                               double e_sg = std::abs(s - gen[n]) / m;
                               worst = std::max({worst, e_rec, e_gen, e_sg});
                               worst_gen = std::max(worst_gen, std::max(e_gen, e_sg));
                               worst_two = std::max(worst_two, std::abs(s - two) / m);
                               if (n == nmax) {
                                 r.lhs = s;
                                 r.rhs = rec[n];
                                 r.extras.emplace_back("generating", gen[n]);
                                 r.extras.emplace_back("two_phi_one", two);
                               }
                             }
                             r.extras.emplace_back("x", x);
                             r.extras.emplace_back("max_generating_error", worst_gen);
                             r.extras.emplace_back("max_two_phi_one_error", worst_two);
                             r.note = "max over n <= j of pairwise differences / max(1,|P_n|); ";
                             finalize_with_residual(r, worst, true);
                             out.push_back(r);
                             return out;
                           }});
    }
  }
  tasks.push_back(single("table-c-decreasing", 0, c.index_max, [=] {
    VerificationReport r;
    r.identity_id = "table-c-decreasing";
    r.params = p;
    r.j = c.index_max;
    int up = 0;
    for (long n = 1; n <= c.index_max; ++n)
      if (!(normalization_c<double>(n, p) < normalization_c<double>(n - 1, p))) ++up;
    r.lhs = up;
    r.rhs = 0;
    r.note = "number of n with c_n >= c_{n-1}; ";
    finalize(r, true);
    return r;
  }));
}

std::vector<TableRow> build_table(const RunConfig& c) {
  const QParams p = c.params;
  const long N = c.index_max;
  std::vector<TableRow> rows;
  for (long k = 0; k <= N; ++k) {
    for (int branch : {1, -1}) {
      double x = spectral_point_z<double>(branch > 0 ? k : -k - 1, p);
      auto rec = big_q_laguerre_recurrence<double>(N, x, p);
      auto gen = big_q_laguerre_generating<double>(N, x, p);
      for (long n = 0; n <= N; ++n) {
        rows.push_back({"P", n, x, big_q_laguerre<double>(n, x, p), "series"});
        rows.push_back({"P", n, x, rec[n], "recurrence"});
        rows.push_back({"P", n, x, gen[n], "generating"});
      }
    }
  }
  for (long n = 0; n <= N; ++n)
    for (long m = 0; m <= N; ++m)
      rows.push_back({"M", n, static_cast<double>(m), q_meixner<double>(n, m, p.a, -p.b / p.a, p.q), "series"});
  for (long n = 0; n <= N; ++n)
    for (long m = 0; m <= N; ++m) {
      rows.push_back({"dual_f", n, static_cast<double>(m), dual_f<double>(n, m, p), "series"});
      rows.push_back({"dual_g", n, static_cast<double>(m), dual_g<double>(n, m, p), "series"});
    }
  for (long n = 0; n <= N; ++n) {
    rows.push_back({"c", n, static_cast<double>(n), normalization_c<double>(n, p), "closed"});
    rows.push_back({"cprime", n, static_cast<double>(n), normalization_cprime<double>(n, p), "closed"});
  }
  return rows;
}

void add_spectrum(RunResult& res, std::vector<VerificationReport>& records, const RunConfig& c) {
  const QParams p = c.params;
  const std::size_t dim = static_cast<std::size_t>(c.dim);
  auto T1 = build_A<double>(p, dim);
  auto T2 = build_A<double>(p, 2 * dim);
  res.eig_dim = eig_tridiagonal(T1);
  res.eig_2dim = eig_tridiagonal(T2);
  std::size_t npts = std::min<std::size_t>(dim, 2 * kSpectrumPoints);
  auto s = spectrum_points(p, npts);
  res.upper = s.upper;
  res.lower = s.lower;

  double norm = 0;
  for (std::size_t i = 0; i < T2.dim(); ++i) {
    double r = std::abs(T2.diag[i]) + (i > 0 ? std::abs(T2.off[i - 1]) : 0.0) + (i < T2.off.size() ? std::abs(T2.off[i]) : 0.0);
    norm = std::max(norm, r);
  }
  const double floor = 16 * std::numeric_limits<double>::epsilon() * norm;
  // Only points well inside the truncation are compared.
  const std::size_t k = std::min<std::size_t>(kSpectrumPoints, dim / 20);
  if (k == 0) return;
  auto pts = extreme_spectral_points(p, k);
  auto nearest = [](const std::vector<double>& ev, double x) {
    double best = ev.front();
    for (double e : ev)
      if (std::abs(e - x) < std::abs(best - x)) best = e;
    return best;
  };
  for (std::size_t r = 0; r < pts.size(); ++r) {
    double x = pts[r];
    double e1 = nearest(res.eig_dim, x), e2 = nearest(res.eig_2dim, x);
    double err1 = std::abs(e1 - x), err2 = std::abs(e2 - x);
    VerificationReport m;
    m.identity_id = "spectrum";
    m.params = p;
    m.i = c.dim;
    m.j = static_cast<long>(r);
    m.lhs = e1;
    m.rhs = x;
    m.tolerance = c.tolerance;
    m.extras.emplace_back("eigenvalue_2dim", e2);
    m.extras.emplace_back("error_dim", err1);
    m.extras.emplace_back("error_2dim", err2);
    finalize(m, true);
    records.push_back(m);

    VerificationReport v;
    v.identity_id = "spectrum-convergence";
    v.params = p;
    v.i = c.dim;
    v.j = static_cast<long>(r);
    v.lhs = err2;
    v.rhs = std::max(err1, floor);
    v.tolerance = 0.0;
    v.note = "error at 2*dim against error at dim (floored at rounding level); ";
    v.extras.emplace_back("rounding_floor", floor);
    finalize_with_residual(v, std::max(0.0, v.lhs - v.rhs), true);
    records.push_back(v);
  }
}

void add_limit_tasks(std::vector<Task>& tasks, const RunConfig& c) {
  LimitSweep s = LimitSweep::standard();
  s.alpha = c.alpha;
  s.beta = c.beta;
  s.x = c.x;
  const double l = (c.alpha + 1) / 2;
  for (long n = 0; n <= std::min(c.index_max, kLimitPolyMax); ++n)
    tasks.push_back(Task{"limit-polynomial", n, 0, [=] { return limit_polynomial_check(n, s.x, s).records; }});
  long rows = std::min(c.index_max, kLimitOperatorMax);
  tasks.push_back(Task{"limit-operator", rows, 0, [=] { return limit_operator_entries_check(rows, s).records; }});

  const double lambdas[] = {0.0, 0.25, 0.5, 1.0};
  const double xs_series[] = {-0.5, -0.25, 0.0, 0.25, 0.5};
  const double xs_op[] = {-0.4, 0.0, 0.2, 0.4};
  const double tol = c.tolerance;
  for (long i = 0; i < 4; ++i) {
    for (long j = 0; j < 5; ++j) {
      double lam = lambdas[i], x = xs_series[j];
      tasks.push_back(single("limit-series", i, j, [=] {
        VerificationReport r;
        r.identity_id = "limit-series";
        r.params = QParams::unchecked(0, 0, 0);
        r.i = i;
        r.j = j;
        auto sum = classical_eigenfunction_series(lam, x, l);
        double closed = classical_eigenfunction(lam, x, l);
        r.scale = std::abs(closed);
        r.lhs = sum.value / r.scale;
        r.rhs = 1.0;
        r.terms_used = sum.terms;
        r.tail_estimate = sum.tail / r.scale;
        r.tolerance = kSeriesTol;
        r.extras.emplace_back("lambda", lam);
        r.extras.emplace_back("x", x);
        r.extras.emplace_back("l", l);
        finalize(r, true);
        return r;
      }));
    }
    for (long j = 0; j < 4; ++j) {
      double lam = lambdas[i], x = xs_op[j];
      tasks.push_back(single("limit-eigenfunction", i, j, [=] {
        auto r = classical_operator_check(lam, x, l, 1e-3, tol);
        r.i = i;
        r.j = j;
        return r;
      }));
    }
  }
}

std::string fmt(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string array(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fmt(v[i]);
  return out + "]";
}

std::string utc_now() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const char* precision_str(Precision p) { return p == Precision::Double ? "double" : "extended"; }

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::Verify:
      return "verify";
    case Command::Spectrum:
      return "spectrum";
    case Command::Table:
      return "table";
    case Command::Limit:
      return "limit";
    case Command::ReportAll:
      return "report-all";
  }
  return "verify";
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"big-laguerre", "sears",   "unitarity", "dual", "meixner",
                                                 "meixner-negb", "eq-zero", "biortho",   "all"};
  return names;
}

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, const QParams& p, int jobs) {
  std::vector<std::vector<VerificationReport>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        slots[k] = tasks[k].fn();
      } catch (const std::exception& e) {
        slots[k] = {error_record(tasks[k], p, e.what())};
      }
    }
  };
  std::size_t n = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(tasks.size(), 1));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<VerificationReport> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

RunResult execute(const RunConfig& c) {
  RunResult res;
  std::vector<Task> tasks;
  const bool all = c.command == Command::ReportAll;
  if (c.command == Command::Verify || all) add_verify_tasks(tasks, c);
  if (c.command == Command::Table || all) add_table_tasks(tasks, c);
  if (c.command == Command::Limit || all) add_limit_tasks(tasks, c);
  res.records = run_tasks(tasks, c.params, c.jobs);
  if (c.command == Command::Spectrum || all) add_spectrum(res, res.records, c);
  if (c.command == Command::Table || all) res.table = build_table(c);
  sort_records(res.records);
  res.summary = summarize(res.records);
  return res;
}

int exit_code(const Summary& s) {
  if (s.failed) return 1;
  if (s.inconclusive) return 2;
  return 0;
}

std::string render_json(const RunConfig& c, const RunResult& res, const std::string& generated_at) {
  std::ostringstream o;
  o << "{\n  \"schema_version\": \"1\",\n";
  if (!generated_at.empty()) o << "  \"generated_at\": " << quote(generated_at) << ",\n";
  o << "  \"config\": {\"command\": " << quote(command_name(c.command)) << ", \"q\": " << fmt(c.params.q)
    << ", \"a\": " << fmt(c.params.a) << ", \"b\": " << fmt(c.params.b) << ", \"l\": " << fmt(c.params.l())
    << ", \"identity\": " << quote(c.identity) << ", \"index_max\": " << c.index_max << ", \"dim\": " << c.dim
    << ", \"tolerance\": " << fmt(c.tolerance) << ", \"precision\": " << quote(precision_str(c.precision))
    << ", \"format\": " << quote(c.format) << ", \"alpha\": " << fmt(c.alpha) << ", \"beta\": " << fmt(c.beta)
    << ", \"x\": " << fmt(c.x) << "},\n";
  o << "  \"records\": [";
  for (std::size_t k = 0; k < res.records.size(); ++k) {
    const auto& r = res.records[k];
    o << (k ? ",\n" : "\n") << "    {\"identity_id\": " << quote(r.identity_id) << ", \"params\": {\"q\": "
      << fmt(r.params.q) << ", \"a\": " << fmt(r.params.a) << ", \"b\": " << fmt(r.params.b) << "}, \"i\": " << r.i
      << ", \"j\": " << r.j << ", \"lhs\": " << fmt(r.lhs) << ", \"rhs\": " << fmt(r.rhs)
      << ", \"residual\": " << fmt(r.residual) << ", \"terms_used\": " << r.terms_used
      << ", \"tail_estimate\": " << fmt(r.tail_estimate) << ", \"tolerance\": " << fmt(r.tolerance)
      << ", \"scale\": " << fmt(r.scale) << ", \"passed\": " << (r.passed ? "true" : "false")
      << ", \"status\": " << quote(status_name(r.status)) << ", \"precision\": " << quote(r.precision)
      << ", \"note\": " << quote(r.note) << ", \"extras\": {";
    for (std::size_t e = 0; e < r.extras.size(); ++e)
      o << (e ? ", " : "") << quote(r.extras[e].first) << ": " << fmt(r.extras[e].second);
    o << "}}";
  }
  o << (res.records.empty() ? "],\n" : "\n  ],\n");
  if (!res.table.empty()) {
    o << "  \"table\": [";
    for (std::size_t k = 0; k < res.table.size(); ++k) {
      const auto& t = res.table[k];
      o << (k ? ",\n" : "\n") << "    {\"family\": " << quote(t.family) << ", \"n\": " << t.n
        << ", \"arg\": " << fmt(t.arg) << ", \"value\": " << fmt(t.value) << ", \"method\": " << quote(t.method)
        << "}";
    }
    o << "\n  ],\n";
  }
  if (!res.eig_dim.empty()) {
    o << "  \"spectrum\": {\"dim\": " << c.dim << ", \"upper\": " << array(res.upper)
      << ", \"lower\": " << array(res.lower) << ", \"eigenvalues_dim\": " << array(res.eig_dim)
      << ", \"eigenvalues_2dim\": " << array(res.eig_2dim) << "},\n";
  }
  o << "  \"summary\": {\"passed\": " << res.summary.passed << ", \"failed\": " << res.summary.failed
    << ", \"inconclusive\": " << res.summary.inconclusive << "}\n}\n";
  return o.str();
}

std::string render_csv(const RunConfig& c, const RunResult& res) {
  std::ostringstream o;
  if (c.command == Command::Table) {
    o << "family,n,arg,value,method\n";
    for (const auto& t : res.table)
      o << t.family << ',' << t.n << ',' << fmt(t.arg) << ',' << fmt(t.value) << ',' << t.method << '\n';
    return o.str();
  }
  o << "identity_id,i,j,lhs,rhs,residual,terms_used,tail_estimate,status\n";
  for (const auto& r : res.records)
    o << r.identity_id << ',' << r.i << ',' << r.j << ',' << fmt(r.lhs) << ',' << fmt(r.rhs) << ','
      << fmt(r.residual) << ',' << r.terms_used << ',' << fmt(r.tail_estimate) << ',' << status_name(r.status)
      << '\n';
  return o.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification suite for big q-Laguerre and q-Meixner identities", "qortho"};
  RunConfig c;
  std::string command, precision = "double";
  double q = 0.5, a = 0.5, b = -0.7;
  std::optional<double> l;
  bool no_timestamp = false;
  app.add_option("command", command, "verify | spectrum | table | limit | report-all")
      ->required()
      ->check(CLI::IsMember({"verify", "spectrum", "table", "limit", "report-all"}));
  app.add_option("--q", q, "base q in (0,1)");
  app.add_option("--a", a, "parameter a in (0,1/q)");
  app.add_option("--b", b, "parameter b < 0");
  app.add_option("--l", l, "sets a = q^(2l-1)");
  app.add_option("--identity", c.identity, "identity family for verify")->check(CLI::IsMember(identity_names()));
  app.add_option("--index-max", c.index_max, "largest index of the sweep")->check(CLI::Range(0L, 200L));
  app.add_option("--dim", c.dim, "truncation size for spectrum")->check(CLI::Range(1L, 100000L));
  app.add_option("--tol", c.tolerance, "relative tolerance")->check(CLI::PositiveNumber);
  app.add_option("--precision", precision, "double | extended")->check(CLI::IsMember({"double", "extended"}));
  app.add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", c.out_path, "output file (default stdout)");
  app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 1024));
  app.add_flag("--no-timestamp", no_timestamp, "omit generated_at");
  app.add_option("--alpha", c.alpha, "limit sweep: a(q) = q^alpha");
  app.add_option("--beta", c.beta, "limit sweep: b(q) = q^beta/(q-1)");
  app.add_option("--x", c.x, "limit sweep: polynomial argument");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  }

  try {
    if (!(q > 0.0 && q < 1.0)) throw ParameterError("q must lie in (0,1)");
    if (l) {
      if (!(*l > 0)) throw ParameterError("l must be positive");
      a = std::pow(q, 2 * *l - 1);
    }
    c.params = QParams::make(q, a, b);
    if (!(c.alpha > -1)) throw ParameterError("alpha must exceed -1");
    if (!(std::abs(c.x) < 1)) throw ParameterError("x must satisfy |x| < 1");
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  }
  c.l = l;
  c.precision = precision == "extended" ? Precision::Extended : Precision::Double;
  c.timestamp = !no_timestamp;
  if (command == "verify") c.command = Command::Verify;
  else if (command == "spectrum") c.command = Command::Spectrum;
  else if (command == "table") c.command = Command::Table;
  else if (command == "limit") c.command = Command::Limit;
  else c.command = Command::ReportAll;

  RunResult res;
  try {
    res = execute(c);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  std::string text = c.format == "csv" ? render_csv(c, res) : render_json(c, res, c.timestamp ? utc_now() : "");
  if (c.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out_path, std::ios::binary);
    f << text;
    if (!f) {
      err << "error: cannot write " << c.out_path << "\n";
      return 1;
    }
  }
  err << "passed " << res.summary.passed << ", failed " << res.summary.failed << ", inconclusive "
      << res.summary.inconclusive << "\n";
  return exit_code(res.summary);
}

}  // namespace qortho
