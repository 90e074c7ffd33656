#pragma once

// Command implementations behind the rnaknot executable. Each command writes
// a versioned CSV or JSON table to a stream and returns the process exit code.
//
// CSV layout: one comment line "# schema: rnaknot.<command> v1", a header row,
// then data rows in a fixed order. Integers are always printed in full, reals
// in fixed notation with RunConfig::precision digits after the point.

#include "rnaknot/exactcount.hpp"
#include "rnaknot/limitlaw.hpp"
#include "rnaknot/numeric.hpp"
#include "rnaknot/oracle.hpp"
#include "rnaknot/series.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rnaknot::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInvalidInput = 2,
  kCapExceeded = 3,
};

enum class Format { csv, json };

inline constexpr int kCountCap = 1000;
inline constexpr int kOracleCap = 14;

struct RunConfig {
  std::string command;
  int k = 3;
  int n = 100;
  int n_min = 5;
  int n_max = 100;
  int step = 1;
  std::string w = "1";
  int order = 30;
  std::string output;  // file (or directory for figures); empty means stdout
  Format format = Format::csv;
  int precision = 12;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Cell {
  std::string text;
  bool quoted = false;  // JSON string rather than number
};

struct Table {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void write(std::ostream& out, Format format) const {
    if (format == Format::csv) {
      out << "# schema: rnaknot." << schema << " v1\n";
      for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
      out << '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].text;
        out << '\n';
      }
      return;
    }
    out << "{\"schema\":\"rnaknot." << schema << "/1\",\"columns\":[";
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << '"' << columns[i] << '"';
    out << "],\"rows\":[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out << (r ? "," : "") << '[';
      for (std::size_t i = 0; i < rows[r].size(); ++i) {
        const Cell& c = rows[r][i];
        out << (i ? "," : "");
        if (c.quoted)
          out << '"' << c.text << '"';
        else
          out << c.text;
      }
      out << ']';
    }
    out << "]}\n";
  }
};

namespace detail {

inline Cell num(const BigInt& v) { return {v.str(), false}; }
inline Cell num(long v) { return {std::to_string(v), false}; }
inline Cell num(const Real& v, int precision) { return {format_fixed(v, precision), false}; }
inline Cell text(std::string s) { return {std::move(s), true}; }

inline void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

inline void check_k23(int k) { require(k == 2 || k == 3, "--k must be 2 or 3 for this command"); }

inline void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + " " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
}

// Gaussian columns shared by dist and figures.
struct GaussianFrame {
  Real center;
  Real sd;
  GaussianFrame(int n, const LimitConstants& c)
      : center(c.mu * n), sd(boost::multiprecision::sqrt(c.sigma2 * n)) {}
  Real z(int h) const { return (Real(h) - center) / sd; }
  Real density_at(int h) const { return normal_pdf(z(h)) / sd; }
  Real cdf_at(int h) const { return normal_cdf((Real(h) + Real(0.5) - center) / sd); }
};

}  // namespace detail

/// n, h, S'_k(n,h), S_k(n)
inline Table count_rows(int k, int n) {
  detail::require(n >= 0, "--n must be >= 0");
  detail::require(k >= 2, "--k must be >= 2");
  detail::check_cap(n, kCountCap, "n");
  const CountTable t = count_table(k, n);
  Table out{"count", {"n", "h", "structures_with_h_arcs", "total"}, {}};
  for (std::size_t h = 0; h < t.by_arcs.size(); ++h)
    out.rows.push_back({detail::num(static_cast<long>(n)), detail::num(static_cast<long>(h)),
                        detail::num(t.by_arcs[h]), detail::num(t.total)});
  return out;
}

/// h, P(X_n = h), density of N(mu n, sigma^2 n) at h, P(X_n <= h),
/// Phi((h + 1/2 - mu n) / sd).
inline Table dist_rows(int k, int n, int precision) {
  detail::check_k23(k);
  detail::require(n >= 1, "--n must be >= 1");
  detail::check_cap(n, kCountCap, "n");
  const ExactDistribution d = distribution(n, k);
  const detail::GaussianFrame g(n, limit_constants(k));
  Table out{"dist", {"h", "probability", "gaussian_density_at_h", "cdf", "gaussian_cdf"}, {}};
  Rational cumulative = 0;
  for (std::size_t h = 0; h < d.probability.size(); ++h) {
    cumulative += d.probability[h];
    const int hi = static_cast<int>(h);
    out.rows.push_back({detail::num(static_cast<long>(h)),
                        detail::num(to_real(d.probability[h]), precision),
                        detail::num(g.density_at(hi), precision),
                        detail::num(to_real(cumulative), precision),
                        detail::num(g.cdf_at(hi), precision)});
  }
  return out;
}

inline int cmd_count(const RunConfig& cfg, std::ostream& out) {
  count_rows(cfg.k, cfg.n).write(out, cfg.format);
  return kOk;
}

inline int cmd_dist(const RunConfig& cfg, std::ostream& out) {
  dist_rows(cfg.k, cfg.n, cfg.precision).write(out, cfg.format);
  return kOk;
}

inline int cmd_verify_identity(const RunConfig& cfg, std::ostream& out) {
  detail::require(cfg.k >= 2, "--k must be >= 2");
  detail::require(cfg.order >= 0, "--order must be >= 0");
  detail::check_cap(cfg.order, 200, "order");
  const Rational w = parse_rational(cfg.w);
  const IdentityCheck check = verify_identity(cfg.k, w, cfg.order);
  Table t{"verify_identity", {"k", "w", "order", "result", "first_mismatch", "lhs", "rhs"}, {}};
  std::vector<Cell> row{detail::num(static_cast<long>(cfg.k)), detail::text(w.str()),
                        detail::num(static_cast<long>(cfg.order)),
                        detail::text(check.holds ? "pass" : "mismatch")};
  if (check.holds) {
    row.insert(row.end(), {Cell{"-1"}, detail::text(""), detail::text("")});
  } else {
    row.insert(row.end(), {detail::num(static_cast<long>(*check.first_mismatch)),
                           detail::text(check.lhs_at_mismatch.str()),
                           detail::text(check.rhs_at_mismatch.str())});
  }
  t.rows.push_back(std::move(row));
  t.write(out, cfg.format);
  return check.holds ? kOk : kMismatch;
}

/// Always a flat JSON object, whatever --format says.
inline int cmd_limits(const RunConfig& cfg, std::ostream& out) {
  detail::check_k23(cfg.k);
  const LimitConstants c = limit_constants(cfg.k);
  const int p = cfg.precision;
  out << "{\"schema\":\"rnaknot.limits/1\",\"k\":" << cfg.k << ",\"mu\":" << format_fixed(c.mu, p)
      << ",\"sigma2\":" << format_fixed(c.sigma2, p) << ",\"gamma\":" << format_fixed(c.gamma, p)
      << ",\"rho\":" << format_fixed(1 / c.gamma, p)
      << ",\"unpaired_fraction\":" << format_fixed(unpaired_fraction(c.mu), p);
  if (c.subexp_exponent) out << ",\"subexp_exponent\":" << *c.subexp_exponent;
  if (c.amplitude) out << ",\"amplitude\":" << format_fixed(*c.amplitude, p);
  out << "}\n";
  return kOk;
}

/// n, S_3(n), asymptotic value, exact / asymptotic, implied amplitude.
inline int cmd_asympt(const RunConfig& cfg, std::ostream& out) {
  detail::require(cfg.n_min >= 5, "--n-min must be >= 5");
  detail::require(cfg.n_max >= cfg.n_min, "--n-max must be >= --n-min");
  detail::require(cfg.step >= 1, "--step must be >= 1");
  detail::check_cap(cfg.n_max, kCountCap, "n-max");
  StructureCounter counter(3);
  Table t{"asympt", {"n", "exact", "asymptotic", "ratio", "implied_amplitude"}, {}};
  for (int n = cfg.n_min; n <= cfg.n_max; n += cfg.step) {
    const BigInt exact = counter.total_by_double_sum(n);
    const AsymptoticValue a = asymptotic_s3(n);
    t.rows.push_back({detail::num(static_cast<long>(n)), detail::num(exact),
                      detail::num(a.value, cfg.precision),
                      detail::num(to_real(exact) / a.value, cfg.precision),
                      detail::num(implied_s3_amplitude(n, exact), cfg.precision)});
  }
  t.write(out, cfg.format);
  return kOk;
}

/// n, h, oracle count, formula count, match|mismatch for every n <= n-max.
inline int cmd_oracle_check(const RunConfig& cfg, std::ostream& out) {
  detail::require(cfg.k >= 2, "--k must be >= 2");
  detail::require(cfg.n_max >= 0, "--n-max must be >= 0");
  detail::check_cap(cfg.n_max, kOracleCap, "n-max");
  StructureCounter counter(cfg.k);
  Table t{"oracle_check", {"n", "h", "oracle", "formula", "status"}, {}};
  bool all = true;
  for (int n = 0; n <= cfg.n_max; ++n) {
    const auto hist = histogram_by_arcs(n, cfg.k, OracleMode::structures, kOracleCap);
    const CountTable table = counter.table(n);
    for (int h = 0; h <= n / 2; ++h) {
      const auto it = hist.find(h);
      const BigInt brute = it == hist.end() ? 0 : it->second;
      const bool ok = brute == table.by_arcs[h];
      all = all && ok;
      t.rows.push_back({detail::num(static_cast<long>(n)), detail::num(static_cast<long>(h)),
                        detail::num(brute), detail::num(table.by_arcs[h]),
                        detail::text(ok ? "match" : "mismatch")});
    }
  }
  t.write(out, cfg.format);
  return all ? kOk : kMismatch;
}

/// Writes the n = 100 datasets: fig3_clt.csv and fig3_llt.csv (k = 3) and
/// fig4.csv (k = 2 and 3 side by side) into the output directory.
inline int cmd_figures(const RunConfig& cfg, std::ostream& out) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.output.empty() ? fs::path("figures") : fs::path(cfg.output);
  fs::create_directories(dir);
  const int n = 100;
  const int p = cfg.precision;

  const ExactDistribution d3 = distribution(n, 3);
  const detail::GaussianFrame g3(n, limit_constants(3));
  Table clt{"fig3_clt", {"h", "z", "cdf", "gaussian_cdf"}, {}};
  Table llt{"fig3_llt", {"h", "z", "scaled_probability", "gaussian_density", "difference"}, {}};
  Rational cumulative = 0;
  for (std::size_t h = 0; h < d3.probability.size(); ++h) {
    const int hi = static_cast<int>(h);
    cumulative += d3.probability[h];
    const Real scaled = g3.sd * to_real(d3.probability[h]);
    const Real dens = normal_pdf(g3.z(hi));
    clt.rows.push_back({detail::num(static_cast<long>(h)), detail::num(g3.z(hi), p),
                        detail::num(to_real(cumulative), p), detail::num(g3.cdf_at(hi), p)});
    llt.rows.push_back({detail::num(static_cast<long>(h)), detail::num(g3.z(hi), p),
                        detail::num(scaled, p), detail::num(dens, p),
                        detail::num(scaled - dens, p)});
  }

  Table fig4{"fig4", {"k", "h", "probability", "gaussian_density_at_h"}, {}};
  for (int k : {2, 3}) {
    const ExactDistribution d = distribution(n, k);
    const detail::GaussianFrame g(n, limit_constants(k));
    for (std::size_t h = 0; h < d.probability.size(); ++h)
      fig4.rows.push_back({detail::num(static_cast<long>(k)), detail::num(static_cast<long>(h)),
                           detail::num(to_real(d.probability[h]), p),
                           detail::num(g.density_at(static_cast<int>(h)), p)});
  }

  for (const auto& [name, table] : {std::pair<const char*, const Table*>{"fig3_clt.csv", &clt},
                                    {"fig3_llt.csv", &llt},
                                    {"fig4.csv", &fig4}}) {
    std::ofstream file(dir / name);
    if (!file) throw std::runtime_error("cannot write " + (dir / name).string());
    table->write(file, Format::csv);
    out << (dir / name).string() << '\n';
  }
  return kOk;
}

/// Dispatches cfg.command, mapping exceptions to exit codes. Output goes to
/// cfg.output when set (except for figures, where it names a directory).
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    detail::require(cfg.precision >= 0 && cfg.precision <= 40, "--precision must be in [0, 40]");
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty() && cfg.command != "figures") {
      file.open(cfg.output);
      if (!file) throw std::runtime_error("cannot open " + cfg.output);
      sink = &file;
    }
    if (cfg.command == "count") return cmd_count(cfg, *sink);
    if (cfg.command == "dist") return cmd_dist(cfg, *sink);
    if (cfg.command == "verify-identity") return cmd_verify_identity(cfg, *sink);
    if (cfg.command == "limits") return cmd_limits(cfg, *sink);
    if (cfg.command == "asympt") return cmd_asympt(cfg, *sink);
    if (cfg.command == "oracle-check") return cmd_oracle_check(cfg, *sink);
    if (cfg.command == "figures") return cmd_figures(cfg, *sink);
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace rnaknot::cli
