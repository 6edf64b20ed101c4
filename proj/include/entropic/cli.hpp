#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "json.hpp"

#include "entropic/entropy.hpp"
#include "entropic/error.hpp"
#include "entropic/half_int.hpp"
#include "entropic/specfun.hpp"
#include "entropic/su11.hpp"
#include "entropic/su2.hpp"

namespace entropic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Slack below this fails a sweep with exit code 1.
inline constexpr double kCliSlackTolerance = 1e-10;

enum class Command { dmat, su2_check, su2_tsallis, su11_check, hyp2f1 };
enum class OutputFormat { csv, json };

inline std::string_view to_string(Command c) {
  switch (c) {
    case Command::dmat: return "dmat";
    case Command::su2_check: return "su2-check";
    case Command::su2_tsallis: return "su2-tsallis";
    case Command::su11_check: return "su11-check";
    case Command::hyp2f1: return "hyp2f1";
  }
  return "unknown";
}

/// Shortest-round-trip-safe decimal: 17 significant digits.
inline std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);  // -0 prints as 0
  return buf;
}

inline double parse_real(std::string_view text, std::string_view what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto r = std::from_chars(first, last, v);
  if (text.empty() || r.ec != std::errc{} || r.ptr != last || !std::isfinite(v)) {
    throw DomainError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

/// Parses "1", "2i", "-i", "1+2i", "0.5-1e-3i".
inline Complex parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw DomainError("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, "complex number"), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, "complex number"), parse_real(im, "complex number")};
}

/// Inclusive sweep grid "start:stop:count".
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  static Grid parse(std::string_view text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw DomainError("grid must look like start:stop:count");
    Grid g;
    g.start = parse_real(text.substr(0, c1), "grid start");
    g.stop = parse_real(text.substr(c1 + 1, c2 - c1 - 1), "grid stop");
    const auto count_text = text.substr(c2 + 1);
    long long n = 0;
    const auto r = std::from_chars(count_text.data(), count_text.data() + count_text.size(), n);
    if (r.ec != std::errc{} || r.ptr != count_text.data() + count_text.size() || n < 1) {
      throw DomainError("grid count must be an integer >= 1");
    }
    g.count = static_cast<std::size_t>(n);
    return g;
  }

  static Grid single(double x) { return {x, x, 1}; }

  std::vector<double> points() const {
    std::vector<double> out(count);
    if (count == 1) {
      out[0] = start;
      return out;
    }
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = start + step * static_cast<double>(i);
    out.back() = stop;
    return out;
  }
};

/// Parsed command line. Numeric fields stay strings until the command validates them.
struct RunConfig {
  Command command = Command::dmat;
  std::optional<std::string> j;
  std::optional<std::string> m;
  std::optional<std::string> k;
  std::optional<std::string> s;
  std::optional<std::string> theta;
  std::optional<std::string> t;
  std::optional<std::string> grid;
  std::optional<double> q;
  int sigma = 0;
  std::string series = "discrete";
  std::string lattice = "integer";
  std::size_t truncation = 64;
  double eps = 1e-10;
  OutputFormat format = OutputFormat::csv;
  std::string output;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::optional<std::string> c;
  std::optional<std::string> z;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json o;
    o["command"] = std::string(to_string(command));
    const auto put = [&](const char* key, const std::optional<std::string>& v) {
      if (v) o[key] = *v;
    };
    put("j", j);
    put("m", m);
    put("k", k);
    put("s", s);
    put("theta", theta);
    put("t", t);
    put("grid", grid);
    if (q) o["q"] = *q;
    if (command == Command::su11_check) {
      o["series"] = series;
      o["sigma"] = sigma;
      o["lattice"] = lattice;
      o["truncation"] = truncation;
      o["eps"] = eps;
    }
    put("a", a);
    put("b", b);
    put("c", c);
    put("z", z);
    return o;
  }
};

namespace detail {

inline const std::string& require(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw DomainError(std::string("missing required option --") + flag);
  return *v;
}

/// A table of cells; numbers are kept as doubles for JSON and formatted for CSV.
struct Cell {
  std::variant<double, std::string, long long> v;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        std::visit(
            [&](const auto& x) {
              using T = std::decay_t<decltype(x)>;
              if constexpr (std::is_same_v<T, double>) out << fmt_double(x);
              else out << x;
            },
            row[i].v);
      }
      out << '\n';
    }
  }

  void write_json(std::ostream& out, const RunConfig& config) const {
    nlohmann::ordered_json doc;
    doc["config"] = config.to_json();
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json r;
      for (std::size_t i = 0; i < row.size(); ++i) std::visit([&](const auto& x) { r[header[i]] = x; }, row[i].v);
      doc["rows"].push_back(std::move(r));
    }
    out << doc.dump(2) << '\n';
  }
};

inline void emit(const Table& table, const RunConfig& config, std::ostream& out) {
  std::ostringstream buffer;
  if (config.format == OutputFormat::json) table.write_json(buffer, config);
  else table.write_csv(buffer);
  if (config.output.empty()) {
    out << buffer.str();
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + config.output + "'");
  file << buffer.str();
}

inline std::vector<double> sweep_points(const RunConfig& config, const char* single_flag) {
  const auto& single = std::string_view(single_flag) == "t" ? config.t : config.theta;
  if (config.grid && single) throw DomainError(std::string("give either --grid or --") + single_flag + ", not both");
  if (config.grid) return Grid::parse(*config.grid).points();
  if (single) return {parse_real(*single, single_flag)};
  throw DomainError(std::string("missing --grid or --") + single_flag);
}

inline int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace detail

/// Full d-matrix: rows m', columns m, both ascending.
inline int cmd_dmat(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const HalfInt j = HalfInt::parse(detail::require(config.j, "j"));
    const double theta = parse_real(detail::require(config.theta, "theta"), "theta");
    if (j.doubled() < 0) throw DomainError("spin j must be nonnegative");
    const DenseMatrix d = dmatrix(j, theta);
    detail::Table table;
    table.header.push_back("m_prime");
    for (HalfInt m = -j; m <= j; m = m + 1) table.header.push_back(m.to_string());
    for (std::size_t r = 0; r < d.rows(); ++r) {
      std::vector<detail::Cell> row{{(-j + static_cast<int>(r)).to_string()}};
      for (std::size_t c = 0; c < d.cols(); ++c) row.push_back({d(r, c)});
      table.rows.push_back(std::move(row));
    }
    detail::emit(table, config, out);
    return kExitOk;
  });
}

/// Shannon sweep over theta; also accepts --theta for a single point.
inline int cmd_su2_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const HalfInt j = HalfInt::parse(detail::require(config.j, "j"));
    const HalfInt m = HalfInt::parse(detail::require(config.m, "m"));
    const auto points = sweep({j, m, detail::sweep_points(config, "theta"), std::nullopt});
    detail::Table table{{"theta", "h_joint", "h1", "h2", "lhs", "slack"}, {}};
    bool violated = false;
    for (const auto& p : points) {
      const auto& r = p.report;
      table.rows.push_back({{p.theta}, {r.h_joint}, {r.h_first}, {r.h_second}, {r.lhs()}, {r.slack}});
      violated = violated || r.violated(kCliSlackTolerance);
    }
    detail::emit(table, config, out);
    return violated ? kExitViolation : kExitOk;
  });
}

/// Tsallis sweep; asserted only for q > 1, otherwise the mode column says report_only.
inline int cmd_su2_tsallis(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (!config.q) throw DomainError("missing required option --q");
    const QParam q(*config.q);
    const HalfInt j = HalfInt::parse(detail::require(config.j, "j"));
    const HalfInt m = HalfInt::parse(detail::require(config.m, "m"));
    const auto points = sweep({j, m, detail::sweep_points(config, "theta"), q});
    detail::Table table{{"theta", "q", "h_joint", "h1", "h2", "lhs", "slack", "power_sum_gap", "mode"}, {}};
    bool violated = false;
    for (const auto& p : points) {
      const auto& r = p.report;
      table.rows.push_back({{p.theta}, {r.q}, {r.h_joint}, {r.h_first}, {r.h_second}, {r.lhs()}, {r.slack},
                            {r.power_sum_gap.value_or(0.0)}, {std::string(r.asserted ? "asserted" : "report_only")}});
      violated = violated || r.violated(kCliSlackTolerance);
    }
    detail::emit(table, config, out);
    return violated ? kExitViolation : kExitOk;
  });
}

namespace detail {

inline int su11_discrete(const RunConfig& config, std::ostream& out, SeriesKind kind) {
  const HalfInt k_half = HalfInt::parse(require(config.k, "k"));
  if (!k_half.is_integer()) throw DomainError("--k must be an integer");
  const int k = k_half.to_int();
  const HalfInt m = HalfInt::parse(require(config.m, "m"));
  const auto ts = sweep_points(config, "t");
  Table table{{"t", "truncation", "captured_mass", "h_joint", "h1", "h2", "slack"}, {}};
  bool violated = false;
  for (double t : ts) {
    const auto d = discrete_series_distribution(k, m, t, config.eps, kind);
    const auto r = su11_subadditivity(d);
    table.rows.push_back({{t}, {static_cast<long long>(d.truncation)}, {d.captured_mass}, {r.h_joint}, {r.h_first},
                          {r.h_second}, {r.slack}});
    violated = violated || r.violated(kCliSlackTolerance);
  }
  emit(table, config, out);
  return violated ? kExitViolation : kExitOk;
}

inline int su11_report_only(const RunConfig& config, std::ostream& out, const std::function<SeriesReport(double)>& eval) {
  if (config.truncation == 0) throw DimensionError("--truncation must be positive");
  const auto ts = sweep_points(config, "t");
  Table table{{"t", "truncation", "raw_mass", "h_joint", "h1", "h2", "slack", "mode"}, {}};
  bool violated = false;
  for (double t : ts) {
    const SeriesReport s = eval(t);
    const auto& r = s.report;
    table.rows.push_back({{t}, {static_cast<long long>(s.truncation)}, {s.raw_mass}, {r.h_joint}, {r.h_first},
                          {r.h_second}, {r.slack}, {std::string("report_only")}});
    violated = violated || r.violated(kCliSlackTolerance);
  }
  emit(table, config, out);
  return violated ? kExitViolation : kExitOk;
}

}  // namespace detail

/// SU(1,1) sweep over the rapidity t (--grid, or --t for one point).
/// --series: discrete | discrete_negative | mixed | continuous.
inline int cmd_su11_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (config.series == "discrete" || config.series == "discrete_positive") {
      return detail::su11_discrete(config, out, SeriesKind::discrete_positive);
    }
    if (config.series == "discrete_negative") return detail::su11_discrete(config, out, SeriesKind::discrete_negative);
    if (config.series == "mixed") {
      const HalfInt k_half = HalfInt::parse(detail::require(config.k, "k"));
      if (!k_half.is_integer()) throw DomainError("--k must be an integer");
      const int k = k_half.to_int();
      const double m = parse_real(detail::require(config.m, "m"), "m");
      return detail::su11_report_only(config, out, [&](double t) { return mixed_series_report(k, m, t, config.truncation); });
    }
    if (config.series == "continuous") {
      const double s = parse_real(detail::require(config.s, "s"), "s");
      const double m = config.m ? parse_real(*config.m, "m") : 0.5;
      SeriesKind lattice;
      if (config.lattice == "integer") lattice = SeriesKind::continuous_integer;
      else if (config.lattice == "half_integer") lattice = SeriesKind::continuous_half_integer;
      else throw DomainError("--lattice must be integer or half_integer");
      return detail::su11_report_only(
          config, out, [&](double t) { return continuous_series_report(s, m, config.sigma, t, config.truncation, lattice); });
    }
    throw DomainError("unknown --series '" + config.series + "'");
  });
}

/// One row: real and imaginary part of 2F1(a, b; c; z).
inline int cmd_hyp2f1(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Complex a = parse_complex(detail::require(config.a, "a"));
    const Complex b = parse_complex(detail::require(config.b, "b"));
    const Complex c = parse_complex(detail::require(config.c, "c"));
    const Complex z = parse_complex(detail::require(config.z, "z"));
    const Complex v = entropic::hyp2f1(a, b, c, z);
    detail::Table table{{"re", "im"}, {{{v.real()}, {v.imag()}}}};
    detail::emit(table, config, out);
    return kExitOk;
  });
}

inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::dmat: return cmd_dmat(config, out, err);
    case Command::su2_check: return cmd_su2_check(config, out, err);
    case Command::su2_tsallis: return cmd_su2_tsallis(config, out, err);
    case Command::su11_check: return cmd_su11_check(config, out, err);
    case Command::hyp2f1: return cmd_hyp2f1(config, out, err);
  }
  err << "error: unknown command\n";
  return kExitUsage;
}

}  // namespace entropic::cli
