#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankclass/classnum.hpp"
#include "rankclass/error.hpp"
#include "rankclass/identities.hpp"
#include "rankclass/overpartitions.hpp"
#include "rankclass/parallel.hpp"

namespace rankclass::cli {

namespace {

constexpr std::int64_t kMaxClassIndex = 10'000'000;
constexpr std::int64_t kMaxC4Index = 2000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw UsageError("--format must be one of json, csv, text");
}

// F and G are only defined for n >= 1; the generating functions use F(0) = 0,
// which together with H(0) = -1/12 gives G(0) = H(0) + F(0) = -1/12.
Rational f_value(std::int64_t n) { return n == 0 ? Rational(0) : kronecker_F(n); }
Rational g_value(std::int64_t n) { return n == 0 ? Rational(-1, 12) : kronecker_G(n); }

std::string value_of(const std::string& kind, std::int64_t n) {
  if (n < 0) throw UsageError("n must be >= 0");
  if (kind == "C4") {
    if (n > kMaxC4Index) throw UsageError("C4 is available for n <= " + std::to_string(kMaxC4Index));
    return c4_series(static_cast<std::size_t>(n))[static_cast<std::size_t>(n)].str();
  }
  if (n > kMaxClassIndex) {
    throw UsageError(kind + " is available for n <= " + std::to_string(kMaxClassIndex));
  }
  if (kind == "H") return hurwitz(n).str();
  if (kind == "r") return std::to_string(r3_gauss(n));
  if (kind == "alpha") return n == 0 ? "1" : std::to_string(alpha_formula(n));
  if (kind == "alpha2") return n == 0 ? "1" : std::to_string(alpha2_formula(n));
  if (kind == "F") return f_value(n).str();
  if (kind == "G") return g_value(n).str();
  throw UsageError("unknown kind '" + kind + "' (expected H, r, alpha, alpha2, C4, F, G)");
}

const std::vector<std::string> kAllColumns = {"n",  "twelveH", "r",     "F12",
                                              "G12", "alpha",  "alpha2", "C4"};

std::string canonical_column(const std::string& c) {
  if (c == "12H" || c == "H12") return "twelveH";
  for (const auto& known : kAllColumns) {
    if (c == known) return c;
  }
  throw UsageError("unknown column '" + c + "'");
}

std::vector<std::string> parse_columns(const std::string& spec) {
  std::vector<std::string> cols;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) cols.push_back(canonical_column(item));
  }
  if (cols.empty()) throw UsageError("--columns is empty");
  return cols;
}

using Row = std::map<std::string, std::string>;

Row table_row(std::int64_t n, const std::vector<std::string>& cols,
              const std::optional<QSeries>& c4) {
  Row row;
  for (const auto& c : cols) {
    if (c == "n") row[c] = std::to_string(n);
    else if (c == "twelveH") row[c] = (Rational(12) * hurwitz(n)).str();
    else if (c == "r") row[c] = std::to_string(r3_gauss(n));
    else if (c == "F12") row[c] = (Rational(12) * f_value(n)).str();
    else if (c == "G12") row[c] = (Rational(12) * g_value(n)).str();
    else if (c == "alpha") row[c] = n == 0 ? "1" : std::to_string(alpha_formula(n));
    else if (c == "alpha2") row[c] = n == 0 ? "1" : std::to_string(alpha2_formula(n));
    else if (c == "C4") row[c] = (*c4)[static_cast<std::size_t>(n)].str();
  }
  return row;
}

void emit_table(std::ostream& out, Format fmt, const std::vector<std::string>& cols,
                const std::vector<Row>& rows) {
  if (fmt == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json obj = nlohmann::json::object();
      for (const auto& c : cols) obj[c] = nlohmann::json::parse(row.at(c));
      arr.push_back(std::move(obj));
    }
    out << arr.dump() << '\n';
    return;
  }
  if (fmt == Format::Csv) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << row.at(cols[i]);
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    width[i] = cols[i].size();
    for (const auto& row : rows) width[i] = std::max(width[i], row.at(cols[i]).size());
  }
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cols[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row.at(cols[i]);
    }
    out << '\n';
  }
}

void emit_reports(std::ostream& out, Format fmt, const std::vector<VerificationReport>& reports) {
  if (fmt == Format::Json) {
    // One JSON object per line, in suite order.
    for (const auto& r : reports) out << to_json(r).dump() << '\n';
    return;
  }
  if (fmt == Format::Csv) {
    out << "name,order,status,index,lhs,rhs\n";
    for (const auto& r : reports) {
      out << r.name << ',' << r.order << ',' << (r.passed() ? "pass" : "fail") << ',';
      if (r.witness) out << r.witness->index << ",\"" << r.witness->lhs << "\",\"" << r.witness->rhs << '"';
      else out << ",,";
      out << '\n';
    }
    return;
  }
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (order " << r.order << ")";
    if (r.witness) {
      out << " at index " << r.witness->index << ": lhs " << r.witness->lhs << " != rhs "
          << r.witness->rhs;
    }
    out << '\n';
    for (const auto& note : r.notes) out << "    " << note << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz class numbers, overpartition rank differences, and identity checks",
               "rankclass"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  std::optional<std::size_t> order;
  std::optional<std::int64_t> nmax;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: json, csv, text");
    sub->add_option("--out", out_path, "Write output to PATH instead of standard output");
  };

  auto* value_cmd = app.add_subcommand("value", "Print one exact value");
  std::string kind;
  std::int64_t n = 0;
  value_cmd->add_option("kind", kind, "H, r, alpha, alpha2, C4, F or G")->required();
  value_cmd->add_option("n", n, "Index")->required();
  add_common(value_cmd);

  auto* table_cmd = app.add_subcommand("table", "Print a table of values for a range of n");
  std::int64_t nmin = 0;
  std::string columns;
  table_cmd->add_option("--nmin", nmin, "First row (default 0)");
  table_cmd->add_option("--nmax", nmax, "Last row")->required();
  table_cmd->add_option("--columns", columns,
                        "Comma-separated subset of n,twelveH,r,F12,G12,alpha,alpha2,C4");
  add_common(table_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  verify_cmd->add_option("suite", suite, "theorem1, cor1, cor2, cor3, cor4, fg, oracles or all")
      ->required();
  verify_cmd->add_option("--order", order, "Series truncation order");
  verify_cmd->add_option("--nmax", nmax, "Upper bound for range checks");
  add_common(verify_cmd);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "rankclass: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Format fmt = parse_format(format);
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw UsageError("cannot open --out path '" + out_path + "'");
    }
    std::ostream& sink = out_path.empty() ? out : file;

    if (value_cmd->parsed()) {
      const std::string v = value_of(kind, n);
      if (fmt == Format::Json) {
        sink << nlohmann::json{{"kind", kind}, {"n", n}, {"value", v}}.dump() << '\n';
      } else if (fmt == Format::Csv) {
        sink << "kind,n,value\n" << kind << ',' << n << ',' << v << '\n';
      } else {
        sink << v << '\n';
      }
      return kExitPass;
    }

    if (table_cmd->parsed()) {
      const std::vector<std::string> cols = columns.empty() ? kAllColumns : parse_columns(columns);
      if (nmin < 0) throw UsageError("--nmin must be >= 0");
      if (*nmax < nmin) throw UsageError("empty range: --nmax is below --nmin");
      const bool wants_c4 = std::find(cols.begin(), cols.end(), "C4") != cols.end();
      if (wants_c4 && *nmax > kMaxC4Index) {
        throw UsageError("C4 column is available for n <= " + std::to_string(kMaxC4Index));
      }
      if (*nmax > kMaxClassIndex) {
        throw UsageError("--nmax must be <= " + std::to_string(kMaxClassIndex));
      }
      std::optional<QSeries> c4;
      if (wants_c4) c4 = c4_series(static_cast<std::size_t>(*nmax));
      std::vector<Row> rows(static_cast<std::size_t>(*nmax - nmin + 1));
      parallel_for(nmin, *nmax + 1, [&](std::int64_t i) {
        rows[static_cast<std::size_t>(i - nmin)] = table_row(i, cols, c4);
      });
      emit_table(sink, fmt, cols, rows);
      return kExitPass;
    }

    const auto start = std::chrono::steady_clock::now();
    const auto reports = run_suite(suite, SuiteOptions{order, nmax});
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    emit_reports(sink, fmt, reports);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    err << "# verify " << suite << ": " << reports.size() << " reports, "
        << (ok ? "all pass" : "FAILURES") << ", " << std::fixed << std::setprecision(2)
        << elapsed.count() << " s, " << max_threads() << " threads\n";
    return ok ? kExitPass : kExitFailure;
  } catch (const UsageError& e) {
    err << "rankclass: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownKind& e) {
    err << "rankclass: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    err << "rankclass: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "rankclass: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace rankclass::cli
