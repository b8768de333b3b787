#include "partforge/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "partforge/asymptotics.hpp"
#include "partforge/bfile.hpp"
#include "partforge/format.hpp"
#include "partforge/oracle.hpp"
#include "partforge/series.hpp"

namespace partforge::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename Fn>
auto as_usage(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

AdmissibleTriple parse_triple(const std::string& text) {
  return as_usage([&] { return AdmissibleTriple::parse(text); });
}

Form parse_form_arg(const std::string& text) {
  return as_usage([&] { return parse_form(text); });
}

mpq_class parse_rational(const std::string& text) {
  mpq_class v;
  if (text.empty() || v.set_str(text, 10) != 0 || sgn(v.get_den()) == 0) {
    throw UsageError("malformed rational '" + text + "': expected NUM or NUM/DEN");
  }
  v.canonicalize();
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    items.push_back(item);
  }
  if (items.empty()) throw UsageError("empty list");
  return items;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw UsageError("not a number: '" + text + "'");
  return value;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::size_t oracle_bound() {
  std::size_t bound = oracle::kCycleTypeBound;
  if (const char* env = std::getenv("PARTITION_FORGE_ORACLE_BOUND")) {
    char* end = nullptr;
    const unsigned long long requested = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && requested > bound) bound = requested;
  }
  return bound;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open b-file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct IndexArgs {
  double n = 0.0;
  double log10n = 0.0;
  CLI::Option* n_opt = nullptr;
  CLI::Option* log10n_opt = nullptr;

  LogIndex resolve() const {
    if (log10n_opt->count() > 0) return LogIndex::from_log10(log10n);
    if (n_opt->count() > 0) {
      if (!(n > 0.0)) throw UsageError("--n must be positive");
      return LogIndex::from_n(n);
    }
    throw UsageError("one of --n or --log10n is required");
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coefficients and asymptotics of generalized partition products"};
  app.name(args.empty() ? "partforge" : args.front());
  app.require_subcommand(1);

  std::string triple_text;
  std::string form_text = "P";
  std::string format_text = "plain";
  std::size_t max_index = 0;
  bool ogf = false;

  auto* coeffs = app.add_subcommand("coeffs", "Exact coefficients of P or Q");
  coeffs->add_option("--triple", triple_text, "Admissible triple I,J,K")->required();
  coeffs->add_option("--form", form_text, "P or Q");
  coeffs->add_option("--n", max_index, "Largest index")->required();
  coeffs->add_flag("--ogf", ogf, "Ordinary coefficients via the Euler transform (J = 0)");
  coeffs->add_option("--format", format_text, "plain, bfile, tsv or json");

  std::string v_text;
  auto* weighted = app.add_subcommand("weighted", "Coefficients n![z^n] of the weighted series");
  weighted->add_option("--triple", triple_text, "Admissible triple I,J,K")->required();
  weighted->add_option("--v", v_text, "Weight NUM/DEN")->required();
  weighted->add_option("--n", max_index, "Largest index")->required();
  weighted->add_option("--format", format_text, "plain, bfile, tsv or json");

  IndexArgs estimate_index;
  auto* estimate = app.add_subcommand("estimate", "Closed-form coefficient estimate");
  estimate->add_option("--triple", triple_text, "Admissible triple I,J,K")->required();
  estimate->add_option("--form", form_text, "P or Q");
  estimate_index.n_opt = estimate->add_option("--n", estimate_index.n, "Index n");
  estimate_index.log10n_opt =
      estimate->add_option("--log10n", estimate_index.log10n, "log10 of the index");

  IndexArgs logasymp_index;
  auto* logasymp = app.add_subcommand("logasymp", "First-order growth of log [z^n]F");
  logasymp->add_option("--triple", triple_text, "Admissible triple I,J,K")->required();
  logasymp->add_option("--form", form_text, "P or Q");
  logasymp_index.n_opt = logasymp->add_option("--n", logasymp_index.n, "Index n");
  logasymp_index.log10n_opt =
      logasymp->add_option("--log10n", logasymp_index.log10n, "log10 of the index");

  std::string n_list;
  std::string log10n_list;
  std::string rounding = "truncate";
  auto* table_w = app.add_subcommand("table-w", "Values of w_n^2 / log^2 n, w_n = W(e^gamma n)");
  auto* n_list_opt = table_w->add_option("--n-list", n_list, "Comma-separated indices");
  auto* log_list_opt =
      table_w->add_option("--log10n-list", log10n_list, "Comma-separated log10 of indices");
  table_w->add_option("--round", rounding, "truncate (default) or half-even")
      ->check(CLI::IsMember({"truncate", "half-even"}));

  std::size_t nmax = 0;
  auto* figure1 = app.add_subcommand("figure1", "TSV of log(p_n/n!) and three estimates, (0,1,0) P");
  figure1->add_option("--nmax", nmax, "Largest index")->required();

  std::string bfile_path;
  std::int64_t offset = 0;
  auto* compare = app.add_subcommand("compare", "Compare computed coefficients with a b-file");
  compare->add_option("--triple", triple_text, "Admissible triple I,J,K")->required();
  compare->add_option("--form", form_text, "P or Q");
  compare->add_option("--bfile", bfile_path, "Path of the reference b-file")->required();
  compare->add_option("--offset", offset, "Reference index of computed index 0");
  compare->add_flag("--ogf", ogf, "Compare ordinary coefficients (J = 0)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cycle-type sum (debugging)");
  oracle_cmd->group("");
  oracle_cmd->add_option("--triple", triple_text, "Admissible triple I,J,K")->required();
  oracle_cmd->add_option("--form", form_text, "P or Q");
  oracle_cmd->add_option("--n", max_index, "Index")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("partforge");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (*coeffs) {
      const AdmissibleTriple t = parse_triple(triple_text);
      const Form form = parse_form_arg(form_text);
      const OutputFormat format = as_usage([&] { return parse_output_format(format_text); });
      if (ogf && t.j() != 0) throw UsageError("--ogf requires J = 0");
      const CoeffSequence seq = ogf ? ogf_coeffs_euler(t, form, max_index)
                                    : egf_coeffs(t, form, max_index);
      out << serialize(seq, format);
      return kSuccess;
    }

    if (*weighted) {
      const AdmissibleTriple t = parse_triple(triple_text);
      const mpq_class v = parse_rational(v_text);
      const OutputFormat format = as_usage([&] { return parse_output_format(format_text); });
      out << serialize(egf_coeffs_weighted(t, v, max_index), format);
      return kSuccess;
    }

    if (*estimate) {
      const AdmissibleTriple t = parse_triple(triple_text);
      const Form form = parse_form_arg(form_text);
      const LogIndex n = estimate_index.resolve();
      const AsymptoticModel model = model_for(t, form);
      const std::string heading = "triple " + t.to_string() + " form " + to_string(form) + "\n";
      if (model.capability == Capability::FullCoefficient) {
        const CoeffEstimate e = coeff_asymptotic(t, form, n);
        out << heading << "capability full-coefficient\n";
        out << "log_estimate " << fmt(e.log_value) << "\n";
        out << "estimate " << e.scientific() << "\n";
      } else {
        const double value = log_coeff_asymptotic(t, form, n);
        out << heading << "capability log-only (" << model.note << ")\n";
        out << "log_coeff_asymptotic " << fmt(value) << "\n";
      }
      return kSuccess;
    }

    if (*logasymp) {
      const AdmissibleTriple t = parse_triple(triple_text);
      const Form form = parse_form_arg(form_text);
      const LogIndex n = logasymp_index.resolve();
      out << "log_coeff_asymptotic " << fmt(log_coeff_asymptotic(t, form, n)) << "\n";
      out << "weak_saddle_alpha " << fmt(weak_saddle_alpha(t, form, n)) << "\n";
      return kSuccess;
    }

    if (*table_w) {
      if (n_list_opt->count() == 0 && log_list_opt->count() == 0) {
        throw UsageError("table-w needs --n-list or --log10n-list");
      }
      auto show = [&](double ratio) {
        return rounding == "half-even" ? round_decimal(ratio, 4) : truncate_decimal(ratio, 4);
      };
      if (n_list_opt->count() > 0) {
        for (const auto& item : split_list(n_list)) {
          const double n = parse_double(item);
          if (!(n >= 2.0)) throw UsageError("table-w requires n >= 2");
          out << item << " " << show(kotesovec_ratio(LogIndex::from_n(n))) << "\n";
        }
      }
      if (log_list_opt->count() > 0) {
        for (const auto& item : split_list(log10n_list)) {
          const double x = parse_double(item);
          if (!(x >= std::log10(2.0))) throw UsageError("table-w requires n >= 2");
          out << "10^" << item << " " << show(kotesovec_ratio(LogIndex::from_log10(x))) << "\n";
        }
      }
      return kSuccess;
    }

    if (*figure1) {
      if (nmax < 2) throw UsageError("--nmax must be at least 2");
      const CoeffSequence seq = egf_coeffs(AdmissibleTriple(0, 1, 0), Form::P, nmax);
      out << "n\tlog_exact\tconjectured\testimate\thalf_log_squared\n";
      for (std::size_t n = 2; n <= nmax; ++n) {
        const LogIndex idx = LogIndex::from_n(static_cast<double>(n));
        out << n << '\t' << fmt(log_coefficient(seq, n)) << '\t'
            << fmt(kotesovec_conjectured_log(idx)) << '\t' << fmt(p010_estimate(idx).log_value)
            << '\t' << fmt(0.5 * idx.log() * idx.log()) << '\n';
      }
      return kSuccess;
    }

    if (*compare) {
      const AdmissibleTriple t = parse_triple(triple_text);
      const Form form = parse_form_arg(form_text);
      if (ogf && t.j() != 0) throw UsageError("--ogf requires J = 0");
      const auto records = parse_bfile(read_file(bfile_path));
      if (records.empty()) throw std::runtime_error("b-file has no records");
      const std::int64_t last = records.back().index - offset;
      if (last < 0) throw std::runtime_error("b-file indices lie entirely below the offset");
      const auto top = static_cast<std::size_t>(last);
      const CoeffSequence seq = ogf ? ogf_coeffs_euler(t, form, top) : egf_coeffs(t, form, top);
      const ComparisonReport report = compare_sequence(seq.values, records, offset);
      out << render(report);
      return report.full_match() ? kSuccess : kMismatch;
    }

    if (*oracle_cmd) {
      const AdmissibleTriple t = parse_triple(triple_text);
      const Form form = parse_form_arg(form_text);
      out << oracle::cycle_type_sum(t, form, max_index, oracle_bound()).get_str() << "\n";
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace partforge::cli
