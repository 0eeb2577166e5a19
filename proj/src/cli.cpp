#include "padival/cli.hpp"

#include "padival/digits.hpp"
#include "padival/errors.hpp"
#include "padival/increments.hpp"
#include "padival/odd_factorial.hpp"
#include "padival/special.hpp"
#include "padival/valuations.hpp"
#include "padival/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace padival::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct EvalInputs {
  std::optional<Prime> p;
  std::optional<Natural> n;
  std::optional<Natural> k;
};

// Column name/value pairs. Single-value targets produce one column named
// "value"; the increments target produces three and is table-only.
using Row = std::vector<std::pair<std::string, std::string>>;

struct TargetSpec {
  const char* name;
  bool needs_p;
  bool needs_n;
  bool needs_k;
  bool table_only;
  Row (*run)(const EvalInputs&);
};

Row one(std::string value) { return {{"value", std::move(value)}}; }

std::string checked_factorial_val(const Natural& n, const Prime& p) {
  const Valuation direct = val_factorial_direct(n, p);
  const Valuation alt = val_factorial_alt(n, p);
  const Valuation from_digits = val_factorial_from_digits(expand(n, p));
  detail::require_consistent(direct == alt && alt == from_digits,
                             "val-factorial: the three routes disagree");
  return direct.str();
}

std::string checked_oddfact_val(const Natural& n, const Prime& p) {
  const Valuation alt = val_oddfact_alt(n, p);
  const Valuation alt2 = val_oddfact_alt2(n, p);
  detail::require_consistent(alt == alt2,
                             "val-oddfact: the two digit routes disagree");
  return alt.str();
}

const TargetSpec kTargets[] = {
    {"weight", true, true, false, false,
     [](const EvalInputs& in) { return one(weight(*in.n, *in.p).get_str()); }},
    {"val", true, true, false, false,
     [](const EvalInputs& in) { return one(val(*in.n, *in.p).str()); }},
    {"val-factorial", true, true, false, false,
     [](const EvalInputs& in) {
       return one(checked_factorial_val(*in.n, *in.p));
     }},
    {"val-factorial-direct", true, true, false, false,
     [](const EvalInputs& in) {
       return one(val_factorial_direct(*in.n, *in.p).str());
     }},
    {"val-factorial-alt", true, true, false, false,
     [](const EvalInputs& in) {
       return one(val_factorial_alt(*in.n, *in.p).str());
     }},
    {"val-factorial-prime-power", true, false, true, false,
     [](const EvalInputs& in) {
       return one(val_factorial_prime_power(to_uint64(*in.k), *in.p).str());
     }},
    {"val-factorial-scaled", true, true, true, false,
     [](const EvalInputs& in) {
       return one(
           val_factorial_scaled(*in.n, to_uint64(*in.k), *in.p).str());
     }},
    {"val-oddfact", true, true, false, false,
     [](const EvalInputs& in) {
       return one(checked_oddfact_val(*in.n, *in.p));
     }},
    {"val-oddfact-direct", true, true, false, false,
     [](const EvalInputs& in) {
       return one(val_oddfact_direct(*in.n, *in.p).str());
     }},
    {"val-oddfact-terms", true, true, false, false,
     [](const EvalInputs& in) {
       std::string joined;
       for (const Natural& t : val_oddfact_direct_terms(*in.n, *in.p)) {
         if (!joined.empty()) joined += "+";
         joined += t.get_str();
       }
       return one(joined.empty() ? "0" : joined);
     }},
    {"val-oddfact-any", true, true, false, false,
     [](const EvalInputs& in) {
       return one(val_oddfact_any(*in.n, *in.p).str());
     }},
    {"val-mbc", true, true, false, false,
     [](const EvalInputs& in) { return one(val_mbc(*in.n, *in.p).str()); }},
    {"val-catalan", true, true, false, false,
     [](const EvalInputs& in) {
       return one(val_catalan(*in.n, *in.p).str());
     }},
    {"catalan-odd", false, true, false, false,
     [](const EvalInputs& in) {
       return one(catalan_is_odd(*in.n) ? "true" : "false");
     }},
    {"split", true, true, false, false,
     [](const EvalInputs& in) {
       const auto [vpart, wpart] = split(*in.n, *in.p);
       return one(vpart.get_str() + "+" + wpart.get_str());
     }},
    {"delta-weight", true, true, false, false,
     [](const EvalInputs& in) {
       return one(delta_weight(*in.n, *in.p).get_str());
     }},
    {"delta-val", true, true, false, false,
     [](const EvalInputs& in) {
       return one(delta_val(*in.n, *in.p).get_str());
     }},
    {"delta-val-factorial", true, true, false, false,
     [](const EvalInputs& in) {
       return one(delta_val_factorial(*in.n, *in.p).get_str());
     }},
    {"val-via-delta", true, true, false, false,
     [](const EvalInputs& in) {
       return one(val_via_delta(*in.n, *in.p).str());
     }},
    {"delta-weight-scaled", true, true, true, false,
     [](const EvalInputs& in) {
       return one(delta_weight_scaled(*in.k, *in.n, *in.p).get_str());
     }},
    {"group-delta-weight", true, true, true, false,
     [](const EvalInputs& in) {
       return one(
           group_delta_weight(*in.n, to_uint64(*in.k), *in.p).get_str());
     }},
    {"floor-odd", false, true, true, false,
     [](const EvalInputs& in) {
       return one(floor_odd(*in.n, *in.k).get_str());
     }},
    {"increments", true, true, false, true,
     [](const EvalInputs& in) {
       const IncrementReport r = increment_report(*in.n, *in.p);
       return Row{{"delta_weight", r.delta_weight.get_str()},
                  {"delta_val_factorial", r.delta_val_factorial.get_str()},
                  {"delta_val", r.delta_val.get_str()}};
     }},
};

const TargetSpec& find_target(const std::string& name) {
  for (const auto& spec : kTargets) {
    if (name == spec.name) return spec;
  }
  std::string known;
  for (const auto& spec : kTargets) {
    if (!known.empty()) known += ", ";
    known += spec.name;
  }
  throw std::invalid_argument("unknown target '" + name +
                              "' (known targets: " + known + ")");
}

struct ParsedRange {
  Natural lo;
  Natural hi;
  bool is_range = false;
};

ParsedRange parse_n_argument(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    Natural v = parse_natural(text);
    return {v, v, false};
  }
  ParsedRange r;
  r.lo = parse_natural(text.substr(0, dots));
  r.hi = parse_natural(text.substr(dots + 2));
  r.is_range = true;
  detail::require_arg(r.lo <= r.hi,
                      "malformed range '" + text + "': start exceeds end");
  return r;
}

EvalInputs gather_inputs(const TargetSpec& spec, const std::string& p_text,
                         const std::optional<Natural>& n,
                         const std::string& k_text) {
  EvalInputs in;
  if (spec.needs_p) {
    detail::require_arg(!p_text.empty(),
                        std::string("target '") + spec.name +
                            "' requires --p");
    const Natural pv = parse_natural(p_text);
    detail::require_arg(is_prime(pv), "p must be prime, got " + pv.get_str());
    in.p = Prime(pv);
  } else {
    detail::require_arg(p_text.empty(), std::string("target '") + spec.name +
                                            "' does not take --p");
  }
  if (spec.needs_n) {
    detail::require_arg(n.has_value(), std::string("target '") + spec.name +
                                           "' requires --n");
    in.n = *n;
  } else {
    detail::require_arg(!n.has_value(), std::string("target '") + spec.name +
                                            "' does not take --n");
  }
  if (spec.needs_k) {
    detail::require_arg(!k_text.empty(),
                        std::string("target '") + spec.name +
                            "' requires --k");
    in.k = parse_natural(k_text);
  } else {
    detail::require_arg(k_text.empty(), std::string("target '") + spec.name +
                                            "' does not take --k");
  }
  return in;
}

void emit_eval(std::ostream& out, const std::string& format,
               const TargetSpec& spec, const EvalInputs& in, const Row& row) {
  if (format == "text") {
    out << row.front().second << "\n";
    return;
  }
  if (format == "json") {
    ordered_json j;
    j["target"] = spec.name;
    if (in.p) j["p"] = in.p->value().get_str();
    if (in.n) j["n"] = in.n->get_str();
    if (in.k) j["k"] = in.k->get_str();
    j["value"] = row.front().second;
    out << j.dump() << "\n";
    return;
  }
  // csv
  std::string header = "target";
  std::string data = spec.name;
  if (in.p) {
    header += ",p";
    data += "," + in.p->value().get_str();
  }
  if (in.n) {
    header += ",n";
    data += "," + in.n->get_str();
  }
  if (in.k) {
    header += ",k";
    data += "," + in.k->get_str();
  }
  header += ",value";
  data += "," + row.front().second;
  out << header << "\n" << data << "\n";
}

void emit_table(std::ostream& out, const std::string& format,
                const TargetSpec& spec, const EvalInputs& base,
                const ParsedRange& range) {
  std::vector<std::pair<Natural, Row>> rows;
  for (Natural n = range.lo; n <= range.hi; ++n) {
    EvalInputs in = base;
    in.n = n;
    rows.emplace_back(n, spec.run(in));
  }
  if (format == "json") {
    ordered_json j;
    j["target"] = spec.name;
    if (base.p) j["p"] = base.p->value().get_str();
    if (base.k) j["k"] = base.k->get_str();
    ordered_json out_rows = ordered_json::array();
    for (const auto& [n, row] : rows) {
      ordered_json r;
      r["n"] = n.get_str();
      for (const auto& [col, value] : row) r[col] = value;
      out_rows.push_back(std::move(r));
    }
    j["rows"] = std::move(out_rows);
    out << j.dump() << "\n";
    return;
  }
  const char sep = (format == "csv") ? ',' : '\t';
  // header
  if (format == "csv") {
    out << "n";
    for (const auto& [col, _] : rows.front().second) out << sep << col;
    out << "\n";
  } else {
    out << "# n";
    for (const auto& [col, _] : rows.front().second) out << sep << col;
    out << "\n";
  }
  for (const auto& [n, row] : rows) {
    out << n.get_str();
    for (const auto& [_, value] : row) out << sep << value;
    out << "\n";
  }
}

std::string failure_inputs_text(const verify::Failure& f) {
  std::string s;
  for (const auto& [name, value] : f.inputs) {
    if (!s.empty()) s += ", ";
    s += name + "=" + value.get_str();
  }
  return s;
}

void emit_verify(std::ostream& out, std::ostream& err,
                 const std::string& format,
                 const std::vector<verify::Report>& reports) {
  constexpr std::size_t kMaxShownFailures = 100;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json j;
      j["identity"] = r.identity;
      j["grid"] = r.grid;
      j["checked"] = r.checked;
      ordered_json fails = ordered_json::array();
      for (const auto& f : r.failures) {
        ordered_json fj;
        ordered_json inputs;
        for (const auto& [name, value] : f.inputs) {
          inputs[name] = value.get_str();
        }
        fj["inputs"] = std::move(inputs);
        fj["lhs"] = f.lhs;
        fj["rhs"] = f.rhs;
        fails.push_back(std::move(fj));
      }
      j["failures"] = std::move(fails);
      arr.push_back(std::move(j));
    }
    out << arr.dump() << "\n";
  } else if (format == "csv") {
    out << "identity,checked,failures\n";
    for (const auto& r : reports) {
      out << r.identity << "," << r.checked << "," << r.failures.size()
          << "\n";
    }
  } else {
    for (const auto& r : reports) {
      out << r.identity << " [" << r.grid << "]: checked " << r.checked
          << ", failures " << r.failures.size() << "\n";
      std::size_t shown = 0;
      for (const auto& f : r.failures) {
        if (shown == kMaxShownFailures) {
          out << "  ... (" << (r.failures.size() - shown)
              << " more failures)\n";
          break;
        }
        out << "  FAIL " << failure_inputs_text(f) << ": " << f.lhs
            << " != " << f.rhs << "\n";
        ++shown;
      }
    }
  }
  // Elapsed times are diagnostics; keep them out of the data payload.
  for (const auto& r : reports) {
    err << r.identity << ": " << std::fixed << std::setprecision(2)
        << r.elapsed_seconds << " s\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"p-adic valuations of factorials, odd factorials, middle "
               "binomial coefficients and Catalan numbers"};
  app.name("padival");
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 verify found failures, 2 usage "
             "error, 3 internal inconsistency.");

  const auto format_check = CLI::IsMember({"text", "json", "csv"});

  std::string ev_target, ev_p, ev_n, ev_k, ev_format = "text";
  auto* eval_cmd =
      app.add_subcommand("eval", "Evaluate one operation at a single point");
  eval_cmd->add_option("target", ev_target, "Operation name")->required();
  eval_cmd->add_option("--p", ev_p, "Prime modulus");
  eval_cmd->add_option("--n", ev_n,
                       "Argument n (arbitrary-precision decimal)");
  eval_cmd->add_option("--k", ev_k, "Auxiliary argument k");
  eval_cmd->add_option("--format", ev_format, "Output format")
      ->check(format_check);

  std::string tb_target, tb_p, tb_n, tb_k, tb_format = "text";
  auto* table_cmd =
      app.add_subcommand("table", "Tabulate an operation over an n range");
  table_cmd->add_option("target", tb_target, "Operation name")->required();
  table_cmd->add_option("--p", tb_p, "Prime modulus");
  table_cmd->add_option("--n", tb_n, "Range A..B (or a single n)");
  table_cmd->add_option("--k", tb_k, "Auxiliary argument k");
  table_cmd->add_option("--format", tb_format, "Output format")
      ->check(format_check);

  std::string vf_target = "all", vf_p, vf_n, vf_format = "text";
  std::uint64_t vf_k = 0, vf_cap = 0;
  bool vf_list = false;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run identity-verification sweeps with pass/fail reporting");
  verify_cmd->add_option("target", vf_target,
                         "Identity name (default: all)");
  verify_cmd->add_option("--p", vf_p, "Restrict the sweep to one prime");
  verify_cmd->add_option("--n", vf_n, "Override the n grid as A..B");
  verify_cmd->add_option("--k", vf_k, "Override the k bound");
  verify_cmd->add_option("--cap", vf_cap,
                         "Shrink every default grid bound to at most N");
  verify_cmd->add_option("--format", vf_format, "Output format")
      ->check(format_check);
  verify_cmd->add_flag("--list", vf_list, "List identities and exit");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("padival");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (eval_cmd->parsed()) {
      const TargetSpec& spec = find_target(ev_target);
      detail::require_arg(!spec.table_only,
                          std::string("target '") + spec.name +
                              "' is table-only (it emits several columns)");
      std::optional<Natural> n;
      if (!ev_n.empty()) {
        const ParsedRange r = parse_n_argument(ev_n);
        detail::require_arg(!r.is_range, "eval expects a single n, not a range");
        n = r.lo;
      }
      const EvalInputs in = gather_inputs(spec, ev_p, n, ev_k);
      emit_eval(out, ev_format, spec, in, spec.run(in));
      return exit_ok;
    }

    if (table_cmd->parsed()) {
      const TargetSpec& spec = find_target(tb_target);
      detail::require_arg(spec.needs_n, std::string("target '") + spec.name +
                                            "' cannot be tabulated over n");
      detail::require_arg(!tb_n.empty(), "table requires --n A..B");
      const ParsedRange range = parse_n_argument(tb_n);
      EvalInputs base = gather_inputs(spec, tb_p, range.lo, tb_k);
      emit_table(out, tb_format, spec, base, range);
      return exit_ok;
    }

    // verify
    if (vf_list) {
      for (const auto& name : verify::identity_names()) {
        out << name << ": " << verify::identity_summary(name) << "\n";
      }
      return exit_ok;
    }
    verify::Options opts;
    if (!vf_p.empty()) {
      const Natural pv = parse_natural(vf_p);
      detail::require_arg(is_prime(pv),
                          "p must be prime, got " + pv.get_str());
      opts.prime = pv;
    }
    if (!vf_n.empty()) {
      const ParsedRange r = parse_n_argument(vf_n);
      opts.n_lo = to_uint64(r.lo);
      opts.n_hi = to_uint64(r.hi);
    }
    if (verify_cmd->count("--k")) opts.k_max = vf_k;
    if (verify_cmd->count("--cap")) opts.cap = vf_cap;
    std::vector<verify::Report> reports;
    if (vf_target == "all") {
      reports = verify::run_all(opts);
    } else {
      reports.push_back(verify::run_identity(vf_target, opts));
    }
    emit_verify(out, err, vf_format, reports);
    for (const auto& r : reports) {
      if (!r.passed()) return exit_verify_failure;
    }
    return exit_ok;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const inconsistency_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return exit_inconsistency;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_inconsistency;
  }
}

}  // namespace padival::cli
