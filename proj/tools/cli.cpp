#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "evpos/errors.hpp"
#include "evpos/expr_parser.hpp"
#include "evpos/partitions.hpp"
#include "evpos/powers.hpp"

namespace evpos::cli {

using nlohmann::json;

namespace {

/// Long double as a JSON number, or as a decimal string when it does not
/// fit in a double.
json wide_real(long double x) {
  if (std::isfinite(static_cast<double>(x)) || !std::isfinite(x)) return static_cast<double>(x);
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17Le", x);
  return std::string(buffer);
}

std::string wide_text(long double x) {
  std::ostringstream out;
  out << std::setprecision(6) << x;
  return out.str();
}

const std::vector<std::string> kCommands{"classify", "covering", "strongpos", "power", "threshold", "saddle",
                                         "partitions"};

json parts_to_json(const std::map<Exponent, PartMultiset>& witnesses) {
  json out = json::object();
  for (const auto& [k, parts] : witnesses) out[std::to_string(k)] = parts;
  return out;
}

json envelope(const RunConfig& config, const SparsePolynomial& f) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = config.command;
  out["input"] = config.input_poly;
  out["polynomial"] = format_polynomial(f);
  return out;
}

std::string join(const auto& values, const char* separator = ", ") {
  std::ostringstream s;
  bool first = true;
  for (const auto& v : values) {
    if (!first) s << separator;
    s << v;
    first = false;
  }
  return s.str();
}

void write_witness_text(std::ostream& out, const StrongPositivityWitness& w) {
  out << "  witness: " << to_string(w.kind) << " at z = " << static_cast<double>(w.z_re) << " + "
      << static_cast<double>(w.z_im) << "i (|z| = " << format_rational(w.radius) << ")\n";
  out << "    f(|z|) = " << static_cast<double>(w.f_abs_z) << ", |f(z)| = " << static_cast<double>(w.abs_f_z)
      << ", margin = " << static_cast<double>(w.margin) << " (error bound " << static_cast<double>(w.error_bound)
      << ")\n";
  if (!w.note.empty()) out << "    " << w.note << "\n";
}

void write_covering_text(std::ostream& out, const CoveringReport& report) {
  out << "covering: forward " << to_string(report.forward_reason) << ", reverse " << to_string(report.reverse_reason)
      << ", two-sided " << (report.two_sided ? "yes" : "no") << "\n";
  if (!report.uncovered.empty()) out << "  uncovered (forward): " << join(report.uncovered) << "\n";
  if (!report.uncovered_reverse.empty()) out << "  uncovered (reverse): " << join(report.uncovered_reverse) << "\n";
  for (const auto& [k, parts] : report.witnesses) out << "  " << k << " = " << join(parts, " + ") << "\n";
  if (report.global_weight) out << "  w(f) = " << *report.global_weight << "\n";
}

void write_strongpos_text(std::ostream& out, const StrongPositivityVerdict& v) {
  out << "strong positivity: " << to_string(v.status) << "\n";
  if (v.witness) write_witness_text(out, *v.witness);
  if (v.status != StrongPositivityStatus::kRefuted) {
    out << "  boxes " << v.stats.boxes_examined << ", max depth " << v.stats.max_depth << ", min margin "
        << v.stats.min_certified_margin << ", boundary boxes " << v.stats.boundary_boxes << "\n";
  }
  if (!v.boundary_strategy.empty()) out << "  " << v.boundary_strategy << "\n";
  if (!v.note.empty()) out << "  note: " << v.note << "\n";
}

CertifyOptions certify_options(const RunConfig& config) {
  CertifyOptions options;
  options.depth_budget = config.depth;
  options.refute.budget = config.budget;
  options.refute.seed = config.seed;
  return options;
}

int run_classify(const RunConfig& config, const SparsePolynomial& f, std::ostream& out) {
  ClassifyOptions options;
  options.certify = certify_options(config);
  options.empirical = config.empirical;
  if (config.m_max) options.empirical_m_max = *config.m_max;
  const ClassificationVerdict verdict = classify(f, options);
  if (config.format == OutputFormat::kJson) {
    json j = envelope(config, f);
    j.update(to_json(verdict));
    out << j.dump(2) << "\n";
  } else {
    out << "status: " << to_string(verdict.status) << "\n";
    if (!verdict.constant_input) {
      out << "f = z^" << verdict.decomposition.shift_k << " g(z^" << verdict.decomposition.stride_l
          << "), g = " << format_polynomial(verdict.decomposition.core_g) << "\n";
    }
    if (verdict.eventually_positive) out << "eventually positive (De Angelis boundary coefficients)\n";
    if (!verdict.constant_input && verdict.decomposition.core_g.degree() > 0 &&
        verdict.decomposition.core_g.constant_term() > 0 && verdict.decomposition.core_g.leading_coefficient() > 0) {
      write_covering_text(out, verdict.covering);
    }
    if (verdict.strong_positivity) write_strongpos_text(out, *verdict.strong_positivity);
    if (verdict.witness) {
      out << "witness: " << to_string(verdict.witness->kind);
      if (verdict.witness->index) out << " k=" << *verdict.witness->index << (verdict.witness->reverse ? " (reverse)" : "");
      out << "\n  " << verdict.witness->description << "\n";
    }
    if (verdict.empirical) {
      const auto& t = verdict.empirical->threshold;
      out << "empirical threshold in [1, " << t.m_max << "]: "
          << (t.m0 ? std::to_string(*t.m0) : std::string("none")) << "\n  " << t.note << "\n";
    }
    if (!verdict.note.empty()) out << "note: " << verdict.note << "\n";
  }
  return verdict.status == ClassificationStatus::kInconclusive ? 2 : 0;
}

int run_covering(const RunConfig& config, const SparsePolynomial& f, std::ostream& out) {
  const CoveringReport report = covering_report(f);
  if (config.format == OutputFormat::kJson) {
    json j = envelope(config, f);
    j["covering"] = to_json(report);
    out << j.dump(2) << "\n";
  } else {
    write_covering_text(out, report);
  }
  return 0;
}

int run_strongpos(const RunConfig& config, const SparsePolynomial& f, std::ostream& out) {
  const StrongPositivityVerdict verdict = certify(f, certify_options(config));
  if (config.format == OutputFormat::kJson) {
    json j = envelope(config, f);
    j["strong_positivity"] = to_json(verdict);
    out << j.dump(2) << "\n";
  } else {
    write_strongpos_text(out, verdict);
  }
  return verdict.status == StrongPositivityStatus::kInconclusive ? 2 : 0;
}

int run_power(const RunConfig& config, const SparsePolynomial& f, std::ostream& out) {
  if (config.sign_profile) {
    const std::uint64_t hi = config.m_max.value_or(config.m.value_or(10));
    if (config.m_min < 1 || config.m_min > hi) throw InputError("sign profile needs 1 <= --m-min <= --m-max");
    write_sign_profile_csv(out, f, config.m_min, hi);
    return 0;
  }
  if (!config.m) throw InputError("power needs --m");
  const PowerProfile p = profile(f, *config.m);
  switch (config.format) {
    case OutputFormat::kCsv:
      write_profile_csv(out, p);
      break;
    case OutputFormat::kJson: {
      json j = envelope(config, f);
      j["m"] = p.m;
      std::vector<std::string> coefficients;
      for (std::size_t n = 0; n < p.numerators.size(); ++n) coefficients.push_back(format_rational(p.coefficient(n)));
      j["coefficients"] = coefficients;
      j["first_negative"] = p.first_negative ? json(*p.first_negative) : json(nullptr);
      j["negative_indices"] = p.negative_indices;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::kText:
      out << "f^" << p.m << " = " << format_polynomial(pow(f, p.m)) << "\n";
      out << "negative coefficients: " << (p.negative_indices.empty() ? "none" : join(p.negative_indices)) << "\n";
      break;
  }
  return 0;
}

int run_threshold(const RunConfig& config, const SparsePolynomial& f, std::ostream& out) {
  const std::uint64_t m_max = config.m_max.value_or(200);
  const ThresholdResult t = threshold_search(f, m_max);
  if (config.format == OutputFormat::kJson) {
    json j = envelope(config, f);
    j["m_max"] = m_max;
    j["m0"] = t.m0 ? json(*t.m0) : json(nullptr);
    j["negative_powers"] = t.negative_powers;
    j["note"] = t.note;
    out << j.dump(2) << "\n";
  } else {
    out << "m0 = " << (t.m0 ? std::to_string(*t.m0) : std::string("none")) << " within [1, " << m_max << "]\n";
    out << t.note << "\n";
  }
  return 0;
}

int run_saddle(const RunConfig& config, const SparsePolynomial& f, std::ostream& out) {
  if (!config.n || !config.m) throw InputError("saddle needs --n and --m");
  const SaddleEstimate e = estimate_coefficient(f, *config.n, *config.m);
  if (config.format == OutputFormat::kJson) {
    json j = envelope(config, f);
    j.update(to_json(e));
    out << j.dump(2) << "\n";
  } else {
    out << "alpha = " << static_cast<double>(e.alpha) << ", rho = " << static_cast<double>(e.rho) << "\n";
    out << "estimate = " << wide_text(e.estimate) << "\n";
    if (e.exact) out << "exact = " << format_rational(*e.exact) << "\n";
    if (e.rel_error) out << "relative error = " << static_cast<double>(*e.rel_error) << "\n";
    if (e.split) {
      out << "I1 = " << wide_text(e.split->i1) << ", I2 = " << wide_text(e.split->i2)
          << ", I3 = " << wide_text(e.split->i3) << " (eta = " << static_cast<double>(e.split->eta)
          << ", theta0 = " << static_cast<double>(e.split->theta0) << ")\n";
    }
  }
  return 0;
}

int run_partitions(const RunConfig& config, const SparsePolynomial& f, std::ostream& out) {
  if (!config.n || !config.m) throw InputError("partitions needs --n and --m");
  if (f.is_constant()) throw InputError("partitions needs a non-constant polynomial");
  const PartitionGuard guard;
  const Rational total = coefficient_via_partitions(f, *config.n, *config.m, guard);
  BinomialCache cache;
  json rows = json::array();
  std::ostringstream text;
  PartitionEnumerator partitions(*config.n, f.degree());
  while (partitions.next()) {
    const Multiplicities& lambda = partitions.current();
    const Rational c = contribution(lambda, *config.m, f, &cache);
    if (c == 0) continue;
    json row;
    row["multiplicities"] = lambda;
    row["contribution"] = format_rational(c);
    text << "(" << join(lambda, ",") << ")  " << format_rational(c);
    if (c < 0) {
      try {
        const PartitionTerm term = compress(lambda, f, *config.n, *config.m, &cache);
        row["mapped"] = *term.mapped;
        row["mapped_contribution"] = format_rational(term.mapped_contribution);
        text << "  -> (" << join(*term.mapped, ",") << ")  " << format_rational(term.mapped_contribution);
      } catch (const NotCoverableError&) {
        row["mapped"] = nullptr;
        text << "  (index not coverable)";
      }
    }
    text << "\n";
    rows.push_back(std::move(row));
  }
  if (config.format == OutputFormat::kJson) {
    json j = envelope(config, f);
    j["n"] = *config.n;
    j["m"] = *config.m;
    j["coefficient"] = format_rational(total);
    j["partitions"] = std::move(rows);
    out << j.dump(2) << "\n";
  } else {
    out << text.str() << "[z^" << *config.n << "] f^" << *config.m << " = " << format_rational(total) << "\n";
  }
  return 0;
}

}  // namespace

json to_json(const CoveringReport& report) {
  json j;
  j["two_sided"] = report.two_sided;
  j["forward"] = {{"covered", report.one_sided_forward},
                  {"reason", to_string(report.forward_reason)},
                  {"uncovered", report.uncovered},
                  {"witnesses", parts_to_json(report.witnesses)}};
  j["reverse"] = {{"covered", report.one_sided_reverse},
                  {"reason", to_string(report.reverse_reason)},
                  {"uncovered", report.uncovered_reverse},
                  {"witnesses", parts_to_json(report.witnesses_reverse)}};
  json weights = json::object();
  for (const auto& [k, w] : report.weights) weights[std::to_string(k)] = w;
  j["weights"] = weights;
  j["global_weight"] = report.global_weight ? json(*report.global_weight) : json(nullptr);
  return j;
}

json to_json(const StrongPositivityWitness& w) {
  json j;
  j["kind"] = to_string(w.kind);
  j["radius"] = format_rational(w.radius);
  j["theta"] = w.theta;
  j["cos_theta"] = w.cos_theta ? json(format_rational(*w.cos_theta)) : json(nullptr);
  j["z"] = {static_cast<double>(w.z_re), static_cast<double>(w.z_im)};
  j["f_abs_z"] = static_cast<double>(w.f_abs_z);
  j["abs_f_z"] = static_cast<double>(w.abs_f_z);
  j["margin"] = static_cast<double>(w.margin);
  j["error_bound"] = static_cast<double>(w.error_bound);
  j["exact_gap"] = w.exact_gap ? json(format_rational(*w.exact_gap)) : json(nullptr);
  j["note"] = w.note;
  return j;
}

json to_json(const StrongPositivityVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  j["stats"] = {{"boxes_examined", v.stats.boxes_examined},
                {"max_depth", v.stats.max_depth},
                {"min_certified_margin", v.stats.min_certified_margin},
                {"boundary_boxes", v.stats.boundary_boxes},
                {"boundary_strip_width", v.stats.boundary_strip_width}};
  j["boundary_strategy"] = v.boundary_strategy;
  j["note"] = v.note;
  return j;
}

json to_json(const ClassificationVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["eventually_positive"] = v.eventually_positive;
  j["k"] = v.decomposition.shift_k;
  j["l"] = v.decomposition.stride_l;
  j["core"] = format_polynomial(v.decomposition.core_g);
  const bool screened = v.constant_input || v.decomposition.core_g.is_constant() ||
                        v.decomposition.core_g.constant_term() < 0 ||
                        v.decomposition.core_g.leading_coefficient() < 0;
  j["covering"] = screened ? json(nullptr) : to_json(v.covering);
  j["strong_positivity"] = v.strong_positivity ? to_json(*v.strong_positivity) : json(nullptr);
  if (v.witness) {
    json w;
    w["kind"] = to_string(v.witness->kind);
    w["index"] = v.witness->index ? json(*v.witness->index) : json(nullptr);
    w["reverse"] = v.witness->reverse;
    w["point"] = v.witness->point ? to_json(*v.witness->point) : json(nullptr);
    w["description"] = v.witness->description;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  if (v.empirical) {
    j["empirical"] = {{"threshold", v.empirical->threshold.m0 ? json(*v.empirical->threshold.m0) : json(nullptr)},
                      {"window", {v.empirical->window_lo, v.empirical->window_hi}},
                      {"negative_powers", v.empirical->threshold.negative_powers},
                      {"note", v.empirical->threshold.note}};
  } else {
    j["empirical"] = nullptr;
  }
  j["note"] = v.note;
  return j;
}

json to_json(const SaddleEstimate& e) {
  json j;
  j["alpha"] = static_cast<double>(e.alpha);
  j["rho"] = static_cast<double>(e.rho);
  j["estimate"] = wide_real(e.estimate);
  j["log_scale"] = static_cast<double>(e.log_scale);
  j["exact"] = e.exact ? json(format_rational(*e.exact)) : json(nullptr);
  j["rel_error"] = e.rel_error ? json(static_cast<double>(*e.rel_error)) : json(nullptr);
  if (e.split) {
    j["split"] = {{"I1", wide_real(e.split->i1)},
                  {"I2", wide_real(e.split->i2)},
                  {"I3", wide_real(e.split->i3)},
                  {"eta", static_cast<double>(e.split->eta)},
                  {"theta0", static_cast<double>(e.split->theta0)}};
  } else {
    j["split"] = nullptr;
  }
  return j;
}

RunConfig parse_arguments(int argc, const char* const* argv) {
  RunConfig config;
  CLI::App app{"Eventual non-negativity of polynomial powers"};
  std::string format = "text";
  std::uint64_t m = 0, n = 0, m_max = 0;
  app.add_option("command", config.command, "Command")->required()->check(CLI::IsMember(kCommands));
  app.add_option("polynomial", config.input_poly, "Polynomial in z, e.g. \"1 + z^2 - 1/10z^4\"")->required();
  auto* m_opt = app.add_option("--m", m, "Power m");
  auto* n_opt = app.add_option("--n", n, "Coefficient index n");
  auto* m_max_opt = app.add_option("--m-max", m_max, "Upper end of a power window");
  app.add_option("--m-min", config.m_min, "Lower end of the sign-profile window");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--depth", config.depth, "Subdivision depth budget for certification");
  app.add_option("--budget", config.budget, "Evaluation budget for the refutation search");
  app.add_option("--seed", config.seed, "Seed for randomized search");
  app.add_flag("--sign-profile", config.sign_profile, "power: emit m,n,sign rows for m in [m-min, m-max]");
  app.add_flag("--empirical", config.empirical, "classify: attach an empirical threshold search");
  std::string out_path;
  auto* out_opt = app.add_option("--out", out_path, "Write the report to this path");
  app.parse(argc, argv);
  if (*m_opt) config.m = m;
  if (*n_opt) config.n = n;
  if (*m_max_opt) config.m_max = m_max;
  if (*out_opt) config.out_path = out_path;
  config.format = format == "json" ? OutputFormat::kJson : format == "csv" ? OutputFormat::kCsv : OutputFormat::kText;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* target = &out;
  if (config.out_path) {
    file.open(*config.out_path);
    if (!file) {
      err << "error: cannot open " << *config.out_path << " for writing\n";
      return 1;
    }
    target = &file;
  }
  try {
    const SparsePolynomial f = parse_polynomial(config.input_poly);
    if (config.command == "classify") return run_classify(config, f, *target);
    if (config.command == "covering") return run_covering(config, f, *target);
    if (config.command == "strongpos") return run_strongpos(config, f, *target);
    if (config.command == "power") return run_power(config, f, *target);
    if (config.command == "threshold") return run_threshold(config, f, *target);
    if (config.command == "saddle") return run_saddle(config, f, *target);
    if (config.command == "partitions") return run_partitions(config, f, *target);
    err << "error: unknown command '" << config.command << "'\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_arguments(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << "usage: evpos <command> <polynomial> [options]\n"
           "commands: classify covering strongpos power threshold saddle partitions\n"
           "options: --m --n --m-min --m-max --format text|json|csv --depth --budget --seed\n"
           "         --sign-profile --empirical --out PATH\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return run(config, out, err);
}

}  // namespace evpos::cli
