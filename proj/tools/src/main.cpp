// Command-line front end: every library operation behind one subcommand with
// machine-readable output. JSON results are wrapped in a fixed envelope
// {format_version, command, inputs, result}; --format csv emits the raw
// table for the result instead. Exit codes: 0 success, 2 usage/precondition
// error, 1 internal error.

#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "serialize.hpp"
#include "virasoro/characters.hpp"
#include "virasoro/extensions.hpp"
#include "virasoro/growth.hpp"
#include "virasoro/minimal_models.hpp"
#include "virasoro/qseries.hpp"

namespace virasoro::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kUsage = R"(usage: virasoro <command> [arguments] [--format json|csv] [--output PATH]

commands:
  central-charge P Q              exact c_{p,q}
  kac-table P Q                   deduplicated Kac weights and lambda_min
  recognize C                     coprime (p,q) with c_{p,q} = C, if any
  character P Q R S --terms N     irreducible character of the (r,s) module
  verma-character C --terms N     vacuum Verma-quotient character (--h H for
                                  the full Verma module of weight H)
  partition N [--all]             p(N), or p(0..N) with --all
  growth --input FILE --window A:B
                                  power-law vs stretched-exponential fit of a
                                  coefficient file (one value per line)
  lemma-la --mu M --alpha A --terms N
                                  first n with a_n > n^A in 1/prod(1-q^n)^M, n>1
  key-lemma P Q --terms N         growth split of the two eta-scaled vacuum
                                  characters
  s-matrix P Q                    modular S-matrix on the Kac labels
  modular-check P Q --tau RE:IM --terms N
                                  residual of chi(-1/tau) = S chi(tau)
  scan-extensions P Q --max-mult M --terms N
                                  extension candidates by direct summand count
  classify --c NUM/DEN --ctilde NUM/DEN
                                  classification verdict for the invariants
  tensor --factors FILE           componentwise (sum c, sum c~) of factor list

Rationals are written num or num/den. Exit status 2 flags usage or
precondition errors, 1 internal errors.
)";

struct CommandLine {
  std::string command;
  std::vector<std::string> positionals;
  std::map<std::string, std::string> options;
  std::set<std::string> flags;
  std::string format = "json";
  std::optional<std::string> output;
};

CommandLine parse_command_line(int argc, char** argv) {
  if (argc < 2) throw UsageError("missing command");
  CommandLine cmd;
  cmd.command = argv[1];
  const std::set<std::string> boolean_flags = {"--all"};
  for (int i = 2; i < argc; ++i) {
    const std::string token = argv[i];
    if (token == "--format" || token == "--output") {
      if (i + 1 >= argc) throw UsageError(token + " needs a value");
      const std::string value = argv[++i];
      if (token == "--format") {
        if (value != "json" && value != "csv") throw UsageError("--format must be json or csv");
        cmd.format = value;
      } else {
        cmd.output = value;
      }
    } else if (boolean_flags.count(token) != 0) {
      cmd.flags.insert(token);
    } else if (token.size() > 2 && token.rfind("--", 0) == 0) {
      if (i + 1 >= argc) throw UsageError(token + " needs a value");
      cmd.options[token.substr(2)] = argv[++i];
    } else {
      // Positionals may be rationals with a leading '-', e.g. `recognize -22/5`.
      cmd.positionals.push_back(token);
    }
  }
  return cmd;
}

long parse_long(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long value = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError("expected an integer for " + what + ", got '" + text + "'");
  }
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError("expected a number for " + what + ", got '" + text + "'");
  }
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("expected a rational (num or num/den) for " + what + ", got '" + text + "'");
  }
}

std::pair<std::string, std::string> split_colon(const std::string& text, const std::string& what) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError(what + " must be written A:B");
  return {text.substr(0, colon), text.substr(colon + 1)};
}

const std::string& require_option(const CommandLine& cmd, const std::string& name) {
  auto it = cmd.options.find(name);
  if (it == cmd.options.end()) throw UsageError("missing required option --" + name);
  return it->second;
}

void require_positionals(const CommandLine& cmd, std::size_t count) {
  if (cmd.positionals.size() != count) {
    throw UsageError(cmd.command + " takes " + std::to_string(count) + " positional argument(s)");
  }
}

int parse_terms(const CommandLine& cmd) {
  const long n = parse_long(require_option(cmd, "terms"), "--terms");
  if (n < 0) throw UsageError("--terms must be nonnegative");
  return static_cast<int>(n);
}

struct Rendered {
  json inputs;
  json result;
  std::string csv;
};

Rendered run_central_charge(const CommandLine& cmd) {
  require_positionals(cmd, 2);
  const long p = parse_long(cmd.positionals[0], "P");
  const long q = parse_long(cmd.positionals[1], "Q");
  const Rational c = central_charge(p, q);
  Rendered out;
  out.inputs = {{"p", cmd.positionals[0]}, {"q", cmd.positionals[1]}};
  out.result = {{"p", p}, {"q", q}, {"c", to_string(c)}};
  out.csv = "p,q,c_numerator,c_denominator\n" + std::to_string(p) + "," + std::to_string(q) + "," +
            c.get_num().get_str() + "," + c.get_den().get_str() + "\n";
  return out;
}

Rendered run_kac_table(const CommandLine& cmd) {
  require_positionals(cmd, 2);
  const long p = parse_long(cmd.positionals[0], "P");
  const long q = parse_long(cmd.positionals[1], "Q");
  const KacTable table = kac_table(p, q);
  Rendered out;
  out.inputs = {{"p", cmd.positionals[0]}, {"q", cmd.positionals[1]}};
  out.result = to_json(table);
  out.csv = kac_csv(table);
  return out;
}

Rendered run_recognize(const CommandLine& cmd) {
  require_positionals(cmd, 1);
  const Rational c = parse_rational_arg(cmd.positionals[0], "C");
  const auto pq = recognize_central_charge(c);
  Rendered out;
  out.inputs = {{"c", to_string(c)}};
  if (pq) {
    out.result = {{"c", to_string(c)}, {"found", true}, {"p", pq->first}, {"q", pq->second}};
    out.csv = "c,found,p,q\n" + to_string(c) + ",true," + std::to_string(pq->first) + "," +
              std::to_string(pq->second) + "\n";
  } else {
    out.result = {{"c", to_string(c)}, {"found", false}};
    out.csv = "c,found,p,q\n" + to_string(c) + ",false,,\n";
  }
  return out;
}

Rendered run_character(const CommandLine& cmd) {
  require_positionals(cmd, 4);
  const long p = parse_long(cmd.positionals[0], "P");
  const long q = parse_long(cmd.positionals[1], "Q");
  const long r = parse_long(cmd.positionals[2], "R");
  const long s = parse_long(cmd.positionals[3], "S");
  const int terms = parse_terms(cmd);
  const CharacterSeries chi = irreducible_character(p, q, r, s, terms);
  Rendered out;
  out.inputs = {{"p", cmd.positionals[0]},
                {"q", cmd.positionals[1]},
                {"r", cmd.positionals[2]},
                {"s", cmd.positionals[3]},
                {"terms", std::to_string(terms)}};
  out.result = character_json(chi);
  out.csv = series_csv(chi.series);
  return out;
}

Rendered run_verma_character(const CommandLine& cmd) {
  require_positionals(cmd, 1);
  const Rational c = parse_rational_arg(cmd.positionals[0], "C");
  const int terms = parse_terms(cmd);
  Rendered out;
  out.inputs = {{"c", to_string(c)}, {"terms", std::to_string(terms)}};
  CharacterSeries chi = [&] {
    if (auto it = cmd.options.find("h"); it != cmd.options.end()) {
      const Rational h = parse_rational_arg(it->second, "--h");
      out.inputs["h"] = to_string(h);
      return verma_character(c, h, terms);
    }
    return vacuum_verma_character(c, terms);
  }();
  out.result = character_json(chi);
  out.csv = series_csv(chi.series);
  return out;
}

Rendered run_partition(const CommandLine& cmd) {
  require_positionals(cmd, 1);
  const long n = parse_long(cmd.positionals[0], "N");
  if (n < 0) throw UsageError("N must be nonnegative");
  const bool all = cmd.flags.count("--all") != 0;
  const std::vector<Integer> p = partition_numbers(static_cast<int>(n));
  Rendered out;
  out.inputs = {{"n", cmd.positionals[0]}, {"all", all}};
  if (all) {
    json values = json::array();
    for (const Integer& v : p) values.push_back(v.get_str());
    out.result = {{"max_n", n}, {"values", std::move(values)}};
    out.csv = partition_csv(p);
  } else {
    out.result = {{"n", n}, {"p", p.back().get_str()}};
    out.csv = "n,p_n\n" + std::to_string(n) + "," + p.back().get_str() + "\n";
  }
  return out;
}

Rendered run_growth(const CommandLine& cmd) {
  const std::string path = require_option(cmd, "input");
  const auto [lo_text, hi_text] = split_colon(require_option(cmd, "window"), "--window");
  const long lo = parse_long(lo_text, "--window");
  const long hi = parse_long(hi_text, "--window");

  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.find('/') != std::string::npos) {
      values.push_back(to_double(parse_rational_arg(line, "input line")));
    } else {
      values.push_back(parse_double(line, "input line"));
    }
  }

  const GrowthVerdict verdict = classify_growth(std::span<const double>(values), lo, hi);
  Rendered out;
  out.inputs = {{"input", path}, {"window", lo_text + ":" + hi_text}};
  out.result = to_json(verdict);
  out.csv = growth_plot_csv(values, verdict);
  return out;
}

Rendered run_lemma_la(const CommandLine& cmd) {
  const Rational mu = parse_rational_arg(require_option(cmd, "mu"), "--mu");
  const double alpha = parse_double(require_option(cmd, "alpha"), "--alpha");
  const int terms = parse_terms(cmd);
  const auto witness = lemma_la_witness(mu, alpha, terms);
  Rendered out;
  out.inputs = {{"mu", to_string(mu)},
                {"alpha", require_option(cmd, "alpha")},
                {"terms", std::to_string(terms)}};
  out.result = {{"mu", to_string(mu)},
                {"alpha", real15(alpha)},
                {"max_n", terms},
                {"witness", witness ? json(*witness) : json(nullptr)}};
  out.csv = "mu,alpha,max_n,witness\n" + to_string(mu) + "," + real15(alpha) + "," +
            std::to_string(terms) + "," + (witness ? std::to_string(*witness) : "") + "\n";
  return out;
}

Rendered run_key_lemma(const CommandLine& cmd) {
  require_positionals(cmd, 2);
  const long p = parse_long(cmd.positionals[0], "P");
  const long q = parse_long(cmd.positionals[1], "Q");
  const int terms = parse_terms(cmd);
  const KeyLemmaReport report = key_lemma_comparison(p, q, terms);
  Rendered out;
  out.inputs = {{"p", cmd.positionals[0]},
                {"q", cmd.positionals[1]},
                {"terms", std::to_string(terms)}};
  out.result = {{"model", to_json(report.model)},
                {"order", report.order},
                {"identity_verified", true},
                {"verma_quotient_side", to_json(report.verma_quotient_side)},
                {"irreducible_side", to_json(report.irreducible_side)}};
  std::ostringstream csv;
  csv << "side,verdict,power_parameter,power_residual,stretched_parameter,stretched_residual\n";
  for (const auto& [name, v] :
       {std::pair<const char*, const GrowthVerdict&>{"verma_quotient", report.verma_quotient_side},
        std::pair<const char*, const GrowthVerdict&>{"irreducible", report.irreducible_side}}) {
    csv << name << "," << to_json(v)["verdict"].get<std::string>() << ","
        << real15(v.power_law.parameter) << "," << real15(v.power_law.residual) << ","
        << real15(v.stretched.parameter) << "," << real15(v.stretched.residual) << "\n";
  }
  out.csv = csv.str();
  return out;
}

Rendered run_s_matrix(const CommandLine& cmd) {
  require_positionals(cmd, 2);
  const long p = parse_long(cmd.positionals[0], "P");
  const long q = parse_long(cmd.positionals[1], "Q");
  const SMatrix s = s_matrix(p, q);
  Rendered out;
  out.inputs = {{"p", cmd.positionals[0]}, {"q", cmd.positionals[1]}};
  out.result = smatrix_json(s);
  out.csv = smatrix_csv(s);
  return out;
}

Rendered run_modular_check(const CommandLine& cmd) {
  require_positionals(cmd, 2);
  const long p = parse_long(cmd.positionals[0], "P");
  const long q = parse_long(cmd.positionals[1], "Q");
  const auto [re_text, im_text] = split_colon(require_option(cmd, "tau"), "--tau");
  const double re = parse_double(re_text, "--tau");
  const double im = parse_double(im_text, "--tau");
  const int terms = parse_terms(cmd);
  const double residual = modular_check(p, q, {re, im}, terms);
  Rendered out;
  out.inputs = {{"p", cmd.positionals[0]},
                {"q", cmd.positionals[1]},
                {"tau", re_text + ":" + im_text},
                {"terms", std::to_string(terms)}};
  out.result = {{"p", p},
                {"q", q},
                {"tau", {{"re", real15(re)}, {"im", real15(im)}}},
                {"terms", terms},
                {"residual", real15(residual)}};
  out.csv = "p,q,tau_re,tau_im,terms,residual\n" + std::to_string(p) + "," + std::to_string(q) +
            "," + real15(re) + "," + real15(im) + "," + std::to_string(terms) + "," +
            real15(residual) + "\n";
  return out;
}

Rendered run_scan_extensions(const CommandLine& cmd) {
  require_positionals(cmd, 2);
  const long p = parse_long(cmd.positionals[0], "P");
  const long q = parse_long(cmd.positionals[1], "Q");
  const long max_mult = parse_long(require_option(cmd, "max-mult"), "--max-mult");
  const int terms = parse_terms(cmd);
  const auto candidates = scan_extensions(p, q, max_mult, terms);

  json list = json::array();
  for (const ExtensionCandidate& cand : candidates) {
    json mults = json::object();
    for (const auto& [entry, mult] : cand.multiplicities) {
      mults[std::to_string(entry.r) + "," + std::to_string(entry.s)] = mult;
    }
    json head = json::array();
    const int head_len = std::min(cand.character.series.truncation_order(), 19);
    for (int n = 0; n <= head_len; ++n) {
      head.push_back(to_string(cand.character.series.coefficient(n)));
    }
    list.push_back(json{{"label", cand.character.label},
                        {"total_multiplicity", cand.total_multiplicity},
                        {"multiplicities", std::move(mults)},
                        {"character_head", std::move(head)}});
  }
  Rendered out;
  out.inputs = {{"p", cmd.positionals[0]},
                {"q", cmd.positionals[1]},
                {"max_mult", std::to_string(max_mult)},
                {"terms", std::to_string(terms)}};
  out.result = {{"model", to_json(minimal_model(p, q))},
                {"max_total_multiplicity", max_mult},
                {"note", "candidates satisfy necessary conditions only; closure of vertex "
                         "operations is not checked"},
                {"candidates", std::move(list)}};
  out.csv = candidates_csv(candidates);
  return out;
}

Rendered run_classify(const CommandLine& cmd) {
  const Rational c = parse_rational_arg(require_option(cmd, "c"), "--c");
  const Rational c_tilde = parse_rational_arg(require_option(cmd, "ctilde"), "--ctilde");
  const ClassificationVerdict verdict = classify_voa(c, c_tilde);
  Rendered out;
  out.inputs = {{"c", to_string(c)}, {"ctilde", to_string(c_tilde)}};
  out.result = {{"c", to_string(c)},
                {"c_tilde", to_string(c_tilde)},
                {"verdict", to_string(verdict.tag)},
                {"model", verdict.model
                              ? json{{"p", verdict.model->first}, {"q", verdict.model->second}}
                              : json(nullptr)},
                {"note", verdict.note}};
  out.csv = "c,c_tilde,verdict,p,q\n" + to_string(c) + "," + to_string(c_tilde) + "," +
            to_string(verdict.tag) + "," +
            (verdict.model ? std::to_string(verdict.model->first) : "") + "," +
            (verdict.model ? std::to_string(verdict.model->second) : "") + "\n";
  return out;
}

Rendered run_tensor(const CommandLine& cmd) {
  const std::string path = require_option(cmd, "factors");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open factors file '" + path + "'");
  std::vector<std::pair<Rational, Rational>> factors;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string c_text, ct_text;
    if (!(row >> c_text)) continue;  // blank line
    if (!(row >> ct_text)) throw UsageError("factors file needs 'c c_tilde' per line");
    factors.emplace_back(parse_rational_arg(c_text, "factor c"),
                         parse_rational_arg(ct_text, "factor c_tilde"));
  }
  const auto [c, c_tilde] = tensor_invariants(factors);
  json factor_list = json::array();
  for (const auto& [fc, fct] : factors) {
    factor_list.push_back(json::array({to_string(fc), to_string(fct)}));
  }
  Rendered out;
  out.inputs = {{"factors", path}};
  out.result = {{"factors", std::move(factor_list)},
                {"c", to_string(c)},
                {"c_tilde", to_string(c_tilde)}};
  out.csv = "c_numerator,c_denominator,c_tilde_numerator,c_tilde_denominator\n" +
            c.get_num().get_str() + "," + c.get_den().get_str() + "," +
            c_tilde.get_num().get_str() + "," + c_tilde.get_den().get_str() + "\n";
  return out;
}

Rendered dispatch(const CommandLine& cmd) {
  if (cmd.command == "central-charge") return run_central_charge(cmd);
  if (cmd.command == "kac-table") return run_kac_table(cmd);
  if (cmd.command == "recognize") return run_recognize(cmd);
  if (cmd.command == "character") return run_character(cmd);
  if (cmd.command == "verma-character") return run_verma_character(cmd);
  if (cmd.command == "partition") return run_partition(cmd);
  if (cmd.command == "growth") return run_growth(cmd);
  if (cmd.command == "lemma-la") return run_lemma_la(cmd);
  if (cmd.command == "key-lemma") return run_key_lemma(cmd);
  if (cmd.command == "s-matrix") return run_s_matrix(cmd);
  if (cmd.command == "modular-check") return run_modular_check(cmd);
  if (cmd.command == "scan-extensions") return run_scan_extensions(cmd);
  if (cmd.command == "classify") return run_classify(cmd);
  if (cmd.command == "tensor") return run_tensor(cmd);
  throw UsageError("unknown command '" + cmd.command + "'");
}

int run(int argc, char** argv) {
  if (argc >= 2 && (std::string(argv[1]) == "--help" || std::string(argv[1]) == "-h")) {
    std::cout << kUsage;
    return 0;
  }
  try {
    const CommandLine cmd = parse_command_line(argc, argv);
    const Rendered rendered = dispatch(cmd);

    std::string payload;
    if (cmd.format == "json") {
      const json envelope = {{"format_version", 1},
                             {"command", cmd.command},
                             {"inputs", rendered.inputs},
                             {"result", rendered.result}};
      payload = envelope.dump(2) + "\n";
    } else {
      payload = rendered.csv;
    }

    if (cmd.output) {
      std::ofstream out(*cmd.output);
      if (!out) {
        std::cerr << "error: cannot write to '" << *cmd.output << "'\n";
        return 1;
      }
      out << payload;
    } else {
      std::cout << payload;
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << kUsage;
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace
}  // namespace virasoro::cli

int main(int argc, char** argv) { return virasoro::cli::run(argc, argv); }
