#include "toricsr_cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "toricsr/errors.hpp"
#include "toricsr/gale.hpp"
#include "toricsr/hilbert2d.hpp"
#include "toricsr/matrix_io.hpp"
#include "toricsr/oracle.hpp"
#include "toricsr/report.hpp"
#include "toricsr/svg.hpp"
#include "toricsr/toric.hpp"

namespace toricsr::cli {
namespace {

struct Options {
  std::string path;
  bool letters = false;
  bool oracle = false;
  bool json = false;
  bool timing = false;
  std::string out_path;
  std::optional<std::int64_t> radius;
};

// What a subcommand produced: the text to emit and the exit code.
struct Outcome {
  std::string text;
  int code = 0;
  std::string diagnostic;
};

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

IntegerMatrix load(const Options& o) {
  const std::string text = read_input(o.path);
  return o.json ? parse_matrix_json(text) : parse_matrix_text(text);
}

VariableStyle style(const Options& o) { return o.letters ? VariableStyle::letters : VariableStyle::indexed; }

std::string lines(const BinomialSet& s, VariableStyle st) {
  std::string out;
  for (const Binomial& b : s) out += to_string(b, st) + "\n";
  return out;
}

std::string describe_difference(const char* what, const BinomialSet& lib, const BinomialSet& brute, VariableStyle st) {
  std::ostringstream msg;
  msg << what << " mismatch against brute force:";
  for (const Binomial& b : lib)
    if (!brute.contains(b)) msg << " [only computed] " << to_string(b, st) << ";";
  for (const Binomial& b : brute)
    if (!lib.contains(b)) msg << " [only brute force] " << to_string(b, st) << ";";
  return msg.str();
}

// Empty when the Graver basis matches the oracle.
std::string check_graver(const GaleConfiguration& g, const BinomialSet& graver, const Options& o, std::ostream& err) {
  const oracle::GraverEnumeration brute = oracle::graver_bruteforce(g, o.radius);
  if (brute.shell_warning)
    err << "toricsr: warning: a primitive element lies near the boundary of the radius " << brute.radius
        << " search box; consider --radius\n";
  if (brute.binomials == graver) return {};
  return describe_difference("graver basis", graver, brute.binomials, style(o));
}

std::string check_indispensable(const GaleConfiguration& g, const BinomialSet& graver,
                                const BinomialSet& indispensable, const Options& o) {
  BinomialSet brute;
  for (const Binomial& b : graver)
    if (oracle::is_indispensable(g, b)) brute.insert(b);
  if (brute == indispensable) return {};
  return describe_difference("indispensable set", indispensable, brute, style(o));
}

Outcome cmd_check(const Options& o, std::ostream& err) {
  const IntegerMatrix a = load(o);
  const RobustnessReport r = is_strongly_robust(a);
  Outcome res{report_json(a, r, style(o)), r.strongly_robust ? strongly_robust : not_strongly_robust, {}};
  if (o.oracle) {
    std::string d = check_graver(r.gale, r.graver, o, err);
    if (d.empty()) d = check_indispensable(r.gale, r.graver, r.indispensable, o);
    if (!d.empty()) res = {res.text, oracle_mismatch, d};
  }
  return res;
}

Outcome cmd_graver(const Options& o, std::ostream& err) {
  const GaleConfiguration g = gale_transform(load(o));
  const BinomialSet graver = graver_basis(g);
  Outcome res{lines(graver, style(o)), 0, {}};
  if (o.oracle) {
    res.diagnostic = check_graver(g, graver, o, err);
    if (!res.diagnostic.empty()) res.code = oracle_mismatch;
  }
  return res;
}

Outcome cmd_indispensable(const Options& o, std::ostream&) {
  const GaleConfiguration g = gale_transform(load(o));
  const BinomialSet indispensable = indispensable_set(g);
  Outcome res{lines(indispensable, style(o)), 0, {}};
  if (o.oracle) {
    res.diagnostic = check_indispensable(g, graver_basis(g), indispensable, o);
    if (!res.diagnostic.empty()) res.code = oracle_mismatch;
  }
  return res;
}

Outcome cmd_markov(const Options& o, std::ostream&) {
  const GaleConfiguration g = gale_transform(load(o));
  const MarkovBasis m = markov_basis(g);
  Outcome res{lines(m.binomials, style(o)), 0, {}};
  if (m.complete_intersection)
    res.text += "# no indispensable Markov basis: the ideal is a complete intersection\n";
  if (o.oracle) {
    res.diagnostic = check_indispensable(g, graver_basis(g), m.binomials, o);
    if (!res.diagnostic.empty()) res.code = oracle_mismatch;
  }
  return res;
}

Outcome cmd_bouquets(const Options& o, std::ostream&) {
  const GaleConfiguration g = gale_transform(load(o));
  std::ostringstream s;
  std::size_t mixed = 0;
  for (const Bouquet& q : bouquets(g)) {
    s << "{";
    for (std::size_t i = 0; i < q.members.size(); ++i) s << (i ? "," : "") << q.members[i] + 1;
    s << "} " << q.direction << (q.mixed ? " mixed" : " unmixed") << "\n";
    mixed += q.mixed ? 1 : 0;
  }
  s << "mixed bouquets: " << mixed << "\n";
  return {s.str(), 0, {}};
}

Outcome cmd_gale(const Options& o, std::ostream&) {
  const GaleConfiguration g = gale_transform(load(o));
  const ReducedGaleConfiguration r = reduce(g);
  std::ostringstream s;
  s << "# Gale vectors\n" << format_matrix_text(g.matrix()) << "# reduced Gale vectors\n" << r.rows.size() << " 2\n";
  for (Vec2 v : r.rows) s << v.x << " " << v.y << "\n";
  s << "# positively graded: " << (is_positively_graded(g) ? "yes" : "no") << "\n";
  return {s.str(), 0, {}};
}

Outcome cmd_plot(const Options& o, std::ostream&) {
  const GaleConfiguration g = gale_transform(load(o));
  if (!is_positively_graded(g)) throw GradingError("the toric ideal is not positively graded");
  const ReducedGaleConfiguration r = reduce(g);
  const std::vector<Vec2> core = symmetric_core(fan_hilbert_union(r));
  return {render_gale_svg(r, core), 0, {}};
}

Outcome cmd_oracle(const Options& o, std::ostream& err) {
  const GaleConfiguration g = gale_transform(load(o));
  const oracle::GraverEnumeration brute = oracle::graver_bruteforce(g, o.radius);
  if (brute.shell_warning)
    err << "toricsr: warning: a primitive element lies near the boundary of the radius " << brute.radius
        << " search box; consider --radius\n";
  BinomialSet indispensable;
  for (const Binomial& b : brute.binomials)
    if (oracle::is_indispensable(g, b)) indispensable.insert(b);
  std::ostringstream s;
  s << "# graver (brute force, radius " << brute.radius << ")\n" << lines(brute.binomials, style(o));
  s << "# indispensable (fiber enumeration)\n" << lines(indispensable, style(o));
  Outcome res{s.str(), 0, {}};
  if (brute.binomials != graver_basis(g))
    res = {res.text, oracle_mismatch, describe_difference("graver basis", graver_basis(g), brute.binomials, style(o))};
  else if (indispensable != indispensable_set(g))
    res = {res.text, oracle_mismatch,
           describe_difference("indispensable set", indispensable_set(g), indispensable, style(o))};
  return res;
}

std::string precondition_name(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse error";
  if (dynamic_cast<const RankError*>(&e)) return "rank precondition violated";
  if (dynamic_cast<const ZeroRowError*>(&e)) return "zero Gale row";
  if (dynamic_cast<const GradingError*>(&e)) return "not positively graded";
  if (dynamic_cast<const DegenerateError*>(&e)) return "degenerate configuration";
  if (dynamic_cast<const OverflowError*>(&e)) return "integer overflow";
  return "error";
}

bool emit(const Outcome& res, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.out_path.empty()) {
    out << res.text;
    return true;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!(f << res.text)) {
    err << "toricsr: cannot write '" << o.out_path << "'\n";
    return false;
  }
  return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong robustness of codimension-2 toric ideals", "toricsr"};
  app.set_version_flag("--version", TORICSR_VERSION);
  app.require_subcommand(1);

  Options o;
  using Handler = std::function<Outcome(const Options&, std::ostream&)>;
  const std::vector<std::tuple<std::string, std::string, Handler>> commands{
      {"check", "full robustness report as JSON; exit 0 if strongly robust, 1 if not", cmd_check},
      {"graver", "Graver basis, one binomial per line", cmd_graver},
      {"indispensable", "indispensable binomials, one per line", cmd_indispensable},
      {"markov", "Markov basis, one binomial per line", cmd_markov},
      {"bouquets", "bouquets of the Gale configuration", cmd_bouquets},
      {"gale", "Gale and reduced Gale vectors", cmd_gale},
      {"plot", "SVG drawing of the reduced Gale diagram", cmd_plot},
      {"oracle", "brute-force Graver and indispensable sets, compared with the computed ones", cmd_oracle},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, help, handler] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("path", o.path, "matrix file")->required();
    sub->add_flag("--letters", o.letters, "name variables a..z when there are at most 26");
    sub->add_flag("--oracle", o.oracle, "also run the brute-force oracle; exit 3 on mismatch");
    sub->add_flag("--json", o.json, "input is a JSON document {\"rows\", \"cols\", \"matrix\"}");
    sub->add_flag("--timing", o.timing, "print elapsed time to stderr");
    sub->add_option("--out", o.out_path, "write output to this file instead of stdout");
    sub->add_option("--radius", o.radius, "half-width of the oracle search box")->check(CLI::PositiveNumber);
    subs.emplace_back(sub, handler);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : invalid_input;
  }

  const auto start = std::chrono::steady_clock::now();
  const auto it = std::find_if(subs.begin(), subs.end(), [](const auto& s) { return s.first->parsed(); });
  Outcome res;
  try {
    res = it->second(o, err);
  } catch (const ConsistencyError& e) {
    err << "toricsr: internal consistency check failed: " << e.what() << "\n";
    return oracle_mismatch;
  } catch (const Error& e) {
    err << "toricsr: " << precondition_name(e) << ": " << e.what() << "\n";
    return invalid_input;
  } catch (const std::invalid_argument& e) {
    err << "toricsr: invalid input: " << e.what() << "\n";
    return invalid_input;
  }
  if (o.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    err << "toricsr: " << it->first->get_name() << " took " << ms << " ms\n";
  }
  if (!emit(res, o, out, err)) return invalid_input;
  if (!res.diagnostic.empty()) err << "toricsr: " << res.diagnostic << "\n";
  return res.code;
}

}  // namespace toricsr::cli
