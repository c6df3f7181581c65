#include "z2n/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "z2n/dsl.hpp"
#include "z2n/errors.hpp"
#include "z2n/extraction.hpp"
#include "z2n/format.hpp"
#include "z2n/suites.hpp"

namespace z2n::cli {

namespace {

/// Raised when a check finds a counterexample; carries the witness text.
class Violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string chart;
  unsigned trunc = 0;  // 0: keep the chart's own
  std::string box;
  std::string outer;
  unsigned grid = kDefaultGrid;
  unsigned m = 0;
  unsigned mu = 0;
  int order = -1;
  std::uint64_t seed = 0;
  std::string suite = "all";
  unsigned terms = 16;
  std::string variant = "rho";
  std::string alpha;
  std::string beta;
  std::string op;
  std::string morphism;
  std::string coord;
  std::string index;
  std::string family;
  std::vector<std::string> wrt;
  std::vector<std::string> inputs;
};

std::string load_text(const std::string& value) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(value, ec)) {
    std::ifstream in(value);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return value;
}

/// Chart used when --chart is absent: n = 1, no eta coordinates, and just
/// enough x and zeta coordinates for the identifiers that occur.
Chart inferred_chart(const std::vector<std::string>& texts, unsigned trunc) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  static const std::regex coord("(dzeta|deta|dx|dz|de|zeta|eta|x)([1-9][0-9]*)");
  unsigned p = 1, zetas = 0;
  for (const auto& text : texts) {
    for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it) {
      std::smatch m;
      const std::string word = it->str();
      if (!std::regex_match(word, m, coord)) continue;
      const std::string kind = m[1];
      const unsigned idx = static_cast<unsigned>(std::stoul(m[2]));
      if (kind == "x" || kind == "dx") {
        p = std::max(p, idx);
      } else if (kind == "zeta" || kind == "dzeta" || kind == "dz") {
        zetas = std::max(zetas, idx);
      } else {
        throw ValidationError("'" + word + "' needs a chart with even nonzero degrees; pass --chart");
      }
    }
  }
  return make_chart(1, p, {zetas}, trunc == 0 ? 8 : trunc);
}

Chart resolve_chart(const Options& o, std::vector<std::string> texts) {
  if (o.chart.empty()) {
    texts.push_back(o.op);
    return inferred_chart(texts, o.trunc);
  }
  const SourceDocument doc = parse(load_text(o.chart));
  if (doc.charts.empty()) throw ValidationError("--chart: no chart block found");
  Chart chart = doc.charts.front().value;
  if (o.trunc != 0) chart = std::make_shared<const ChartSpec>(chart->with_trunc(o.trunc));
  return chart;
}

std::vector<GradedSeries> parse_inputs(const std::vector<std::string>& inputs, const Chart& chart) {
  std::vector<GradedSeries> out;
  for (const auto& text : inputs) out.push_back(parse_series(text, chart));
  return out;
}

void require_inputs(const Options& o, std::size_t lo, std::size_t hi) {
  if (o.inputs.size() < lo || o.inputs.size() > hi) {
    throw CLI::ValidationError("expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
                               " expressions, got " + std::to_string(o.inputs.size()));
  }
}

MorphismSpec resolve_morphism(const Options& o) {
  if (o.morphism.empty()) throw CLI::ValidationError("--morphism is required");
  const SourceDocument doc = parse(load_text(o.morphism));
  if (doc.morphisms.empty()) throw ValidationError("--morphism: no morphism block found");
  return doc.morphisms.front().value;
}

CompactBox resolve_box(const std::string& text, unsigned grid, const char* flag) {
  if (text.empty()) throw CLI::ValidationError(std::string(flag) + " is required");
  return parse_box(text, grid);
}

MultiIndex index_from_names(const ChartSpec& chart, const std::vector<std::string>& names) {
  MultiIndex index(chart.coordinate_count(), 0);
  for (const auto& name : names) ++index.at(chart.index_of(name));
  return index;
}

// ------------------------------------------------------------------ commands

int cmd_check(const Options& o, std::ostream& out) {
  bool ok = true;
  for (const Suite* s : select_suites(o.suite)) {
    const SuiteResult r = run_suite(*s, o.seed);
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, " << secs << ")";
    if (!r.passed) out << "\n  witness: " << r.witness;
    out << '\n';
    ok = ok && r.passed;
  }
  return ok ? kOk : kViolation;
}

int cmd_fold(const Options& o, std::ostream& out, bool product) {
  require_inputs(o, 1, SIZE_MAX);
  const Chart chart = resolve_chart(o, o.inputs);
  const auto xs = parse_inputs(o.inputs, chart);
  GradedSeries acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = product ? acc * xs[i] : acc + xs[i];
  out << to_string(acc) << '\n';
  return kOk;
}

int cmd_diff(const Options& o, std::ostream& out) {
  require_inputs(o, 1, 1);
  std::vector<std::string> texts = o.inputs;
  texts.insert(texts.end(), o.wrt.begin(), o.wrt.end());
  const Chart chart = resolve_chart(o, texts);
  const GradedSeries f = parse_series(o.inputs[0], chart);
  MultiIndex index = o.index.empty() ? index_from_names(*chart, o.wrt) : parse_tuple(o.index);
  out << to_string(iterated_partial(f, index)) << '\n';
  return kOk;
}

int cmd_apply(const Options& o, std::ostream& out) {
  require_inputs(o, 2, 2);
  const Chart chart = resolve_chart(o, o.inputs);
  out << to_string(apply(parse_operator(o.inputs[0], chart), parse_series(o.inputs[1], chart))) << '\n';
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  require_inputs(o, 1, 1);
  if (o.order < 0) throw CLI::ValidationError("--order is required");
  const Chart chart = resolve_chart(o, o.inputs);
  ExtractionOptions opts;
  opts.seed = o.seed;
  try {
    const DiffOperator d = extract_coefficients(parse_blackbox(o.inputs[0], chart, o.order), o.order, opts);
    out << to_string(d) << '\n';
  } catch (const NotAnOperatorOfOrderK& e) {
    throw Violation(std::string(e.what()) + "\nwitness: " + e.witness());
  }
  return kOk;
}

int cmd_commutator(const Options& o, std::ostream& out) {
  require_inputs(o, 2, 2);
  const Chart chart = resolve_chart(o, o.inputs);
  out << to_string(graded_commutator(parse_operator(o.inputs[0], chart), parse_operator(o.inputs[1], chart))) << '\n';
  return kOk;
}

int cmd_pullback(const Options& o, std::ostream& out) {
  require_inputs(o, 1, 1);
  const MorphismSpec phi = resolve_morphism(o);
  out << to_string(pullback(phi, parse_series(o.inputs[0], phi.target()))) << '\n';
  return kOk;
}

int cmd_chain_check(const Options& o, std::ostream& out) {
  require_inputs(o, 1, 1);
  const MorphismSpec phi = resolve_morphism(o);
  const GradedSeries f = parse_series(o.inputs[0], phi.target());
  const ChartSpec& src = *phi.source();
  std::vector<std::size_t> coords;
  if (o.coord.empty()) {
    for (std::size_t a = 0; a < src.coordinate_count(); ++a) coords.push_back(a);
  } else {
    coords.push_back(src.index_of(o.coord));
  }
  for (auto a : coords) {
    const IdentityReport r = chain_rule_check(phi, f, a);
    if (!r.holds) {
      throw Violation("chain rule fails for d/d" + src.coordinate(a).name + "\n  lhs = " + to_string(r.lhs) +
                      "\n  rhs = " + to_string(r.rhs) + "\n  residual = " + to_string(r.residual));
    }
    out << "d/d" << src.coordinate(a).name << ": holds\n";
  }
  return kOk;
}

int cmd_faa_check(const Options& o, std::ostream& out) {
  require_inputs(o, 1, 1);
  const MorphismSpec phi = resolve_morphism(o);
  const GradedSeries f = parse_series(o.inputs[0], phi.target());
  std::vector<MultiIndex> indices;
  if (!o.index.empty()) {
    indices.push_back(parse_tuple(o.index));
  } else {
    indices = multi_indices_up_to(*phi.source(), o.order < 0 ? 3u : static_cast<unsigned>(o.order));
  }
  for (const auto& alpha : indices) {
    const IdentityReport r = faa_di_bruno_check(phi, f, alpha);
    if (!r.holds) {
      throw Violation("expansion differs at alpha = " + tuple_string(alpha) + "\n  residual = " + to_string(r.residual));
    }
  }
  out << "holds for " << indices.size() << " multi-indices\n";
  return kOk;
}

SeminormSpec build_spec(const Options& o, const Chart& chart) {
  const CompactBox box = resolve_box(o.box, o.grid, "--box");
  const XiKey beta = o.beta.empty() ? XiKey(chart->xi_count(), 0) : parse_tuple(o.beta);
  if (o.variant == "rho") return SeminormSpec::rho(box, o.m, o.mu);
  if (o.variant == "cab") {
    const Exponents alpha = o.alpha.empty() ? Exponents(chart->p(), 0) : parse_tuple(o.alpha);
    return SeminormSpec::cab(box, alpha, beta);
  }
  if (o.op.empty()) throw CLI::ValidationError("--op is required for --variant " + o.variant);
  const DiffOperator d = parse_operator(o.op, chart);
  if (o.variant == "cd") return SeminormSpec::cd(box, d);
  return SeminormSpec::base(box, d, beta);
}

int cmd_seminorm(const Options& o, std::ostream& out) {
  require_inputs(o, 1, SIZE_MAX);
  const Chart chart = resolve_chart(o, o.inputs);
  const SeminormSpec spec = build_spec(o, chart);
  for (const auto& f : parse_inputs(o.inputs, chart)) out << to_string(eval_seminorm(spec, f)) << '\n';
  return kOk;
}

int cmd_equiv_const(const Options& o, std::ostream& out) {
  if (o.op.empty()) throw CLI::ValidationError("--op is required");
  const Chart chart = resolve_chart(o, o.inputs);
  const CompactBox inner = resolve_box(o.box, o.grid, "--box");
  const CompactBox outer = o.outer.empty() ? inner : parse_box(o.outer, o.grid);
  const EquivalenceBound bound = equivalence_constant(parse_operator(o.op, chart), inner, outer);
  out << "C = " << to_string(bound.constant) << '\n';
  out << "C' = " << to_string(bound.weighted_constant) << '\n';
  for (std::size_t i = 0; i < o.inputs.size(); ++i) {
    const EquivalenceCheck r = check_equivalence(bound, parse_series(o.inputs[i], chart));
    if (!r.holds) {
      throw Violation("bound fails for " + o.inputs[i] + ": " + to_string(r.lhs) + " > " +
                      to_string(bound.constant) + " * " + to_string(r.rhs));
    }
    out << o.inputs[i] << ": " << to_string(r.lhs) << " <= " << to_string(bound.constant) << " * "
        << to_string(r.rhs) << '\n';
  }
  return kOk;
}

int cmd_dist(const Options& o, std::ostream& out, bool grid_given) {
  require_inputs(o, 2, 2);
  const Chart chart = resolve_chart(o, o.inputs);
  const auto xs = parse_inputs(o.inputs, chart);
  const MetricSpec metric = default_metric(chart, o.terms, grid_given ? o.grid : 5);
  const Distance d = metric_distance(metric, xs[0], xs[1]);
  out << to_string(d.value) << '\n' << "tail <= " << to_string(d.tail_bound) << '\n';
  return kOk;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

int cmd_table(const Options& o, std::ostream& out) {
  require_inputs(o, 1, SIZE_MAX);
  const Chart chart = resolve_chart(o, o.inputs);
  std::vector<SeminormSpec> family;
  if (o.family.empty()) {
    family.push_back(build_spec(o, chart));
  } else {
    family = parse_family(load_text(o.family), chart);
  }
  const auto xs = parse_inputs(o.inputs, chart);
  const auto table = seminorm_table(xs, family);
  out << "series";
  for (const auto& s : family) out << ',' << csv_field(to_string(s));
  out << '\n';
  for (std::size_t r = 0; r < xs.size(); ++r) {
    out << csv_field(to_string(xs[r]));
    for (const auto& v : table[r]) out << ',' << to_string(v);
    out << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations on Z2^n-graded function algebras", "z2n"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"check", "run the seeded invariant suites"},
      {"mul", "multiply series"},
      {"add", "add series"},
      {"diff", "iterated partial derivative"},
      {"apply-op", "apply an operator to a series: OP SERIES"},
      {"decompose", "normal form of an operator expression of order <= --order"},
      {"commutator", "graded commutator of two operators"},
      {"pullback", "pull a target series back along --morphism"},
      {"chain-check", "verify the graded chain rule for a pullback"},
      {"faa-check", "verify iterated chain rule expansions"},
      {"seminorm", "evaluate a seminorm"},
      {"equiv-const", "equivalence constants for p_{C,D}"},
      {"dist", "truncated metric distance between two series"},
      {"table", "CSV table of seminorms over a family"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("inputs", o.inputs, "expressions");
    sub->add_option("--chart", o.chart, "chart file or inline chart block");
    sub->add_option("--trunc", o.trunc, "override the chart truncation order");
    sub->add_option("--box", o.box, "compact box \"[a1,b1]x[a2,b2]\"");
    sub->add_option("--outer", o.outer, "outer box for equiv-const");
    sub->add_option("--grid", o.grid, "grid points per axis");
    sub->add_option("--m", o.m, "x-derivative order for rho");
    sub->add_option("--mu", o.mu, "xi-derivative order for rho");
    sub->add_option("--order", o.order, "operator order bound");
    sub->add_option("--seed", o.seed, "seed for randomized work (default 0)");
    sub->add_option("--suite", o.suite, "suite name, group prefix, or all");
    sub->add_option("--terms", o.terms, "metric cutoff T");
    sub->add_option("--variant", o.variant, "seminorm variant")->check(CLI::IsMember({"rho", "cab", "cd", "base"}));
    sub->add_option("--alpha", o.alpha, "x multi-index tuple");
    sub->add_option("--beta", o.beta, "xi multi-index tuple");
    sub->add_option("--op", o.op, "operator expression");
    sub->add_option("--morphism", o.morphism, "file or inline text with a morphism block");
    sub->add_option("--coord", o.coord, "source coordinate for chain-check");
    sub->add_option("--index", o.index, "coordinate multi-index tuple");
    sub->add_option("--family", o.family, "seminorm family file, one spec per line");
    sub->add_option("--wrt", o.wrt, "coordinates to differentiate by")->delimiter(',')->allow_extra_args(false);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    if (name == "check") return cmd_check(o, out);
    if (name == "mul") return cmd_fold(o, out, true);
    if (name == "add") return cmd_fold(o, out, false);
    if (name == "diff") return cmd_diff(o, out);
    if (name == "apply-op") return cmd_apply(o, out);
    if (name == "decompose") return cmd_decompose(o, out);
    if (name == "commutator") return cmd_commutator(o, out);
    if (name == "pullback") return cmd_pullback(o, out);
    if (name == "chain-check") return cmd_chain_check(o, out);
    if (name == "faa-check") return cmd_faa_check(o, out);
    if (name == "seminorm") return cmd_seminorm(o, out);
    if (name == "equiv-const") return cmd_equiv_const(o, out);
    if (name == "dist") return cmd_dist(o, out, sub->count("--grid") > 0);
    return cmd_table(o, out);
  } catch (const Violation& e) {
    err << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const CLI::ValidationError& e) {
    err << "usage: " << e.what() << '\n';
    return kParseError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
}

}  // namespace z2n::cli
