#include "hyperspec/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hyperspec/conformance.hpp"
#include "hyperspec/errors.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/random.hpp"

namespace hyperspec {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyArgs {
  std::string family;
  std::optional<std::size_t> l, r, t, n, c;
  std::vector<std::size_t> cores;
  std::string edges;
  double p = 0.5;
  std::uint64_t seed = 0;

  void attach(CLI::App& cmd) {
    cmd.add_option("family", family, "hyperflower | complete | lattice | hypercycle | graph")
        ->required();
    cmd.add_option("--l", l, "petals (hyperflower), side (lattice) or hyperedge size (hypercycle)");
    cmd.add_option("--r", r, "number of hyperflower cores");
    cmd.add_option("--t", t, "twins per hyperflower petal");
    cmd.add_option("--cores", cores, "hyperflower core sizes, comma separated")->delimiter(',');
    cmd.add_option("--n", n, "number of vertices");
    cmd.add_option("--c", c, "hyperedge cardinality (complete)");
    cmd.add_option("--edges", edges, "graph edges as 1-based pairs, e.g. 1-2,2-3");
    cmd.add_option("--p", p, "edge probability for a random graph");
    cmd.add_option("--seed", seed, "seed for randomized generators");
  }
};

std::size_t need(const std::optional<std::size_t>& v, const char* flag, const std::string& family) {
  if (!v) throw UsageError(family + " needs " + flag);
  return *v;
}

std::vector<std::pair<VertexId, VertexId>> parse_edges(const std::string& text) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ',')) {
    const auto dash = item.find('-');
    std::size_t u = 0;
    std::size_t v = 0;
    try {
      if (dash == std::string::npos) throw std::invalid_argument(item);
      std::size_t used_u = 0;
      std::size_t used_v = 0;
      u = std::stoul(item.substr(0, dash), &used_u);
      v = std::stoul(item.substr(dash + 1), &used_v);
      if (used_u != dash || used_v != item.size() - dash - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad edge '" + item + "', expected u-v");
    }
    if (u == 0 || v == 0) throw UsageError("edge endpoints are 1-based");
    edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
  }
  if (edges.empty()) throw UsageError("--edges is empty");
  return edges;
}

FamilySpec to_spec(const FamilyArgs& a) {
  const auto& f = a.family;
  if (f == "hyperflower") {
    HyperflowerSpec s{need(a.l, "--l", f), a.r.value_or(1), a.t.value_or(1), a.cores};
    if (s.core_sizes.empty()) s.core_sizes.assign(s.r, 1);
    if (a.r && s.core_sizes.size() != s.r) throw UsageError("--cores must list --r sizes");
    s.r = s.core_sizes.size();
    return s;
  }
  if (f == "complete") return CompleteSpec{need(a.n, "--n", f), need(a.c, "--c", f)};
  if (f == "lattice") return LatticeSpec{need(a.l, "--l", f)};
  if (f == "hypercycle") return HypercycleSpec{need(a.n, "--n", f), need(a.l, "--l", f)};
  if (f == "graph") {
    if (a.edges.empty()) throw UsageError("graph needs --edges (or --n for a random graph)");
    return GraphSpec{parse_edges(a.edges)};
  }
  throw UsageError("unknown family '" + f + "'");
}

OrientedHypergraph build(const FamilyArgs& a) {
  if (a.family == "graph" && a.edges.empty() && a.n) {
    if (!(a.p >= 0.0 && a.p <= 1.0)) throw UsageError("--p must lie in [0, 1]");
    Rng rng(a.seed);
    return random_simple_graph(*a.n, a.p, rng);
  }
  const auto spec = to_spec(a);
  validate(spec);
  return generate(spec);
}

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

int cmd_generate(const FamilyArgs& a, const std::string& output, std::ostream& out) {
  const auto text = write_hypergraph(build(a));
  if (output.empty() || output == "-") {
    out << text;
    return kExitPass;
  }
  std::ofstream file(output);
  if (!file || !(file << text)) throw UsageError("cannot write '" + output + "'");
  return kExitPass;
}

int cmd_spectrum(const std::string& path, bool signless, bool multiplicities, double tol,
                 bool raw, std::istream& in, std::ostream& out) {
  const auto g = parse_hypergraph(read_all(path, in));
  const auto s = signless ? signless_spectrum(g) : spectrum(g);
  auto shown = [raw](double x) { return format_number(raw ? x : report_value(x)); };
  if (multiplicities) {
    for (const auto& c : cluster_multiplicities(s, tol)) {
      out << shown(c.value) << ' ' << c.multiplicity << '\n';
    }
  } else {
    for (double x : s.values()) out << shown(x) << '\n';
  }
  return kExitPass;
}

int cmd_check(const FamilyArgs& a, double tol, double cluster_tol, std::ostream& out) {
  const auto spec = to_spec(a);
  validate(spec);
  const auto title = describe(spec);

  std::vector<std::pair<std::string, SpectrumPrediction>> predictions;
  if (const auto* f = std::get_if<HyperflowerSpec>(&spec)) {
    if (f->r == 1) {
      predictions.emplace_back(title, predict_hyperflower_r1(f->l, f->t, f->core_sizes[0]));
    } else if (f->t == 1) {
      if (f->r == 2) {
        predictions.emplace_back(title + " [(l,2) closed form]",
                                 predict_hyperflower_l2(f->l, f->core_sizes[0], f->core_sizes[1]));
      }
      predictions.emplace_back(title + " [reduction to (1,r)]",
                               predict_hyperflower_by_reduction(*f));
    } else {
      throw UsageError("no closed-form spectrum for hyperflowers with r >= 2 and t >= 2");
    }
  } else if (const auto* c = std::get_if<CompleteSpec>(&spec)) {
    predictions.emplace_back(title, predict_complete(c->n, c->c));
  } else if (const auto* lat = std::get_if<LatticeSpec>(&spec)) {
    predictions.emplace_back(title, predict_lattice(lat->l));
  } else if (const auto* cyc = std::get_if<HypercycleSpec>(&spec)) {
    predictions.emplace_back(title, predict_hypercycle(cyc->n, cyc->l));
  } else {
    throw UsageError("no closed-form spectrum for family '" + a.family + "'");
  }

  const auto computed = signless_spectrum(generate(spec));
  bool pass = true;
  for (std::size_t k = 0; k < predictions.size(); ++k) {
    const auto& [name, prediction] = predictions[k];
    const auto report = check_conformance(name, prediction, computed, tol, cluster_tol);
    if (k > 0) out << '\n';
    out << format_report(report);
    pass = pass && report.pass;
  }
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Spectra of oriented hypergraphs", "hyperspec"};
  app.require_subcommand(1);

  FamilyArgs gen_args;
  std::string output;
  auto* generate_cmd = app.add_subcommand("generate", "write a family instance in hypergraph format");
  gen_args.attach(*generate_cmd);
  generate_cmd->add_option("-o,--output", output, "output file (default: stdout)");

  std::string path;
  bool signless = false;
  bool multiplicities = false;
  bool raw = false;
  double cluster_tol = kDefaultClusterTolerance;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "print the normalized Laplacian spectrum");
  spectrum_cmd->add_option("file", path, "hypergraph file, or - for stdin")->required();
  spectrum_cmd->add_flag("--signless", signless, "use the signless normalized Laplacian");
  spectrum_cmd->add_flag("--multiplicities", multiplicities, "print 'value multiplicity' clusters");
  spectrum_cmd->add_option("--tol", cluster_tol, "clustering tolerance")->check(CLI::PositiveNumber);
  spectrum_cmd->add_flag("--raw", raw, "print values without clamping round-off to 0");

  FamilyArgs check_args;
  double tol = kDefaultConformanceTolerance;
  double check_cluster_tol = kDefaultClusterTolerance;
  auto* check_cmd = app.add_subcommand("check", "compare a family's spectrum with its closed form");
  check_args.attach(*check_cmd);
  check_cmd->add_option("--tol", tol, "conformance tolerance")->check(CLI::PositiveNumber);
  check_cmd->add_option("--cluster-tol", check_cluster_tol, "clustering tolerance")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*generate_cmd) return cmd_generate(gen_args, output, out);
    if (*spectrum_cmd) {
      return cmd_spectrum(path, signless, multiplicities, cluster_tol, raw, in, out);
    }
    return cmd_check(check_args, tol, check_cluster_tol, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hyperspec
