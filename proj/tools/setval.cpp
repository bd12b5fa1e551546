// setval: command-line front end for set-labeled signed graphs.
//
// Exit status: 0 the checked property holds, 1 it fails (witness printed),
// 2 usage, parse or I/O error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "setval/analysis.hpp"
#include "setval/constructors.hpp"
#include "setval/error.hpp"
#include "setval/io.hpp"
#include "setval/oracle.hpp"

namespace {

using namespace setval;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

std::string join_names(const std::vector<VertexId>& vs, const std::vector<std::string>& names) {
  std::string out;
  for (VertexId v : vs) {
    if (!out.empty()) out += ' ';
    out += names[v];
  }
  return out;
}

std::string format_label(const SetLabel& label) {
  std::string out = "{";
  for (Element e : label.elements()) {
    if (out.size() > 1) out += ',';
    out += std::to_string(e);
  }
  return out + "}";
}

SignedGraphDocument load_graph(const std::string& path) {
  SignedGraphDocument doc = parse_signed_graph(read_input(path));
  if (doc.duplicate_edges > 0) {
    std::cerr << "note: " << doc.duplicate_edges << " repeated edge line(s) ignored\n";
  }
  if (auto isolated = doc.graph.graph().isolated_vertices(); !isolated.empty()) {
    std::cerr << "warning: isolated vertices: " << join_names(isolated, doc.names) << '\n';
  }
  return doc;
}

std::string render_valuation(const SetValuation& val, const std::vector<std::string>& names, const std::string& format) {
  const ValuationDocument doc = to_document(val, names);
  return format == "json" ? serialize_valuation_json(doc) : serialize_valuation_text(doc);
}

// --- label ---------------------------------------------------------------

struct LabelOptions {
  std::string graph;
  std::string scheme = "canonical";
  std::string out = "-";
  std::string format = "text";
};

int run_label(const LabelOptions& opt) {
  const SignedGraphDocument doc = load_graph(opt.graph);
  if (opt.scheme == "canonical") {
    write_output(opt.out, render_valuation(canonical_set_indexer(doc.graph.graph()), doc.names, opt.format));
    return kHolds;
  }
  const CompatibleLabeling result = balance_compatible_labeling(doc.graph);
  if (!result.balanced()) {
    std::cout << "unbalanced: negative cycle " << join_names(result.witness().vertices, doc.names) << '\n';
    return kFails;
  }
  write_output(opt.out, render_valuation(result.valuation(), doc.names, opt.format));
  return kHolds;
}

// --- induce --------------------------------------------------------------

struct InduceOptions {
  std::string graph;
  std::string valuation;
  std::string out = "-";
};

int run_induce(const InduceOptions& opt) {
  const SignedGraphDocument doc = load_graph(opt.graph);
  const SetValuation val = to_valuation(parse_valuation(read_input(opt.valuation)), doc.names);
  const SignedGraph induced = induce_signed_graph(doc.graph.graph(), val);
  std::size_t changed = 0;
  for (EdgeId e = 0; e < induced.edge_count(); ++e) changed += induced.sign(e) != doc.graph.sign(e);
  if (changed > 0) std::cerr << "note: " << changed << " edge sign(s) differ from the input file\n";
  write_output(opt.out, serialize_signed_graph(induced, doc.names));
  return kHolds;
}

// --- check ---------------------------------------------------------------

struct CheckOptions {
  std::string graph;
  std::string valuation;
  bool balance = false;
  bool two_cluster = false;
  bool indexer = false;
  bool eulerian_sum = false;
  bool relaxed = false;
};

bool check_balance(const SignedGraphDocument& doc) {
  const BalanceResult r = is_balanced(doc.graph);
  if (r.balanced()) {
    std::cout << "balance: yes\n  V1: " << join_names(r.bipartition().v1, doc.names)
              << "\n  V2: " << join_names(r.bipartition().v2, doc.names) << '\n';
    return true;
  }
  std::cout << "balance: no\n  negative cycle: " << join_names(r.negative_cycle().vertices, doc.names) << '\n';
  return false;
}

bool check_two_cluster(const SignedGraphDocument& doc, const std::optional<SetValuation>& val) {
  const ClusterResult r = is_two_clusterable(doc.graph);
  if (r.clusterable()) {
    std::cout << "two-cluster: yes\n  U1: " << join_names(r.certificate().u1, doc.names)
              << "\n  U2: " << join_names(r.certificate().u2, doc.names) << '\n';
  } else {
    std::cout << "two-cluster: no (" << to_string(r.reason()) << ")\n";
  }
  if (val) {
    const bool by_parity = two_clusterable_by_parity(doc.graph.graph(), *val);
    std::cout << "  opposite-parity edge: " << (by_parity ? "yes" : "no") << '\n';
  }
  return r.clusterable();
}

bool check_indexer(const SignedGraphDocument& doc, const SetValuation& val) {
  const Graph& g = doc.graph.graph();
  const IndexerCheck r = is_set_indexer(g, val);
  if (r) {
    std::cout << "indexer: yes\n";
    return true;
  }
  const Edge& a = g.edge(r.collision->first);
  const Edge& b = g.edge(r.collision->second);
  std::cout << "indexer: no\n  edges " << doc.names[a.u] << ' ' << doc.names[a.v] << " and " << doc.names[b.u] << ' '
            << doc.names[b.v] << " share label " << format_label(induced_edge_label(val, g, a)) << '\n';
  return false;
}

bool check_eulerian_sum(const SignedGraphDocument& doc, const SetValuation& val, bool relaxed) {
  const Graph& g = doc.graph.graph();
  try {
    const EulerianParityReport r =
        eulerian_label_sum_parity(g, val, relaxed ? IndexerRequirement::relaxed : IndexerRequirement::strict);
    std::cout << "eulerian-sum: total " << r.total << (r.total_even() ? " (even)" : " (odd)") << '\n';
    for (const CycleLabelSum& c : r.cycles) {
      std::cout << "  cycle " << join_names(c.cycle.vertices, doc.names) << ": positive " << c.positive_sum
                << ", negative " << c.negative_sum << " over " << c.negative_edges << " negative edge(s)\n";
    }
    return r.total_even() && r.all_cycles_even();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotEulerian && e.code() != ErrorCode::NotSetIndexer) throw;
    std::cout << "eulerian-sum: not applicable (" << e.what() << ")\n";
    return false;
  }
}

int run_check(CheckOptions opt) {
  if (!opt.balance && !opt.two_cluster && !opt.indexer && !opt.eulerian_sum) opt.balance = true;
  if ((opt.indexer || opt.eulerian_sum) && opt.valuation.empty()) {
    std::cerr << "error: --indexer and --eulerian-sum need --valuation\n";
    return kUsage;
  }
  const SignedGraphDocument doc = load_graph(opt.graph);
  std::optional<SetValuation> val;
  if (!opt.valuation.empty()) {
    val = to_valuation(parse_valuation(read_input(opt.valuation)), doc.names);
    if (auto clash = val->find_collision()) {
      throw Error(ErrorCode::NotInjective, "'" + doc.names[clash->first] + "' and '" + doc.names[clash->second] +
                                               "' share a label");
    }
  }

  bool holds = true;
  if (opt.balance) holds = check_balance(doc) && holds;
  if (opt.two_cluster) holds = check_two_cluster(doc, val) && holds;
  if (opt.indexer) holds = check_indexer(doc, *val) && holds;
  if (opt.eulerian_sum) holds = check_eulerian_sum(doc, *val, opt.relaxed) && holds;
  return holds ? kHolds : kFails;
}

// --- verify --------------------------------------------------------------

int run_verify(const FamilyDescriptor& family, bool json) {
  const SuiteReport report = verify_theorem_suite(family);
  std::cout << (json ? report_json(report) : report_text(report));
  return report.passed() ? kHolds : kFails;
}

// --- gen -----------------------------------------------------------------

struct GenOptions {
  std::uint64_t seed = 0;
  std::size_t n = 8;
  double p = 0.5;
  std::optional<std::size_t> m;
  std::string graph_out = "-";
  std::string valuation_out;
  std::string format = "text";
};

// Graph from `seed`, valuation from seed + 1, random signs from seed + 2.
int run_gen(const GenOptions& opt) {
  const Graph g = random_graph(opt.n, opt.p, opt.seed);
  const auto names = default_names(opt.n);
  if (opt.m) {
    const SetValuation val = random_valuation(g, *opt.m, opt.seed + 1);
    write_output(opt.graph_out, serialize_signed_graph(induce_signed_graph(g, val), names));
    if (!opt.valuation_out.empty()) write_output(opt.valuation_out, render_valuation(val, names, opt.format));
  } else {
    write_output(opt.graph_out, serialize_signed_graph(random_signature(g, opt.seed + 2), names));
  }
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-labeled signed graphs: labeling, balance and clusterability checks, oracle verification"};
  app.require_subcommand(1);

  LabelOptions label;
  auto* label_cmd = app.add_subcommand("label", "Construct a set-labeling for a graph");
  label_cmd->add_option("graph", label.graph, "Signed edge list ('-' for stdin)")->required();
  label_cmd->add_option("--scheme", label.scheme, "canonical: {i} per vertex; compatible: reproduce the signature")
      ->check(CLI::IsMember({"canonical", "compatible"}));
  label_cmd->add_option("--out", label.out, "Output file (default stdout)");
  label_cmd->add_option("--format", label.format, "Valuation format")->check(CLI::IsMember({"text", "json"}));

  InduceOptions induce;
  auto* induce_cmd = app.add_subcommand("induce", "Signed graph induced by a valuation");
  induce_cmd->add_option("graph", induce.graph, "Signed edge list; its signs are replaced")->required();
  induce_cmd->add_option("valuation", induce.valuation, "Valuation document (text or JSON)")->required();
  induce_cmd->add_option("--out", induce.out, "Output file (default stdout)");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Check properties of a signed graph");
  check_cmd->add_option("graph", check.graph, "Signed edge list ('-' for stdin)")->required();
  check_cmd->add_option("--valuation", check.valuation, "Valuation document for label-based checks");
  check_cmd->add_flag("--balance", check.balance, "Harary balance (default when no check is named)");
  check_cmd->add_flag("--two-cluster", check.two_cluster, "2-clusterability; needs a connected graph");
  check_cmd->add_flag("--indexer", check.indexer, "Induced edge labels pairwise distinct");
  check_cmd->add_flag("--eulerian-sum", check.eulerian_sum, "Parity of the total edge-label size");
  check_cmd->add_flag("--relaxed", check.relaxed, "Let --eulerian-sum accept labelings that are not set-indexers");

  FamilyDescriptor family;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the brute-force theorem suite over small graphs");
  verify_cmd->add_option("--max-n", family.max_n, "Largest vertex count of the exhaustive family");
  verify_cmd->add_option("--max-m", family.max_m, "Largest ground-set size of the exhaustive family");
  verify_cmd->add_option("--budget", family.budget, "Cap on labelings per graph and signatures per graph");
  verify_cmd->add_flag("--connected-only", family.connected_only, "Only connected graphs");
  verify_cmd->add_option("--random", family.random_instances, "Additional seeded random instances");
  verify_cmd->add_option("--random-max-n", family.random_max_n, "Vertex cap for random instances");
  verify_cmd->add_option("--random-max-m", family.random_max_m, "Ground-set cap for random instances");
  verify_cmd->add_option("--seed", family.seed, "Seed for random instances");
  verify_cmd->add_flag("--json", verify_json, "Machine-readable report");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random signed graph (and valuation)");
  gen_cmd->add_option("--seed", gen.seed, "Seed (required for reproducibility)")->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--p", gen.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--m", gen.m, "Ground-set size; signs are then induced by a random valuation");
  gen_cmd->add_option("--graph-out", gen.graph_out, "Signed edge list output (default stdout)");
  gen_cmd->add_option("--valuation-out", gen.valuation_out, "Valuation output (needs --m)");
  gen_cmd->add_option("--format", gen.format, "Valuation format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*label_cmd) return run_label(label);
    if (*induce_cmd) return run_induce(induce);
    if (*check_cmd) return run_check(check);
    if (*verify_cmd) return run_verify(family, verify_json);
    if (*gen_cmd) return run_gen(gen);
  } catch (const setval::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
