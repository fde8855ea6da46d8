// clustervd command-line front end.
//
// Exit codes: 0 positive answer, 1 negative answer (not a cograph, infinite
// value, decision NO, rejected set, NP_COMPLETE), 2 usage or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "clustervd/classify.hpp"
#include "clustervd/cluster_dp.hpp"
#include "clustervd/cotree.hpp"
#include "clustervd/error.hpp"
#include "clustervd/generators.hpp"
#include "clustervd/graph_io.hpp"
#include "clustervd/json_io.hpp"
#include "clustervd/oracle.hpp"
#include "clustervd/reductions.hpp"

namespace cv = clustervd;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw cv::Error(cv::ErrorKind::Input, "cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw cv::Error(cv::ErrorKind::Input, "cannot write " + path);
  out << text;
}

struct Input {
  cv::Graph graph;
  std::optional<cv::Cotree> cotree;
};

// A graph file or a cotree file.
Input load(const std::string& path) {
  const std::string text = read_text(path);
  Input in;
  if (cv::looks_like_cotree(text)) {
    in.cotree = cv::parse_cotree(text);
    in.graph = cv::expand(*in.cotree);
  } else {
    in.graph = cv::parse_graph(text);
  }
  return in;
}

std::vector<int> parse_set(const std::string& text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw cv::Error(cv::ErrorKind::Parse, "bad vertex id '" + token + "' in set");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '[' || c == ']') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

cv::Variant variant_flag(const std::string& name) {
  if (name == "cvd") return cv::Variant::Cvd;
  if (name == "ccvd") return cv::Variant::ConnectedCvd;
  if (name == "clique") return cv::Variant::CliqueDel;
  if (name == "cclique") return cv::Variant::ConnectedCliqueDel;
  if (name == "covc") return cv::Variant::ComplementVc;
  return cv::Variant::VertexCover;
}

const std::vector<std::string> kVariantFlags{"cvd", "ccvd", "clique", "cclique", "covc", "vc"};

void print_json(const nlohmann::json& j) { std::cout << j.dump() << '\n'; }

// ---- recognize ----

struct RecognizeOpts {
  std::string input;
  std::string output;
  bool binary = false;
};

int cmd_recognize(const RecognizeOpts& o) {
  const cv::Graph g = cv::parse_graph(read_text(o.input));
  if (g.order() == 0) throw UsageError("the empty graph has no cotree");
  auto built = cv::build_cotree(g);
  if (auto* w = std::get_if<cv::PatternWitness>(&built)) {
    std::cout << "not a cograph: induced " << cv::describe(*w) << '\n';
    return kNo;
  }
  const auto& t = std::get<cv::Cotree>(built);
  write_text(o.output, (o.binary ? cv::serialize_cotree(cv::binarize(t)) : cv::serialize_cotree(t)) + "\n");
  return kYes;
}

// ---- solve ----

struct SolveOpts {
  std::string input;
  std::string variant = "cvd";
  std::string method = "cotree";
  bool weighted = false;
  std::optional<std::int64_t> budget;
  bool force = false;
};

int cmd_solve(const SolveOpts& o) {
  const cv::Variant v = variant_flag(o.variant);
  if (o.method == "branch") {
    if (!o.budget) throw UsageError("--method branch needs --budget");
    if (v != cv::Variant::Cvd) throw UsageError("--method branch only supports --variant cvd");
    if (o.weighted) throw UsageError("--method branch is unweighted");
  }
  if (o.method == "cotree") {
    if (v == cv::Variant::VertexCover) throw UsageError("--variant vc needs --method brute");
    if (o.weighted && v != cv::Variant::Cvd && v != cv::Variant::ComplementVc && v != cv::Variant::CliqueDel) {
      throw UsageError("weighted " + o.variant + " is not supported by the cotree method");
    }
  }
  if (o.budget && *o.budget < 0) throw UsageError("--budget must be >= 0");

  const Input in = load(o.input);
  cv::Solution s;
  if (o.method == "branch") {
    auto r = cv::branch_cvd(in.graph, static_cast<int>(*o.budget), o.force);
    s.variant = v;
    s.method = "branch";
    s.value = r.yes ? cv::ExtInt(static_cast<std::int64_t>(r.set.size())) : cv::ExtInt::infinity();
    if (r.yes) s.set = r.set;
    auto j = cv::decision_json(s, r.yes, *o.budget);
    if (!r.yes) j.erase("value");
    print_json(j);
    return r.yes ? kYes : kNo;
  }
  if (o.method == "brute") {
    s = cv::brute_min(in.graph, v, o.weighted, o.force);
  } else if (in.cotree) {
    std::vector<std::int64_t> w;
    s = cv::solve(*in.cotree, v, w, o.weighted);
  } else {
    s = cv::solve(in.graph, v, o.weighted);
  }
  if (o.budget) {
    const bool yes = s.value <= cv::ExtInt(*o.budget);
    print_json(cv::decision_json(s, yes, *o.budget));
    return yes ? kYes : kNo;
  }
  print_json(cv::to_json(s));
  return s.value.is_finite() ? kYes : kNo;
}

// ---- reduce ----

struct ReduceOpts {
  std::string input;
  std::string kind;
  std::int64_t budget = 0;
  int rounds = 1;
  int girth = 3;
  std::string output;
  std::string sidecar;
  std::optional<std::string> lift_set;
  std::optional<std::string> restrict_set;
};

int cmd_reduce(const ReduceOpts& o) {
  if (o.budget < 0) throw UsageError("--budget must be >= 0");
  if (o.kind == "amplify" && o.rounds < 1) throw UsageError("--rounds must be >= 1");
  if (o.kind == "ccvd-gadget" && o.girth < 3) throw UsageError("--girth must be >= 3");
  const Input in = load(o.input);
  cv::ReducedInstance ri;
  if (o.kind == "dense") {
    ri = cv::vc_to_cvd_dense(in.graph, o.budget);
  } else if (o.kind == "subdiv3") {
    ri = cv::subdivide3(in.graph, o.budget);
  } else if (o.kind == "amplify") {
    ri = cv::amplify(in.graph, o.budget, o.rounds);
  } else {
    ri = cv::cvd_to_ccvd(in.graph, o.budget, o.girth);
  }
  std::optional<std::vector<int>> lifted;
  std::optional<std::vector<int>> restricted;
  if (o.lift_set) lifted = cv::lift(ri, parse_set(*o.lift_set));
  if (o.restrict_set) restricted = cv::restrict_solution(ri, parse_set(*o.restrict_set));

  std::vector<std::string> header{"clustervd reduce --kind " + o.kind, "k = " + std::to_string(ri.k) +
                                                                          ", k' = " + std::to_string(ri.k_prime)};
  write_text(o.output, cv::format_graph(ri.produced, header));
  const std::string sidecar = o.sidecar.empty() ? o.output + ".json" : o.sidecar;
  std::optional<std::span<const int>> ls;
  std::optional<std::span<const int>> rs;
  if (lifted) ls = std::span<const int>(*lifted);
  if (restricted) rs = std::span<const int>(*restricted);
  write_text(sidecar, cv::sidecar_json(ri, ls, rs).dump(2) + "\n");
  std::cout << "k' = " << ri.k_prime << ", " << ri.produced.order() << " vertices, " << ri.produced.size()
            << " edges\n";
  return kYes;
}

// ---- verify ----

struct VerifyOpts {
  std::string input;
  std::string variant = "cvd";
  std::optional<std::string> set;
  std::optional<std::string> solution;
};

int cmd_verify(const VerifyOpts& o) {
  if (!o.set && !o.solution) throw UsageError("verify needs --set or --solution");
  if (o.set && o.solution) throw UsageError("--set and --solution are exclusive");
  const Input in = load(o.input);
  std::vector<int> set;
  if (o.set) {
    set = parse_set(*o.set);
  } else {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_text(*o.solution));
    } catch (const nlohmann::json::exception& e) {
      throw cv::Error(cv::ErrorKind::Parse, std::string("solution JSON: ") + e.what());
    }
    auto s = cv::solution_from_json(j);
    if (!s.set) throw cv::Error(cv::ErrorKind::Input, "solution carries no set");
    set = *s.set;
  }
  const cv::Variant v = variant_flag(o.variant);
  auto r = cv::verify(in.graph, set, v);
  print_json(cv::to_json(r, v));
  return r.accepted ? kYes : kNo;
}

// ---- classify ----

int cmd_classify(const std::string& input) {
  const Input in = load(input);
  auto verdict = cv::dichotomy_classify(in.graph);
  std::cout << cv::to_string(verdict.side);
  if (verdict.witness) std::cout << ' ' << cv::describe(*verdict.witness);
  std::cout << '\n';
  return verdict.side == cv::ComplexitySide::Polynomial ? kYes : kNo;
}

// ---- gen ----

struct GenOpts {
  std::string kind;
  int n = 0;
  double p = 0.5;
  int rows = 0;
  int cols = 0;
  std::uint64_t seed = 1;
  std::string output;
  std::string cotree_out;
};

int cmd_gen(const GenOpts& o) {
  if (o.kind != "grid" && o.n < 1) throw UsageError("--n must be >= 1");
  if (o.kind == "grid" && (o.rows < 1 || o.cols < 1)) throw UsageError("grid needs --rows and --cols >= 1");
  if (o.kind == "cycle" && o.n < 3) throw UsageError("cycle needs --n >= 3");
  if (o.p < 0.0 || o.p > 1.0) throw UsageError("--p must lie in [0, 1]");
  if (!o.cotree_out.empty() && o.kind != "random-cograph") {
    throw UsageError("--cotree-out only applies to --kind random-cograph");
  }
  cv::Rng rng(o.seed);
  std::string params = "clustervd gen --kind " + o.kind;
  cv::Graph g;
  if (o.kind == "random-cograph") {
    auto t = cv::random_binary_cotree(o.n, rng);
    g = cv::expand(t);
    params += " --n " + std::to_string(o.n) + " --seed " + std::to_string(o.seed);
    if (!o.cotree_out.empty()) write_text(o.cotree_out, "# " + params + "\n" + cv::serialize_cotree(t) + "\n");
  } else if (o.kind == "gnp") {
    g = cv::gnp(o.n, o.p, rng);
    std::ostringstream ps;
    ps << " --n " << o.n << " --p " << o.p << " --seed " << o.seed;
    params += ps.str();
  } else if (o.kind == "path") {
    g = cv::path_graph(o.n);
    params += " --n " + std::to_string(o.n);
  } else if (o.kind == "cycle") {
    g = cv::cycle_graph(o.n);
    params += " --n " + std::to_string(o.n);
  } else {
    g = cv::grid_graph(o.rows, o.cols);
    params += " --rows " + std::to_string(o.rows) + " --cols " + std::to_string(o.cols);
  }
  write_text(o.output, cv::format_graph(g, {params}));
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster vertex deletion on cographs, exact oracles and hardness reductions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "clustervd 1.0");

  RecognizeOpts rec;
  auto* recognize = app.add_subcommand("recognize", "Build the cotree of a cograph or report an induced P4");
  recognize->add_option("input", rec.input, "Graph file ('-' for stdin)")->required();
  recognize->add_option("-o,--output", rec.output, "Write the cotree here instead of stdout");
  recognize->add_flag("--binary", rec.binary, "Emit the right-associated binary cotree");

  SolveOpts sol;
  auto* solve = app.add_subcommand("solve", "Solve a deletion problem; prints a JSON solution");
  solve->add_option("input", sol.input, "Graph or cotree file ('-' for stdin)")->required();
  solve->add_option("--variant", sol.variant, "cvd|ccvd|clique|cclique|covc|vc")
      ->check(CLI::IsMember(kVariantFlags))
      ->capture_default_str();
  solve->add_option("--method", sol.method, "cotree|brute|branch")
      ->check(CLI::IsMember({"cotree", "brute", "branch"}))
      ->capture_default_str();
  solve->add_flag("--weighted", sol.weighted, "Use vertex weights from the graph file");
  solve->add_option("--budget", sol.budget, "Decision budget k");
  solve->add_flag("--force", sol.force, "Lift the brute-force and branching size guards");

  ReduceOpts red;
  auto* reduce = app.add_subcommand("reduce", "Build a reduced instance plus a JSON sidecar");
  reduce->add_option("input", red.input, "Source graph file")->required();
  reduce->add_option("--kind", red.kind, "dense|subdiv3|amplify|ccvd-gadget")
      ->required()
      ->check(CLI::IsMember({"dense", "subdiv3", "amplify", "ccvd-gadget"}));
  reduce->add_option("--budget", red.budget, "Source budget k")->required();
  reduce->add_option("--rounds", red.rounds, "Subdivision rounds for amplify")->capture_default_str();
  reduce->add_option("--girth", red.girth, "Girth parameter for ccvd-gadget")->capture_default_str();
  reduce->add_option("-o,--output", red.output, "Produced graph file")->required();
  reduce->add_option("--sidecar", red.sidecar, "Sidecar path (default: <output>.json)");
  reduce->add_option("--lift", red.lift_set, "Source solution to map forward, e.g. 1,4,5");
  reduce->add_option("--restrict", red.restrict_set, "Produced solution to map back");

  VerifyOpts ver;
  auto* verify = app.add_subcommand("verify", "Check a deletion set");
  verify->add_option("input", ver.input, "Graph or cotree file")->required();
  verify->add_option("--variant", ver.variant, "cvd|ccvd|clique|cclique|covc|vc")
      ->check(CLI::IsMember(kVariantFlags))
      ->capture_default_str();
  verify->add_option("--set", ver.set, "Vertex set, comma or space separated");
  verify->add_option("--solution", ver.solution, "Solution JSON file whose set is checked");

  std::string classify_input;
  auto* classify = app.add_subcommand("classify", "Complexity of CVD on H-free graphs");
  classify->add_option("input", classify_input, "Pattern graph H")->required();

  GenOpts gen;
  auto* generate = app.add_subcommand("gen", "Generate a graph");
  generate->add_option("--kind", gen.kind, "random-cograph|gnp|path|cycle|grid")
      ->required()
      ->check(CLI::IsMember({"random-cograph", "gnp", "path", "cycle", "grid"}));
  generate->add_option("--n", gen.n, "Vertex count");
  generate->add_option("--p", gen.p, "Edge probability for gnp")->capture_default_str();
  generate->add_option("--rows", gen.rows, "Grid rows");
  generate->add_option("--cols", gen.cols, "Grid columns");
  generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate->add_option("-o,--output", gen.output, "Graph file (default stdout)");
  generate->add_option("--cotree-out", gen.cotree_out, "Also write the generating cotree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*recognize) return cmd_recognize(rec);
    if (*solve) return cmd_solve(sol);
    if (*reduce) return cmd_reduce(red);
    if (*verify) return cmd_verify(ver);
    if (*classify) return cmd_classify(classify_input);
    if (*generate) return cmd_gen(gen);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const cv::Error& e) {
    std::cerr << "error (" << cv::to_string(e.kind()) << "): " << e.what() << '\n';
    if (e.witness()) std::cerr << "witness: " << cv::describe(*e.witness()) << '\n';
    return e.kind() == cv::ErrorKind::Rejected || e.kind() == cv::ErrorKind::NotNormalized ? kNo : kUsage;
  }
  return kUsage;
}
