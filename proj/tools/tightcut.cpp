// tightcut: command-line front end.
//
// Exit codes: 0 verified success, 1 property violation, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tightcut/certificate_json.hpp"
#include "tightcut/dot.hpp"
#include "tightcut/edgelist.hpp"
#include "tightcut/errors.hpp"
#include "tightcut/instances.hpp"
#include "tightcut/matching.hpp"
#include "tightcut/sweep.hpp"

using namespace tightcut;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

// Thrown for malformed command-line values.
struct UsageError : Error {
  using Error::Error;
};

VertexSet shore_of(const Graph& g, const std::vector<int>& cut) {
  VertexSet x(std::vector<Vertex>(cut.begin(), cut.end()));
  if (x.size() != cut.size()) throw UsageError("--cut lists a vertex twice");
  if (x.empty() || !x.subset_of(g.vertices()) || x.size() == g.vertices().size())
    throw InvalidShoreError("--cut " + x.to_string() + " is not a proper nonempty vertex subset");
  return x;
}

// --json with no value means stdout.
void emit_json(const json& j, const CLI::Option* opt, const std::string& path) {
  if (opt->count() == 0) return;
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

json witnesses_json(const CutClassification& cls) { return classification_to_json(cls); }

std::ostream& info(const CLI::Option* json_opt, const std::string& json_path) {
  // Keep stdout clean when JSON goes there.
  return json_opt->count() && (json_path.empty() || json_path == "-") ? std::cerr : std::cout;
}

struct CheckArgs {
  std::string file;
  std::vector<int> cut;
  std::string json_path;
};

int cmd_check(const CheckArgs& a, const CLI::Option* json_opt) {
  Graph g = read_edge_list_file(a.file);
  json j{{"command", "check"},
         {"file", a.file},
         {"n", g.num_vertices()},
         {"m", g.num_edges()},
         {"connected", is_connected(g)},
         {"two_connected", g.num_vertices() >= 3 && is_2connected(g)},
         {"matching_covered", is_matching_covered(g)},
         {"critical", is_critical(g)},
         {"bicritical", is_bicritical(g)}};
  if (!a.cut.empty()) {
    VertexSet x = shore_of(g, a.cut);
    CutClassification cls = classify_cut(g, boundary(g, x));
    j["cut"] = x.members();
    j["classification"] = witnesses_json(cls);
  }
  std::ostream& os = info(json_opt, a.json_path);
  for (const char* k : {"n", "m", "connected", "two_connected", "matching_covered", "critical", "bicritical"})
    os << k << "=" << j[k].dump() << "\n";
  if (j.contains("classification")) {
    const json& c = j["classification"];
    os << "tight=" << c["tight"].dump() << "\ntrivial=" << c["trivial"].dump() << "\nelp=" << c["elp"].dump() << "\n";
    for (const json& w : c["barrier_witnesses"]) os << "barrier " << w["barrier"].dump() << "\n";
    for (const json& w : c["twosep_witnesses"]) os << "2-separation " << w["pair"].dump() << "\n";
  }
  emit_json(j, json_opt, a.json_path);
  return kOk;
}

struct DecomposeArgs {
  std::string file;
  std::vector<int> cut;
  std::string json_path;
  std::string dot_dir;
};

int cmd_decompose(const DecomposeArgs& a, const CLI::Option* json_opt) {
  Graph g = read_edge_list_file(a.file);
  VertexSet x = shore_of(g, a.cut);
  const Cut c = boundary(g, x);
  if (!is_matching_covered(g)) {
    std::cerr << "error: graph is not matching covered\n";
    return kViolation;
  }
  if (c.trivial()) {
    std::cerr << "error: the cut is trivial\n";
    return kViolation;
  }
  if (!is_tight(g, c)) {
    std::cerr << "error: not a tight cut\n";
    return kViolation;
  }
  DecompositionCertificate cert = decompose_tight_cut(g, x);
  VerifyResult v = verify_certificate(g, x, cert);
  std::ostream& os = info(json_opt, a.json_path);
  os << "r=" << cert.r << "\n";
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertificateStep& st = cert.steps[i];
    os << "step " << i + 1 << ": " << (st.witness.kind == ElpKind::kBarrier ? "barrier" : "2-separation")
       << " cut " << st.cut_shore.to_string() << ", contract " << st.contracted_shore.to_string() << " -> "
       << st.new_vertex << "\n";
  }
  if (!a.dot_dir.empty())
    for (const std::string& p : write_certificate_dot(cert, a.dot_dir)) os << "wrote " << p << "\n";
  emit_json(certificate_to_json(cert), json_opt, a.json_path);
  if (!v.ok()) {
    std::cerr << "error: certificate failed verification: " << reason_name(v.reason) << " (step " << v.step << ") "
              << v.detail << "\n";
    return kViolation;
  }
  os << "verified\n";
  return kOk;
}

struct VerifyArgs {
  std::string graph_file;
  std::vector<int> cut;
  std::string cert_file;
};

int cmd_verify(const VerifyArgs& a) {
  Graph g = read_edge_list_file(a.graph_file);
  VertexSet x = shore_of(g, a.cut);
  std::ifstream in(a.cert_file);
  if (!in) throw ParseError("cannot open " + a.cert_file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  DecompositionCertificate cert = certificate_from_json(j);
  VerifyResult v = verify_certificate(g, x, cert);
  if (!v.ok()) {
    std::cout << "rejected: " << reason_name(v.reason);
    if (v.step >= 0) std::cout << " at step " << v.step;
    if (!v.detail.empty()) std::cout << ": " << v.detail;
    std::cout << "\n";
    return kViolation;
  }
  std::cout << "verified r=" << cert.r << "\n";
  return kOk;
}

struct SweepArgs {
  std::string mode = "exhaustive";
  int min_n = 2;
  int max_n = 6;
  int samples = 100;
  std::uint64_t seed = 1;
  std::string report;
  std::string harvest;
  bool require_branches = false;
  bool quiet = false;
};

int cmd_sweep(const SweepArgs& a, const std::string& echo) {
  CorpusSpec spec;
  if (a.mode == "exhaustive")
    spec.mode = CorpusMode::kExhaustive;
  else if (a.mode == "random")
    spec.mode = CorpusMode::kRandom;
  else if (a.mode == "blocks")
    spec.mode = CorpusMode::kBlocks;
  else
    throw UsageError("--mode must be exhaustive, random or blocks");
  spec.min_n = a.min_n;
  spec.max_n = a.max_n;
  spec.samples = a.samples;
  spec.seed = a.seed;
  try {
    CorpusStream probe(spec);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("refused: ") + e.what());
  }
  SweepOptions opt;
  opt.corpora = {spec};
  opt.command = echo;
  opt.harvest_dir = a.harvest;
  SweepReport rep = run_sweep(opt);
  if (!a.report.empty()) {
    std::ofstream out(a.report);
    if (!out) throw Error("cannot write " + a.report);
    out << rep.to_json().dump(2) << "\n";
  }
  std::cout << "graphs=" << rep.graphs << " tight_cuts=" << rep.tight_cuts << " non_elp=" << rep.non_elp_cuts
            << " seconds=" << rep.seconds << "\n";
  for (const auto& [name, t] : rep.properties) std::cout << name << " " << t.passed << "/" << t.checked << "\n";
  for (std::size_t b = 0; b < kProofBranchCount; ++b)
    std::cout << "branch " << branch_name(static_cast<ProofBranch>(b)) << " " << rep.branch_hits[b] << "\n";
  for (const std::string& f : rep.harvested_files) std::cout << "harvested " << f << "\n";
  for (const Violation& v : rep.violations) std::cout << "VIOLATION " << v.property << ": " << v.detail << "\n";
  const auto missing = rep.missing_branches();
  if (a.require_branches)
    for (const std::string& m : missing) std::cout << "MISSING branch " << m << "\n";
  return rep.violations.empty() && (!a.require_branches || missing.empty()) ? kOk : kViolation;
}

struct GenerateArgs {
  std::string name;
  bool random = false;
  bool blocks = false;
  int n = 10;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  Graph g;
  if (a.random || a.blocks) {
    if (!a.name.empty()) throw UsageError("give either a name or --random/--blocks");
    CorpusSpec spec;
    spec.mode = a.blocks ? CorpusMode::kBlocks : CorpusMode::kRandom;
    spec.min_n = spec.max_n = a.n;
    spec.samples = 1;
    spec.seed = a.seed;
    try {
      g = *CorpusStream(spec).next();
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
  } else {
    if (a.name.empty()) throw UsageError("generate needs a name or --random");
    try {
      g = canonical(a.name);
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
  }
  if (a.out.empty() || a.out == "-") {
    write_edge_list(std::cout, g);
    return kOk;
  }
  std::ofstream out(a.out);
  if (!out) throw Error("cannot write " + a.out);
  write_edge_list(out, g);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight cuts of matching covered graphs"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Report matching properties; classify a cut with --cut");
  c_check->add_option("file", check.file, "edge-list file")->required();
  c_check->add_option("--cut", check.cut, "shore, comma separated")->delimiter(',');
  auto* check_json = c_check->add_option("--json", check.json_path, "write JSON (stdout when no path)")->expected(0, 1);

  DecomposeArgs dec;
  auto* c_dec = app.add_subcommand("decompose", "Reduce a tight cut to a 2-separation cut, with certificate");
  c_dec->add_option("file", dec.file, "edge-list file")->required();
  c_dec->add_option("--cut", dec.cut, "shore, comma separated")->delimiter(',')->required();
  auto* dec_json = c_dec->add_option("--json", dec.json_path, "write certificate JSON (stdout when no path)")
                       ->expected(0, 1);
  c_dec->add_option("--dot", dec.dot_dir, "write one DOT file per certificate graph into this directory");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Check a certificate independently");
  c_ver->add_option("graph", ver.graph_file, "edge-list file")->required();
  c_ver->add_option("certificate", ver.cert_file, "certificate JSON")->required();
  c_ver->add_option("--cut", ver.cut, "shore, comma separated")->delimiter(',')->required();

  SweepArgs sw;
  auto* c_sw = app.add_subcommand("sweep", "Run every corpus-wide invariant");
  c_sw->add_option("--mode", sw.mode, "exhaustive | random | blocks")->capture_default_str();
  c_sw->add_option("--min-n", sw.min_n)->capture_default_str();
  c_sw->add_option("--max-n", sw.max_n)->capture_default_str();
  c_sw->add_option("--samples", sw.samples, "graphs drawn in random and blocks modes")->capture_default_str();
  c_sw->add_option("--seed", sw.seed)->capture_default_str();
  c_sw->add_option("--report", sw.report, "write the JSON run report here");
  c_sw->add_option("--harvest", sw.harvest, "pin the smallest instance per branch as fixtures in this directory");
  c_sw->add_flag("--require-branches", sw.require_branches, "fail when a proof branch was never executed");

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate", "Write a canonical or sampled graph as an edge list");
  c_gen->add_option("name", gen.name, "K2, K4, K33, C2k(k), PETERSEN, PRISM, CUBE, DOUBLE_K4");
  c_gen->add_flag("--random", gen.random, "sample a random matching covered graph");
  c_gen->add_flag("--blocks", gen.blocks, "sample a block-structured matching covered graph");
  c_gen->add_option("--n", gen.n)->capture_default_str();
  c_gen->add_option("--seed", gen.seed)->capture_default_str();
  c_gen->add_option("--out", gen.out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::string echo;
  for (int i = 0; i < argc; ++i) echo += (i ? " " : "") + std::string(argv[i]);

  try {
    if (*c_check) return cmd_check(check, check_json);
    if (*c_dec) return cmd_decompose(dec, dec_json);
    if (*c_ver) return cmd_verify(ver);
    if (*c_sw) return cmd_sweep(sw, echo);
    if (*c_gen) return cmd_generate(gen);
  } catch (const SchemaError& e) {
    std::cerr << "schema error at " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidShoreError& e) {
    std::cerr << "invalid cut: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardExceededError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}
