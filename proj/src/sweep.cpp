#include "tightcut/sweep.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "detail/subsets.hpp"
#include "tightcut/edgelist.hpp"
#include "tightcut/errors.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

using nlohmann::json;

std::string_view mutation_name(Mutation m) {
  switch (m) {
    case Mutation::kDropBarrierMember: return "drop-barrier-member";
    case Mutation::kBreakTwoSeparationPair: return "break-2-separation-pair";
    case Mutation::kDropContractedEdge: return "drop-contracted-edge";
    case Mutation::kEditContractedShore: return "edit-contracted-shore";
    case Mutation::kEditInputShore: return "edit-input-shore";
    case Mutation::kBumpStepCount: return "bump-step-count";
    case Mutation::kClearElpFlag: return "clear-elp-flag";
  }
  return "unknown";
}

namespace {

std::vector<std::size_t> steps_of_kind(const DecompositionCertificate& cert, ElpKind kind) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cert.steps.size(); ++i)
    if (cert.steps[i].witness.kind == kind) out.push_back(i);
  return out;
}

void break_pair(const Graph& g, TwoSeparation& s) {
  for (Vertex w : g.vertices()) {
    if (w != s.u && w != s.v) {
      s.u = w;
      return;
    }
  }
}

}  // namespace

VerifyReason expected_reason(Mutation m, const DecompositionCertificate& cert) {
  switch (m) {
    case Mutation::kDropBarrierMember: return VerifyReason::kWitnessNotBarrier;
    case Mutation::kBreakTwoSeparationPair:
      return steps_of_kind(cert, ElpKind::kTwoSeparation).empty() ? VerifyReason::kClassificationInvalid
                                                                  : VerifyReason::kWitnessNotTwoSeparation;
    case Mutation::kDropContractedEdge:
      return cert.steps.empty() ? VerifyReason::kFinalGraphMismatch : VerifyReason::kContractionMismatch;
    case Mutation::kEditContractedShore: return VerifyReason::kContractedShoreInvalid;
    case Mutation::kEditInputShore: return VerifyReason::kInputMismatch;
    case Mutation::kBumpStepCount: return VerifyReason::kStepCountMismatch;
    case Mutation::kClearElpFlag: return VerifyReason::kClassificationInvalid;
  }
  return VerifyReason::kOk;
}

std::optional<DecompositionCertificate> mutate(const DecompositionCertificate& cert, Mutation m, std::uint64_t salt) {
  DecompositionCertificate out = cert;
  switch (m) {
    case Mutation::kDropBarrierMember: {
      auto idx = steps_of_kind(cert, ElpKind::kBarrier);
      if (idx.empty()) return std::nullopt;
      CertificateStep& st = out.steps[idx[salt % idx.size()]];
      VertexSet& members = st.witness.barrier.barrier.members;
      members = members.without(members.members()[salt % members.size()]);
      return out;
    }
    case Mutation::kBreakTwoSeparationPair: {
      auto idx = steps_of_kind(cert, ElpKind::kTwoSeparation);
      if (!idx.empty()) {
        CertificateStep& st = out.steps[idx[salt % idx.size()]];
        break_pair(st.graph, st.witness.twosep);
        return out;
      }
      auto& seps = out.final_classification.twosep_witnesses;
      if (seps.empty()) return std::nullopt;
      break_pair(out.final_graph, seps[salt % seps.size()]);
      return out;
    }
    case Mutation::kDropContractedEdge: {
      Graph& target = out.steps.empty() ? out.final_graph
                      : salt % out.steps.size() + 1 < out.steps.size()
                          ? out.steps[salt % out.steps.size() + 1].graph
                          : out.final_graph;
      if (target.num_edges() == 0) return std::nullopt;
      target = target.remove_edges({target.edges()[salt % target.edges().size()].id});
      return out;
    }
    case Mutation::kEditContractedShore: {
      if (out.steps.empty()) return std::nullopt;
      VertexSet& s = out.steps[salt % out.steps.size()].contracted_shore;
      s = s.without(s.members()[salt % s.size()]);
      return out;
    }
    case Mutation::kEditInputShore: {
      VertexSet& x = out.input_shore;
      if (x.size() >= 2)
        x = x.without(x.members()[salt % x.size()]);
      else
        x = x.with(cert.input.complement(x).front());
      return out;
    }
    case Mutation::kBumpStepCount: out.r += 1; return out;
    case Mutation::kClearElpFlag: out.final_classification.elp = false; return out;
  }
  return std::nullopt;
}

std::vector<std::string> SweepReport::missing_branches() const {
  std::vector<std::string> out;
  for (std::size_t b = 0; b < kProofBranchCount; ++b)
    if (branch_hits[b] == 0) out.emplace_back(branch_name(static_cast<ProofBranch>(b)));
  return out;
}

json SweepReport::to_json(bool with_instances) const {
  json props = json::object();
  for (const auto& [name, t] : properties) props[name] = {{"checked", t.checked}, {"passed", t.passed}};
  json branches = json::object();
  for (std::size_t b = 0; b < kProofBranchCount; ++b)
    branches[std::string(branch_name(static_cast<ProofBranch>(b)))] = branch_hits[b];
  json viol = json::array();
  for (const Violation& v : violations)
    viol.push_back({{"property", v.property}, {"detail", v.detail}, {"graph", v.graph}, {"shore", v.shore}});
  json out{{"command", command},
           {"graphs", graphs},
           {"tight_cuts", tight_cuts},
           {"non_elp_cuts", non_elp_cuts},
           {"properties", props},
           {"branches", branches},
           {"missing_branches", missing_branches()},
           {"repeated_barrier_phases", repeated_barrier_phases},
           {"violations", viol},
           {"harvested", harvested_files},
           {"seconds", seconds}};
  if (with_instances) {
    json inst = json::array();
    for (const InstanceResult& r : instances)
      inst.push_back({{"corpus", r.corpus},
                      {"index", r.index},
                      {"n", r.n},
                      {"m", r.m},
                      {"tight_cuts", r.tight_cuts},
                      {"non_elp", r.non_elp},
                      {"max_r", r.max_r}});
    out["instances"] = inst;
  }
  return out;
}

namespace {

std::string edge_list_text(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

// Re-checks an ELP finding using only the predicates: the witness, the cut
// it generates, tightness, nontriviality and, separately, non-crossing.
std::string finding_problem(const Graph& g, const Cut& ref, const ElpFinding& f, bool& crossing) {
  crossing = false;
  const Cut& cut = f.cut;
  if (f.kind == ElpKind::kBarrier) {
    const Barrier& b = f.barrier.barrier;
    auto fresh = is_barrier(g, b.members);
    if (!fresh || !fresh->nontrivial() || fresh->odd_parts != b.odd_parts) return "barrier witness does not re-verify";
    if (!b.members.proper_subset_of(ref.shore()) && !b.members.proper_subset_of(ref.other_shore()))
      return "barrier not properly inside a shore";
    const int k = f.barrier.component;
    if (k < 0 || k >= static_cast<int>(b.odd_parts.size()) || !cut.has_shore(b.odd_parts[k]))
      return "barrier witness does not generate the cut";
  } else {
    if (!is_two_separation(g, f.twosep)) return "2-separation witness does not re-verify";
    auto cuts = two_separation_cuts(g, f.twosep);
    if (std::find(cuts.begin(), cuts.end(), cut) == cuts.end()) return "2-separation does not generate the cut";
  }
  if (cut.trivial()) return "finding cut is trivial";
  if (!TightnessOracle(g).is_tight(cut.shore())) return "finding cut is not tight";
  crossing = crosses(g, cut, ref);
  return {};
}

class Sweeper {
 public:
  Sweeper(const SweepOptions& opt, SweepReport& rep) : opt_(opt), rep_(rep) {
    for (const char* p : {"elp_theorem", "noncrossing", "decomposition", "cut_contractions", "shores_connected",
                          "barrier_shape", "lift_odd_component", "lift_two_separation", "dm_dual_strategy",
                          "mutations"})
      rep_.properties[p];
  }

  void graph(const Graph& g, InstanceResult& inst) {
    std::vector<Cut> cuts;
    try {
      cuts = enumerate_tight_cuts(g, true);
    } catch (const std::exception& e) {
      violation("enumeration", e.what(), g, {});
      return;
    }
    for (const Cut& c : cuts) {
      ++rep_.tight_cuts;
      ++inst.tight_cuts;
      try {
        cut(g, c, inst);
      } catch (const std::exception& e) {
        violation("exception", e.what(), g, c.shore());
      }
    }
  }

 private:
  void tally(const std::string& property, bool ok, const Graph& g, const VertexSet& x, const std::string& detail) {
    Tally& t = rep_.properties[property];
    ++t.checked;
    if (ok)
      ++t.passed;
    else
      violation(property, detail, g, x);
  }

  void violation(const std::string& property, const std::string& detail, const Graph& g, const VertexSet& x) {
    rep_.violations.push_back({property, detail, edge_list_text(g), x.members()});
  }

  void harvest(const std::string& key, const Graph& g, const VertexSet& x) {
    auto it = rep_.harvest.find(key);
    auto size = [](const Graph& h) { return std::make_pair(h.num_vertices(), h.num_edges()); };
    if (it == rep_.harvest.end() || size(g) < size(it->second.graph)) rep_.harvest[key] = {g, x};
  }

  void hit(const std::vector<ProofBranch>& path, const Graph& g, const VertexSet& x) {
    for (ProofBranch b : path) {
      ++rep_.branch_hits[static_cast<std::size_t>(b)];
      harvest(std::string(branch_name(b)), g, x);
    }
  }

  void cut(const Graph& g, const Cut& c, InstanceResult& inst) {
    const VertexSet& x = c.shore();
    const VertexSet& xbar = c.other_shore();

    ElpFinding f = find_noncrossing_elp(g, x);
    hit(f.path, g, x);
    bool crossing = false;
    std::string problem = finding_problem(g, c, f, crossing);
    tally("elp_theorem", problem.empty(), g, x, problem);
    tally("noncrossing", problem.empty() && !crossing, g, x, problem.empty() ? "finding crosses the cut" : problem);

    const CutClassification cls = classify_cut(g, c);
    DecompositionCertificate cert = decompose_tight_cut(g, x);
    hit(cert.path, g, x);
    const VerifyResult v = verify_certificate(g, x, cert);
    bool shape = cls.elp ? cert.r == 1 : cert.r >= 2 && !cert.final_classification.twosep_witnesses.empty();
    tally("decomposition", v.ok() && shape, g, x,
          v.ok() ? "certificate has the wrong shape" : std::string(reason_name(v.reason)) + " " + v.detail);
    if (!cls.elp) {
      ++rep_.non_elp_cuts;
      ++inst.non_elp;
      harvest("non-elp", g, x);
    }
    inst.max_r = std::max(inst.max_r, cert.r);
    if (repeated_phase(cert)) {
      ++rep_.repeated_barrier_phases;
      harvest("repeated-barrier-phase", g, x);
    }
    if (v.ok()) mutations(g, x, cert);

    contractions(g, c);
    tally("shores_connected", is_connected_subset(g, x) && is_connected_subset(g, xbar), g, x,
          "a shore of a tight cut induces a disconnected subgraph");

    for (const BarrierWitness& w : cls.barrier_witnesses) {
      barrier_shape(g, w.barrier, x);
      lift_odd(g, w.barrier, x);
    }
    if (f.kind == ElpKind::kBarrier) lift_odd(g, f.barrier.barrier, x);
    for (const TwoSeparation& s : cls.twosep_witnesses) lift_twosep(g, s, x);
    if (f.kind == ElpKind::kTwoSeparation) lift_twosep(g, f.twosep, x);

    dm_dual(g, c);
  }

  // More than one barrier contraction on the same side of C.
  static bool repeated_phase(const DecompositionCertificate& cert) {
    VertexSet xc = cert.input_shore;
    int per_side[2] = {0, 0};
    for (const CertificateStep& st : cert.steps) {
      const bool inside = st.contracted_shore.subset_of(xc);
      if (st.witness.kind == ElpKind::kBarrier) ++per_side[inside ? 1 : 0];
      if (inside) xc = xc.minus(st.contracted_shore).with(st.new_vertex);
    }
    return per_side[0] > 1 || per_side[1] > 1;
  }

  void mutations(const Graph& g, const VertexSet& x, const DecompositionCertificate& cert) {
    const int quota = (opt_.mutation_budget + static_cast<int>(kMutationCount) - 1) / static_cast<int>(kMutationCount);
    for (std::size_t k = 0; k < kMutationCount; ++k) {
      if (mutation_done_ >= opt_.mutation_budget) return;
      if (per_kind_[k] >= quota) continue;
      const auto m = static_cast<Mutation>(k);
      auto bad = mutate(cert, m, salt_++);
      if (!bad) continue;
      ++per_kind_[k];
      ++mutation_done_;
      const VerifyReason want = expected_reason(m, cert);
      const VerifyResult got = verify_certificate(g, x, *bad);
      tally("mutations", got.reason == want, g, x,
            std::string(mutation_name(m)) + ": expected '" + std::string(reason_name(want)) + "', got '" +
                std::string(reason_name(got.reason)) + "'");
    }
  }

  // Both cut-contractions are matching covered, and an odd shore of a
  // contraction is tight exactly when the same-edge-id cut of g is tight.
  void contractions(const Graph& g, const Cut& c) {
    auto [to_x, to_xbar] = cut_contractions(g, c);
    const TightnessOracle og(g);
    std::string problem;
    for (const Graph* h : {&to_x, &to_xbar}) {
      if (!is_matching_covered(*h)) {
        problem = "a cut-contraction is not matching covered";
        break;
      }
      const Vertex label = h == &to_x ? g.next_fresh_vertex() : g.next_fresh_vertex() + 1;
      const VertexSet stands_for = h->origin(label);
      const TightnessOracle oh(*h);
      const std::vector<Vertex>& vs = h->vertices().members();
      const int n = static_cast<int>(vs.size());
      for (std::uint32_t mask = 1; mask < (1U << (n - 1)) && problem.empty(); ++mask) {
        if (__builtin_popcount(mask) % 2 == 0) continue;
        std::vector<Vertex> in;
        for (int i = 0; i < n - 1; ++i)
          if ((mask >> i) & 1U) in.push_back(vs[i + 1]);
        const VertexSet s(std::move(in));
        const VertexSet lifted = s.contains(label) ? s.without(label).unite(stands_for) : s;
        if (boundary(*h, s).edges() != boundary(g, lifted).edges())
          problem = "contraction changes the edges of " + s.to_string();
        else if (oh.is_tight(s) != og.is_tight(lifted))
          problem = "tightness of " + s.to_string() + " differs across the contraction";
      }
      if (!problem.empty()) break;
    }
    tally("cut_contractions", problem.empty(), g, c.shore(), problem);
  }

  void barrier_shape(const Graph& g, const Barrier& b, const VertexSet& x) {
    bool independent = true;
    for (Vertex a : b.members)
      independent = independent && !g.neighbors(a).intersects(b.members);
    auto parts = components_without(g, b.members);
    bool all_odd = true;
    for (const VertexSet& p : parts) all_odd = all_odd && p.size() % 2 == 1;
    tally("barrier_shape", independent && all_odd && parts.size() == b.members.size(), g, x,
          "barrier " + b.members.to_string() + " has an inner edge or an even component");
  }

  // Barriers of h used as inner barriers of lift scenarios: the contracted
  // vertex alone, then small barriers alternating between those containing
  // and avoiding it.
  std::vector<VertexSet> scenario_barriers(const Graph& h, Vertex label) const {
    std::vector<VertexSet> with_label;
    std::vector<VertexSet> without_label;
    const int cap = opt_.lift_scenarios_per_contraction;
    const int max_k = std::min(3, h.num_vertices() - 1);
    detail::for_each_subset(h.vertices(), 2, max_k, [&](const VertexSet& cand) {
      auto& bucket = cand.contains(label) ? with_label : without_label;
      if (static_cast<int>(bucket.size()) < cap && is_barrier(h, cand)) bucket.push_back(cand);
      return static_cast<int>(with_label.size() + without_label.size()) < 2 * cap;
    });
    std::vector<VertexSet> out{VertexSet{label}};
    for (std::size_t i = 0; static_cast<int>(out.size()) < cap && (i < with_label.size() || i < without_label.size());
         ++i) {
      if (i < with_label.size()) out.push_back(with_label[i]);
      if (i < without_label.size() && static_cast<int>(out.size()) < cap) out.push_back(without_label[i]);
    }
    return out;
  }

  void check_lift(const std::string& property, const Graph& g, const VertexSet& x, const std::function<Barrier()>& lift,
                  const std::string& what) {
    std::string problem;
    try {
      Barrier lifted = lift();
      auto fresh = is_barrier(g, lifted.members);
      if (!fresh || fresh->odd_parts != lifted.odd_parts)
        problem = what + " lifted to non-barrier " + lifted.members.to_string();
    } catch (const std::exception& e) {
      problem = what + ": " + e.what();
    }
    tally(property, problem.empty(), g, x, problem);
  }

  void lift_odd(const Graph& g, const Barrier& b, const VertexSet& x) {
    const Vertex label = g.next_fresh_vertex();
    for (const VertexSet& y : b.odd_parts) {
      if (y.size() < 3) continue;
      const Graph h = contract(g, g.complement(y), label);
      for (const VertexSet& inner : scenario_barriers(h, label)) {
        check_lift("lift_odd_component", g, x, [&] { return lift_barrier_over_odd_component(g, b, y, label, inner); },
                   "barrier " + inner.to_string() + " over " + y.to_string());
      }
    }
  }

  void lift_twosep(const Graph& g, const TwoSeparation& s, const VertexSet& x) {
    const Vertex label = g.next_fresh_vertex();
    for (const Cut& c : two_separation_cuts(g, s)) {
      for (const VertexSet* kept : {&c.shore(), &c.other_shore()}) {
        if (g.complement(*kept).size() < 2) continue;
        const Graph h = contract(g, g.complement(*kept), label);
        for (const VertexSet& inner : scenario_barriers(h, label)) {
          check_lift("lift_two_separation", g, x, [&] { return lift_barrier_over_2sep(g, s, *kept, label, inner); },
                     "barrier " + inner.to_string() + " kept " + kept->to_string());
        }
      }
    }
  }

  // For each cut edge uv where u and v are each other's only neighbour
  // across and both shores minus the endpoint stay connected, g-u-v with the
  // cut between x-u and x̄-v meets the DM-barrier preconditions.
  void dm_dual(const Graph& g, const Cut& c) {
    const VertexSet& x = c.shore();
    const VertexSet& xbar = c.other_shore();
    for (EdgeId id : c.edges()) {
      const Edge& e = g.edge(id);
      const Vertex u = x.contains(e.u) ? e.u : e.v;
      const Vertex v = e.other(u);
      if (g.neighbors(u).intersect(xbar) != VertexSet{v} || g.neighbors(v).intersect(x) != VertexSet{u}) continue;
      if (!is_connected_subset(g, x.without(u)) || !is_connected_subset(g, xbar.without(v))) continue;
      const Graph rest = g.remove_vertices(VertexSet{u, v});
      const VertexSet xr = x.without(u);
      std::string problem;
      for (DMStrategy st : {DMStrategy::kConstructive, DMStrategy::kExhaustive}) {
        const char* name = st == DMStrategy::kConstructive ? "constructive" : "exhaustive";
        try {
          DMBarrierFinding f = find_dm_barrier(rest, xr, st);
          const Barrier& b = f.dm.barrier;
          auto fresh = is_barrier(rest, b.members);
          const VertexSet home = b.members.subset_of(xr) ? xr : rest.complement(xr);
          bool contained = b.members.subset_of(home);
          for (const VertexSet& p : b.odd_parts) contained = contained && p.subset_of(home);
          if (!fresh || !is_dm_barrier(rest, *fresh) || !contained)
            problem += std::string(name) + " witness " + b.members.to_string() + " fails; ";
        } catch (const std::exception& ex) {
          problem += std::string(name) + ": " + ex.what() + "; ";
        }
      }
      tally("dm_dual_strategy", problem.empty(), g, x, problem);
    }
  }

  const SweepOptions& opt_;
  SweepReport& rep_;
  int mutation_done_ = 0;
  std::array<int, kMutationCount> per_kind_{};
  std::uint64_t salt_ = 0;
};

}  // namespace

SweepReport run_sweep(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport rep;
  rep.command = options.command;
  // Bounds are checked up front so that a refused spec fails before any work.
  for (const CorpusSpec& spec : options.corpora) CorpusStream{spec};
  Sweeper sweeper(options, rep);
  for (std::size_t k = 0; k < options.corpora.size(); ++k) {
    CorpusStream stream(options.corpora[k]);
    int index = 0;
    while (auto g = stream.next()) {
      ++rep.graphs;
      InstanceResult inst{static_cast<int>(k), index++, g->num_vertices(), g->num_edges()};
      sweeper.graph(*g, inst);
      rep.instances.push_back(inst);
    }
  }
  if (!options.harvest_dir.empty()) rep.harvested_files = write_harvest(rep, options.harvest_dir);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<std::string> write_harvest(const SweepReport& report, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> out;
  for (const auto& [key, inst] : report.harvest) {
    const std::string path = (std::filesystem::path(dir) / (key + ".el")).string();
    std::ofstream os(path);
    if (!os) throw Error("cannot write " + path);
    os << "# cut";
    for (std::size_t i = 0; i < inst.shore.members().size(); ++i) os << (i ? "," : " ") << inst.shore.members()[i];
    os << "\n";
    write_edge_list(os, inst.graph);
    out.push_back(path);
  }
  return out;
}

HarvestedInstance read_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::string first;
  std::getline(in, first);
  if (first.rfind("# cut ", 0) != 0) throw ParseError(path + ": line 1: expected '# cut <shore>'");
  std::vector<Vertex> shore;
  std::stringstream list(first.substr(6));
  for (std::string tok; std::getline(list, tok, ',');) {
    try {
      shore.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError(path + ": line 1: bad shore entry '" + tok + "'");
    }
  }
  in.clear();
  in.seekg(0);
  return {read_edge_list(in), VertexSet(std::move(shore))};
}

}  // namespace tightcut
