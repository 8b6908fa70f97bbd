// Runs every property suite, checks each acceptance criterion against the
// reports plus a few direct computations, and prints one PASS/FAIL line per
// criterion.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "relint/duality.hpp"
#include "relint/functions.hpp"
#include "relint/seqlab.hpp"
#include "relint/suite.hpp"

namespace {

using relint::Rat;
using Json = nlohmann::json;
namespace fs = std::filesystem;

const Json& part(const std::map<std::string, Json>& docs, const std::string& suite, const std::string& label) {
  return docs.at(suite).at("parts").at(label);
}

long counter(const Json& p, const std::string& key) {
  const auto& c = p.at("counters");
  return c.contains(key) ? c.at(key).get<long>() : 0;
}

bool clean(const std::map<std::string, Json>& docs, const std::string& suite) {
  return docs.at(suite).at("passed").get<bool>();
}

struct Line {
  bool ok;
  std::string text;
};

std::string file_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// |x| + |x - 1| minimized over the breakpoints {0, 1} of the summands; on a
// PL function bounded below the minimum sits at a breakpoint.
bool closed_form_brute_force() {
  auto primal_objective = [](const Rat& x) { return Rat(abs(x) + abs(x - 1)); };
  Rat best = primal_objective(0);
  for (const Rat& x : {Rat(0), Rat(1)}) best = std::min(best, primal_objective(x));
  // g_*(s) - f*(s) = s on [-1, 1] (both conjugates finite only there);
  // maximized at the endpoint s = 1.
  const relint::HPolyhedron line = relint::HPolyhedron::whole_space(1);
  const relint::PLConvexFunction f{1, {{{Rat(1)}, Rat(0)}, {{Rat(-1)}, Rat(0)}}, line};
  const relint::PLConcaveFunction g{1, {{{Rat(1)}, Rat(-1)}, {{Rat(-1)}, Rat(1)}}, line};
  const auto fs_ = relint::conjugate(f);
  const auto gs = relint::concave_conjugate(g);
  relint::ExtendedRat dual_best = relint::ExtendedRat::neg_inf();
  for (long k = -8; k <= 8; ++k) {
    const relint::Vector s{relint::ratio(k, 4)};
    const relint::ExtendedRat v = relint::evaluate(gs, s) - relint::evaluate(fs_, s);
    if (k >= -4 && k <= 4 && v != relint::ExtendedRat(relint::ratio(k, 4))) return false;
    if (v > dual_best) dual_best = v;
  }
  return best == 1 && dual_best == relint::ExtendedRat(1);
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path root = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_reports");
  const fs::path dir_a = root / "run_a";
  const fs::path dir_b = root / "run_b";
  fs::remove_all(root);

  const relint::SuiteOptions first{1, 0};
  const auto reports = relint::run_suites("", first);
  relint::write_reports(reports, first, dir_a);
  std::map<std::string, Json> docs;
  for (const auto& r : reports) docs[r.name] = r.document;

  std::vector<Line> lines;

  {
    const Json& p = part(docs, "interior-equivalence", "polyhedra");
    const bool ok = clean(docs, "interior-equivalence") && p.at("instances") == 300 && counter(p, "agreement") > 0;
    lines.push_back({ok, "ri/iri/absorbing/qri agreement on 300 polyhedra: " + std::to_string(counter(p, "agreement")) +
                             " sampled points, " + std::to_string(p.at("failure_count").get<long>()) + " disagreements"});
  }
  {
    const Json& p = part(docs, "bipolar-normal", "cones");
    const bool ok = clean(docs, "bipolar-normal") && counter(p, "bipolar") == 100 && counter(p, "normal_equals_polar") > 0;
    lines.push_back({ok, "bipolar on " + std::to_string(counter(p, "bipolar")) + " cones, normal cone = polar of difference cone at " +
                             std::to_string(counter(p, "normal_equals_polar")) + " points"});
  }
  {
    const Json& p = part(docs, "separation-biconditional", "pairs");
    const bool ok = clean(docs, "separation-biconditional") && counter(p, "biconditional") == 150 &&
                    counter(p, "touching_pairs") >= 20 && counter(p, "replay") == counter(p, "separable_pairs");
    lines.push_back({ok, "certificate iff qri-disjoint on " + std::to_string(counter(p, "biconditional")) + " pairs (" +
                             std::to_string(counter(p, "touching_pairs")) + " touching), " +
                             std::to_string(counter(p, "replay")) + " certificates replayed"});
  }
  {
    const Json& p = part(docs, "fenchel-rockafellar", "pairs");
    const Json& c = part(docs, "fenchel-rockafellar", "closed_form");
    const bool brute = closed_form_brute_force();
    const bool ok = clean(docs, "fenchel-rockafellar") && counter(p, "weak_duality") == 1000 &&
                    counter(p, "zero_gap") == 200 && counter(c, "closed_form") == 2 && brute;
    lines.push_back({ok, "weak duality on " + std::to_string(counter(p, "weak_duality")) + " pairs, zero gap on " +
                             std::to_string(counter(p, "zero_gap")) + " qualified pairs, |x| vs -|x-1| primal = dual = 1 " +
                             (brute ? "(brute force agrees)" : "(brute force disagrees)")});
  }
  {
    const Json& f = part(docs, "sequence-lab", "fixed");
    const Json& p = part(docs, "sequence-lab", "candidates");
    const relint::TailSequence e1 = relint::TailSequence::unit(1);
    const relint::TailSequence halves{{}, relint::TailSequence::Tail{relint::ratio(1, 2), relint::ratio(1, 2)}};
    const bool direct = !relint::ell1ball_qri(e1) && relint::ell1ball_qri(halves);
    const long admitted = counter(p, "admitted");
    const bool ok = clean(docs, "sequence-lab") && direct && counter(f, "checks") == 4 &&
                    p.at("instances") == 50 && admitted > 0 && counter(p, "refutation") == 5 * admitted;
    lines.push_back({ok, "e1 not in qri, (2^-k) in qri, sign-vector contradiction; refutation verified for " +
                             std::to_string(admitted) + " of 50 candidates (" + std::to_string(counter(p, "rejected")) +
                             " rejected with a reason)"});
  }
  {
    const Json& m = part(docs, "graphs-orders", "maps");
    const Json& o = part(docs, "graphs-orders", "orders");
    const bool ok = clean(docs, "graphs-orders") && counter(m, "equality") == 50 && counter(m, "qri_inclusion") == 50 &&
                    counter(m, "iri_inclusion") == 50 && counter(o, "quadrant_witnesses") > 0 &&
                    counter(o, "lex_witnesses") > 0 && counter(o, "quadrant_grid") == 1 && counter(o, "lex_grid") == 1;
    lines.push_back({ok, "graph inclusions and equality on 50 maps; strict C-epigraph witnesses: quadrant " +
                             std::to_string(counter(o, "quadrant_witnesses")) + ", lexicographic " +
                             std::to_string(counter(o, "lex_witnesses")) + ", grids match point for point"});
  }
  {
    const Json& p = part(docs, "image-calculus", "pairs");
    const bool ok = clean(docs, "image-calculus") && p.at("instances") == 100 && counter(p, "image_iri") == 100 &&
                    counter(p, "image_qri") == 100 && counter(p, "preimage_reverified") > 0;
    lines.push_back({ok, "image iri/qri equalities on 100 pairs, " + std::to_string(counter(p, "preimage_reverified")) +
                             " preimages re-verified"});
  }
  {
    const std::size_t threads_a = relint::default_thread_count();
    const relint::SuiteOptions rerun{1, threads_a == 1 ? 3 : 1};
    relint::write_reports(relint::run_suites("", rerun), rerun, dir_b);
    std::size_t files = 0;
    bool same = true;
    for (const auto& entry : fs::directory_iterator(dir_a)) {
      ++files;
      const fs::path other = dir_b / entry.path().filename();
      same = same && fs::exists(other) && file_bytes(entry.path()) == file_bytes(other);
    }
    std::size_t files_b = 0;
    for ([[maybe_unused]] const auto& entry : fs::directory_iterator(dir_b)) ++files_b;
    same = same && files == files_b && files == reports.size() + 1;
    lines.push_back({same, std::to_string(files) + " report files byte-identical across two runs (" +
                               std::to_string(threads_a) + " vs " + std::to_string(rerun.threads) + " threads)"});
  }

  bool all = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::cout << (lines[i].ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << lines[i].text << "\n";
    all = all && lines[i].ok;
  }
  if (!all) {
    for (const auto& r : reports) {
      if (!r.passed) std::cout << r.document.dump(2) << "\n";
    }
  }
  return all ? 0 : 1;
}
