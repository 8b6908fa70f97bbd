#include "relint/suite.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

#include "relint/calculus.hpp"
#include "relint/duality.hpp"
#include "relint/errors.hpp"
#include "relint/generate.hpp"
#include "relint/graphs_orders.hpp"
#include "relint/interiors.hpp"
#include "relint/json_io.hpp"
#include "relint/lp.hpp"
#include "relint/separation.hpp"
#include "relint/seqlab.hpp"

namespace relint {

namespace {

using Json = nlohmann::json;

constexpr std::size_t kMaxTracedFailures = 20;

struct Outcome {
  std::map<std::string, long> counters;
  std::vector<std::string> failures;

  void count(const std::string& key, long n = 1) { counters[key] += n; }
  /// Counts one check and records a failure message when `ok` is false.
  void expect(bool ok, const std::string& key, const std::string& message) {
    count("checks");
    count(key);
    if (!ok) failures.push_back(key + ": " + message);
  }
};

using InstanceFn = std::function<Outcome(InstanceRng&, std::size_t)>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::size_t dim_for(std::size_t i, std::size_t max_dim) { return 1 + i % max_dim; }

std::string str(const Vector& v) { return to_string(v); }

// Runs fn on instances [0, count) across threads; instance i always gets the
// seed derived from (seed, name, i), so the merged result is thread-independent.
Json run_instances(const std::string& name, std::size_t count, const SuiteOptions& options, const InstanceFn& fn,
                   bool& passed) {
  std::vector<Outcome> outcomes(count);
  const std::uint64_t base = splitmix64(options.seed ^ name_hash(name));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      InstanceRng rng(splitmix64(base + i));
      try {
        outcomes[i] = fn(rng, i);
      } catch (const std::exception& e) {
        outcomes[i].count("checks");
        outcomes[i].failures.push_back(std::string("exception: ") + e.what());
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads ? options.threads : default_thread_count(), count));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<std::string, long> totals;
  Json trace = Json::array();
  long failure_count = 0;
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& [k, v] : outcomes[i].counters) totals[k] += v;
    for (const auto& f : outcomes[i].failures) {
      ++failure_count;
      if (trace.size() < kMaxTracedFailures) trace.push_back({{"instance", i}, {"message", f}});
    }
  }
  passed = failure_count == 0;
  return {{"instances", count}, {"counters", totals}, {"failure_count", failure_count}, {"failures", trace}};
}

// ---- interior-equivalence ----------------------------------------------------

Outcome interior_instance(InstanceRng& rng, std::size_t i) {
  Outcome out;
  const HPolyhedron P = random_polyhedron(rng, dim_for(i, 4));
  for (const auto& x : sample_points(rng, P, 8)) {
    const bool ri = ri_member(P, x);
    const bool iri = iri_member(P, x);
    const bool absorbing = relatively_absorbing(P, x);
    const bool qri = qri_member(P, x);
    const bool nonsupport = nonsupport_point(P, x);
    out.count("points_inside");
    if (ri) out.count("points_in_ri");
    out.expect(ri == iri && iri == absorbing && absorbing == qri && qri == nonsupport, "agreement",
               "oracles disagree at " + str(x));
  }
  for (const auto& x : exterior_points(rng, P, 2)) {
    out.count("points_outside");
    out.expect(!ri_member(P, x) && !iri_member(P, x) && !interior_member(P, x, InteriorKind::Qri), "agreement",
               "exterior point " + str(x) + " accepted");
  }
  return out;
}

// ---- bipolar-normal ------------------------------------------------------------

Outcome bipolar_instance(InstanceRng& rng, std::size_t i) {
  Outcome out;
  const std::size_t n = dim_for(i, 4);
  PolyCone C{n, {}};
  const long gens = rng.uniform(0, 5);
  for (long k = 0; k < gens; ++k) C.generators.push_back(rng.nonzero_int_vector(n, 3));
  out.expect(cone_equal(polar(polar(C)), C), "bipolar", "C°° differs from C");

  const HPolyhedron P = random_polyhedron(rng, n);
  for (const auto& x : sample_points(rng, P, 5)) {
    out.expect(cone_equal(normal_cone(P, x), polar(difference_cone(P, x))), "normal_equals_polar",
               "N(x; P) differs from cone(P - x)° at " + str(x));
  }
  return out;
}

// ---- separation-biconditional ------------------------------------------------

HPolyhedron intersection(const HPolyhedron& P, const HPolyhedron& Q) {
  Matrix A = P.A(), E = P.E();
  Vector b = P.b(), d = P.d();
  A.insert(A.end(), Q.A().begin(), Q.A().end());
  b.insert(b.end(), Q.b().begin(), Q.b().end());
  E.insert(E.end(), Q.E().begin(), Q.E().end());
  d.insert(d.end(), Q.d().begin(), Q.d().end());
  return HPolyhedron(P.dim(), std::move(A), std::move(b), std::move(E), std::move(d));
}

HPolyhedron with_row(const HPolyhedron& P, const Vector& a, const Rat& beta) {
  Matrix A = P.A();
  Vector b = P.b();
  A.push_back(a);
  b.push_back(beta);
  return HPolyhedron(P.dim(), std::move(A), std::move(b), P.E(), P.d());
}

Outcome separation_instance(InstanceRng& rng, std::size_t i) {
  Outcome out;
  const std::size_t n = dim_for(i, 3);
  HPolyhedron P, Q;
  if (i % 5 == 0) {
    // Solid sets on opposite sides of a hyperplane through a common point.
    const Vector w = rng.int_vector(n, 2);
    const Vector a = rng.nonzero_int_vector(n, 2);
    P = with_row(random_polyhedron(rng, n, PolyhedronShape::Bounded, w), a, dot(a, w));
    Q = with_row(random_polyhedron(rng, n, PolyhedronShape::Bounded, w), negate(a), -dot(a, w));
  } else {
    P = random_polyhedron(rng, n);
    Q = random_polyhedron(rng, n);
  }
  const SetSeparation sep = properly_separate_sets(P, Q);
  const bool qri_disjoint = !interior_member(minkowski_difference(P, Q), zeros(n), InteriorKind::Qri);
  const bool touching = qri_disjoint && !intersection(P, Q).is_empty();
  if (touching) out.count("touching_pairs");
  if (qri_disjoint) out.count("separable_pairs");
  out.expect(sep.certificate.has_value() == qri_disjoint, "biconditional",
             "certificate returned iff qri(P) and qri(Q) are disjoint");
  if (sep.certificate) {
    const CertificateCheck check = verify_certificate(*sep.certificate, P, Q);
    out.expect(check.ok, "replay", check.reason);
  }
  return out;
}

// ---- fenchel-rockafellar -----------------------------------------------------

constexpr std::size_t kWeakPairs = 1000;

Outcome duality_instance(InstanceRng& rng, std::size_t i) {
  Outcome out;
  if (i < kWeakPairs) {
    const PLPair pair = random_pl_pair(rng, dim_for(i, 3), OverlapMode::Any);
    const ExtendedRat primal = solve_primal(pair.f, pair.g);
    const ExtendedRat dual = solve_dual(pair.f, pair.g).value;
    out.expect(primal >= dual, "weak_duality", "primal " + primal.to_string() + " < dual " + dual.to_string());
    return out;
  }
  const PLPair pair = random_pl_pair(rng, dim_for(i, 3), OverlapMode::Qualified);
  const DualityReport r = verify_fenchel_rockafellar(pair.f, pair.g);
  out.expect(r.qualification.qri, "qualified", "constructed pair is not qri-qualified");
  out.expect(r.primal_value == r.dual_value, "zero_gap",
             "primal " + r.primal_value.to_string() + " != dual " + r.dual_value.to_string());
  if (r.primal_value.is_finite()) {
    const DualCertificate c = extract_dual_certificate(pair.f, pair.g);
    out.expect(c.dual_objective >= ExtendedRat(c.alpha), "certificate", "dual objective below alpha");
  }
  return out;
}

Outcome duality_closed_form() {
  Outcome out;
  const HPolyhedron line = HPolyhedron::whole_space(1);
  const PLConvexFunction f{1, {{{Rat(1)}, Rat(0)}, {{Rat(-1)}, Rat(0)}}, line};
  const PLConcaveFunction g{1, {{{Rat(1)}, Rat(-1)}, {{Rat(-1)}, Rat(1)}}, line};
  const DualityReport r = verify_fenchel_rockafellar(f, g);
  out.expect(r.primal_value == ExtendedRat(1) && r.dual_value == ExtendedRat(1), "closed_form",
             "|x| vs -|x - 1| should give primal = dual = 1");
  const DualCertificate c = extract_dual_certificate(f, g, Rat(1));
  out.expect(c.xstar == Vector{Rat(1)} && c.dual_objective >= ExtendedRat(1), "closed_form",
             "dual certificate should be x* = 1 with g_*(1) - f*(1) >= 1");
  return out;
}

// ---- sequence-lab -------------------------------------------------------------

Outcome seqlab_fixed() {
  Outcome out;
  const TailSequence e1 = TailSequence::unit(1);
  const TailSequence halves{{}, TailSequence::Tail{ratio(1, 2), ratio(1, 2)}};
  out.expect(!ell1ball_qri(e1), "ell1_qri", "e1 must be excluded from qri");
  out.expect(ell1ball_qri(halves) && !ell1ball_iri(halves), "ell1_qri", "(2^-k) must be in qri but not iri");
  const TailSequence z = sign_vector(e1);
  TailSequence minus_z = z;
  for (auto& p : minus_z.prefix) p = -p;
  out.expect(ell1ball_normal_test(e1, z) && !ell1ball_normal_test(e1, minus_z), "normal_cone",
             "sign vector must be normal at e1 while its negation is not");
  out.expect(inner_product(z, e1) == 1, "normal_cone", "<-z, 0 - e1> must equal 1");
  return out;
}

// Four in five candidates are strictly positive with a geometric tail and
// norm below one; the rest are unconstrained nonnegative sequences.
TailSequence refutation_candidate(InstanceRng& rng, std::size_t i) {
  if (i % 5 == 4) return random_tail_sequence(rng, true);
  static const Rat kRhos[] = {ratio(1, 4), ratio(1, 3), ratio(1, 2), ratio(2, 3), ratio(3, 4)};
  TailSequence x;
  const long len = rng.uniform(0, 3);
  for (long k = 0; k < len; ++k) x.prefix.push_back(ratio(rng.uniform(1, 5), 10));
  x.tail = TailSequence::Tail{ratio(rng.uniform(1, 5), 10), kRhos[rng.uniform(0, 4)]};
  if (x.l2_norm_squared() >= 1) {
    for (auto& p : x.prefix) p /= 2;
    x.tail->c /= 2;
  }
  return x;
}

Outcome refutation_instance(InstanceRng& rng, std::size_t i) {
  Outcome out;
  const TailSequence x = refutation_candidate(rng, i);
  const Rat eps = rng.coin() ? ratio(1, 4) : ratio(rng.uniform(1, 9), 10);
  try {
    const NonnegBallRefutation r(x, eps);
    out.count("admitted");
    for (const Rat& alpha : std::vector<Rat>{Rat(1 + ratio(1, 1000)), ratio(3, 2), Rat(2), Rat(10), Rat(1 + ratio(1, 1000000))}) {
      out.expect(r.verify(alpha), "refutation", "no negative coordinate for alpha = " + to_string(alpha));
    }
  } catch (const PreconditionFailed&) {
    out.count("rejected");
    out.expect(!nonneg_ball_member(x) || x.l2_norm_squared() == 1 || zero_coordinate(x).has_value(), "rejection",
               "candidate rejected without a reason");
  }
  return out;
}

// ---- graphs-orders ------------------------------------------------------------

Outcome graph_instance(InstanceRng& rng, std::size_t i) {
  Outcome out;
  const PolySetValuedMap F = random_set_valued_map(rng, 1 + i % 2, 1 + (i / 2) % 2);
  const auto samples = graph_samples(rng, F, 12);
  const GraphCheck a = check_graph_qri_inclusion(F, samples);
  const GraphCheck b = check_graph_iri_inclusion(F, samples);
  const GraphCheck c = check_graph_equality(F, samples);
  out.count("qri_inclusion_samples", static_cast<long>(a.checked));
  out.count("iri_inclusion_samples", static_cast<long>(b.checked));
  out.expect(a.holds, "qri_inclusion", a.detail);
  out.expect(b.holds, "iri_inclusion", b.detail);
  out.expect(c.holds, "equality", c.detail);
  out.expect(is_quasi_regular(map_domain(F)).quasi_regular, "domain_quasi_regular", "dom F not quasi-regular");
  return out;
}

Outcome order_examples() {
  Outcome out;
  const OrderingCone quadrant = OrderingCone::polyhedral(PolyCone{2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}});
  const PLVectorFunction zero = PLVectorFunction::affine({{Rat(0)}, {Rat(0)}}, {Rat(0), Rat(0)});
  const CEpiReport q = check_iri_c_epi(zero, quadrant, canonical_grid());
  const CEpiReport l = lex_epi_analysis(canonical_grid());
  bool quadrant_matches = true;
  bool lex_matches = true;
  for (const auto& row : q.rows) {
    const Rat& y = row.point[1];
    const Rat& z = row.point[2];
    quadrant_matches = quadrant_matches && row.in_iri == (y > 0 && z > 0) &&
                       row.in_rhs == (y >= 0 && z >= 0 && (y != 0 || z != 0));
  }
  for (const auto& row : l.rows) {
    const Rat& y = row.point[1];
    const Rat& z = row.point[2];
    lex_matches = lex_matches && row.in_iri == (y > 0) && row.in_rhs == (y > 0 || (y == 0 && z > 0));
  }
  out.expect(q.inclusion_holds && quadrant_matches, "quadrant_grid", "quadrant C-epigraph differs from the displayed sets");
  out.expect(!q.strict_witnesses.empty(), "quadrant_witness", "no strict-inclusion witness for the quadrant");
  out.expect(l.inclusion_holds && lex_matches, "lex_grid", "lexicographic C-epigraph differs from the displayed sets");
  out.expect(!l.strict_witnesses.empty(), "lex_witness", "no strict-inclusion witness for the lexicographic cone");
  out.count("quadrant_witnesses", static_cast<long>(q.strict_witnesses.size()));
  out.count("lex_witnesses", static_cast<long>(l.strict_witnesses.size()));
  return out;
}

// ---- image-calculus -----------------------------------------------------------

Outcome image_instance(InstanceRng& rng, std::size_t i) {
  Outcome out;
  const std::size_t n = dim_for(i, 3);
  const std::size_t m = 1 + (i / 3) % 3;
  const HPolyhedron P = random_polyhedron(rng, n);
  Matrix M;
  for (std::size_t r = 0; r < m; ++r) M.push_back(rng.int_vector(n, 2));
  for (const bool qri : {false, true}) {
    const ImageCheck r = qri ? check_image_qri(M, P) : check_image_iri(M, P);
    const std::string key = qri ? "image_qri" : "image_iri";
    out.expect(r.holds, key, r.detail);
    out.count(key + "_preimages", static_cast<long>(r.preimages.size()));
    for (const auto& p : r.preimages) {
      out.expect(mat_vec(M, p.x) == p.y && interior_member(P, p.x, qri ? InteriorKind::Qri : InteriorKind::Iri),
                 "preimage_reverified", "preimage of " + str(p.y) + " fails");
    }
  }
  return out;
}

// ---- registry -----------------------------------------------------------------

struct Part {
  std::string label;
  std::size_t count;
  InstanceFn fn;
};

struct SuiteDef {
  SuiteInfo info;
  std::vector<Part> parts;
};

InstanceFn once(Outcome (*fn)()) {
  return [fn](InstanceRng&, std::size_t) { return fn(); };
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {{"interior-equivalence", "ri, iri (cone and absorbing routes), qri and nonsupport agree on 300 polyhedra, dim <= 4"},
       {{"polyhedra", 300, interior_instance}}},
      {{"bipolar-normal", "bipolar identity on 100 cones; normal cone equals polar of the difference cone"},
       {{"cones", 100, bipolar_instance}}},
      {{"separation-biconditional",
        "certificate iff qri-disjoint on 150 pairs (30 constructed touching); every certificate replays"},
       {{"pairs", 150, separation_instance}}},
      {{"fenchel-rockafellar", "weak duality on 1000 PL pairs, zero gap on 200 qualified pairs, |x| vs -|x-1|"},
       {{"pairs", kWeakPairs + 200, duality_instance}, {"closed_form", 1, once(duality_closed_form)}}},
      {{"sequence-lab", "l1-ball qri/normal-cone facts; nonnegative-ball iri refutation on 50 candidates"},
       {{"fixed", 1, once(seqlab_fixed)}, {"candidates", 50, refutation_instance}}},
      {{"graphs-orders", "graph inclusions and equality on 50 maps; quadrant and lexicographic C-epigraph grids"},
       {{"maps", 50, graph_instance}, {"orders", 1, once(order_examples)}}},
      {{"image-calculus", "image iri/qri equalities with re-verified preimages on 100 (matrix, polyhedron) pairs"},
       {{"pairs", 100, image_instance}}},
  };
  return defs;
}

}  // namespace

std::size_t default_thread_count() {
  if (const char* env = std::getenv("RELINT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& def : registry()) {
    if (def.info.name != name) continue;
    SuiteReport report;
    report.name = name;
    report.passed = true;
    Json parts = Json::object();
    for (const auto& part : def.parts) {
      bool ok = false;
      parts[part.label] = run_instances(name + "/" + part.label, part.count, options, part.fn, ok);
      report.passed = report.passed && ok;
    }
    report.document = {{"suite", name},
                       {"description", def.info.description},
                       {"seed", std::to_string(options.seed)},
                       {"parts", parts},
                       {"passed", report.passed}};
    return report;
  }
  throw InputError("unknown suite: " + name);
}

std::vector<SuiteReport> run_suites(const std::string& filter, const SuiteOptions& options) {
  std::vector<SuiteReport> out;
  for (const auto& info : suites()) {
    if (info.name.find(filter) != std::string::npos) out.push_back(run_suite(info.name, options));
  }
  return out;
}

Json summary(const std::vector<SuiteReport>& reports, const SuiteOptions& options) {
  Json list = Json::array();
  bool all = true;
  for (const auto& r : reports) {
    list.push_back({{"suite", r.name}, {"passed", r.passed}});
    all = all && r.passed;
  }
  return {{"seed", std::to_string(options.seed)}, {"suites", list}, {"passed", all}};
}

void write_reports(const std::vector<SuiteReport>& reports, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& r : reports) {
    std::ofstream out(dir / (r.name + ".json"), std::ios::binary);
    if (!out) throw InputError("cannot write report to " + dir.string());
    out << json::dump(r.document);
  }
}

void write_reports(const std::vector<SuiteReport>& reports, const SuiteOptions& options,
                   const std::filesystem::path& dir) {
  write_reports(reports, dir);
  std::ofstream out(dir / "summary.json", std::ios::binary);
  if (!out) throw InputError("cannot write report to " + dir.string());
  out << json::dump(summary(reports, options));
}

}  // namespace relint
