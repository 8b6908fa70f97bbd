#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relint/duality.hpp"
#include "relint/errors.hpp"
#include "relint/functions.hpp"
#include "relint/generate.hpp"
#include "relint/graphs_orders.hpp"
#include "relint/interiors.hpp"
#include "relint/json_io.hpp"
#include "relint/separation.hpp"
#include "relint/seqlab.hpp"
#include "relint/suite.hpp"

namespace {

using relint::json::Json;
namespace js = relint::json;

constexpr int kVerified = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;

int emit(const Json& doc, bool ok) {
  std::cout << js::dump(doc);
  return ok ? kVerified : kViolated;
}

relint::HPolyhedron load_set(const std::string& path) { return js::decode_set(js::read_file(path)); }

relint::InteriorKind kind_of(const std::string& name) {
  if (name == "ri") return relint::InteriorKind::Ri;
  if (name == "iri") return relint::InteriorKind::Iri;
  return relint::InteriorKind::Qri;
}

Json active_trace(const relint::HPolyhedron& P, const relint::Vector& x) {
  Json rows = Json::array();
  if (P.contains(x)) {
    for (const auto i : relint::active_rows(P, x)) rows.push_back(i);
  }
  return rows;
}

int cmd_member(const std::string& kind, const std::string& set_path, const std::string& point) {
  const auto P = load_set(set_path);
  const auto x = js::parse_point(point);
  if (x.size() != P.dim()) throw relint::InputError("point has " + std::to_string(x.size()) +
                                                    " coordinates, set has dimension " + std::to_string(P.dim()));
  const bool member = relint::interior_member(P, x, kind_of(kind));
  return emit({{"member", member},
               {"kind", kind},
               {"point", js::encode(x)},
               {"in_set", P.contains(x)},
               {"active_rows", active_trace(P, x)}},
              true);
}

int cmd_normal_cone(const std::string& set_path, const std::string& point) {
  const auto P = load_set(set_path);
  const auto x = js::parse_point(point);
  if (x.size() != P.dim()) throw relint::InputError("point dimension does not match the set");
  if (!P.contains(x)) throw relint::InputError("point " + relint::to_string(x) + " is outside the set");
  const auto N = relint::normal_cone(P, x);
  const bool agrees = relint::cone_equal(N, relint::polar(relint::difference_cone(P, x)));
  return emit({{"normal_cone", js::encode(N)},
               {"active_rows", active_trace(P, x)},
               {"equals_polar_of_difference_cone", agrees}},
              agrees);
}

int cmd_polar(const std::string& path) {
  const Json j = js::read_file(path);
  if (j.is_object() && j.contains("generators")) {
    const auto C = js::decode_cone(j);
    const auto D = relint::polar(C);
    const bool bipolar = relint::cone_equal(relint::polar(D), C);
    return emit({{"polar", js::encode(D)}, {"bipolar_holds", bipolar}}, bipolar);
  }
  const auto P = js::decode_set(j);
  return emit({{"polar", js::encode(relint::polar_set(P))}}, true);
}

int cmd_separate(const std::string& a_path, const std::string& b_path) {
  const auto A = load_set(a_path);
  const auto B = load_set(b_path);
  if (A.dim() != B.dim()) throw relint::InputError("sets have different dimensions");
  const auto sep = relint::properly_separate_sets(A, B);
  Json doc = {{"separable", sep.certificate.has_value()}, {"hypotheses", js::encode(sep.hypotheses)}};
  doc["common_ri_point"] = sep.common_ri_point ? js::encode(*sep.common_ri_point) : Json(nullptr);
  bool ok = true;
  if (sep.certificate) {
    const auto check = relint::verify_certificate(*sep.certificate, A, B);
    doc["certificate"] = js::encode(*sep.certificate);
    doc["replay"] = js::encode(check);
    ok = check.ok;
  } else {
    doc["certificate"] = nullptr;
  }
  return emit(doc, ok);
}

int cmd_verify_certificate(const std::string& cert_path, const std::string& a_path, const std::string& b_path) {
  const auto cert = js::decode_certificate(js::read_file(cert_path));
  const auto check = relint::verify_certificate(cert, load_set(a_path), load_set(b_path));
  return emit(js::encode(check), check.ok);
}

int cmd_conjugate(const std::string& path) {
  const auto fn = js::decode_function(js::read_file(path));
  if (const auto* f = std::get_if<relint::PLConvexFunction>(&fn)) {
    return emit({{"conjugate", js::encode(relint::conjugate(*f))}, {"continuity", js::encode(relint::continuity_diagnostics(*f))}},
                true);
  }
  const auto& g = std::get<relint::PLConcaveFunction>(fn);
  return emit({{"conjugate", js::encode(relint::concave_conjugate(g))}}, true);
}

int cmd_duality(const std::string& path) {
  const auto pair = js::decode_pair(js::read_file(path));
  const auto report = relint::verify_fenchel_rockafellar(pair.f, pair.g);
  const bool qualified = !report.certifying_routes.empty();
  const bool ok = report.weak_duality && (!qualified || (report.gap && *report.gap == 0));
  return emit(js::encode(report), ok);
}

int cmd_certify_duality(const std::string& path, const std::string& alpha) {
  const auto pair = js::decode_pair(js::read_file(path));
  std::optional<relint::Rat> a;
  if (!alpha.empty()) a = relint::parse_rat(alpha);
  const auto cert = relint::extract_dual_certificate(pair.f, pair.g, a);
  const bool ok = cert.dual_objective >= relint::ExtendedRat(cert.alpha);
  return emit(js::encode(cert), ok);
}

int cmd_graph_check(const std::string& path, std::uint64_t seed, std::size_t samples) {
  const auto F = js::decode_map(js::read_file(path));
  relint::InstanceRng rng(seed);
  const auto points = relint::graph_samples(rng, F, samples);
  const auto qri = relint::check_graph_qri_inclusion(F, points);
  const auto iri = relint::check_graph_iri_inclusion(F, points);
  const auto eq = relint::check_graph_equality(F, points);
  return emit({{"qri_inclusion", js::encode(qri)}, {"iri_inclusion", js::encode(iri)}, {"equality", js::encode(eq)}},
              qri.holds && iri.holds && eq.holds);
}

relint::TailSequence load_sequence(const std::string& path) { return js::decode_sequence(js::read_file(path)); }

int cmd_seqlab(const std::string& name, const std::vector<std::string>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw relint::InputError("seqlab " + name + " expects " + std::to_string(n) + " argument(s)");
    }
  };
  if (name == "ell1-member" || name == "ell1-iri" || name == "ell1-qri" || name == "nonneg-member") {
    need(1);
    const auto x = load_sequence(args[0]);
    bool member = false;
    if (name == "ell1-member") member = relint::ell1ball_member(x);
    if (name == "ell1-iri") member = relint::ell1ball_iri(x);
    if (name == "ell1-qri") member = relint::ell1ball_qri(x);
    if (name == "nonneg-member") member = relint::nonneg_ball_member(x);
    return emit({{"member", member}}, true);
  }
  if (name == "ell1-normal") {
    need(2);
    return emit({{"normal", relint::ell1ball_normal_test(load_sequence(args[0]), load_sequence(args[1]))}}, true);
  }
  if (name == "sign-vector") {
    need(1);
    const auto x = load_sequence(args[0]);
    const auto z = relint::sign_vector(x);
    auto minus_z = z;
    for (auto& p : minus_z.prefix) p = -p;
    return emit({{"sign_vector", js::encode(z)},
                 {"z_normal", relint::ell1ball_normal_test(x, z)},
                 {"minus_z_normal", relint::ell1ball_normal_test(x, minus_z)},
                 {"inner_product_with_x", js::encode(relint::inner_product(z, x))}},
                true);
  }
  if (name == "norms") {
    need(1);
    const auto x = load_sequence(args[0]);
    return emit({{"l1", js::encode(x.l1_norm())},
                 {"l2_squared", js::encode(x.l2_norm_squared())},
                 {"linf", js::encode(x.linf_norm())}},
                true);
  }
  if (name == "nonneg-refute") {
    if (args.size() != 3) throw relint::InputError("seqlab nonneg-refute expects <x.json> <eps> <alpha>");
    const relint::NonnegBallRefutation r(load_sequence(args[0]), relint::parse_rat(args[1]));
    const relint::Rat alpha = relint::parse_rat(args[2]);
    if (alpha <= 1) throw relint::InputError("alpha must exceed 1");
    const std::size_t n = r.witness_n(alpha);
    const std::size_t k = r.index(n);
    const relint::Rat value = r.combination_coordinate(alpha, k);
    const bool ok = r.verify(alpha);
    return emit({{"n", n},
                 {"index", k},
                 {"coordinate", js::encode(value)},
                 {"tilde_l2_squared", js::encode(r.tilde_l2_norm_squared())},
                 {"negative", value < 0},
                 {"verified", ok}},
                ok);
  }
  throw relint::InputError("unknown seqlab case: " + name);
}

int cmd_gen(std::uint64_t seed, std::size_t count, std::size_t dim, const std::string& kind, const std::string& overlap,
            const std::string& output) {
  if (dim == 0) throw relint::InputError("dim must be positive");
  relint::InstanceRng rng(seed);
  Json items = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    if (kind == "set") {
      items.push_back(js::encode(relint::random_polyhedron(rng, dim)));
    } else if (kind == "pair") {
      relint::OverlapMode mode = relint::OverlapMode::Any;
      if (overlap == "qualified") mode = relint::OverlapMode::Qualified;
      if (overlap == "disjoint") mode = relint::OverlapMode::Disjoint;
      items.push_back(js::encode(relint::random_pl_pair(rng, dim, mode)));
    } else {
      items.push_back(js::encode(relint::random_set_valued_map(rng, dim, dim)));
    }
  }
  if (!output.empty()) {
    std::filesystem::create_directories(output);
    for (std::size_t i = 0; i < items.size(); ++i) {
      std::ofstream out(std::filesystem::path(output) / (kind + "_" + std::to_string(i) + ".json"), std::ios::binary);
      if (!out) throw relint::InputError("cannot write to " + output);
      out << js::dump(items[i]);
    }
  }
  return emit({{"seed", std::to_string(seed)}, {"kind", kind}, {"dim", dim}, {"instances", items}}, true);
}

int cmd_suite(const std::string& filter, std::uint64_t seed, std::size_t threads, const std::string& output,
              bool list) {
  if (list) {
    Json names = Json::array();
    for (const auto& s : relint::suites()) names.push_back({{"suite", s.name}, {"description", s.description}});
    return emit(names, true);
  }
  const relint::SuiteOptions options{seed, threads};
  const auto reports = relint::run_suites(filter, options);
  if (reports.empty()) throw relint::InputError("no suite matches '" + filter + "'");
  if (!output.empty()) relint::write_reports(reports, options, output);
  Json doc = relint::summary(reports, options);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    doc["suites"][i]["failure_count"] = 0;
    for (const auto& [label, part] : reports[i].document["parts"].items()) {
      doc["suites"][i]["failure_count"] = doc["suites"][i]["failure_count"].get<long>() + part["failure_count"].get<long>();
      if (!part["failures"].empty()) doc["suites"][i]["first_failure"] = part["failures"][0];
    }
  }
  return emit(doc, doc["passed"].get<bool>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact relative-interior, separation and duality oracles for rational polyhedra"};
  app.require_subcommand(1);

  std::string set_path, point, other_path, third_path, alpha, filter, output, kind = "set", overlap = "any", seq_case;
  std::vector<std::string> seq_args;
  std::uint64_t seed = 1;
  std::size_t count = 1, dim = 2, samples = 24, threads = 0;
  bool list = false;
  int code = kVerified;

  for (const std::string name : {"ri", "iri", "qri"}) {
    auto* c = app.add_subcommand(name, "Membership in the " + name + " of a polyhedron");
    c->add_option("set", set_path, "Polyhedron JSON file")->required();
    c->add_option("point", point, "Comma-separated rationals, e.g. \"1/2,1/2\"")->required();
    c->callback([&, name] { code = cmd_member(name, set_path, point); });
  }
  auto* nc = app.add_subcommand("normal-cone", "Normal cone of a polyhedron at a point");
  nc->add_option("set", set_path)->required();
  nc->add_option("point", point)->required();
  nc->callback([&] { code = cmd_normal_cone(set_path, point); });

  auto* po = app.add_subcommand("polar", "Polar of a cone (generators) or of a polyhedron");
  po->add_option("input", set_path)->required();
  po->callback([&] { code = cmd_polar(set_path); });

  auto* sep = app.add_subcommand("separate", "Proper separation of two polyhedra, with replayed certificate");
  sep->add_option("a", set_path)->required();
  sep->add_option("b", other_path)->required();
  sep->callback([&] { code = cmd_separate(set_path, other_path); });

  auto* vc = app.add_subcommand("verify-certificate", "Replay a separation certificate against two polyhedra");
  vc->add_option("certificate", third_path)->required();
  vc->add_option("a", set_path)->required();
  vc->add_option("b", other_path)->required();
  vc->callback([&] { code = cmd_verify_certificate(third_path, set_path, other_path); });

  auto* cj = app.add_subcommand("conjugate", "Fenchel conjugate of a piecewise-linear function");
  cj->add_option("function", set_path)->required();
  cj->callback([&] { code = cmd_conjugate(set_path); });

  auto* du = app.add_subcommand("duality", "Primal and dual values, gap and qualification report");
  du->add_option("pair", set_path)->required();
  du->callback([&] { code = cmd_duality(set_path); });

  auto* cd = app.add_subcommand("certify-duality", "Dual certificate extracted from a separating hyperplane");
  cd->add_option("pair", set_path)->required();
  cd->add_option("--alpha", alpha, "Level to certify (default: the primal value)");
  cd->callback([&] { code = cmd_certify_duality(set_path, alpha); });

  auto* gc = app.add_subcommand("graph-check", "Sampled graph interior inclusions and equality for a set-valued map");
  gc->add_option("map", set_path)->required();
  gc->add_option("--seed", seed);
  gc->add_option("--samples", samples);
  gc->callback([&] { code = cmd_graph_check(set_path, seed, samples); });

  auto* sq = app.add_subcommand("seqlab",
                                "Sequence-space cases: ell1-member, ell1-iri, ell1-qri, ell1-normal, sign-vector, "
                                "norms, nonneg-member, nonneg-refute");
  sq->add_option("case", seq_case)->required();
  sq->add_option("args", seq_args);
  sq->callback([&] { code = cmd_seqlab(seq_case, seq_args); });

  auto* gen = app.add_subcommand("gen", "Reproducible random instances");
  gen->add_option("--seed", seed);
  gen->add_option("--count", count);
  gen->add_option("--dim", dim);
  gen->add_option("--kind", kind)->check(CLI::IsMember({"set", "pair", "map"}));
  gen->add_option("--overlap", overlap)->check(CLI::IsMember({"qualified", "disjoint", "any"}));
  gen->add_option("--output", output, "Also write one file per instance into this directory");
  gen->callback([&] { code = cmd_gen(seed, count, dim, kind, overlap, output); });

  auto* su = app.add_subcommand("suite", "Run the property suites");
  su->add_option("--filter", filter, "Run suites whose name contains this text");
  su->add_option("--seed", seed);
  su->add_option("--threads", threads, "Worker threads (default: RELINT_THREADS or processor count)");
  su->add_option("--output", output, "Write one report per suite plus summary.json");
  su->add_flag("--list", list);
  su->callback([&] { code = cmd_suite(filter, seed, threads, output, list); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kVerified : kInputError;
  } catch (const relint::InputError& e) {
    std::cout << js::dump({{"error", e.what()}});
    return kInputError;
  } catch (const std::exception& e) {
    std::cout << js::dump({{"error", e.what()}});
    return kViolated;
  }
  return code;
}
