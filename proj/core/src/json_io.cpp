#include "relint/json_io.hpp"

#include <fstream>
#include <sstream>

#include "relint/errors.hpp"

namespace relint::json {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw InputError("json " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(path, "missing key \"" + key + "\"");
  return *it;
}

const Json* optional_field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  const auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::size_t decode_size(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_string()) {
    try {
      std::size_t pos = 0;
      const std::string s = j.get<std::string>();
      const unsigned long v = std::stoul(s, &pos);
      if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  bad(path, "expected a nonnegative integer");
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

Json encode_pieces(const std::vector<AffinePiece>& pieces) {
  Json out = Json::array();
  for (const auto& p : pieces) out.push_back({{"a", encode(p.slope)}, {"b", encode(p.offset)}});
  return out;
}

std::vector<AffinePiece> decode_pieces(const Json& j, const std::string& path, std::size_t dim) {
  if (!j.is_array() || j.empty()) bad(path, "expected a nonempty array of pieces");
  std::vector<AffinePiece> pieces;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at(path, i);
    pieces.push_back({decode_vector(field(j[i], "a", p), p + "/a", dim), decode_rat(field(j[i], "b", p), p + "/b")});
  }
  return pieces;
}

Json encode_optional(const std::optional<Vector>& v) { return v ? encode(*v) : Json(nullptr); }

}  // namespace

Json parse(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json encode(const Rat& v) { return to_string(v); }
Json encode(const ExtendedRat& v) { return v.to_string(); }

Json encode(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

Json encode(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(encode(row));
  return out;
}

Rat decode_rat(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a rational written as a string \"p/q\"");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const InputError& e) {
    bad(path, e.what());
  }
}

ExtendedRat decode_extended(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected an extended rational string");
  try {
    return ExtendedRat::parse(j.get<std::string>());
  } catch (const InputError& e) {
    bad(path, e.what());
  }
}

Vector decode_vector(const Json& j, const std::string& path, std::optional<std::size_t> size) {
  if (!j.is_array()) bad(path, "expected an array");
  if (size && j.size() != *size) bad(path, "expected " + std::to_string(*size) + " entries");
  Vector v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(decode_rat(j[i], at(path, i)));
  return v;
}

Matrix decode_matrix(const Json& j, const std::string& path, std::size_t cols) {
  if (!j.is_array()) bad(path, "expected an array of rows");
  Matrix m;
  for (std::size_t i = 0; i < j.size(); ++i) m.push_back(decode_vector(j[i], at(path, i), cols));
  return m;
}

Vector parse_point(std::string_view text) {
  Vector v;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    v.push_back(parse_rat(text.substr(start, end - start)));
    start = end + 1;
  }
  return v;
}

Json encode(const HPolyhedron& P) {
  return {{"dim", P.dim()},
          {"ineq", {{"A", encode(P.A())}, {"b", encode(P.b())}}},
          {"eq", {{"E", encode(P.E())}, {"d", encode(P.d())}}}};
}

Json encode(const VPolyhedron& V) {
  return {{"dim", V.dim}, {"points", encode(V.points)}, {"rays", encode(V.rays)}};
}

HPolyhedron decode_set(const Json& j, const std::string& path) {
  const std::size_t dim = decode_size(field(j, "dim", path), path + "/dim");
  if (j.contains("points")) {
    VPolyhedron V;
    V.dim = dim;
    V.points = decode_matrix(j["points"], path + "/points", dim);
    if (const Json* r = optional_field(j, "rays", path)) V.rays = decode_matrix(*r, path + "/rays", dim);
    if (V.points.empty() && !V.rays.empty()) bad(path, "rays without points");
    return v_to_h(V);
  }
  Matrix A, E;
  Vector b, d;
  if (const Json* ineq = optional_field(j, "ineq", path)) {
    A = decode_matrix(field(*ineq, "A", path + "/ineq"), path + "/ineq/A", dim);
    b = decode_vector(field(*ineq, "b", path + "/ineq"), path + "/ineq/b", A.size());
  }
  if (const Json* eq = optional_field(j, "eq", path)) {
    E = decode_matrix(field(*eq, "E", path + "/eq"), path + "/eq/E", dim);
    d = decode_vector(field(*eq, "d", path + "/eq"), path + "/eq/d", E.size());
  }
  return HPolyhedron(dim, std::move(A), std::move(b), std::move(E), std::move(d));
}

Json encode(const PolyCone& C) { return {{"dim", C.dim}, {"generators", encode(C.generators)}}; }

PolyCone decode_cone(const Json& j, const std::string& path) {
  const std::size_t dim = decode_size(field(j, "dim", path), path + "/dim");
  return {dim, decode_matrix(field(j, "generators", path), path + "/generators", dim)};
}

Json encode(const AffineFlat& L) { return {{"base", encode(L.base)}, {"basis", encode(L.basis)}}; }

Json encode(const PLConvexFunction& f) {
  return {{"kind", "convex"}, {"dim", f.dim}, {"pieces", encode_pieces(f.pieces)}, {"domain", encode(f.domain)}};
}

Json encode(const PLConcaveFunction& g) {
  return {{"kind", "concave"}, {"dim", g.dim}, {"pieces", encode_pieces(g.pieces)}, {"domain", encode(g.domain)}};
}

std::variant<PLConvexFunction, PLConcaveFunction> decode_function(const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  if (!kind.is_string() || (kind != "convex" && kind != "concave")) bad(path + "/kind", "expected \"convex\" or \"concave\"");
  const std::size_t dim = decode_size(field(j, "dim", path), path + "/dim");
  auto pieces = decode_pieces(field(j, "pieces", path), path + "/pieces", dim);
  const Json* dom = optional_field(j, "domain", path);
  HPolyhedron domain = dom ? decode_set(*dom, path + "/domain") : HPolyhedron::whole_space(dim);
  if (domain.dim() != dim) bad(path + "/domain", "domain dimension differs from dim");
  if (kind == "convex") {
    PLConvexFunction f{dim, std::move(pieces), std::move(domain)};
    f.validate();
    return f;
  }
  PLConcaveFunction g{dim, std::move(pieces), std::move(domain)};
  g.validate();
  return g;
}

Json encode(const PLFunctionDual& h) {
  if (h.kind == DualKind::ConvexConjugate) return {{"kind", "convex-conjugate"}, {"function", encode(h.rep)}};
  return {{"kind", "concave-conjugate"}, {"function", encode(concave_form(h))}};
}

Json encode(const PLPair& pair) { return {{"f", encode(pair.f)}, {"g", encode(pair.g)}}; }

PLPair decode_pair(const Json& j, const std::string& path) {
  auto f = decode_function(field(j, "f", path), path + "/f");
  auto g = decode_function(field(j, "g", path), path + "/g");
  if (!std::holds_alternative<PLConvexFunction>(f)) bad(path + "/f", "f must be convex");
  if (!std::holds_alternative<PLConcaveFunction>(g)) bad(path + "/g", "g must be concave");
  PLPair pair{std::get<PLConvexFunction>(std::move(f)), std::get<PLConcaveFunction>(std::move(g))};
  if (pair.f.dim != pair.g.dim) bad(path, "f and g have different dimensions");
  return pair;
}

Json encode(const SeparationCertificate& c) {
  return {{"functional", encode(c.functional)},
          {"threshold", encode(c.threshold)},
          {"side_a_bound", encode(c.side_a_bound)},
          {"side_b_bound", encode(c.side_b_bound)},
          {"strict_witness", encode(c.strict_witness)},
          {"witness_side", c.witness_side == WitnessSide::A ? "A" : "B"}};
}

SeparationCertificate decode_certificate(const Json& j, const std::string& path) {
  SeparationCertificate c;
  c.functional = decode_vector(field(j, "functional", path), path + "/functional");
  c.threshold = decode_rat(field(j, "threshold", path), path + "/threshold");
  c.side_a_bound = decode_rat(field(j, "side_a_bound", path), path + "/side_a_bound");
  c.side_b_bound = decode_rat(field(j, "side_b_bound", path), path + "/side_b_bound");
  c.strict_witness = decode_vector(field(j, "strict_witness", path), path + "/strict_witness", c.functional.size());
  const Json& side = field(j, "witness_side", path);
  if (side == "A") {
    c.witness_side = WitnessSide::A;
  } else if (side == "B") {
    c.witness_side = WitnessSide::B;
  } else {
    bad(path + "/witness_side", "expected \"A\" or \"B\"");
  }
  return c;
}

Json encode(const SeparationHypotheses& h) {
  return {{"qri_a_nonempty", h.qri_a_nonempty},
          {"qri_b_nonempty", h.qri_b_nonempty},
          {"difference_quasi_regular", h.difference_quasi_regular}};
}

Json encode(const CertificateCheck& c) { return {{"ok", c.ok}, {"reason", c.reason}}; }

Json encode(const StrictSeparation& s) {
  return {{"functional", encode(s.functional)},
          {"sup_value", encode(s.sup_value)},
          {"point_value", encode(s.point_value)},
          {"margin", encode(s.margin)}};
}

Json encode(const ContinuityReport& r) {
  return {{"int_dom_nonempty", r.int_dom_nonempty},
          {"int_epi_nonempty", r.int_epi_nonempty},
          {"bounded_above_on_open_set", r.bounded_above_on_open_set},
          {"box_radius", r.box_radius ? encode(*r.box_radius) : Json(nullptr)},
          {"box_upper_bound", r.box_upper_bound ? encode(*r.box_upper_bound) : Json(nullptr)}};
}

Json encode(const QualificationReport& q) {
  return {{"qual_qri", q.qri},
          {"qual_quasi_regular", q.quasi_regular},
          {"qual_ri", q.ri},
          {"qual_interior", q.interior}};
}

Json encode(const DualityReport& r) {
  return {{"primal", encode(r.primal_value)},
          {"dual", encode(r.dual_value)},
          {"gap", r.gap ? encode(*r.gap) : Json(nullptr)},
          {"qualification", encode(r.qualification)},
          {"dual_optimizer", encode_optional(r.dual_optimizer)},
          {"weak_duality", r.weak_duality},
          {"certifying_routes", r.certifying_routes},
          {"strong_duality", r.strong_duality}};
}

Json encode(const DualCertificate& c) {
  return {{"alpha", encode(c.alpha)},     {"u", encode(c.u)},
          {"beta", encode(c.beta)},       {"xstar", encode(c.xstar)},
          {"dual_objective", encode(c.dual_objective)}, {"separation", encode(c.separation)}};
}

Json encode(const PolySetValuedMap& F) {
  return {{"x_dim", F.x_dim}, {"y_dim", F.y_dim}, {"graph", encode(F.graph)}};
}

PolySetValuedMap decode_map(const Json& j, const std::string& path) {
  PolySetValuedMap F;
  F.x_dim = decode_size(field(j, "x_dim", path), path + "/x_dim");
  F.y_dim = decode_size(field(j, "y_dim", path), path + "/y_dim");
  F.graph = decode_set(field(j, "graph", path), path + "/graph");
  if (F.graph.dim() != F.x_dim + F.y_dim) bad(path + "/graph", "graph dimension is not x_dim + y_dim");
  return F;
}

Json encode(const OrderingCone& C) {
  if (C.kind() == OrderingCone::Kind::Lexicographic2D) return {{"kind", "lex2d"}};
  return {{"kind", "polyhedral"}, {"dim", C.dim()}, {"generators", encode(C.cone().generators)}};
}

OrderingCone decode_ordering_cone(const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  if (kind == "lex2d") return OrderingCone::lexicographic();
  if (kind != "polyhedral") bad(path + "/kind", "expected \"polyhedral\" or \"lex2d\"");
  const Json& gens = field(j, "generators", path);
  std::size_t dim = 0;
  if (const Json* d = optional_field(j, "dim", path)) {
    dim = decode_size(*d, path + "/dim");
  } else if (gens.is_array() && !gens.empty() && gens[0].is_array()) {
    dim = gens[0].size();
  } else {
    bad(path, "cannot infer the cone dimension; give \"dim\"");
  }
  return OrderingCone::polyhedral(PolyCone{dim, decode_matrix(gens, path + "/generators", dim)});
}

Json encode(const GraphCheck& r) {
  return {{"holds", r.holds}, {"checked", r.checked}, {"violation", encode_optional(r.violation)}, {"detail", r.detail}};
}

Json encode(const CEpiReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"point", encode(row.point)}, {"in_epi", row.in_epi}, {"in_rhs", row.in_rhs}, {"in_iri", row.in_iri}});
  }
  return {{"rows", rows},
          {"inclusion_holds", r.inclusion_holds},
          {"violation", encode_optional(r.violation)},
          {"strict_witnesses", encode(r.strict_witnesses)}};
}

Json encode(const TailSequence& x) {
  Json tail = nullptr;
  if (x.tail) tail = {{"c", encode(x.tail->c)}, {"rho", encode(x.tail->rho)}};
  return {{"prefix", encode(x.prefix)}, {"tail", tail}};
}

TailSequence decode_sequence(const Json& j, const std::string& path) {
  TailSequence x;
  x.prefix = decode_vector(field(j, "prefix", path), path + "/prefix");
  if (const Json* t = optional_field(j, "tail", path)) {
    x.tail = TailSequence::Tail{decode_rat(field(*t, "c", path + "/tail"), path + "/tail/c"),
                                decode_rat(field(*t, "rho", path + "/tail"), path + "/tail/rho")};
  }
  try {
    x.validate();
  } catch (const InputError& e) {
    bad(path + "/tail/rho", e.what());
  }
  return x;
}

}  // namespace relint::json
