#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "relint/duality.hpp"
#include "relint/functions.hpp"
#include "relint/generate.hpp"
#include "relint/graphs_orders.hpp"
#include "relint/separation.hpp"
#include "relint/seqlab.hpp"
#include "relint/sets.hpp"

// JSON encodings. Every number is a string "p/q" (or "p"); JSON numbers are
// rejected so that no value is ever parsed through floating point. Decoding
// errors throw InputError naming the JSON pointer of the offending value.
namespace relint::json {

using Json = nlohmann::json;

/// Throws InputError with the byte offset on malformed text.
Json parse(std::string_view text, const std::string& source);
Json read_file(const std::filesystem::path& path);
/// Two-space indented text with a trailing newline. Keys are sorted, so equal
/// documents always serialize to the same bytes.
std::string dump(const Json& j);

Json encode(const Rat& v);
Json encode(const ExtendedRat& v);
Json encode(const Vector& v);
Json encode(const Matrix& m);
Rat decode_rat(const Json& j, const std::string& path);
ExtendedRat decode_extended(const Json& j, const std::string& path);
/// `size` is checked when given.
Vector decode_vector(const Json& j, const std::string& path, std::optional<std::size_t> size = std::nullopt);
Matrix decode_matrix(const Json& j, const std::string& path, std::size_t cols);
/// Comma-separated rationals, as accepted on the command line: "1/2,1/2".
Vector parse_point(std::string_view text);

/// {"dim", "ineq": {"A", "b"}, "eq": {"E", "d"}}
Json encode(const HPolyhedron& P);
/// {"dim", "points", "rays"}
Json encode(const VPolyhedron& V);
/// Either form above; a generator form is converted with v_to_h.
HPolyhedron decode_set(const Json& j, const std::string& path = "");
Json encode(const PolyCone& C);
PolyCone decode_cone(const Json& j, const std::string& path = "");
Json encode(const AffineFlat& L);

/// {"kind": "convex" | "concave", "dim", "pieces": [{"a", "b"}], "domain"};
/// a missing domain means the whole space.
Json encode(const PLConvexFunction& f);
Json encode(const PLConcaveFunction& g);
std::variant<PLConvexFunction, PLConcaveFunction> decode_function(const Json& j, const std::string& path = "");
Json encode(const PLFunctionDual& h);
/// {"f": convex, "g": concave}
Json encode(const PLPair& pair);
PLPair decode_pair(const Json& j, const std::string& path = "");

Json encode(const SeparationCertificate& c);
SeparationCertificate decode_certificate(const Json& j, const std::string& path = "");
Json encode(const SeparationHypotheses& h);
Json encode(const CertificateCheck& c);
Json encode(const StrictSeparation& s);

Json encode(const ContinuityReport& r);
Json encode(const QualificationReport& q);
Json encode(const DualityReport& r);
Json encode(const DualCertificate& c);

/// {"x_dim", "y_dim", "graph"}
Json encode(const PolySetValuedMap& F);
PolySetValuedMap decode_map(const Json& j, const std::string& path = "");
/// {"kind": "polyhedral", "generators", "dim"} or {"kind": "lex2d"}
Json encode(const OrderingCone& C);
OrderingCone decode_ordering_cone(const Json& j, const std::string& path = "");
Json encode(const GraphCheck& r);
Json encode(const CEpiReport& r);

/// {"prefix": [...], "tail": {"c", "rho"} | null}
Json encode(const TailSequence& x);
TailSequence decode_sequence(const Json& j, const std::string& path = "");

}  // namespace relint::json
