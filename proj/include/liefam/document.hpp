#ifndef LIEFAM_DOCUMENT_HPP
#define LIEFAM_DOCUMENT_HPP

// JSON input documents. The format is described in docs/input_schema.md.
// Every validation error is a ParseError whose path is a JSON pointer into
// the document.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "liefam/familygroup.hpp"

namespace liefam {

inline constexpr int kInputSchemaVersion = 1;

struct InputDocument {
  std::string name;
  std::string description;
  LieAlgebraSpec algebra;  // complex, inside gl(n)
  InvolutionSpec theta;    // complex-linear
  InvolutionSpec sigma;    // conjugate-linear, commutes with theta
  bool given_as_pair = false;  // sigma1/sigma2 input; then sigma = sigma1, theta = sigma1 sigma2
  // Matrix forms, when the input used them; required for group checks.
  std::optional<MatrixInvolution> theta_map, sigma_map;
  std::optional<ExactMatrix> real_structure;  // explicit S
  std::optional<Membership> group;
  std::vector<ProjPoint> points;  // empty: default sample plus seeded random points
  nlohmann::ordered_json source;
};

InputDocument parse_document(const nlohmann::ordered_json& j);
InputDocument parse_document_text(const std::string& text);  // ParseError on malformed JSON
InputDocument load_document(const std::string& path);

// sigma2 = sigma theta (so that sigma1 sigma2 = theta).
InvolutionSpec sigma2_of(const InputDocument& doc);

// The algebra family with a real structure S: the explicit S if given, the
// sigma conjugator when it has the form X -> S conj(X) S^-1, and otherwise
// the doubling embedding diag(X, conj sigma X) with S = [[0, I], [I, 0]].
struct ResolvedFamily {
  FamilyData family;
  std::string s_source;  // "input", "conjugator", "doubling"
};
ResolvedFamily resolve_family(const InputDocument& doc);

// ConfigurationError when the document has no group block or its
// involutions are not in matrix form.
GroupSpec group_spec(const InputDocument& doc);

// Points from a sample override: ["1:1", ...] or {"points": [...]}.
std::vector<ProjPoint> parse_points(const nlohmann::ordered_json& j, const std::string& path);

// Exact matrices as arrays of rows of scalar strings.
nlohmann::ordered_json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::ordered_json& j, const std::string& path, std::size_t n);

}  // namespace liefam

#endif
