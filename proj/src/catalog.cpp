#include "liefam/catalog.hpp"

#include "liefam/document.hpp"

namespace liefam {

using nlohmann::ordered_json;

namespace {

ExactMatrix diag_signs(std::size_t plus1, std::size_t minus, std::size_t plus2) {
  Vector d;
  d.insert(d.end(), plus1, GaussianRational(1));
  d.insert(d.end(), minus, GaussianRational(-1));
  d.insert(d.end(), plus2, GaussianRational(1));
  return ExactMatrix::diagonal(d);
}

std::vector<ExactMatrix> sl_basis(std::size_t n) {
  std::vector<ExactMatrix> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) b.push_back(ExactMatrix::unit(n, i, j));
  for (std::size_t k = 0; k + 1 < n; ++k) b.push_back(ExactMatrix::unit(n, k, k) - ExactMatrix::unit(n, k + 1, k + 1));
  return b;
}

std::vector<ExactMatrix> gl_basis(std::size_t n) {
  std::vector<ExactMatrix> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.push_back(ExactMatrix::unit(n, i, j));
  return b;
}

ordered_json basis_json(const std::vector<ExactMatrix>& b) {
  ordered_json out = ordered_json::array();
  for (const auto& m : b) out.push_back(matrix_to_json(m));
  return out;
}

ordered_json map_json(bool conjugate, bool transpose, int sign) {
  return {{"form", "map"}, {"conjugate", conjugate}, {"transpose", transpose}, {"sign", sign}};
}

ordered_json conjugator_json(bool antilinear, const ExactMatrix& t) {
  return {{"form", "conjugator"}, {"antilinear", antilinear}, {"matrix", matrix_to_json(t)}};
}

ordered_json header(const std::string& name, const std::string& description, std::size_t n,
                    const std::vector<ExactMatrix>& basis) {
  return {{"version", kInputSchemaVersion}, {"name", name}, {"description", description},
          {"n", n},                         {"basis", basis_json(basis)}};
}

ordered_json split_compact(std::size_t n) {
  const std::string s = std::to_string(n);
  ordered_json doc = header("sl" + s + "-split-compact",
                            "sl(" + s + ",C) with theta(A) = -A^t and sigma(A) = conj(A): sl(" + s + ",R) for ab > 0, su(" +
                                s + ") for ab < 0",
                            n, sl_basis(n));
  doc["involutions"] = {{"theta", map_json(false, true, -1)}, {"sigma", map_json(true, false, 1)}};
  doc["group"] = {{"membership", "sl"}};
  return doc;
}

ordered_json gl_upq(std::size_t p, std::size_t q, std::size_t d) {
  const std::size_t n = p + q + d;
  const std::string tag = std::to_string(p) + "-" + std::to_string(q) + "-" + std::to_string(d);
  const std::string pdq = std::to_string(p + d) + "," + std::to_string(q);
  const std::string pqd = std::to_string(p) + "," + std::to_string(d + q);
  ordered_json doc = header("gl-upq-" + tag,
                            "gl(" + std::to_string(n) + ",C) with theta(A) = Jt A Jt, Jt = diag(I_p, -I_d, I_q), and "
                            "sigma(A) = -Js A^* Js, Js = diag(I_{p+d}, -I_q): u(" + pdq + ") for ab > 0, u(" + pqd +
                                ") for ab < 0",
                            n, gl_basis(n));
  ordered_json sigma = map_json(true, true, -1);
  sigma["conjugator"] = matrix_to_json(diag_signs(p + d, q, 0));
  doc["involutions"] = {{"theta", conjugator_json(false, diag_signs(p, d, q))}, {"sigma", sigma}};
  doc["group"] = {{"membership", "gl"}};
  return doc;
}

ordered_json trivial_theta() {
  ordered_json doc = header("sl2-trivial-theta", "sl(2,C) with theta = id and sigma = conj: the constant family", 2,
                            sl_basis(2));
  doc["involutions"] = {{"theta", conjugator_json(false, ExactMatrix::identity(2))},
                        {"sigma", map_json(true, false, 1)}};
  doc["group"] = {{"membership", "sl"}};
  return doc;
}

ordered_json dual_pair() {
  ordered_json doc = header("sl2-dual-pair",
                            "sl(2,C) from the commuting pair sigma1(A) = conj(A), sigma2(A) = -conj(A)^t", 2,
                            sl_basis(2));
  doc["involutions"] = {{"sigma1", map_json(true, false, 1)}, {"sigma2", map_json(true, true, -1)}};
  doc["group"] = {{"membership", "sl"}};
  return doc;
}

struct NamedForm {
  std::string name;
  Fingerprint fingerprint;
};

Fingerprint real_form_fingerprint(const std::vector<ExactMatrix>& basis, const MatrixInvolution& sigma) {
  const std::size_t n = basis.front().rows();
  const LieAlgebraSpec g(n, Field::Complex, basis);
  return fingerprint(fixed_real_form(g, sigma.to_spec(g)));
}

Fingerprint degenerate_fingerprint(const ordered_json& doc) {
  const InputDocument d = parse_document(doc);
  return fingerprint(fixed_fiber_at(resolve_family(d).family, ProjPoint(0, 1)));
}

std::vector<NamedForm> build_registry() {
  std::vector<NamedForm> out;
  for (std::size_t n : {2, 3}) {
    const std::string s = std::to_string(n);
    out.push_back({"sl(" + s + ",R)", real_form_fingerprint(sl_basis(n), {true, false, 1, {}})});
    out.push_back({"su(" + s + ")", real_form_fingerprint(sl_basis(n), {true, true, -1, {}})});
  }
  for (std::size_t n : {2, 3})
    for (std::size_t q = 0; 2 * q <= n; ++q) {
      const std::string name = "u(" + std::to_string(n - q) + "," + std::to_string(q) + ")";
      out.push_back({q == 0 ? "u(" + std::to_string(n) + ")" : name,
                     real_form_fingerprint(gl_basis(n), {true, true, -1, diag_signs(n - q, q, 0)})});
    }
  out.push_back({"so(2) |x sym0(2,R)", degenerate_fingerprint(split_compact(2))});
  out.push_back({"so(3) |x sym0(3,R)", degenerate_fingerprint(split_compact(3))});
  out.push_back({"(u(1)+u(1)) |x C", degenerate_fingerprint(gl_upq(1, 0, 1))});
  out.push_back({"(u(1,1)+u(1)) |x C^2", degenerate_fingerprint(gl_upq(1, 1, 1))});
  return out;
}

}  // namespace

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (const char* name :
       {"sl2-split-compact", "sl3-split-compact", "gl-upq-1-0-1", "gl-upq-1-1-1", "sl2-trivial-theta", "sl2-dual-pair"})
    out.push_back({name, catalog_document(name)["description"].get<std::string>()});
  return out;
}

ordered_json catalog_document(const std::string& name) {
  if (name == "sl2-split-compact") return split_compact(2);
  if (name == "sl3-split-compact") return split_compact(3);
  if (name == "gl-upq-1-0-1") return gl_upq(1, 0, 1);
  if (name == "gl-upq-1-1-1") return gl_upq(1, 1, 1);
  if (name == "sl2-trivial-theta") return trivial_theta();
  if (name == "sl2-dual-pair") return dual_pair();
  throw ParseError("unknown catalog example '" + name + "'", "");
}

std::vector<std::string> named_forms(const Fingerprint& f) {
  static const std::vector<NamedForm> registry = build_registry();
  std::vector<std::string> out;
  for (const auto& r : registry)
    if (r.fingerprint == f) out.push_back(r.name);
  return out;
}

}  // namespace liefam
