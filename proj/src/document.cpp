#include "liefam/document.hpp"

#include <fstream>
#include <sstream>

namespace liefam {

using nlohmann::ordered_json;

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t k) { return path + "/" + std::to_string(k); }

const ordered_json& require(const ordered_json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError("expected an object", path);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field '" + key + "'", path);
  return *it;
}

bool get_bool(const ordered_json& j, const std::string& key, const std::string& path, bool fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw ParseError("expected a boolean", child(path, key));
  return it->get<bool>();
}

GaussianRational scalar_from_json(const ordered_json& j, const std::string& path) {
  if (j.is_number_integer()) return GaussianRational(Rational(j.get<long>()));
  if (!j.is_string()) throw ParseError("expected a scalar string", path);
  try {
    return GaussianRational::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(e.what(), path);
  }
}

// g -> T op(g) T^-1 for a composite of two group-level matrix involutions.
MatrixInvolution compose_maps(const MatrixInvolution& a, const MatrixInvolution& b, std::size_t n) {
  MatrixInvolution c;
  c.conjugate = a.conjugate != b.conjugate;
  c.transpose = a.transpose != b.transpose;
  c.sign = c.transpose ? -1 : 1;
  ExactMatrix tb = b.conjugator.rows() != 0 ? b.conjugator : ExactMatrix::identity(n);
  if (a.conjugate) tb = tb.conj();
  if (a.transpose) {
    auto inv = inverse(tb);
    if (!inv) throw DomainError("conjugator is singular");
    tb = inv->transpose();
  }
  const ExactMatrix ta = a.conjugator.rows() != 0 ? a.conjugator : ExactMatrix::identity(n);
  c.conjugator = ta * tb;
  return c;
}

struct ParsedInvolution {
  InvolutionSpec spec;
  std::optional<MatrixInvolution> map;
};

ParsedInvolution parse_involution(const ordered_json& j, const std::string& path, const LieAlgebraSpec& algebra) {
  const ordered_json& form_j = require(j, "form", path);
  if (!form_j.is_string()) throw ParseError("expected a string", child(path, "form"));
  const std::string form = form_j.get<std::string>();
  const std::size_t n = algebra.matrix_size();
  try {
    if (form == "map") {
      MatrixInvolution m;
      m.conjugate = get_bool(j, "conjugate", path, false);
      m.transpose = get_bool(j, "transpose", path, false);
      if (auto it = j.find("sign"); it != j.end()) {
        if (!it->is_number_integer() || (it->get<int>() != 1 && it->get<int>() != -1))
          throw ParseError("sign must be 1 or -1", child(path, "sign"));
        m.sign = it->get<int>();
      }
      if (j.contains("conjugator")) m.conjugator = matrix_from_json(j["conjugator"], child(path, "conjugator"), n);
      if (m.conjugator.rows() != 0 && !inverse(m.conjugator))
        throw ParseError("conjugator is singular", child(path, "conjugator"));
      return {m.to_spec(algebra), m};
    }
    if (form == "conjugator") {
      const bool anti = get_bool(j, "antilinear", path, false);
      const ExactMatrix t = matrix_from_json(require(j, "matrix", path), child(path, "matrix"), n);
      if (!inverse(t)) throw ParseError("conjugator is singular", child(path, "matrix"));
      return {InvolutionSpec::from_conjugator(algebra, anti, t), MatrixInvolution{anti, false, 1, t}};
    }
    if (form == "images") {
      const bool anti = get_bool(j, "antilinear", path, false);
      const ordered_json& imgs = require(j, "images", path);
      const std::string ipath = child(path, "images");
      if (!imgs.is_array() || imgs.size() != algebra.dim())
        throw ParseError("expected one coordinate vector per basis element", ipath);
      std::vector<Vector> cols;
      for (std::size_t k = 0; k < imgs.size(); ++k) {
        const ordered_json& v = imgs[k];
        if (!v.is_array() || v.size() != algebra.dim())
          throw ParseError("expected " + std::to_string(algebra.dim()) + " coordinates", child(ipath, k));
        Vector col;
        for (std::size_t c = 0; c < v.size(); ++c) col.push_back(scalar_from_json(v[c], child(child(ipath, k), c)));
        cols.push_back(std::move(col));
      }
      return {InvolutionSpec(anti, ExactMatrix::from_columns(cols, algebra.dim())), std::nullopt};
    }
  } catch (const DomainError& e) {
    throw ParseError(e.what(), path);
  }
  throw ParseError("unknown form '" + form + "' (expected map, conjugator or images)", child(path, "form"));
}

void require_valid(const LieAlgebraSpec& algebra, const InvolutionSpec& tau, bool antilinear, const std::string& path) {
  if (tau.antilinear() != antilinear)
    throw ParseError(antilinear ? "must be conjugate-linear" : "must be complex-linear", path);
  const InvolutionReport r = check_involution(algebra, tau);
  if (!r.valid()) throw ParseError(r.failures.front(), path);
}

}  // namespace

ordered_json matrix_to_json(const ExactMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const ordered_json& j, const std::string& path, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("expected " + std::to_string(n) + " rows", path);
  ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const ordered_json& row = j[r];
    if (!row.is_array() || row.size() != n)
      throw ParseError("expected " + std::to_string(n) + " entries", child(path, r));
    for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from_json(row[c], child(child(path, r), c));
  }
  return m;
}

std::vector<ProjPoint> parse_points(const ordered_json& j, const std::string& path) {
  const ordered_json* arr = &j;
  std::string base = path;
  if (j.is_object()) {
    arr = &require(j, "points", path);
    base = child(path, "points");
  }
  if (!arr->is_array() || arr->empty()) throw ParseError("expected a non-empty array of points", base);
  std::vector<ProjPoint> out;
  for (std::size_t k = 0; k < arr->size(); ++k) {
    const ordered_json& p = (*arr)[k];
    if (!p.is_string()) throw ParseError("expected a point string a:b", child(base, k));
    try {
      out.push_back(ProjPoint::parse(p.get<std::string>()));
    } catch (const Error& e) {
      throw ParseError(e.what(), child(base, k));
    }
  }
  return out;
}

InputDocument parse_document(const ordered_json& j) {
  InputDocument doc;
  doc.source = j;
  if (!j.is_object()) throw ParseError("document must be a JSON object", "");
  const ordered_json& version = require(j, "version", "");
  if (!version.is_number_integer() || version.get<int>() != kInputSchemaVersion)
    throw ParseError("unsupported version (expected " + std::to_string(kInputSchemaVersion) + ")", "/version");
  if (auto it = j.find("name"); it != j.end() && it->is_string()) doc.name = it->get<std::string>();
  if (auto it = j.find("description"); it != j.end() && it->is_string()) doc.description = it->get<std::string>();

  const ordered_json& nj = require(j, "n", "");
  if (!nj.is_number_integer() || nj.get<long>() < 1 || nj.get<long>() > 64)
    throw ParseError("n must be an integer between 1 and 64", "/n");
  const auto n = static_cast<std::size_t>(nj.get<long>());

  const ordered_json& bj = require(j, "basis", "");
  if (!bj.is_array() || bj.empty()) throw ParseError("expected a non-empty array of matrices", "/basis");
  std::vector<ExactMatrix> basis;
  for (std::size_t k = 0; k < bj.size(); ++k) basis.push_back(matrix_from_json(bj[k], child("/basis", k), n));
  try {
    doc.algebra = LieAlgebraSpec(n, Field::Complex, std::move(basis));
  } catch (const DimensionError& e) {
    throw ParseError(e.what(), "/basis");
  }
  try {
    check_closure(doc.algebra);
  } catch (const NotClosedError& e) {
    throw ParseError(e.what(), "/basis");
  }

  const ordered_json& inv = require(j, "involutions", "");
  if (!inv.is_object()) throw ParseError("expected an object", "/involutions");
  if (inv.contains("sigma1") || inv.contains("sigma2")) {
    if (inv.contains("theta") || inv.contains("sigma"))
      throw ParseError("give either theta/sigma or sigma1/sigma2, not both", "/involutions");
    ParsedInvolution s1 = parse_involution(require(inv, "sigma1", "/involutions"), "/involutions/sigma1", doc.algebra);
    ParsedInvolution s2 = parse_involution(require(inv, "sigma2", "/involutions"), "/involutions/sigma2", doc.algebra);
    require_valid(doc.algebra, s1.spec, true, "/involutions/sigma1");
    require_valid(doc.algebra, s2.spec, true, "/involutions/sigma2");
    try {
      CommutingPair pair = compose_commuting_pair(doc.algebra, s1.spec, s2.spec);
      doc.theta = std::move(pair.theta);
      doc.sigma = std::move(pair.sigma);
    } catch (const TheoremViolation& e) {
      throw ParseError(e.what(), "/involutions");
    }
    doc.given_as_pair = true;
    if (s1.map && s2.map) {
      MatrixInvolution t = compose_maps(*s1.map, *s2.map, n);
      if (t.to_spec(doc.algebra).images() == doc.theta.images()) {
        doc.theta_map = t;
        doc.sigma_map = s1.map;
      }
    }
  } else {
    ParsedInvolution t = parse_involution(require(inv, "theta", "/involutions"), "/involutions/theta", doc.algebra);
    ParsedInvolution s = parse_involution(require(inv, "sigma", "/involutions"), "/involutions/sigma", doc.algebra);
    require_valid(doc.algebra, t.spec, false, "/involutions/theta");
    require_valid(doc.algebra, s.spec, true, "/involutions/sigma");
    if (auto w = commutation_witness(t.spec, s.spec))
      throw ParseError(NonCommutingError(*w).what(), "/involutions");
    doc.theta = std::move(t.spec);
    doc.sigma = std::move(s.spec);
    doc.theta_map = t.map;
    doc.sigma_map = s.map;
  }

  if (auto it = j.find("real_structure_S"); it != j.end()) {
    ExactMatrix s = matrix_from_json(*it, "/real_structure_S", n);
    if (!realizes_sigma(doc.algebra, doc.sigma, s))
      throw ParseError("S does not realize sigma as X -> S conj(X) S^-1", "/real_structure_S");
    doc.real_structure = std::move(s);
  }

  if (auto it = j.find("group"); it != j.end()) {
    const ordered_json& m = require(*it, "membership", "/group");
    if (!m.is_string() || (m.get<std::string>() != "sl" && m.get<std::string>() != "gl"))
      throw ParseError("membership must be \"sl\" or \"gl\"", "/group/membership");
    doc.group = m.get<std::string>() == "sl" ? Membership::Special : Membership::General;
    if (!doc.theta_map || !doc.sigma_map)
      throw ParseError("group checks need both involutions in map or conjugator form", "/group");
  }

  if (auto it = j.find("points"); it != j.end()) doc.points = parse_points(*it, "/points");
  return doc;
}

InputDocument parse_document_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "");
  }
  return parse_document(j);
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'", "");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document_text(ss.str());
}

InvolutionSpec sigma2_of(const InputDocument& doc) { return compose(doc.sigma, doc.theta); }

ResolvedFamily resolve_family(const InputDocument& doc) {
  if (doc.real_structure) return {FamilyData(doc.algebra, doc.theta, doc.sigma, doc.real_structure), "input"};
  if (doc.sigma.conjugator() && realizes_sigma(doc.algebra, doc.sigma, *doc.sigma.conjugator()))
    return {FamilyData(doc.algebra, doc.theta, doc.sigma, doc.sigma.conjugator()), "conjugator"};
  SigmaDoubling dbl = doubling_embedding_for_sigma(doc.algebra, doc.sigma);
  return {FamilyData(dbl.image, InvolutionSpec(false, doc.theta.images()),
                     InvolutionSpec(true, doc.sigma.images(), dbl.s), dbl.s),
          "doubling"};
}

GroupSpec group_spec(const InputDocument& doc) {
  if (!doc.group) throw ConfigurationError("document has no group block");
  if (!doc.theta_map || !doc.sigma_map) throw ConfigurationError("group checks need involutions in matrix form");
  return {*doc.group, doc.algebra, *doc.theta_map, *doc.sigma_map};
}

}  // namespace liefam
