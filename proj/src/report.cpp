#include "liefam/report.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "liefam/catalog.hpp"

namespace liefam {

using nlohmann::ordered_json;

namespace {

class Checker {
 public:
  bool record(const std::string& id, bool ok) {
    ++total_;
    if (!ok) failed_.push_back(id);
    return ok;
  }
  std::size_t total() const { return total_; }
  const std::vector<std::string>& failed() const { return failed_; }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failed_;
};

const char* regime_name(const ProjPoint& p) {
  if (!p.is_real()) return "complex";
  switch (p.regime()) {
    case 1:
      return "+";
    case -1:
      return "-";
    default:
      return "0";
  }
}

ordered_json signature_json(const Signature& s) { return ordered_json::array({s.positive, s.negative, s.zero}); }

ordered_json structure_constants_json(const StructureConstants& sc) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < sc.dim(); ++i)
    for (std::size_t j = i + 1; j < sc.dim(); ++j)
      for (std::size_t k = 0; k < sc.dim(); ++k)
        if (!sc(i, j, k).is_zero()) out.push_back(ordered_json::array({i, j, k, sc(i, j, k).to_string()}));
  return out;
}

ordered_json basis_json(const LieAlgebraSpec& l) {
  ordered_json out = ordered_json::array();
  for (const auto& b : l.basis()) out.push_back(matrix_to_json(b));
  return out;
}

ordered_json named_json(const Fingerprint& f) {
  ordered_json out = ordered_json::array();
  for (const auto& n : named_forms(f)) out.push_back(n);
  return out;
}

// Killing signature of [L, L] for a real algebra.
std::optional<Signature> derived_signature(const LieAlgebraSpec& l) {
  const StructureConstants sc = check_closure(l);
  std::vector<Vector> e;
  for (std::size_t k = 0; k < l.dim(); ++k) {
    Vector v(l.dim());
    v[k] = 1;
    e.push_back(v);
  }
  const Subspace real_all = Subspace::span(Field::Real, l.dim(), e);
  const Subspace d = derived_subspace(sc, real_all, real_all);
  if (d.dim() == 0) return std::nullopt;
  return killing_signature(subalgebra(l, d));
}

ordered_json witness_json(const WitnessReport& w) {
  ordered_json j = {{"status", to_string(w.status)},
                    {"c", w.c},
                    {"target", w.target},
                    {"perfect_square", w.perfect_square},
                    {"homomorphism", w.homomorphism},
                    {"bijective", w.bijective},
                    {"fingerprint_match", w.fingerprint_match}};
  if (w.status != WitnessStatus::Exact && !w.perfect_square) {
    j["max_residual"] = w.max_residual;
    j["tolerance"] = WitnessReport::tolerance;
  }
  return j;
}

ordered_json degeneration_json(const DegenerationData& d) {
  return {{"reductive_dim", d.reductive.dim()},
          {"ideal_dim", d.ideal_dim},
          {"expected_ideal_dim", d.expected_ideal_dim},
          {"split_verified", true},
          {"trivial_action", d.split.trivial_action()},
          {"reductive_fingerprint", to_json(fingerprint(d.reductive))},
          {"reductive_matches", d.reductive_matches}};
}

ordered_json transition_json(const TransitionReport& t) {
  ordered_json j = {{"charts_agree", t.charts_agree}};
  j["x_scalar"] = t.x_scalar ? ordered_json(t.x_scalar->to_string()) : ordered_json(nullptr);
  j["y_scalar"] = t.y_scalar ? ordered_json(t.y_scalar->to_string()) : ordered_json(nullptr);
  j["expected_y_scalar"] = t.expected_y.to_string();
  j["ok"] = t.ok;
  return j;
}

std::string point_id(const ProjPoint& p) { return "points/" + p.to_string(); }

struct RegimeData {
  std::vector<Fingerprint> fingerprints;
  std::vector<std::string> points;
};

ordered_json point_block(const FamilyData& fd, const ProjPoint& p, Checker& checks, std::mt19937_64& rng,
                         std::map<std::string, RegimeData>& regimes) {
  const std::string id = point_id(p);
  ordered_json j = {{"point", p.to_string()}, {"regime", regime_name(p)}};
  const std::size_t dim = fd.base().dim();
  try {
    const Fiber f = fiber_at(fd, p);
    ordered_json fiber = {{"dim", f.algebra.dim()}, {"expected_dim", dim}};
    bool closed = true;
    StructureConstants sc;
    try {
      sc = check_closure(f.algebra);
    } catch (const NotClosedError& e) {
      closed = false;
      fiber["closure_error"] = e.what();
    }
    fiber["closure"] = closed;
    fiber["jacobi"] = closed && jacobi_check(sc);
    checks.record(id + "/fiber/dim", f.algebra.dim() == dim);
    checks.record(id + "/fiber/closure", closed);
    checks.record(id + "/fiber/jacobi", fiber["jacobi"].get<bool>());
    if (closed) {
      const GradingReport g = grading_check(f);
      fiber["grading"] = {{"xx_in_x", g.xx},
                          {"xy_in_y", g.xy},
                          {"yy_in_x", g.yy},
                          {"y_abelian_when_degenerate", g.y_abelian_when_degenerate}};
      checks.record(id + "/fiber/grading", g.ok());
      fiber["fingerprint"] = to_json(fingerprint(sc));
    }

    // Scale invariance with a random nonzero rational factor.
    long num = 0;
    while (num == 0) num = static_cast<long>(rng() % 19) - 9;
    const Rational lambda = Rational(num) / Rational(static_cast<long>(rng() % 7) + 1);
    const GaussianRational l(lambda);
    const bool scale_ok = fiber_algebra(fd, p.alpha() * l, p.beta() * l).span() == f.algebra.span();
    fiber["scale_invariance"] = {{"lambda", l.to_string()}, {"ok", scale_ok}};
    checks.record(id + "/fiber/scale_invariance", scale_ok);
    j["fiber"] = fiber;

    const FamilyThetaReport t = family_theta(fd, p);
    j["family_theta"] = {{"preserves_fiber", t.preserves_fiber},
                         {"fixes_x_sector", t.fixes_x_sector},
                         {"negates_y_sector", t.negates_y_sector},
                         {"fixed_dim", t.fixed_dim},
                         {"expected_fixed_dim", t.expected_fixed_dim}};
    checks.record(id + "/family_theta", t.ok());

    if (!p.is_degenerate()) {
      const TransitionReport tr = transition_action(fd, p);
      j["transition"] = transition_json(tr);
      checks.record(id + "/transition", tr.ok);
    }

    // Real structure on a spanning set: lands over conj(p), involutive.
    bool lands = true, involutive = true;
    const Fiber target = fiber_at(fd, p.conj());
    for (const auto& b : f.algebra.basis()) {
      const RealStructureImage once = real_structure_apply(fd, p, b);
      if (!(once.point == p.conj()) || !target.algebra.coordinates(once.element)) {
        lands = false;
        continue;
      }
      if (real_structure_apply(fd, once.point, once.element).element != b) involutive = false;
    }
    j["real_structure"] = {{"image_point", p.conj().to_string()}, {"lands_in_fiber", lands}, {"involutive", involutive}};
    checks.record(id + "/real_structure", lands && involutive);

    if (!p.is_real()) return j;

    const LieAlgebraSpec fixed = fixed_fiber_at(fd, p);
    const LieAlgebraSpec other = fixed_fiber_by_real_structure(fd, p);
    const Fingerprint fp = fingerprint(fixed);
    const bool routes = fixed.span() == other.span();
    j["fixed_fiber"] = {{"dim", fixed.dim()},
                        {"fingerprint", to_json(fp)},
                        {"named_forms", named_json(fp)},
                        {"routes_agree", routes}};
    checks.record(id + "/fixed_fiber/dim", fixed.dim() == dim);
    checks.record(id + "/fixed_fiber/routes_agree", routes);
    regimes[regime_name(p)].fingerprints.push_back(fp);
    regimes[regime_name(p)].points.push_back(p.to_string());

    if (!p.is_degenerate()) {
      const WitnessReport w = witness_isomorphism(fd, p);
      j["witness"] = witness_json(w);
      checks.record(id + "/witness", w.status != WitnessStatus::Failed);
    } else {
      try {
        const DegenerationData d = degeneration_at(fd, p);
        j["degeneration"] = degeneration_json(d);
        checks.record(id + "/degeneration", d.ok());
      } catch (const SplitError& e) {
        j["degeneration"] = {{"split_verified", false}, {"failed_check", e.check()}, {"error", e.what()}};
        checks.record(id + "/degeneration", false);
      }
    }
  } catch (const TheoremViolation& e) {
    j["error"] = e.what();
    checks.record(id + "/error", false);
  }
  return j;
}

ordered_json regime_table(const FamilyData& fd, const InputDocument& doc, std::map<std::string, RegimeData>& regimes,
                          Checker& checks) {
  ordered_json out = ordered_json::array();
  const LieAlgebraSpec gs = fixed_real_form(doc.algebra, doc.sigma);
  const LieAlgebraSpec gst = fixed_real_form(doc.algebra, compose(doc.sigma, doc.theta));
  const Fingerprint fs = fingerprint(gs), fst = fingerprint(gst);
  const LieAlgebraSpec red(fd.n(), Field::Real, fd.x_fixed_basis());
  const Fingerprint fred = fingerprint(red);
  for (const char* name : {"+", "-", "0"}) {
    auto it = regimes.find(name);
    if (it == regimes.end()) continue;
    const RegimeData& r = it->second;
    const bool constant = std::all_of(r.fingerprints.begin(), r.fingerprints.end(),
                                      [&](const Fingerprint& f) { return f == r.fingerprints.front(); });
    ordered_json row = {{"regime", name}, {"points", r.points}, {"constant", constant}};
    row["fingerprint"] = to_json(r.fingerprints.front());
    row["named_forms"] = named_json(r.fingerprints.front());
    const std::string id = std::string("regimes/") + name;
    checks.record(id + "/constant", constant);
    if (std::string(name) == "+") {
      row["expected"] = "g^sigma";
      row["expected_fingerprint"] = to_json(fs);
      row["matches_expected"] = r.fingerprints.front() == fs;
    } else if (std::string(name) == "-") {
      row["expected"] = "g^{sigma theta}";
      row["expected_fingerprint"] = to_json(fst);
      row["matches_expected"] = r.fingerprints.front() == fst;
    } else {
      row["expected"] = "(g^theta n g^sigma) |x (g^-theta n g^sigma)";
      row["reductive_fingerprint"] = to_json(fred);
      row["ideal_dim"] = fd.y_fixed_basis().size();
      row["matches_expected"] = r.fingerprints.front().dim == doc.algebra.dim();
    }
    checks.record(id + "/matches_expected", row["matches_expected"].get<bool>());
    if (std::string(name) != "0") {
      const LieAlgebraSpec rep = std::string(name) == "+" ? gs : gst;
      const auto ds = derived_signature(rep);
      row["derived_killing_signature"] = ds ? signature_json(*ds) : ordered_json(nullptr);
    }
    out.push_back(row);
  }
  return out;
}

ordered_json dual_forms_block(const InputDocument& doc, Checker& checks) {
  const InvolutionSpec s2 = sigma2_of(doc);
  const DualFormReport r = dual_form_identities(doc.algebra, doc.sigma, s2);
  checks.record("dual_forms/decomposition1", r.decomposition1);
  checks.record("dual_forms/decomposition2", r.decomposition2);
  checks.record("dual_forms/i_identity", r.i_identity);
  return {{"dim_fixed1", r.dim_fixed1},
          {"dim_fixed2", r.dim_fixed2},
          {"dim_common", r.dim_common},
          {"dim_first_split", r.dim_first_split},
          {"dim_second_split", r.dim_second_split},
          {"decomposition1", r.decomposition1},
          {"decomposition2", r.decomposition2},
          {"i_identity", r.i_identity},
          {"dim_literal_rhs", r.dim_literal_rhs}};
}

ordered_json closure_json(const ClosureReport& c) {
  ordered_json j = {{"z", c.z.real()},
                    {"pairs", c.pairs},
                    {"max_product_residual", c.max_product_residual},
                    {"max_inverse_residual", c.max_inverse_residual},
                    {"max_homomorphism_error", c.max_homomorphism_error},
                    {"tolerance", Tolerances::membership},
                    {"ok", c.ok()}};
  if (c.offending) j["offending_pair"] = ordered_json::array({c.offending->first, c.offending->second});
  return j;
}

ordered_json contraction_json(const ContractionReport& c) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : c.rows)
    rows.push_back({{"z", r.z},
                    {"upper_right_norm", r.upper_right},
                    {"distance_to_limit", r.distance},
                    {"lower_left_error", r.lower_left_error},
                    {"display_mismatch", r.display_mismatch}});
  ordered_json j = {{"rows", rows}, {"trivial", c.trivial}};
  if (!c.trivial) {
    j["slope"] = c.slope;
    j["slope_range"] = ordered_json::array({1.9, 2.1});
    j["c_min"] = c.c_min;
    j["c_max"] = c.c_max;
  }
  j["converges"] = c.converges;
  j["construction_ok"] = c.construction_ok;
  j["tolerance"] = Tolerances::limit;
  j["ok"] = c.ok();
  return j;
}

ordered_json group_block(const InputDocument& doc, const std::vector<ProjPoint>& points, const VerifyOptions& opt,
                         Checker& checks) {
  const GroupSpec spec = group_spec(doc);
  const auto& b = spec.bases();
  const auto n = static_cast<Eigen::Index>(spec.n());
  ordered_json out = {{"membership", to_string(spec.membership())},
                      {"doubled_for_sigma", spec.doubled()},
                      {"working_size", spec.n()}};

  ElementSampler sampler(opt.seed ^ 0x67726f7570ULL);
  std::vector<CMatrix> samples;
  for (std::size_t k = 0; k < opt.group_samples; ++k) samples.push_back(sampler.exp_of(b.algebra, true, n));

  {
    double factor = 0, member = 0, fixed_diag = 0;
    for (std::size_t k = 0; k < std::max<std::size_t>(100, opt.group_samples); ++k) {
      const CMatrix g = k < samples.size() ? samples[k] : sampler.exp_of(b.algebra, true, n);
      const CMatrix e = embed_group(spec, g);
      factor = std::max(factor, max_abs(e - embed_group_factored(spec, g)));
      const Complex det = e.determinant();
      member = std::max(member, spec.membership() == Membership::Special ? std::abs(det - 1.0)
                                                                         : (std::abs(det) > 1e-12 ? 0.0 : 1.0));
      const CMatrix k_fixed = sampler.exp_of(b.plus, true, n);
      const CMatrix d = embed_group(spec, k_fixed);
      CMatrix expect = CMatrix::Zero(2 * n, 2 * n);
      expect.topLeftCorner(n, n) = k_fixed;
      expect.bottomRightCorner(n, n) = k_fixed;
      fixed_diag = std::max(fixed_diag, max_abs(d - expect));
    }
    const double identity = max_abs(embed_group(spec, CMatrix::Identity(n, n)) - CMatrix::Identity(2 * n, 2 * n));
    const bool ok = std::max({factor, fixed_diag, identity}) < Tolerances::construction && member < Tolerances::membership;
    out["embedding"] = {{"samples", std::max<std::size_t>(100, opt.group_samples)},
                        {"max_factorization_error", factor},
                        {"max_determinant_residual", member},
                        {"max_theta_fixed_error", fixed_diag},
                        {"identity_error", identity},
                        {"tolerance", Tolerances::construction},
                        {"ok", ok}};
    checks.record("group/embedding", ok);
  }

  {
    ordered_json rows = ordered_json::array();
    bool all = true;
    for (double z : {4.0, -2.5}) {
      double err = 0, d_commute = 0;
      for (const auto& g : samples) {
        err = std::max(err, max_abs(fiber_element(spec, z, g, -1).matrix - fiber_element(spec, z, spec.theta(g)).matrix));
      }
      const CMatrix kf = sampler.exp_of(b.plus, true, n);
      d_commute = max_abs(fiber_element(spec, z, kf).matrix - embed_group(spec, kf));
      const bool ok = err < Tolerances::construction && d_commute < Tolerances::construction;
      all = all && ok;
      rows.push_back({{"z", z}, {"max_branch_error", err}, {"theta_fixed_unchanged_error", d_commute}, {"ok", ok}});
    }
    out["branch_independence"] = rows;
    checks.record("group/branch_independence", all);
  }

  {
    ordered_json rows = ordered_json::array();
    for (double z : {-2.5, 4.0}) {
      const ClosureReport c = fiber_closure_check(spec, z, samples);
      rows.push_back(closure_json(c));
      checks.record("group/closure/" + std::to_string(z), c.ok());
    }
    out["closure"] = rows;
  }

  {
    ElementSampler ds(opt.seed ^ 0x6465676eULL);
    double neutral = 0, inverse_err = 0, action_err = 0, law = 0;
    for (DegenerateSide side : {DegenerateSide::Zero, DegenerateSide::Infinity}) {
      for (std::size_t k = 0; k < 20; ++k) {
        DegenerateElement a{side, ds.exp_of(b.plus, true, n), ds.combination(b.minus, true, n)};
        DegenerateElement c{side, ds.exp_of(b.plus, true, n), ds.combination(b.minus, true, n)};
        law = std::max(law, max_abs(degenerate_product(a, c).matrix() - a.matrix() * c.matrix()));
        const DegenerateElement e{side, CMatrix::Identity(n, n), CMatrix::Zero(n, n)};
        neutral = std::max(neutral, max_abs(degenerate_product(e, a).matrix() - a.matrix()));
        neutral = std::max(neutral, max_abs(degenerate_product(a, e).matrix() - a.matrix()));
        inverse_err = std::max(inverse_err, max_abs(degenerate_product(a, degenerate_inverse(a)).matrix() -
                                                    CMatrix::Identity(2 * n, 2 * n)));
        const DegenerateElement kk{side, a.k, CMatrix::Zero(n, n)};
        const DegenerateElement ux{side, CMatrix::Identity(n, n), a.x};
        const DegenerateElement conj = degenerate_product(degenerate_product(kk, ux), degenerate_inverse(kk));
        action_err = std::max(action_err, std::max(max_abs(conj.k - CMatrix::Identity(n, n)),
                                                   max_abs(conj.x - a.k * a.x * a.k.inverse())));
      }
    }
    const bool ok = std::max({neutral, inverse_err, action_err, law}) < Tolerances::construction;
    out["degenerate_law"] = {{"max_law_error", law},
                             {"neutral_error", neutral},
                             {"inverse_error", inverse_err},
                             {"action_error", action_err},
                             {"tolerance", Tolerances::construction},
                             {"ok", ok}};
    checks.record("group/degenerate_law", ok);
  }

  {
    ElementSampler cs(opt.seed ^ 0x636f6e74ULL);
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 0; k < 3; ++k) {
      const CMatrix g = k == 0 ? CMatrix::Identity(n, n).eval() : cs.exp_of(b.plus, true, n);
      const CMatrix x = cs.combination(b.minus, k != 0, n);
      const ContractionReport c = contraction_limit(spec, g, x, default_contraction_zs());
      rows.push_back(contraction_json(c));
      checks.record("group/contraction/" + std::to_string(k), c.ok());
    }
    out["contraction"] = rows;
  }

  {
    ordered_json rows = ordered_json::array();
    std::vector<double> zs = {1.0, -1.0};
    std::vector<std::size_t> counts = {opt.group_samples, opt.group_samples};
    for (const auto& p : points)
      if (p.is_real() && !p.is_degenerate()) {
        const double z = Rational(p.alpha().re() / p.beta().re()).get_d();
        if (z != 1.0 && z != -1.0) {
          zs.push_back(z);
          counts.push_back(15);
        }
      }
    for (std::size_t k = 0; k < zs.size(); ++k) {
      const RealStructureCheck r = group_real_structure_check(spec, zs[k], opt.seed + 7919 * (k + 1), counts[k]);
      rows.push_back({{"z", zs[k]},
                      {"samples", r.samples},
                      {"predicted_fixed", r.predicted_fixed},
                      {"observed_fixed", r.observed_fixed},
                      {"mismatches", r.mismatches},
                      {"max_preservation_residual", r.max_preservation_residual},
                      {"tolerance", Tolerances::membership},
                      {"ok", r.ok()}});
      checks.record("group/real_structure/" + std::to_string(zs[k]), r.ok());
    }
    out["real_structure"] = rows;
  }

  {
    ordered_json rows = ordered_json::array();
    for (DegenerateSide side : {DegenerateSide::Zero, DegenerateSide::Infinity}) {
      const DegenerateRealStructureCheck r = degenerate_real_structure_check(spec, side, opt.seed + 31, opt.group_samples);
      rows.push_back({{"side", to_string(side)},
                      {"samples", r.samples},
                      {"predicted_fixed", r.predicted_fixed},
                      {"observed_fixed", r.observed_fixed},
                      {"mismatches", r.mismatches},
                      {"max_law_error", r.max_law_error},
                      {"ok", r.ok()}});
      checks.record(std::string("group/degenerate_real_structure/") + to_string(side), r.ok());
    }
    out["degenerate_real_structure"] = rows;
  }

  {
    ordered_json rows = ordered_json::array();
    for (const auto& p : points)
      if (p.is_real()) {
        const DifferentialCheck d = differential_check(spec, p);
        rows.push_back({{"point", p.to_string()},
                        {"theta", d.theta},
                        {"sigma", d.sigma},
                        {"fiber_real_structure", d.fiber},
                        {"tolerance", Tolerances::membership},
                        {"ok", d.ok()}});
        checks.record("group/differential/" + p.to_string(), d.ok());
      }
    out["differentials"] = rows;
  }

  {
    ordered_json rows = ordered_json::array();
    for (const ProjPoint& p : {ProjPoint(1, 1), ProjPoint(-1, 1), ProjPoint(0, 1), ProjPoint(1, 0)}) {
      const LieAlgebraSpec f = fixed_fiber_at(spec.family(), p);
      const Fingerprint fp = fingerprint(f);
      ordered_json row = {{"point", p.to_string()}, {"fingerprint", to_json(fp)}, {"named_forms", named_json(fp)}};
      if (!p.is_degenerate()) {
        const auto ds = derived_signature(f);
        row["derived_killing_signature"] = ds ? signature_json(*ds) : ordered_json(nullptr);
      }
      rows.push_back(row);
    }
    out["fixed_fiber_algebras"] = rows;
  }
  return out;
}

ordered_json notes() {
  return ordered_json::array(
      {{{"id", "dual-form-i-identity"},
        {"text", "checked as i*(g^s1 n g^-s2) = g^-s1 n g^s2; the variant with right side g^-s2 n g^s2 is the zero "
                 "space, recorded as dim_literal_rhs"}},
       {{"id", "degenerate-ideal"},
        {"text", "the abelian ideal at ab = 0 is g^-theta n g^sigma, the space forced by the fixed-point equations"}},
       {{"id", "fingerprint-strength"},
        {"text", "equal fingerprints are necessary for isomorphism, not sufficient; matches are reported as "
                 "fingerprint-isomorphic"}}});
}

}  // namespace

const char* library_version() { return "0.1.0"; }

VerifyMode parse_mode(const std::string& text) {
  if (text == "algebra") return VerifyMode::Algebra;
  if (text == "group") return VerifyMode::Group;
  if (text == "all") return VerifyMode::All;
  throw ParseError("mode must be algebra, group or all", "");
}

const char* to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::Algebra:
      return "algebra";
    case VerifyMode::Group:
      return "group";
    case VerifyMode::All:
      break;
  }
  return "all";
}

ordered_json to_json(const Fingerprint& f) {
  ordered_json j = {{"field", to_string(f.field)}, {"dim", f.dim}};
  j["killing_signature"] = f.killing_signature ? signature_json(*f.killing_signature) : ordered_json(nullptr);
  j["killing_rank"] = f.killing_rank;
  j["derived_dims"] = f.derived_dims;
  j["lcs_dims"] = f.lcs_dims;
  j["center_dim"] = f.center_dim;
  return j;
}

std::vector<ProjPoint> sample_points(const InputDocument& doc, const VerifyOptions& options) {
  std::vector<ProjPoint> pts;
  if (options.points) {
    pts = *options.points;
  } else if (!doc.points.empty()) {
    pts = doc.points;
  } else {
    pts = default_sample();
    std::mt19937_64 rng(options.seed);
    std::size_t added = 0;
    while (added < options.random_points) {
      const long a = static_cast<long>(rng() % 25) - 12, b = static_cast<long>(rng() % 25) - 12;
      if (a == 0 && b == 0) continue;
      const ProjPoint p(a, b);
      if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
      pts.push_back(p);
      ++added;
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

VerifyResult verify(const InputDocument& doc, const VerifyOptions& options) {
  Checker checks;
  const std::vector<ProjPoint> points = sample_points(doc, options);
  ordered_json report = {{"schema", "liefam.report"},
                         {"version", kReportSchemaVersion},
                         {"library_version", library_version()},
                         {"input", {{"name", doc.name}, {"n", doc.algebra.matrix_size()}, {"dim", doc.algebra.dim()}}},
                         {"mode", to_string(options.mode)},
                         {"seed", options.seed},
                         {"tolerances",
                          {{"construction", Tolerances::construction},
                           {"membership", Tolerances::membership},
                           {"limit", Tolerances::limit},
                           {"witness", WitnessReport::tolerance}}}};
  ordered_json pts = ordered_json::array();
  for (const auto& p : points) pts.push_back(p.to_string());
  report["sample"] = pts;

  const ResolvedFamily rf = resolve_family(doc);
  const FamilyData& fd = rf.family;
  {
    const Fingerprint fs = fingerprint(fixed_real_form(doc.algebra, doc.sigma));
    const Fingerprint fst = fingerprint(fixed_real_form(doc.algebra, compose(doc.sigma, doc.theta)));
    const bool embed_ok = doubled_embedding(fd.base(), fd.theta()).span() == fiber_at(fd, ProjPoint(1, 1)).algebra.span();
    checks.record("base/doubled_embedding", embed_ok);
    report["base"] = {{"given_as_pair", doc.given_as_pair},
                      {"real_structure_source", rf.s_source},
                      {"working_size", fd.n()},
                      {"dim", doc.algebra.dim()},
                      {"dim_plus_theta", fd.x_basis().size()},
                      {"dim_minus_theta", fd.y_basis().size()},
                      {"doubled_embedding_is_fiber_1_1", embed_ok},
                      {"sigma_form", {{"fingerprint", to_json(fs)}, {"named_forms", named_json(fs)}}},
                      {"sigma_theta_form", {{"fingerprint", to_json(fst)}, {"named_forms", named_json(fst)}}}};
  }

  if (options.mode != VerifyMode::Group) {
    std::mt19937_64 rng(options.seed ^ 0x616c67ULL);
    std::map<std::string, RegimeData> regimes;
    ordered_json rows = ordered_json::array();
    for (const auto& p : points) rows.push_back(point_block(fd, p, checks, rng, regimes));
    report["points"] = rows;
    report["regimes"] = regime_table(fd, doc, regimes, checks);
    report["dual_forms"] = dual_forms_block(doc, checks);
  }
  if (options.mode != VerifyMode::Algebra) {
    if (doc.group) {
      report["group"] = group_block(doc, points, options, checks);
    } else {
      report["group"] = nullptr;
      if (options.mode == VerifyMode::Group) throw ConfigurationError("document has no group block");
    }
  }
  report["notes"] = notes();

  VerifyResult result;
  result.failures = checks.failed();
  result.passed = result.failures.empty();
  report["summary"] = {{"checks", checks.total()},
                       {"failed", result.failures},
                       {"status", result.passed ? "pass" : "fail"}};
  result.report = std::move(report);
  return result;
}

ordered_json fiber_report(const InputDocument& doc, const ProjPoint& p) {
  const ResolvedFamily rf = resolve_family(doc);
  const FamilyData& fd = rf.family;
  const Fiber f = fiber_at(fd, p);
  const StructureConstants sc = check_closure(f.algebra);
  ordered_json j = {{"schema", "liefam.fiber"},
                    {"version", kReportSchemaVersion},
                    {"library_version", library_version()},
                    {"input", doc.name},
                    {"point", p.to_string()},
                    {"regime", regime_name(p)},
                    {"real_structure_source", rf.s_source}};
  j["fiber"] = {{"field", "complex"},
                {"matrix_size", f.algebra.matrix_size()},
                {"dim", f.algebra.dim()},
                {"x_dim", f.x_dim},
                {"basis", basis_json(f.algebra)},
                {"structure_constants", structure_constants_json(sc)},
                {"fingerprint", to_json(fingerprint(sc))}};
  if (!p.is_degenerate()) j["transition"] = transition_json(transition_action(fd, p));
  if (!p.is_real()) return j;

  const LieAlgebraSpec fixed = fixed_fiber_at(fd, p);
  const StructureConstants fsc = check_closure(fixed);
  const Fingerprint fp = fingerprint(fsc);
  j["fixed_real_form"] = {{"field", "real"},
                          {"dim", fixed.dim()},
                          {"basis", basis_json(fixed)},
                          {"structure_constants", structure_constants_json(fsc)},
                          {"fingerprint", to_json(fp)},
                          {"named_forms", named_json(fp)}};
  if (!p.is_degenerate()) {
    j["witness"] = witness_json(witness_isomorphism(fd, p));
  } else {
    try {
      j["degeneration"] = degeneration_json(degeneration_at(fd, p));
    } catch (const SplitError& e) {
      j["degeneration"] = {{"split_verified", false}, {"failed_check", e.check()}, {"error", e.what()}};
    }
  }
  return j;
}

}  // namespace liefam
