// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <unsupported/Eigen/MatrixFunctions>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "liefam/catalog.hpp"
#include "liefam/familygroup.hpp"
#include "liefam/report.hpp"
#include "oracle.hpp"

using namespace liefam;
using Sig = std::array<std::size_t, 3>;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what;
    ok = ok && cond;
  }
};

InputDocument example(const std::string& name) { return parse_document(catalog_document(name)); }

std::string sig_text(const Sig& s) {
  return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + ")";
}

Sig json_sig(const nlohmann::ordered_json& j) { return {j[0].get<std::size_t>(), j[1].get<std::size_t>(), j[2].get<std::size_t>()}; }

Sig derived_signature(const std::vector<ExactMatrix>& basis) {
  return oracle::signature(oracle::killing(oracle::derived(oracle::to_eigen(basis))));
}

// Fixed-fiber fingerprints per regime, checked against the library report and
// recomputed from the fixed fibers by the floating-point oracle.
void regime_suite(Outcome& o, const std::string& name, const Sig& plus, const Sig& minus, std::size_t reductive,
                  std::size_t ideal) {
  const InputDocument d = example(name);
  VerifyOptions opt;
  opt.mode = VerifyMode::Algebra;
  opt.points = default_sample();
  const VerifyResult r = verify(d, opt);
  o.require(r.passed, name + " report passes");
  for (const auto& reg : r.report["regimes"]) {
    o.require(reg["constant"] == true, name + " regime " + reg["regime"].get<std::string>() + " constant");
    if (reg["regime"] == "+") o.require(json_sig(reg["fingerprint"]["killing_signature"]) == plus, name + " + signature");
    if (reg["regime"] == "-") o.require(json_sig(reg["fingerprint"]["killing_signature"]) == minus, name + " - signature");
  }
  const FamilyData fd = resolve_family(d).family;
  for (const auto& p : default_sample()) {
    if (p.is_degenerate()) {
      const DegenerationData g = degeneration_at(fd, p);
      o.require(g.ok(), name + " split at " + p.to_string());
      o.require(g.reductive.dim() == reductive, name + " reductive dim at " + p.to_string());
      o.require(g.ideal_dim == ideal, name + " ideal dim at " + p.to_string());
      continue;
    }
    const LieAlgebraSpec f = fixed_fiber_at(fd, p);
    const Sig s = oracle::killing_signature(f.basis());
    o.require(s == (p.regime() > 0 ? plus : minus), name + " oracle signature at " + p.to_string() + " " + sig_text(s));
  }
  o.detail << name << " " << sig_text(plus) << "/" << sig_text(minus) << "; ";
}

void ac1(Outcome& o) { regime_suite(o, "sl2-split-compact", {2, 1, 0}, {0, 3, 0}, 1, 2); }

void ac2(Outcome& o) {
  regime_suite(o, "sl3-split-compact", {5, 3, 0}, {0, 8, 0}, 3, 5);
  const InputDocument d = example("gl-upq-1-0-1");
  const FamilyData fd = resolve_family(d).family;
  const Sig compact{0, 3, 0}, split{2, 1, 0};
  for (const auto& p : default_sample()) {
    if (p.is_degenerate()) continue;
    const LieAlgebraSpec f = fixed_fiber_at(fd, p);
    const Sig s = derived_signature(f.basis());
    o.require(f.dim() == 4, "gl(1,0,1) fixed fiber dim at " + p.to_string());
    o.require(s == (p.regime() > 0 ? compact : split), "gl(1,0,1) derived signature at " + p.to_string());
  }
  VerifyOptions opt;
  opt.mode = VerifyMode::Group;
  const VerifyResult r = verify(d, opt);
  o.require(r.passed, "gl(1,0,1) group report passes");
  for (const auto& row : r.report["group"]["fixed_fiber_algebras"]) {
    if (row["point"] == "1:1") o.require(row["named_forms"][0] == "u(2)", "gl(1,0,1) names u(2)");
    if (row["point"] == "-1:1") o.require(row["named_forms"][0] == "u(1,1)", "gl(1,0,1) names u(1,1)");
  }
  o.detail << "gl-upq-1-0-1 u(2) " << sig_text(compact) << " / u(1,1) " << sig_text(split);
}

// phi(M) = M11 + (c / beta) M21 on the 2n x 2n fiber matrix.
oracle::CMat phi(const oracle::CMat& m, Eigen::Index n, std::complex<double> c, std::complex<double> beta) {
  return m.topLeftCorner(n, n) + (c / beta) * m.bottomLeftCorner(n, n);
}

std::complex<double> to_complex(const GaussianRational& g) {
  return {Rational(g.re()).get_d(), Rational(g.im()).get_d()};
}

void ac3(Outcome& o) {
  const InputDocument d = example("sl2-split-compact");
  const FamilyData fd = resolve_family(d).family;
  VerifyOptions opt;
  const auto points = sample_points(d, opt);
  std::size_t exact = 0, floated = 0;
  double worst = 0;
  for (const auto& p : points) {
    if (p.is_degenerate()) continue;
    const WitnessReport w = witness_isomorphism(fd, p);
    o.require(w.homomorphism && w.bijective && w.fingerprint_match, "witness at " + p.to_string());
    if (w.perfect_square) {
      o.require(w.status == WitnessStatus::Exact, "exact witness at " + p.to_string());
      ++exact;
    } else {
      o.require(w.status == WitnessStatus::FloatVerified, "float witness at " + p.to_string());
      ++floated;
    }
    // Independent float check over all basis pairs of the fixed fiber.
    const auto basis = oracle::to_eigen(fixed_fiber_at(fd, p).basis());
    const std::complex<double> ab = to_complex(p.alpha() * p.beta());
    const std::complex<double> c = std::sqrt(ab), beta = to_complex(p.beta());
    const Eigen::Index n = static_cast<Eigen::Index>(fd.n());
    std::vector<oracle::CMat> image;
    for (const auto& a : basis) image.push_back(phi(a, n, c, beta));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const oracle::CMat lhs = phi(oracle::bracket(basis[i], basis[j]), n, c, beta);
        worst = std::max(worst, (lhs - oracle::bracket(image[i], image[j])).cwiseAbs().maxCoeff());
      }
    o.require(oracle::real_rank(image) == basis.size(), "witness image rank at " + p.to_string());
  }
  o.require(worst < 1e-9, "bracket residual");
  o.detail << exact << " exact, " << floated << " float-verified, max residual " << worst;
}

void ac4(Outcome& o) {
  std::size_t fibers = 0;
  for (const char* name : {"sl2-split-compact", "sl3-split-compact", "gl-upq-1-0-1"}) {
    const InputDocument d = example(name);
    const FamilyData fd = resolve_family(d).family;
    VerifyOptions opt;
    for (const auto& p : sample_points(d, opt)) {
      const Fiber f = fiber_at(fd, p);
      o.require(f.algebra.dim() == fd.base().dim(), std::string(name) + " dim at " + p.to_string());
      const StructureConstants sc = check_closure(f.algebra);
      o.require(jacobi_check(sc), std::string(name) + " jacobi at " + p.to_string());
      o.require(grading_check(f).ok(), std::string(name) + " grading at " + p.to_string());
      o.require(oracle::complex_closure_residual(oracle::to_eigen(f.algebra.basis())) < 1e-10,
                std::string(name) + " oracle closure at " + p.to_string());
      ++fibers;
    }
  }
  o.detail << fibers << " fibers";
}

void ac5(Outcome& o) {
  const FamilyData fd = resolve_family(example("sl2-split-compact")).family;
  std::size_t count = 0;
  for (const auto& p : default_sample()) {
    if (p.is_degenerate() || count == 5) continue;
    const TransitionReport t = transition_action(fd, p);
    o.require(t.ok && t.charts_agree, "transition at " + p.to_string());
    o.require(t.x_scalar && *t.x_scalar == GaussianRational(1), "X scalar at " + p.to_string());
    o.require(t.y_scalar && *t.y_scalar == p.alpha() / p.beta(), "Y scalar at " + p.to_string());
    ++count;
  }
  o.require(count == 5, "five points");
  o.detail << count << " points";
}

void ac6(Outcome& o) {
  for (const char* name : {"sl2-split-compact", "sl2-dual-pair", "sl3-split-compact", "gl-upq-1-0-1"}) {
    const InputDocument d = example(name);
    const DualFormReport r = dual_form_identities(d.algebra, d.sigma, sigma2_of(d));
    o.require(r.ok(), std::string(name) + " identities");
    o.require(r.dim_fixed1 == d.algebra.dim() && r.dim_fixed2 == d.algebra.dim(), std::string(name) + " real dims");
    o.require(r.dim_common + r.dim_first_split == r.dim_fixed1, std::string(name) + " first sum");
    o.require(r.dim_common + r.dim_second_split == r.dim_fixed2, std::string(name) + " second sum");
    o.detail << name << " ";
  }
}

void ac7(Outcome& o) {
  const GroupSpec spec = group_spec(example("sl2-split-compact"));
  ElementSampler s(2024);
  const auto& b = spec.bases();
  const auto zs = default_contraction_zs();
  for (int k = 0; k < 3; ++k) {
    const CMatrix g = k == 0 ? CMatrix::Identity(2, 2).eval() : s.exp_of(b.plus, true, 2);
    const CMatrix x = s.combination(b.minus, true, 2);
    const ContractionReport r = contraction_limit(spec, g, x, zs);
    o.require(r.ok(), "library contraction sample " + std::to_string(k));
    o.require(r.slope >= 1.9 && r.slope <= 2.1, "library slope");
    // Oracle: the displayed curve from Eigen's exponential, fitted independently.
    double sx = 0, sy = 0, sxx = 0, sxy = 0, last = 0;
    for (double z : zs) {
      const CMatrix gp = g * (z * x).exp(), gm = g * (-z * x).exp();
      CMatrix m(4, 4);
      m << 0.5 * (gp + gm), 0.5 * z * (gp - gm), 0.5 * (gp - gm) / z, 0.5 * (gp + gm);
      CMatrix limit = CMatrix::Zero(4, 4);
      limit.topLeftCorner(2, 2) = g;
      limit.bottomRightCorner(2, 2) = g;
      limit.bottomLeftCorner(2, 2) = g * x;
      last = (m - limit).cwiseAbs().maxCoeff();
      const double lx = std::log(z), ly = std::log(m.topRightCorner(2, 2).norm());
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    const double n = static_cast<double>(zs.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    o.require(slope >= 1.9 && slope <= 2.1, "oracle slope " + std::to_string(slope));
    o.require(last < 1e-6, "oracle distance at 1e-4");
    o.detail << "slope " << slope << " dist " << last << "; ";
  }
}

void ac8(Outcome& o) {
  for (const char* name : {"sl2-split-compact", "gl-upq-1-0-1"}) {
    const GroupSpec spec = group_spec(example(name));
    for (double z : {1.0, -1.0}) {
      const RealStructureCheck r = group_real_structure_check(spec, z, 31, 50);
      o.require(r.samples == 50 && r.ok(), std::string(name) + " z = " + std::to_string(z));
      o.require(r.predicted_fixed > 0 && r.predicted_fixed < 50, std::string(name) + " both outcomes sampled");
      o.detail << name << " z=" << z << " fixed " << r.observed_fixed << "/50; ";
    }
    for (DegenerateSide side : {DegenerateSide::Zero, DegenerateSide::Infinity}) {
      const DegenerateRealStructureCheck r = degenerate_real_structure_check(spec, side, 37, 50);
      o.require(r.ok(), std::string(name) + " degenerate " + to_string(side));
      o.require(r.predicted_fixed > 0 && r.predicted_fixed < 50, std::string(name) + " degenerate outcomes");
    }
  }
}

void ac9(Outcome& o) {
  for (const char* name : {"sl2-split-compact", "gl-upq-1-0-1"}) {
    VerifyOptions opt;
    opt.seed = 12345;
    const InputDocument d = example(name);
    o.require(verify(d, opt).report.dump(2) == verify(d, opt).report.dump(2), std::string(name) + " identical");
    o.detail << name << " ";
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
    double budget_s;
  };
  const Criterion criteria[] = {
      {1, "regime trichotomy, sl(2)", ac1, 5},
      {2, "regime trichotomy, sl(3) and gl(1,0,1)", ac2, 30},
      {3, "witness isomorphisms", ac3, 0},
      {4, "grading and closure", ac4, 0},
      {5, "transition cocycle", ac5, 0},
      {6, "dual-form identities", ac6, 0},
      {7, "group contraction", ac7, 5},
      {8, "group fixed points", ac8, 0},
      {9, "determinism", ac9, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0) o.require(secs < c.budget_s, "runtime budget");
    std::printf("[%s] AC%d %s (%.2f s%s) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.budget_s > 0 ? (" < " + std::to_string(static_cast<int>(c.budget_s)) + " s").c_str() : "",
                o.detail.str().c_str());
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
