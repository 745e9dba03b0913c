// Command-line surface of the darboux library: polynomial analysis,
// integral-curve certificates, local singularity invariants, focal values,
// and the bundled end-to-end verification documents.
//
// Exit codes: 0 all checks pass; 1 a mathematical check failed;
// 2 input/usage error; 3 inconclusive (the computation could not decide).

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "darboux/constructions.hpp"
#include "darboux/errors.hpp"
#include "darboux/eta.hpp"
#include "darboux/focal.hpp"
#include "darboux/inverse.hpp"
#include "darboux/local.hpp"
#include "darboux/parse.hpp"

namespace {

using namespace darboux;

struct GlobalOpts {
  std::string field = "Q";
  long prime = 10007;
  std::string json_path;
  bool quiet = false;
};

FieldPtr make_context(const GlobalOpts& g) {
  if (g.field == "Q") return FieldContext::rationals();
  if (g.field == "Fp") return FieldContext::prime(static_cast<unsigned long>(g.prime));
  if (g.field.rfind("Fp^", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(g.field.substr(3));
    } catch (const std::exception&) {
      throw ConfigError("bad extension degree in field '" + g.field + "'");
    }
    if (k < 1) throw ConfigError("extension degree must be positive");
    return FieldContext::extension(static_cast<unsigned long>(g.prime), k);
  }
  throw ConfigError("unknown field '" + g.field + "' (use Q, Fp, or Fp^k)");
}

std::vector<FieldElement> parse_point(const std::string& text, const FieldPtr& ctx) {
  std::vector<FieldElement> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) {
    const auto a = part.find_first_not_of(" \t");
    const auto b = part.find_last_not_of(" \t");
    if (a == std::string::npos) throw ConfigError("empty coordinate in point '" + text + "'");
    out.push_back(ctx->parse_literal(part.substr(a, b - a + 1)));
  }
  if (out.size() != 2 && out.size() != 3)
    throw ConfigError("point must have 2 (affine) or 3 (projective) coordinates");
  return out;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArityMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    auto kind = inconclusive_kind();
    if (kind) {
      std::cerr << "inconclusive: " << *kind << ": " << e.what() << "\n";
      return 3;
    }
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}

DifferentialForm parse_form(const std::string& p, const std::string& q, int d,
                            const FieldPtr& ctx) {
  return DifferentialForm(parse_polynomial(p, ctx, 2), parse_polynomial(q, ctx, 2), d);
}

// Locates the equilibrium to work at: the --point argument when given, else
// the unique common zero of the form.
std::pair<FieldElement, FieldElement> pick_equilibrium(const DifferentialForm& om,
                                                       const std::string& point_text,
                                                       const FieldPtr& ctx) {
  if (!point_text.empty()) {
    auto pt = parse_point(point_text, ctx);
    if (pt.size() != 2) throw ConfigError("equilibrium point must be affine (x,y)");
    return {pt[0], pt[1]};
  }
  auto eqs = equilibria(om);
  if (eqs.size() != 1)
    throw ConfigError("form has " + std::to_string(eqs.size()) +
                      " equilibria; choose one with --point");
  return eqs.front();
}

// Normalizes at the equilibrium, extending F_p to F_p^2 when the square root
// of the determinant is missing.
NormalForm normalize_with_retry(const DifferentialForm& om, const FieldElement& x0,
                                const FieldElement& y0, bool quiet, bool* extended) {
  if (extended) *extended = false;
  try {
    return normalize_at(om, x0, y0);
  } catch (const SquareRootUnavailable&) {
    const FieldPtr& ctx = om.P.context();
    if (ctx->kind() != FieldKind::Prime) throw;
    FieldPtr ext = FieldContext::extension(ctx->prime_modulus(), 2);
    DifferentialForm lifted(om.P.map_context(ext), om.Q.map_context(ext), om.d);
    if (!quiet) std::cerr << "note: extended to " << ext->describe() << "\n";
    if (extended) *extended = true;
    return normalize_at(lifted, x0.lift_to(ext), y0.lift_to(ext));
  }
}

int emit_report(const VerificationReport& rep, const GlobalOpts& g) {
  if (!g.json_path.empty()) {
    std::ofstream out(g.json_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + g.json_path + "'");
    out << rep.json;
  }
  if (!g.quiet) {
    for (const auto& c : rep.checks)
      std::printf("[%s] %s  expected=%s  computed=%s\n", c.status.c_str(),
                  c.name.c_str(), c.expected.c_str(), c.computed.c_str());
    std::printf("%s: %s\n", rep.fixture.empty() ? "report" : rep.fixture.c_str(),
                rep.status.c_str());
  }
  if (rep.status == "pass") return 0;
  return rep.status == "inconclusive" ? 3 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Darboux integrability toolkit"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--field", g.field, "coefficient field: Q, Fp, or Fp^k")
      ->capture_default_str();
  app.add_option("--prime", g.prime, "prime for finite fields")->capture_default_str();
  app.add_option("--json", g.json_path, "write the JSON report to this path");
  app.add_flag("--quiet", g.quiet, "suppress human-readable output");

  int rc = 0;

  // ---- analyze ----
  auto* analyze = app.add_subcommand("analyze", "run the checks of a config document");
  analyze->fallthrough();
  std::string analyze_path;
  bool analyze_focal = false, analyze_tangent = false;
  analyze->add_option("config", analyze_path, "JSON config document")
      ->required()
      ->check(CLI::ExistingFile);
  analyze->add_flag("--focal", analyze_focal, "also run the recorded focal checks");
  analyze->add_flag("--tangent", analyze_tangent, "also run the Jacobian rank check");
  analyze->callback([&] {
    rc = guarded([&] {
      std::ifstream in(analyze_path, std::ios::binary);
      std::ostringstream text;
      text << in.rdbuf();
      VerifyOptions vo;
      vo.focal = analyze_focal;
      vo.tangent = analyze_tangent;
      return emit_report(run_analysis_config(text.str(), vo), g);
    });
  });

  // ---- verify-construction ----
  auto* verify = app.add_subcommand("verify-construction",
                                    "verify a bundled construction document");
  verify->fallthrough();
  std::string verify_id;
  bool verify_focal = false, verify_tangent = false;
  verify->add_option("id", verify_id, "construction id (see list-constructions)")
      ->required();
  verify->add_flag("--focal", verify_focal, "also run the recorded focal checks");
  verify->add_flag("--tangent", verify_tangent, "also run the Jacobian rank check");
  verify->callback([&] {
    rc = guarded([&] {
      VerifyOptions vo;
      vo.focal = verify_focal;
      vo.tangent = verify_tangent;
      return emit_report(verify_construction(verify_id, vo), g);
    });
  });

  // ---- list-constructions ----
  auto* list = app.add_subcommand("list-constructions", "list bundled documents");
  list->callback([&] {
    rc = guarded([&] {
      for (const auto& m : list_fixtures())
        std::printf("%-12s %-14s %s\n", m.id.c_str(), m.role.c_str(), m.family.c_str());
      return 0;
    });
  });

  // ---- cofactor ----
  auto* cofactor = app.add_subcommand("cofactor", "cofactor of an integral curve");
  cofactor->fallthrough();
  std::string co_curve, co_p, co_q;
  int co_d = 0;
  cofactor->add_option("--curve", co_curve, "affine curve polynomial")->required();
  cofactor->add_option("--omega-p", co_p, "P of omega = P dx + Q dy")->required();
  cofactor->add_option("--omega-q", co_q, "Q of omega = P dx + Q dy")->required();
  cofactor->add_option("--degree", co_d, "degree bound d of omega")->required();
  cofactor->callback([&] {
    rc = guarded([&] {
      FieldPtr ctx = make_context(g);
      DifferentialForm om = parse_form(co_p, co_q, co_d, ctx);
      Polynomial c = parse_polynomial(co_curve, ctx, 2);
      auto k = is_integral_curve(c, om);
      if (!k) throw NotIntegralCurve("the curve does not divide dC ^ omega");
      std::printf("%s\n", k->str().c_str());
      return 0;
    });
  });

  // ---- kernel ----
  auto* kernel = app.add_subcommand("kernel",
                                    "forms of degree <= d with the given integral curve");
  kernel->fallthrough();
  std::string ker_curve;
  int ker_d = 0;
  kernel->add_option("--curve", ker_curve, "affine curve polynomial")->required();
  kernel->add_option("--degree", ker_d, "form degree bound d")->required();
  kernel->callback([&] {
    rc = guarded([&] {
      FieldPtr ctx = make_context(g);
      KernelSpace V = kernel_space(Curve::from_affine(parse_polynomial(ker_curve, ctx, 2)),
                                   ker_d);
      if (g.quiet) {
        std::printf("%d\n", V.dim);
      } else {
        std::printf("dim %d\nhamiltonian %d\n", V.dim, V.hamiltonian_dim);
      }
      return 0;
    });
  });

  // ---- degx ----
  auto* degx = app.add_subcommand("degx", "degree of the singular scheme of a curve");
  degx->fallthrough();
  std::string degx_curve;
  degx->add_option("--curve", degx_curve, "affine curve polynomial")->required();
  degx->callback([&] {
    rc = guarded([&] {
      FieldPtr ctx = make_context(g);
      LinkageDegrees lk = deg_X(Curve::from_affine(parse_polynomial(degx_curve, ctx, 2)));
      std::printf("%d\n", lk.deg_X);
      return 0;
    });
  });

  // ---- tjurina ----
  auto* tjur = app.add_subcommand("tjurina", "Tjurina number of a germ at a point");
  tjur->fallthrough();
  std::string tj_poly, tj_point;
  tjur->add_option("--poly", tj_poly, "affine polynomial")->required();
  tjur->add_option("--point", tj_point, "affine point x,y")->required();
  tjur->callback([&] {
    rc = guarded([&] {
      FieldPtr ctx = make_context(g);
      auto pt = parse_point(tj_point, ctx);
      if (pt.size() != 2) throw ConfigError("tjurina needs an affine point x,y");
      Polynomial germ = germ_at_affine(parse_polynomial(tj_poly, ctx, 2), pt[0], pt[1]);
      std::printf("%d\n", tjurina(germ));
      return 0;
    });
  });

  // ---- tz ----
  auto* tz = app.add_subcommand("tz", "modified Tjurina number at an infinity point");
  tz->fallthrough();
  std::string tz_curve, tz_point, tz_germ;
  tz->add_option("--curve", tz_curve, "affine curve polynomial");
  tz->add_option("--point", tz_point, "infinity point a,b meaning (a : b : 0)");
  tz->add_option("--germ", tz_germ, "germ F(x,y) with y = 0 the distinguished line");
  tz->callback([&] {
    rc = guarded([&] {
      FieldPtr ctx = make_context(g);
      if (!tz_germ.empty()) {
        if (!tz_curve.empty() || !tz_point.empty())
          throw ConfigError("use either --germ or --curve with --point");
        std::printf("%d\n", modified_tjurina(parse_polynomial(tz_germ, ctx, 2)));
        return 0;
      }
      if (tz_curve.empty() || tz_point.empty())
        throw ConfigError("tz needs --curve and --point (or --germ)");
      auto pt = parse_point(tz_point, ctx);
      if (pt.size() != 2) throw ConfigError("give the infinity point as a,b");
      Curve cu = Curve::from_affine(parse_polynomial(tz_curve, ctx, 2));
      Polynomial germ = germ_at_infinity(cu.homogeneous, pt[0], pt[1]);
      std::printf("%d\n", modified_tjurina(germ));
      return 0;
    });
  });

  // ---- eta ----
  auto* eta = app.add_subcommand("eta", "cofactor/curl ratio vector at a point");
  eta->fallthrough();
  std::string eta_p, eta_q, eta_point;
  int eta_d = 0;
  std::vector<std::string> eta_curves;
  eta->add_option("--omega-p", eta_p, "P of omega")->required();
  eta->add_option("--omega-q", eta_q, "Q of omega")->required();
  eta->add_option("--degree", eta_d, "degree bound d of omega")->required();
  eta->add_option("--curve", eta_curves, "integral curve (repeatable, ordered)")
      ->required();
  eta->add_option("--point", eta_point, "point x,y or x,y,z")->required();
  eta->callback([&] {
    rc = guarded([&] {
      FieldPtr ctx = make_context(g);
      DifferentialForm om = parse_form(eta_p, eta_q, eta_d, ctx);
      std::vector<Polynomial> curves;
      for (const auto& c : eta_curves) curves.push_back(parse_polynomial(c, ctx, 2));
      auto pt = parse_point(eta_point, ctx);
      if (pt.size() == 2) pt.push_back(ctx->one());
      RatioVector v = eta_at_point(om, curves, pt);
      std::printf("%s\n", v.str().c_str());
      return 0;
    });
  });

  // ---- certify ----
  auto* certify = app.add_subcommand("certify",
                                     "exact vanishing combination of cofactors and curl");
  certify->fallthrough();
  std::string cert_p, cert_q;
  int cert_d = 0;
  std::vector<std::string> cert_curves;
  certify->add_option("--omega-p", cert_p, "P of omega")->required();
  certify->add_option("--omega-q", cert_q, "Q of omega")->required();
  certify->add_option("--degree", cert_d, "degree bound d of omega")->required();
  certify->add_option("--curve", cert_curves, "integral curve (repeatable, ordered)")
      ->required();
  certify->callback([&] {
    rc = guarded([&] {
      FieldPtr ctx = make_context(g);
      DifferentialForm om = parse_form(cert_p, cert_q, cert_d, ctx);
      std::vector<Polynomial> curves;
      for (const auto& c : cert_curves) curves.push_back(parse_polynomial(c, ctx, 2));
      auto cert = certificate_search(om, curves);
      if (!cert) throw MathError("no vanishing combination of cofactors and curl");
      std::printf("%s\n", cert->str().c_str());
      if (!g.quiet)
        std::printf("kind %s\n", cert->kind == CertificateKind::IntegratingFactor
                                     ? "integrating-factor"
                                     : "first-integral");
      return 0;
    });
  });

  // ---- focal ----
  auto* focal = app.add_subcommand("focal", "focal values at an equilibrium");
  focal->fallthrough();
  std::string foc_p, foc_q, foc_point;
  int foc_d = 0, foc_order = 10;
  std::string foc_gauge = "x";
  focal->add_option("--omega-p", foc_p, "P of omega")->required();
  focal->add_option("--omega-q", foc_q, "Q of omega")->required();
  focal->add_option("--degree", foc_d, "degree bound d of omega")->required();
  focal->add_option("--point", foc_point, "equilibrium x,y (default: the unique one)");
  focal->add_option("--order", foc_order, "number of focal values")
      ->capture_default_str();
  focal->add_option("--gauge", foc_gauge, "even-degree gauge: x or y")
      ->check(CLI::IsMember({"x", "y"}))
      ->capture_default_str();
  focal->callback([&] {
    rc = guarded([&] {
      FieldPtr ctx = make_context(g);
      DifferentialForm om = parse_form(foc_p, foc_q, foc_d, ctx);
      auto [x0, y0] = pick_equilibrium(om, foc_point, ctx);
      NormalForm nf = normalize_with_retry(om, x0, y0, g.quiet, nullptr);
      EvenGauge gauge = foc_gauge == "x" ? EvenGauge::ZeroXCoeff : EvenGauge::ZeroYCoeff;
      FocalSequence fs = focal_values(nf, foc_order, gauge);
      for (std::size_t j = 0; j < fs.s.size(); ++j)
        std::printf("s%zu %s\n", j + 1, fs.s[j].str().c_str());
      return 0;
    });
  });

  // ---- tangent-rank ----
  auto* tangent = app.add_subcommand(
      "tangent-rank", "rank of the focal Jacobian in the default ambient");
  tangent->fallthrough();
  std::string tan_p, tan_q, tan_point;
  int tan_d = 0, tan_order = 10;
  tangent->add_option("--omega-p", tan_p, "P of omega")->required();
  tangent->add_option("--omega-q", tan_q, "Q of omega")->required();
  tangent->add_option("--degree", tan_d, "degree bound d of omega")->required();
  tangent->add_option("--point", tan_point, "equilibrium x,y (default: the unique one)");
  tangent->add_option("--order", tan_order, "number of focal values")
      ->capture_default_str();
  tangent->callback([&] {
    rc = guarded([&] {
      FieldPtr ctx = make_context(g);
      if (ctx->kind() == FieldKind::Rationals)
        throw ConfigError("tangent-rank needs a finite field (--field Fp)");
      DifferentialForm om = parse_form(tan_p, tan_q, tan_d, ctx);
      auto [x0, y0] = pick_equilibrium(om, tan_point, ctx);
      NormalForm nf = normalize_with_retry(om, x0, y0, g.quiet, nullptr);
      const FieldPtr& base = nf.p.context();
      auto dirs = default_ambient(base, tan_d);
      std::vector<FieldElement> theta0(dirs.size(), base->zero());
      FocalJacobian J = focal_jacobian(nf, dirs, theta0, tan_order);
      std::printf("ambient %zu\nrank %d\ntangent %zu\n", dirs.size(), J.rank,
                  dirs.size() - static_cast<std::size_t>(J.rank));
      return 0;
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message or the help text
    return code == 0 ? 0 : 2;
  }
  return rc;
}
