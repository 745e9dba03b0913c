#include "darboux/constructions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

#include "darboux/errors.hpp"
#include "darboux/eta.hpp"
#include "darboux/focal.hpp"
#include "darboux/inverse.hpp"
#include "darboux/local.hpp"
#include "darboux/parse.hpp"
#include "fixtures_data.hpp"

namespace darboux {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

constexpr const char* kConventions =
    "exact arithmetic; local invariants at the recorded prime; "
    "even-degree gauge: zero x^k coefficient in f_k";

// ---------------------------------------------------------------------------
// Document model
// ---------------------------------------------------------------------------

struct PointSpec {
  std::string label;
  bool at_infinity = false;
  std::vector<std::string> coords;  // 2 literals (affine) or 3 (projective)
  std::string declared_type;
};

struct FocalSpec {
  std::vector<std::string> equilibrium;  // (x, y) literals
  bool extension = false;
  int order = 10;
};

struct ExtensionSpec {
  std::string P, Q;
  int d = 0;
  std::vector<std::pair<std::string, std::string>> curves;
};

struct Document {
  std::string id;
  std::string field = "Q";
  long prime = 0;
  int degree = 0;
  bool has_form = false;
  std::string form_P, form_Q;
  int form_d = 0;
  std::vector<std::pair<std::string, std::string>> curves;
  std::vector<PointSpec> points;
  std::vector<std::string> checks;

  std::vector<std::pair<std::string, std::vector<std::string>>> groups;
  std::vector<std::string> union_names;
  std::vector<std::string> certificate_curves;
  std::vector<std::string> eta_curves;
  std::vector<std::string> genericity_points;
  int genericity_degree = 0;
  std::string rigidity_curve;
  std::optional<FocalSpec> focal;
  bool has_jacobian = false;
  std::optional<ExtensionSpec> extension;
  std::vector<std::string> incidence_curves;

  json expected = json::object();
  FixtureMeta meta;
};

void require_keys(const ordered& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

std::string need_string(const ordered& o, const char* key, const std::string& where) {
  if (!o.contains(key) || !o.at(key).is_string())
    throw ConfigError(where + " needs string key '" + std::string(key) + "'");
  return o.at(key).get<std::string>();
}

long need_int(const ordered& o, const char* key, const std::string& where) {
  if (!o.contains(key) || !o.at(key).is_number_integer())
    throw ConfigError(where + " needs integer key '" + std::string(key) + "'");
  return o.at(key).get<long>();
}

std::vector<std::string> string_list(const ordered& arr, const std::string& where) {
  if (!arr.is_array()) throw ConfigError(where + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw ConfigError(where + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

const std::set<std::string> kKnownChecks = {
    "integral_curves", "union_degree",   "square_free",
    "no_infinity_component", "deg_X",    "linkage",
    "local",           "local_crosscheck", "delta",
    "dim_V",           "dimension_formula", "eta",
    "eta_infinity",    "certificate",    "genericity",
    "rigidity",        "incidence",      "extension_certificate",
    "extension_equilibria"};

Document parse_document(const std::string& text) {
  ordered doc;
  try {
    doc = ordered::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  require_keys(doc,
               {"id", "field", "prime", "degree", "form", "curves", "points",
                "checks", "options", "expected", "meta"},
               "document");
  Document d;
  if (doc.contains("id")) d.id = need_string(doc, "id", "document");
  if (doc.contains("field")) d.field = need_string(doc, "field", "document");
  if (d.field != "Q" && d.field != "Fp")
    throw ConfigError("field must be \"Q\" or \"Fp\"");
  if (doc.contains("prime")) d.prime = need_int(doc, "prime", "document");
  if (d.field == "Fp" && d.prime < 2) throw ConfigError("field Fp needs a prime");
  if (doc.contains("degree")) d.degree = int(need_int(doc, "degree", "document"));

  if (doc.contains("form")) {
    const auto& f = doc.at("form");
    require_keys(f, {"P", "Q", "d"}, "form");
    d.has_form = true;
    d.form_P = need_string(f, "P", "form");
    d.form_Q = need_string(f, "Q", "form");
    d.form_d = int(need_int(f, "d", "form"));
  }

  if (doc.contains("curves")) {
    const auto& cs = doc.at("curves");
    if (!cs.is_object()) throw ConfigError("curves must be an object");
    for (auto it = cs.begin(); it != cs.end(); ++it) {
      if (!it.value().is_string()) throw ConfigError("curve '" + it.key() + "' must be a string");
      d.curves.emplace_back(it.key(), it.value().get<std::string>());
    }
  }

  if (doc.contains("points")) {
    const auto& ps = doc.at("points");
    if (!ps.is_array()) throw ConfigError("points must be an array");
    for (const auto& p : ps) {
      require_keys(p, {"label", "chart", "coords", "declared_type"}, "point");
      PointSpec spec;
      spec.label = need_string(p, "label", "point");
      std::string chart = need_string(p, "chart", "point");
      if (chart != "affine" && chart != "infinity")
        throw ConfigError("point chart must be \"affine\" or \"infinity\"");
      spec.at_infinity = chart == "infinity";
      spec.coords = string_list(p.at("coords"), "point coords");
      if (spec.coords.size() != (spec.at_infinity ? 3u : 2u))
        throw ConfigError("point '" + spec.label + "' has wrong coordinate count");
      if (p.contains("declared_type"))
        spec.declared_type = need_string(p, "declared_type", "point");
      d.points.push_back(std::move(spec));
    }
  }

  if (doc.contains("checks")) {
    d.checks = string_list(doc.at("checks"), "checks");
    for (const auto& c : d.checks)
      if (!kKnownChecks.count(c)) throw ConfigError("unknown check '" + c + "'");
  }

  if (doc.contains("options")) {
    const auto& o = doc.at("options");
    require_keys(o,
                 {"groups", "union", "certificate", "eta_curves", "genericity",
                  "rigidity", "focal", "jacobian", "extension", "incidence"},
                 "options");
    if (o.contains("groups")) {
      const auto& gs = o.at("groups");
      if (!gs.is_object()) throw ConfigError("options.groups must be an object");
      for (auto it = gs.begin(); it != gs.end(); ++it)
        d.groups.emplace_back(it.key(), string_list(it.value(), "group members"));
    }
    if (o.contains("union")) d.union_names = string_list(o.at("union"), "options.union");
    if (o.contains("certificate")) {
      const auto& c = o.at("certificate");
      require_keys(c, {"curves"}, "options.certificate");
      d.certificate_curves = string_list(c.at("curves"), "certificate curves");
    }
    if (o.contains("eta_curves"))
      d.eta_curves = string_list(o.at("eta_curves"), "options.eta_curves");
    if (o.contains("genericity")) {
      const auto& g = o.at("genericity");
      require_keys(g, {"points", "degree"}, "options.genericity");
      d.genericity_points = string_list(g.at("points"), "genericity points");
      d.genericity_degree = int(need_int(g, "degree", "options.genericity"));
    }
    if (o.contains("rigidity")) {
      const auto& r = o.at("rigidity");
      require_keys(r, {"curve"}, "options.rigidity");
      d.rigidity_curve = need_string(r, "curve", "options.rigidity");
    }
    if (o.contains("focal")) {
      const auto& f = o.at("focal");
      require_keys(f, {"equilibrium", "extension", "order"}, "options.focal");
      FocalSpec spec;
      spec.equilibrium = string_list(f.at("equilibrium"), "focal equilibrium");
      if (spec.equilibrium.size() != 2)
        throw ConfigError("focal equilibrium needs two coordinates");
      if (f.contains("extension")) {
        if (!f.at("extension").is_boolean())
          throw ConfigError("focal.extension must be a boolean");
        spec.extension = f.at("extension").get<bool>();
      }
      if (f.contains("order")) spec.order = int(need_int(f, "order", "options.focal"));
      d.focal = std::move(spec);
    }
    if (o.contains("jacobian")) {
      const auto& j = o.at("jacobian");
      require_keys(j, {"ambient"}, "options.jacobian");
      if (need_string(j, "ambient", "options.jacobian") != "default")
        throw ConfigError("options.jacobian.ambient must be \"default\"");
      d.has_jacobian = true;
    }
    if (o.contains("extension")) {
      const auto& e = o.at("extension");
      require_keys(e, {"P", "Q", "d", "curves"}, "options.extension");
      ExtensionSpec spec;
      spec.P = need_string(e, "P", "options.extension");
      spec.Q = need_string(e, "Q", "options.extension");
      spec.d = int(need_int(e, "d", "options.extension"));
      const auto& cs = e.at("curves");
      if (!cs.is_object()) throw ConfigError("extension curves must be an object");
      for (auto it = cs.begin(); it != cs.end(); ++it)
        spec.curves.emplace_back(it.key(), it.value().get<std::string>());
      d.extension = std::move(spec);
    }
    if (o.contains("incidence")) {
      const auto& i = o.at("incidence");
      require_keys(i, {"curves"}, "options.incidence");
      d.incidence_curves = string_list(i.at("curves"), "incidence curves");
    }
  }

  if (doc.contains("expected")) {
    d.expected = json::parse(doc.at("expected").dump());
    if (!d.expected.is_object()) throw ConfigError("expected must be an object");
  }
  if (doc.contains("meta")) {
    const auto& m = doc.at("meta");
    require_keys(m, {"family", "role"}, "meta");
    d.meta.id = d.id;
    if (m.contains("family")) d.meta.family = need_string(m, "family", "meta");
    if (m.contains("role")) d.meta.role = need_string(m, "role", "meta");
  }

  // Default check list: everything the document supplies inputs for.
  if (d.checks.empty()) {
    if (d.has_form && !d.curves.empty()) d.checks.push_back("integral_curves");
    if (!d.curves.empty()) {
      d.checks.insert(d.checks.end(), {"union_degree", "square_free",
                                       "no_infinity_component", "deg_X", "linkage"});
      if (!d.points.empty() && d.prime >= 2)
        d.checks.insert(d.checks.end(), {"local", "local_crosscheck"});
      if (d.degree > 0)
        d.checks.insert(d.checks.end(), {"delta", "dim_V", "dimension_formula"});
    }
    if (d.has_form && !d.points.empty() && !d.curves.empty()) d.checks.push_back("eta");
    if (d.has_form && !d.curves.empty()) d.checks.push_back("certificate");
    if (!d.genericity_points.empty()) d.checks.push_back("genericity");
    if (!d.rigidity_curve.empty()) d.checks.push_back("rigidity");
    if (!d.incidence_curves.empty()) d.checks.push_back("incidence");
    if (d.extension)
      d.checks.insert(d.checks.end(), {"extension_certificate", "extension_equilibria"});
  }

  // Validate name and label references.
  {
    std::set<std::string> names;
    for (const auto& [name, text] : d.curves)
      if (!names.insert(name).second)
        throw ConfigError("duplicate curve name '" + name + "'");
    for (const auto& [name, members] : d.groups) {
      for (const auto& m : members)
        if (!names.count(m))
          throw ConfigError("group '" + name + "' references unknown name '" + m + "'");
      if (!names.insert(name).second)
        throw ConfigError("duplicate group name '" + name + "'");
    }
    auto check_names = [&](const std::vector<std::string>& list, const char* where) {
      for (const auto& n : list)
        if (!names.count(n))
          throw ConfigError(std::string(where) + " references unknown name '" + n + "'");
    };
    check_names(d.union_names, "options.union");
    check_names(d.certificate_curves, "options.certificate");
    check_names(d.eta_curves, "options.eta_curves");
    check_names(d.incidence_curves, "options.incidence");
    if (!d.rigidity_curve.empty() && !names.count(d.rigidity_curve))
      throw ConfigError("options.rigidity references unknown name '" + d.rigidity_curve + "'");
    std::set<std::string> labels;
    for (const auto& p : d.points)
      if (!labels.insert(p.label).second)
        throw ConfigError("duplicate point label '" + p.label + "'");
    for (const auto& l : d.genericity_points)
      if (!labels.count(l))
        throw ConfigError("options.genericity references unknown label '" + l + "'");
  }

  // Validate that requested checks have their inputs.
  for (const auto& c : d.checks) {
    auto need = [&](bool ok, const char* what) {
      if (!ok) throw ConfigError("check '" + c + "' requires " + std::string(what));
    };
    if (c == "integral_curves" || c == "eta" || c == "certificate" ||
        c == "eta_infinity" || c == "rigidity")
      need(d.has_form, "a form");
    if (c != "extension_certificate" && c != "extension_equilibria")
      need(!d.curves.empty(), "curves");
    if (c == "delta" || c == "dim_V" || c == "dimension_formula")
      need(d.degree > 0, "a positive degree");
    if (c == "local" || c == "local_crosscheck") need(d.prime >= 2, "a prime");
    if (c == "local" || c == "local_crosscheck" || c == "eta")
      need(!d.points.empty(), "points");
    if (c == "genericity") need(!d.genericity_points.empty(), "options.genericity");
    if (c == "rigidity") need(!d.rigidity_curve.empty(), "options.rigidity");
    if (c == "incidence") need(!d.incidence_curves.empty(), "options.incidence");
    if (c == "extension_certificate" || c == "extension_equilibria")
      need(bool(d.extension), "options.extension");
  }
  return d;
}

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

struct Engine {
  const Document& doc;
  const VerifyOptions& opts;

  FieldPtr ctx;  // document field (global checks)
  std::map<std::string, Polynomial> named;  // base curves and groups

  std::optional<DifferentialForm> form;
  std::optional<Curve> union_curve;
  std::optional<LinkageDegrees> link;
  std::optional<KernelSpace> kernel;

  FieldPtr pctx;  // recorded prime (local + focal blocks)
  std::optional<Polynomial> union_homog_p;
  std::map<std::string, LocalInvariants> local_results;  // label -> invariants

  std::optional<NormalForm> focal_nf;
  bool focal_used_extension = false;

  std::vector<CheckResult> rows;
  json jrows = json::array();
  int worst = 0;  // 0 pass, 1 inconclusive, 2 fail

  Engine(const Document& d, const VerifyOptions& o) : doc(d), opts(o) {
    ctx = doc.field == "Q" ? FieldContext::rationals() : FieldContext::prime(doc.prime);
    for (const auto& [name, text] : doc.curves) {
      if (named.count(name)) throw ConfigError("duplicate curve name '" + name + "'");
      named.emplace(name, parse_polynomial(text, ctx, 2));
    }
    for (const auto& [name, members] : doc.groups) {
      if (named.count(name)) throw ConfigError("duplicate group name '" + name + "'");
      Polynomial prod = Polynomial::constant(ctx, 2, ctx->one());
      for (const auto& m : members) prod = prod * resolve(m);
      named.emplace(name, std::move(prod));
    }
    if (doc.has_form)
      form = DifferentialForm(parse_polynomial(doc.form_P, ctx, 2),
                              parse_polynomial(doc.form_Q, ctx, 2), doc.form_d);
    if (doc.prime >= 2) pctx = FieldContext::prime(doc.prime);
  }

  const Polynomial& resolve(const std::string& name) const {
    auto it = named.find(name);
    if (it == named.end()) throw ConfigError("unknown curve or group '" + name + "'");
    return it->second;
  }

  std::vector<std::string> union_list() const {
    if (!doc.union_names.empty()) return doc.union_names;
    std::vector<std::string> all;
    for (const auto& [name, text] : doc.curves) all.push_back(name);
    return all;
  }

  const Curve& get_union() {
    if (!union_curve) {
      Polynomial prod = Polynomial::constant(ctx, 2, ctx->one());
      for (const auto& n : union_list()) prod = prod * resolve(n);
      union_curve = Curve::from_affine(prod);
    }
    return *union_curve;
  }

  const LinkageDegrees& get_linkage() {
    if (!link) link = deg_X(get_union());
    return *link;
  }

  const KernelSpace& get_kernel() {
    if (!kernel) kernel = kernel_space(get_union(), doc.degree);
    return *kernel;
  }

  const Polynomial& get_union_homog_p() {
    if (!union_homog_p) {
      Polynomial prod = Polynomial::constant(pctx, 2, pctx->one());
      std::map<std::string, Polynomial> base_p;
      for (const auto& [name, text] : doc.curves)
        base_p.emplace(name, parse_polynomial(text, pctx, 2));
      std::map<std::string, Polynomial> group_p;
      for (const auto& [name, members] : doc.groups) {
        Polynomial g = Polynomial::constant(pctx, 2, pctx->one());
        for (const auto& m : members) {
          auto itb = base_p.find(m);
          g = g * (itb != base_p.end() ? itb->second : group_p.at(m));
        }
        group_p.emplace(name, std::move(g));
      }
      for (const auto& n : union_list()) {
        auto it = base_p.find(n);
        prod = prod * (it != base_p.end() ? it->second : group_p.at(n));
      }
      union_homog_p = Curve::from_affine(prod).homogeneous;
    }
    return *union_homog_p;
  }

  std::vector<FieldElement> projective_point(const PointSpec& p, const FieldPtr& c) const {
    std::vector<FieldElement> out;
    for (const auto& s : p.coords) out.push_back(c->parse_literal(s));
    if (!p.at_infinity) out.push_back(c->one());
    return out;
  }

  const PointSpec& point_by_label(const std::string& label) const {
    for (const auto& p : doc.points)
      if (p.label == label) return p;
    throw ConfigError("unknown point label '" + label + "'");
  }

  json expected_for(const std::string& check) const {
    const json& e = doc.expected;
    auto get = [&](const char* k) { return e.contains(k) ? e.at(k) : json(); };
    if (check == "integral_curves") return get("integral_curves");
    if (check == "union_degree") return get("e");
    if (check == "square_free") return get("square_free");
    if (check == "no_infinity_component") return get("no_infinity_component");
    if (check == "deg_X" || check == "local_crosscheck") return get("deg_X");
    if (check == "linkage") {
      if (!e.contains("deg_X") || !e.contains("deg_Y")) return json();
      return json{{"deg_X", e.at("deg_X")}, {"deg_Y", e.at("deg_Y")}};
    }
    if (check == "delta") return get("delta");
    if (check == "dim_V") return get("dim_V");
    if (check == "dimension_formula") return get("dimension_formula");
    if (check == "eta_infinity") return get("eta_infinity");
    if (check == "certificate") return get("certificate");
    if (check == "genericity") return get("genericity");
    if (check == "rigidity") return get("rigidity");
    if (check == "incidence") return get("incidence");
    if (check == "extension_certificate") return get("extension_certificate");
    if (check == "extension_equilibria") return get("extension_equilibria");
    if (check == "focal_equilibria") return get("focal_equilibria");
    if (check.rfind("local:", 0) == 0) {
      std::string label = check.substr(6);
      if (e.contains("local") && e.at("local").contains(label))
        return e.at("local").at(label);
      return json();
    }
    if (check.rfind("eta:", 0) == 0) {
      std::string label = check.substr(4);
      if (e.contains("eta") && e.at("eta").contains(label)) return e.at("eta").at(label);
      return json();
    }
    if (check == "focal_vanishing") {
      if (!doc.focal) return json();
      json j;
      j["equilibrium"] = doc.focal->equilibrium;
      j["extension"] = doc.focal->extension;
      j["s"] = e.contains("focal_s") ? e.at("focal_s") : json();
      return j;
    }
    if (check == "jacobian_rank") return get("jacobian");
    return json();
  }

  void emit(const std::string& name, const json& expected, const json& computed,
            const std::string& status) {
    rows.push_back({name, expected.dump(), computed.dump(), status});
    jrows.push_back(
        {{"name", name}, {"expected", expected}, {"computed", computed}, {"status", status}});
    int level = status == "fail" ? 2 : status == "inconclusive" ? 1 : 0;
    worst = std::max(worst, level);
  }

  // Runs `body` (returning the computed value); compares against the
  // expectation unless `body` already decided via `forced_status`.
  template <class Fn>
  void run(const std::string& name, Fn&& body) {
    json expected = expected_for(name);
    try {
      std::optional<std::string> forced;
      json computed = body(forced);
      std::string status;
      if (forced)
        status = *forced;
      else if (expected.is_null())
        status = "pass";
      else
        status = computed == expected ? "pass" : "fail";
      emit(name, expected, computed, status);
    } catch (const MathError&) {
      auto kind = inconclusive_kind();
      if (kind)
        emit(name, expected, json{{"error", *kind}}, "inconclusive");
      else {
        try {
          throw;
        } catch (const MathError& e) {
          emit(name, expected, json{{"error", e.what()}}, "fail");
        }
      }
    }
  }

  // ------------------------------ checks ------------------------------

  void check_integral_curves() {
    run("integral_curves", [&](std::optional<std::string>&) -> json {
      bool all = true;
      std::vector<Polynomial> list;
      for (const auto& [name, text] : doc.curves) {
        list.push_back(named.at(name));
        all = all && bool(is_integral_curve(named.at(name), *form));
      }
      all = all && union_integral_curve_check(list, *form);
      return all;
    });
  }

  void check_union_degree() {
    run("union_degree", [&](std::optional<std::string>&) -> json {
      return get_union().degree;
    });
  }

  void check_square_free() {
    // NotFinite here is the definitive "no" rather than an inconclusive stop.
    json expected = expected_for("square_free");
    try {
      get_linkage();
      bool ok = expected.is_null() || expected == json(true);
      emit("square_free", expected, true, ok ? "pass" : "fail");
    } catch (const NotFinite&) {
      bool ok = !expected.is_null() && expected == json(false);
      emit("square_free", expected, false, ok ? "pass" : "fail");
    } catch (const MathError& e) {
      emit("square_free", expected, json{{"error", e.what()}}, "fail");
    }
  }

  void check_no_infinity_component() {
    run("no_infinity_component", [&](std::optional<std::string>&) -> json {
      return !get_union().has_infinity_component();
    });
  }

  void check_deg_X() {
    run("deg_X", [&](std::optional<std::string>&) -> json { return get_linkage().deg_X; });
  }

  void check_linkage() {
    run("linkage", [&](std::optional<std::string>& forced) -> json {
      const auto& lk = get_linkage();
      int e = get_union().degree;
      if (lk.deg_X + lk.deg_Y != (e - 1) * (e - 1)) forced = "fail";
      return json{{"deg_X", lk.deg_X}, {"deg_Y", lk.deg_Y}};
    });
  }

  void check_local(const PointSpec& p) {
    run("local:" + p.label, [&](std::optional<std::string>&) -> json {
      const Polynomial& H = get_union_homog_p();
      auto coords = projective_point(p, pctx);
      if (!H.evaluate(coords).is_zero())
        return json{{"error", "point not on the curve"}, {"on_curve", false}};
      MarkedPoint mp{p.label, coords, p.declared_type};
      LocalInvariants li = local_invariants(H, mp);
      local_results.emplace(p.label, li);
      if (p.at_infinity) return json::array({*li.t_z, *li.intersection_with_line});
      return json::array({li.milnor, li.tjurina});
    });
  }

  void check_local_crosscheck() {
    run("local_crosscheck", [&](std::optional<std::string>&) -> json {
      int total = 0;
      for (const auto& p : doc.points) {
        auto it = local_results.find(p.label);
        if (it == local_results.end())
          throw MathError("local invariants missing for point '" + p.label + "'");
        total += p.at_infinity ? *it->second.t_z : it->second.tjurina;
      }
      return total;
    });
  }

  void check_delta() {
    run("delta", [&](std::optional<std::string>&) -> json {
      return expected_dimension(doc.degree, get_union().degree, get_linkage().deg_X);
    });
  }

  void check_dim_V() {
    run("dim_V", [&](std::optional<std::string>&) -> json { return get_kernel().dim; });
  }

  void check_dimension_formula() {
    run("dimension_formula", [&](std::optional<std::string>&) -> json {
      return dimension_formula_check(get_union(), doc.degree);
    });
  }

  std::vector<Polynomial> eta_curve_list() const {
    std::vector<std::string> names =
        !doc.eta_curves.empty() ? doc.eta_curves : doc.certificate_curves;
    if (names.empty())
      for (const auto& [name, text] : doc.curves) names.push_back(name);
    std::vector<Polynomial> out;
    for (const auto& n : names) out.push_back(resolve(n));
    return out;
  }

  // Projective comparison; a degenerate computed vector is acceptable.
  static bool eta_matches(const RatioVector& got, const json& expected_row,
                          const FieldPtr& c) {
    if (got.degenerate) return true;
    std::vector<FieldElement> ents;
    for (const auto& v : expected_row) ents.push_back(c->from_int(v.get<long long>()));
    return got == RatioVector::of(std::move(ents));
  }

  static json ratio_json(const RatioVector& v) {
    json arr = json::array();
    for (const auto& e : v.entries) arr.push_back(e.str());
    return arr;
  }

  void check_eta(const PointSpec& p) {
    run("eta:" + p.label, [&](std::optional<std::string>& forced) -> json {
      RatioVector got = eta_at_point(*form, eta_curve_list(), projective_point(p, ctx));
      json expected = expected_for("eta:" + p.label);
      if (!expected.is_null())
        forced = eta_matches(got, expected, ctx) ? "pass" : "fail";
      return ratio_json(got);
    });
  }

  void check_eta_infinity() {
    run("eta_infinity", [&](std::optional<std::string>& forced) -> json {
      RatioVector got = eta_at_infinity(*form, eta_curve_list());
      json expected = expected_for("eta_infinity");
      if (!expected.is_null())
        forced = eta_matches(got, expected, ctx) ? "pass" : "fail";
      return ratio_json(got);
    });
  }

  void check_certificate() {
    run("certificate", [&](std::optional<std::string>&) -> json {
      std::vector<Polynomial> curves;
      for (const auto& n : doc.certificate_curves) curves.push_back(resolve(n));
      if (curves.empty())
        for (const auto& [name, text] : doc.curves) curves.push_back(named.at(name));
      auto cert = certificate_search(*form, curves);
      if (!cert) return json{{"error", "no vanishing combination"}};
      if (!cert->residual.is_zero())
        throw MathError("certificate residual is nonzero");
      return cert->str();
    });
  }

  void check_genericity() {
    run("genericity", [&](std::optional<std::string>&) -> json {
      std::vector<std::vector<FieldElement>> pts;
      for (const auto& label : doc.genericity_points)
        pts.push_back(projective_point(point_by_label(label), ctx));
      return genericity_points_condition(pts, doc.genericity_degree);
    });
  }

  void check_rigidity() {
    run("rigidity", [&](std::optional<std::string>&) -> json {
      const Polynomial& c = resolve(doc.rigidity_curve);
      auto cof = is_integral_curve(c, *form);
      if (!cof) return json{{"error", "not an integral curve"}};
      return curve_rigidity(*form, Curve::from_affine(c), *cof);
    });
  }

  void check_incidence() {
    run("incidence", [&](std::optional<std::string>& forced) -> json {
      std::vector<Polynomial> curves;
      for (const auto& n : doc.incidence_curves) curves.push_back(resolve(n));
      const DifferentialForm* om = form ? &*form : nullptr;
      InfinityIncidence inc = infinity_incidence_relation(curves, om);
      json matrix = json::array();
      for (const auto& row : inc.matrix) matrix.push_back(row);
      json kernel = json::array();
      for (const auto& vec : inc.kernel) {
        json v = json::array();
        for (const auto& e : vec) v.push_back(e.str());
        kernel.push_back(v);
      }
      json computed{{"matrix", matrix}, {"kernel", kernel}, {"verified", inc.verified}};
      json expected = expected_for("incidence");
      if (!expected.is_null()) {
        bool ok = expected.contains("matrix") && matrix == expected.at("matrix") &&
                  expected.contains("kernel") && kernel == expected.at("kernel") &&
                  (om == nullptr || inc.verified);
        forced = ok ? "pass" : "fail";
      }
      return computed;
    });
  }

  void check_extension_certificate() {
    run("extension_certificate", [&](std::optional<std::string>&) -> json {
      const auto& ext = *doc.extension;
      DifferentialForm om3(parse_polynomial(ext.P, ctx, 2),
                           parse_polynomial(ext.Q, ctx, 2), ext.d);
      std::vector<Polynomial> curves;
      for (const auto& [name, text] : ext.curves) {
        Polynomial c = parse_polynomial(text, ctx, 2);
        if (!is_integral_curve(c, om3))
          return json{{"error", "'" + name + "' is not an integral curve"}};
        curves.push_back(std::move(c));
      }
      auto cert = certificate_search(om3, curves);
      if (!cert) return json{{"error", "no vanishing combination"}};
      return cert->str();
    });
  }

  void check_extension_equilibria() {
    run("extension_equilibria", [&](std::optional<std::string>&) -> json {
      const auto& ext = *doc.extension;
      DifferentialForm om3(parse_polynomial(ext.P, ctx, 2),
                           parse_polynomial(ext.Q, ctx, 2), ext.d);
      try {
        auto eqs = equilibria(om3);
        return json("zero-dimensional (" + std::to_string(eqs.size()) + " points)");
      } catch (const PositiveDimensionalZeroSet&) {
        return json("PositiveDimensionalZeroSet");
      }
    });
  }

  // ------------------------------ focal block ------------------------------

  DifferentialForm prime_form() const {
    return DifferentialForm(parse_polynomial(doc.form_P, pctx, 2),
                            parse_polynomial(doc.form_Q, pctx, 2), doc.form_d);
  }

  const NormalForm& get_normal_form() {
    if (!focal_nf) {
      DifferentialForm omp = prime_form();
      FieldElement x0 = pctx->parse_literal(doc.focal->equilibrium[0]);
      FieldElement y0 = pctx->parse_literal(doc.focal->equilibrium[1]);
      try {
        focal_nf = normalize_at(omp, x0, y0);
        focal_used_extension = false;
      } catch (const SquareRootUnavailable&) {
        FieldPtr ext = FieldContext::extension(doc.prime, 2);
        DifferentialForm om2(omp.P.map_context(ext), omp.Q.map_context(ext), omp.d);
        focal_nf = normalize_at(om2, x0.lift_to(ext), y0.lift_to(ext));
        focal_used_extension = true;
      }
    }
    return *focal_nf;
  }

  void check_focal_equilibria() {
    run("focal_equilibria", [&](std::optional<std::string>&) -> json {
      return int(equilibria(prime_form()).size());
    });
  }

  void check_focal_vanishing() {
    run("focal_vanishing", [&](std::optional<std::string>& forced) -> json {
      DifferentialForm omp = prime_form();
      FieldElement x0 = pctx->parse_literal(doc.focal->equilibrium[0]);
      FieldElement y0 = pctx->parse_literal(doc.focal->equilibrium[1]);
      bool found = false;
      for (const auto& [ex, ey] : equilibria(omp))
        if (ex == x0 && ey == y0) found = true;
      if (!found) {
        forced = "fail";
        return json{{"error", "recorded equilibrium is not a zero of the form"}};
      }
      const NormalForm& nf = get_normal_form();
      FocalSequence fs = focal_values(nf, doc.focal->order);
      json svals = json::array();
      for (const auto& s : fs.s) svals.push_back(s.str());
      json computed;
      computed["equilibrium"] = doc.focal->equilibrium;
      computed["extension"] = focal_used_extension;
      computed["s"] = svals;
      return computed;
    });
  }

  void check_jacobian_rank() {
    run("jacobian_rank", [&](std::optional<std::string>&) -> json {
      const NormalForm& nf = get_normal_form();
      const FieldPtr& base = nf.p.context();
      auto dirs = default_ambient(base, doc.degree);
      std::vector<FieldElement> theta0(dirs.size(), base->zero());
      FocalJacobian J = focal_jacobian(nf, dirs, theta0, doc.focal->order);
      return json{{"ambient", int(dirs.size())},
                  {"rank", J.rank},
                  {"tangent_dimension", int(dirs.size()) - J.rank}};
    });
  }

  // ------------------------------ driver ------------------------------

  VerificationReport execute() {
    std::vector<std::string> plan = doc.checks;
    if (opts.focal && doc.focal && doc.has_form)
      plan.insert(plan.end(), {"focal_equilibria", "focal_vanishing"});
    if (opts.tangent && doc.has_jacobian && doc.focal && doc.has_form)
      plan.push_back("jacobian_rank");

    for (const auto& c : plan) {
      if (c == "integral_curves") check_integral_curves();
      else if (c == "union_degree") check_union_degree();
      else if (c == "square_free") check_square_free();
      else if (c == "no_infinity_component") check_no_infinity_component();
      else if (c == "deg_X") check_deg_X();
      else if (c == "linkage") check_linkage();
      else if (c == "local")
        for (const auto& p : doc.points) check_local(p);
      else if (c == "local_crosscheck") check_local_crosscheck();
      else if (c == "delta") check_delta();
      else if (c == "dim_V") check_dim_V();
      else if (c == "dimension_formula") check_dimension_formula();
      else if (c == "eta") {
        for (const auto& p : doc.points)
          if (!expected_for("eta:" + p.label).is_null() || doc.expected.empty())
            check_eta(p);
      } else if (c == "eta_infinity") check_eta_infinity();
      else if (c == "certificate") check_certificate();
      else if (c == "genericity") check_genericity();
      else if (c == "rigidity") check_rigidity();
      else if (c == "incidence") check_incidence();
      else if (c == "extension_certificate") check_extension_certificate();
      else if (c == "extension_equilibria") check_extension_equilibria();
      else if (c == "focal_equilibria") check_focal_equilibria();
      else if (c == "focal_vanishing") check_focal_vanishing();
      else if (c == "jacobian_rank") check_jacobian_rank();
    }

    VerificationReport rep;
    rep.fixture = doc.id;
    rep.field = doc.field;
    rep.prime = doc.prime;
    rep.conventions = kConventions;
    rep.checks = rows;
    rep.status = worst == 2 ? "fail" : worst == 1 ? "inconclusive" : "pass";

    json out;
    out["fixture"] = doc.id;
    out["environment"] =
        json{{"field", doc.field}, {"prime", doc.prime}, {"conventions", kConventions}};
    out["checks"] = jrows;
    out["status"] = rep.status;
    rep.json = out.dump(2) + "\n";
    return rep;
  }
};

}  // namespace

std::vector<FixtureMeta> list_fixtures() {
  std::vector<FixtureMeta> out;
  for (const auto& entry : detail::fixture_table()) {
    Document d = parse_document(entry.text);
    d.meta.id = d.id;
    out.push_back(d.meta);
  }
  return out;
}

std::vector<std::string> fixture_ids() {
  std::vector<std::string> out;
  for (const auto& entry : detail::fixture_table()) out.push_back(entry.id);
  return out;
}

const std::string& fixture_document(const std::string& id) {
  static const std::map<std::string, std::string> docs = [] {
    std::map<std::string, std::string> m;
    for (const auto& entry : detail::fixture_table()) m.emplace(entry.id, entry.text);
    return m;
  }();
  auto it = docs.find(id);
  if (it == docs.end()) throw ConfigError("unknown construction id '" + id + "'");
  return it->second;
}

VerificationReport verify_construction(const std::string& id,
                                       const VerifyOptions& options) {
  Document doc = parse_document(fixture_document(id));
  Engine engine(doc, options);
  return engine.execute();
}

VerificationReport run_analysis_config(const std::string& json_text,
                                       const VerifyOptions& options) {
  Document doc = parse_document(json_text);
  Engine engine(doc, options);
  return engine.execute();
}

}  // namespace darboux
