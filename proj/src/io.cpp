#include "dualdeg/io.hpp"

#include <fstream>

namespace dualdeg {

std::string point_str(Point x, int arity) {
  std::string s(arity, '0');
  for (int i = 0; i < arity; i++)
    if ((x >> i) & 1) s[i] = '1';
  return s;
}

Point point_parse(const std::string& s, int arity) {
  if ((int)s.size() != arity) throw InvalidInput("bitstring length mismatch");
  Point x = 0;
  for (int i = 0; i < arity; i++) {
    if (s[i] == '1')
      x |= Point(1) << i;
    else if (s[i] != '0')
      throw InvalidInput("bad bitstring: " + s);
  }
  return x;
}

namespace {

std::string conv_str(Convention c) {
  return c == Convention::ZeroOne ? "zero_one" : "plus_minus";
}

Convention conv_parse(const std::string& s) {
  if (s == "zero_one") return Convention::ZeroOne;
  if (s == "plus_minus") return Convention::PlusMinus;
  throw InvalidInput("bad convention: " + s);
}

}  // namespace

json fn_to_json(const PartialBoolFn& f, bool include_entries) {
  json j;
  j["arity"] = f.arity;
  j["convention"] = conv_str(f.conv);
  j["generator"] = f.generator.is_null() ? json(nullptr) : f.generator;
  if (f.generator.is_null() || include_entries) {
    json entries = json::array();
    for (Point x = 0; x < f.cube_size(); x++) {
      json e;
      e["point"] = point_str(x, f.arity);
      Val v = f.at(x);
      if (v == Val::Undef)
        e["value"] = "undef";
      else
        e["value"] = int(v);
      entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
  }
  return j;
}

PartialBoolFn fn_from_json(const json& j, int cap) {
  int arity = j.at("arity").get<int>();
  Convention conv = conv_parse(j.value("convention", "zero_one"));
  if (j.contains("generator") && !j.at("generator").is_null()) {
    const json& g = j.at("generator");
    std::string name = g.at("name").get<std::string>();
    PartialBoolFn f;
    if (name == "GAPMAJ" || name == "GAPAND") {
      PartialBoolFn inner = fn_from_json(json{{"arity", 0},
                                              {"convention", conv_str(conv)},
                                              {"generator", g.at("inner")}},
                                         cap);
      GapParams gp{g.at("n").get<long>(), rat_parse(g.at("eps").get<std::string>())};
      f = name == "GAPMAJ" ? gap_maj(inner, gp, cap) : gap_and(inner, gp, cap);
    } else if (name == "NOT") {
      f = complement(fn_from_json(json{{"arity", 0},
                                       {"convention", conv_str(conv)},
                                       {"generator", g.at("inner")}},
                                  cap));
    } else {
      f = gen_named(name, g, cap);
    }
    f.conv = conv;
    if (j.contains("entries")) {
      // explicit entries must agree with the generator
      PartialBoolFn ref = f;
      for (const auto& e : j.at("entries")) {
        Point x = point_parse(e.at("point").get<std::string>(), ref.arity);
        Val v = e.at("value").is_string() ? Val::Undef
                                          : Val(e.at("value").get<int>());
        if (ref.at(x) != v) throw InvalidInput("entries contradict the generator");
      }
    }
    return f;
  }
  std::vector<uint8_t> table(size_t(1) << arity, uint8_t(Val::Undef));
  for (const auto& e : j.at("entries")) {
    Point x = point_parse(e.at("point").get<std::string>(), arity);
    if (e.at("value").is_string()) {
      if (e.at("value").get<std::string>() != "undef")
        throw InvalidInput("bad value literal");
      table[x] = uint8_t(Val::Undef);
    } else {
      int v = e.at("value").get<int>();
      if (v != 0 && v != 1) throw InvalidInput("bad value");
      table[x] = uint8_t(v);
    }
  }
  return PartialBoolFn::explicit_fn(arity, std::move(table), conv);
}

json cubefn_to_json(const CubeFn& c, size_t max_entries) {
  if (c.support_size() > max_entries) throw TooLarge("cube function support too large");
  json j;
  j["arity"] = c.arity;
  json vals = json::object();
  for (Point x = 0; x < c.cube_size(); x++)
    if (sgn(c.at(x)) != 0) vals[point_str(x, c.arity)] = rat_str(c.at(x));
  j["values"] = std::move(vals);
  return j;
}

CubeFn cubefn_from_json(const json& j) {
  CubeFn c(j.at("arity").get<int>());
  for (const auto& [key, val] : j.at("values").items())
    c.at(point_parse(key, c.arity)) = rat_parse(val.get<std::string>());
  return c;
}

json poly_to_json(const MultilinearPoly& p) {
  json j;
  j["arity"] = p.arity;
  j["convention"] = conv_str(p.conv);
  json coeffs = json::object();
  for (const auto& [mono, c] : p.coeffs)
    coeffs[point_str(mono, p.arity)] = rat_str(c);
  j["coeffs"] = std::move(coeffs);
  j["degree"] = p.degree();
  return j;
}

MultilinearPoly poly_from_json(const json& j) {
  MultilinearPoly p;
  p.arity = j.at("arity").get<int>();
  p.conv = conv_parse(j.value("convention", "zero_one"));
  for (const auto& [key, val] : j.at("coeffs").items())
    p.set(point_parse(key, p.arity), rat_parse(val.get<std::string>()));
  return p;
}

json unipoly_to_json(const UnivariatePoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.c) coeffs.push_back(rat_str(c));
  return json{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

// Same shape as the cube-function format: a label -> "p/q" map under
// "values" (the older "mass" key still parses).
json dist_to_json(const Distribution& d) {
  json j;
  json m = json::object();
  for (size_t i = 0; i < d.size(); i++) m[d.labels[i]] = rat_str(d.mass[i]);
  j["values"] = std::move(m);
  return j;
}

Distribution dist_from_json(const json& j) {
  std::vector<std::string> labels;
  std::vector<Rational> mass;
  const json& m = j.contains("values") ? j.at("values") : j.at("mass");
  for (const auto& [key, val] : m.items()) {
    labels.push_back(key);
    mass.push_back(rat_parse(val.get<std::string>()));
  }
  return Distribution::over(std::move(labels), std::move(mass));
}

namespace {

std::string measure_str(Measure m) {
  switch (m) {
    case Measure::Approx: return "approx";
    case Measure::OneSided: return "onesided";
    default: return "threshold";
  }
}

}  // namespace

json degree_result_to_json(const DegreeResult& r) {
  json j;
  j["measure"] = measure_str(r.measure);
  if (r.eps) j["eps"] = rat_str(*r.eps);
  j["degree"] = r.degree;
  j["solver_mode"] = r.mode == SolverMode::Exact ? "exact" : "float_presolve_exact_verify";
  j["primal_value"] = rat_str(r.primal_value);
  if (r.dual_value) j["dual_value"] = rat_str(*r.dual_value);
  if (r.primal) j["primal"] = poly_to_json(*r.primal);
  if (r.dual) j["dual"] = cubefn_to_json(*r.dual);
  return j;
}

json witness_report_to_json(const WitnessReport& r) {
  json j;
  switch (r.kind) {
    case WitnessKind::ApproxDual: j["kind"] = "approx"; break;
    case WitnessKind::OneSidedDual: j["kind"] = "onesided"; break;
    case WitnessKind::ThresholdDual: j["kind"] = "threshold"; break;
  }
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"value", c.value}});
  j["checks"] = std::move(checks);
  j["verdict"] = r.verdict;
  j["verified_phd"] = r.verified_phd;
  j["phd_exact"] = r.phd_exact;
  return j;
}

json certificate_to_json(const Certificate& c) {
  json j;
  j["accepted"] = c.accepted;
  if (!c.accepted) j["failing"] = c.failing;
  j["phd_bound"] = c.phd_bound;
  j["threshold_degree_exceeds"] = c.deg_pm_exceeds;
  j["upp_dt_exceeds"] = c.upp_dt_exceeds;
  json checks = json::array();
  for (const auto& cc : c.checks)
    checks.push_back(json{{"name", cc.name}, {"pass", cc.pass}, {"value", cc.value}});
  j["checks"] = std::move(checks);
  return j;
}

json helper_report_to_json(const HelperReport& r) {
  json j;
  j["N"] = r.N;
  j["eps_n_floor"] = r.eps_n_floor;
  j["a"] = rat_str(r.a);
  j["interpolation_ok"] = r.interpolation_ok;
  j["bound_all_pass"] = r.bound_all_pass;
  json checks = json::array();
  for (const auto& [x, ok] : r.bound_checks)
    checks.push_back(json{{"x", x}, {"pass", ok}});
  j["bound_checks"] = std::move(checks);
  return j;
}

json mu_decomposition_to_json(const MuDecompositionReport& r) {
  json j;
  j["disjoint_supports"] = r.disjoint_supports;
  j["norm_plus"] = rat_str(r.norm_plus);
  j["norm_minus"] = rat_str(r.norm_minus);
  j["norms_half"] = r.norms_half;
  j["norm_plus1"] = rat_str(r.norm_plus1);
  j["norm_minus0"] = rat_str(r.norm_minus0);
  j["plus1_above_eps"] = r.plus1_above_eps;
  j["minus0_above_eps"] = r.minus0_above_eps;
  if (r.onesided_plus1_is_half) j["onesided_plus1_is_half"] = *r.onesided_plus1_is_half;
  j["all_pass"] = r.all_pass;
  return j;
}

json bracket_to_json(const Bracket& b) {
  return json{{"lo", rat_str(b.lo)}, {"hi", rat_str(b.hi)}, {"exact", b.exact}};
}

json bundle_to_json(const AmplifyBundle& b) {
  json j;
  j["mode"] = b.mode == AmplifyMode::GapMaj ? "gapmaj" : "gapand";
  j["base"] = fn_to_json(b.f);
  j["mu"] = cubefn_to_json(b.mu);
  j["d"] = b.d;
  j["eps2"] = rat_str(b.eps2);
  j["n"] = b.n;
  j["eps"] = rat_str(b.eps);
  j["claimed_phd"] = b.claimed_phd;
  j["formula_N"] = rat_str(b.formula_n);
  j["a_construction"] = rat_str(b.a_construction);
  j["a_margin"] = rat_str(b.a_margin);
  auto corr = [](const CorrectionSpec& s) {
    json c;
    c["alpha"] = rat_str(s.alpha);
    c["zero_correction"] = s.zero_correction;
    if (s.p) {
      c["P"] = unipoly_to_json(*s.p);
      c["helper_report"] = helper_report_to_json(s.helper_report);
    }
    return c;
  };
  j["correction_plus"] = corr(b.corr_plus);
  j["correction_minus"] = corr(b.corr_minus);
  auto maybe = [&](const char* key, const std::optional<CubeFn>& c) {
    if (c)
      j[key] = cubefn_to_json(*c);
    else
      j[key] = nullptr;  // evaluated lazily at this arity
  };
  maybe("psi_plus", b.psi_plus);
  maybe("psi_minus", b.psi_minus);
  maybe("psi_corr_plus", b.psi_corr_plus);
  maybe("psi_corr_minus", b.psi_corr_minus);
  maybe("psi", b.psi);
  return j;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path);
  out << j.dump(2) << '\n';
}

}  // namespace dualdeg
