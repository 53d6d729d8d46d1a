// Command-line front door: degree, witness, amplify, verify, pattern, dist,
// suite. JSON in, JSON out, rationals as "p/q" strings.

#include <ctime>
#include <iostream>

#include <omp.h>

#include "CLI11.hpp"

#include "dualdeg/io.hpp"
#include "dualdeg/pattern.hpp"
#include "dualdeg/suite.hpp"

using namespace dualdeg;

namespace {

struct RunConfig {
  int cap_arity = kDefaultArityCap;
  uint64_t cap_matrix = kDefaultMatrixCap;
  int threads = 0;
  uint64_t seed = 20260810;
  std::string solver = "exact";
  unsigned entropy_bits = kDefaultEntropyBits;
};

SolverMode mode_of(const RunConfig& rc) {
  return rc.solver == "presolve" ? SolverMode::FloatPresolveExactVerify
                                 : SolverMode::Exact;
}

void stamp(json& j, const RunConfig& rc) {
  j["seed"] = rc.seed;
  char buf[64];
  time_t now = time(nullptr);
  strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", gmtime(&now));
  j["timestamp"] = buf;
}

void emit(const json& j, const std::string& path) {
  if (path.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json(j, path);
}

Measure measure_of(const std::string& s) {
  if (s == "approx") return Measure::Approx;
  if (s == "onesided") return Measure::OneSided;
  if (s == "threshold") return Measure::Threshold;
  throw InvalidParams("unknown measure: " + s);
}

WitnessKind kind_of(const std::string& s) {
  if (s == "approx") return WitnessKind::ApproxDual;
  if (s == "onesided") return WitnessKind::OneSidedDual;
  if (s == "threshold") return WitnessKind::ThresholdDual;
  throw InvalidParams("unknown kind: " + s);
}

DegreeResult run_degree(const RunConfig& rc, const std::string& fn_path,
                        const std::string& measure, const std::string& eps) {
  auto f = fn_from_json(load_json(fn_path), rc.cap_arity);
  Measure m = measure_of(measure);
  if (m == Measure::Threshold) return threshold_degree(f, mode_of(rc));
  return m == Measure::Approx ? approx_degree(f, rat_parse(eps), mode_of(rc))
                              : onesided_degree(f, rat_parse(eps), mode_of(rc));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact degree measures, dual witnesses, and hardness amplification"};
  app.require_subcommand(1);

  RunConfig rc;
  if (const char* cfg_path = getenv("DUALDEG_CONFIG")) {
    auto j = load_json(cfg_path);
    rc.cap_arity = j.value("cap_arity", rc.cap_arity);
    rc.cap_matrix = j.value("cap_matrix", rc.cap_matrix);
    rc.threads = j.value("threads", rc.threads);
    rc.seed = j.value("seed", rc.seed);
    rc.solver = j.value("solver", rc.solver);
    rc.entropy_bits = j.value("entropy_bits", rc.entropy_bits);
  }
  app.add_option("--cap-arity", rc.cap_arity, "largest materialized arity");
  app.add_option("--cap-matrix", rc.cap_matrix, "pattern matrix entry cap");
  app.add_option("--threads", rc.threads, "OpenMP thread count (0 = default)");
  app.add_option("--seed", rc.seed, "seed recorded in reports");
  app.add_option("--solver", rc.solver, "exact | presolve")
      ->check(CLI::IsMember({"exact", "presolve"}));

  std::string fn_path, witness_path, emit_path, measure = "approx", eps = "1/3";
  std::string kind = "threshold", mode = "gapmaj", eps2 = "49/100";
  std::string p_path, q_path, input_path, csv_path, labels_path, values_csv;
  std::string alpha = "2/3", beta = "1/3";
  long nn = 8, big_n = 4, small_n = 2;
  int degree_d = 0, smooth_d = 1;
  bool override_alpha = false, emit_parts = false, quick = false;

  auto* deg = app.add_subcommand("degree", "compute a degree measure");
  deg->fallthrough();
  deg->add_option("--fn", fn_path)->required();
  deg->add_option("--measure", measure)
      ->check(CLI::IsMember({"approx", "onesided", "threshold"}));
  deg->add_option("--eps", eps);
  deg->add_option("--emit", emit_path);

  auto* wit = app.add_subcommand("witness", "emit the dual witness of a degree run");
  wit->fallthrough();
  wit->add_option("--fn", fn_path)->required();
  wit->add_option("--measure", measure)
      ->check(CLI::IsMember({"approx", "onesided", "threshold"}));
  wit->add_option("--eps", eps);
  wit->add_option("--emit", emit_path)->required();
  wit->add_flag("--parts", emit_parts, "include the mass decomposition");

  auto* amp = app.add_subcommand("amplify", "build a composed dual witness bundle");
  amp->fallthrough();
  amp->add_option("--fn", fn_path)->required();
  amp->add_option("--witness", witness_path)->required();
  amp->add_option("--n", nn)->required();
  amp->add_option("--eps", eps)->required();
  amp->add_option("--mode", mode)->check(CLI::IsMember({"gapmaj", "gapand"}));
  amp->add_option("--eps2", eps2);
  amp->add_option("--emit", emit_path);
  amp->add_flag("--override-alpha", override_alpha);

  auto* ver = app.add_subcommand("verify", "check a witness against a function");
  ver->fallthrough();
  ver->add_option("--witness", witness_path)->required();
  ver->add_option("--fn", fn_path)->required();
  ver->add_option("--kind", kind)
      ->check(CLI::IsMember({"approx", "onesided", "threshold"}));
  ver->add_option("--degree", degree_d)->required();
  ver->add_option("--eps", eps);
  ver->add_option("--emit", emit_path);

  auto* pat = app.add_subcommand("pattern", "pattern matrices and symmetrization");
  pat->fallthrough();
  auto* pmx = pat->add_subcommand("matrix", "export a pattern matrix");
  pmx->fallthrough();
  pmx->add_option("--fn", fn_path)->required();
  pmx->add_option("--N", big_n)->required();
  pmx->add_option("--n", small_n)->required();
  pmx->add_option("--csv", csv_path)->required();
  pmx->add_option("--labels", labels_path)->required();
  auto* psy = pat->add_subcommand("symmetrize", "count-and-sort a map");
  psy->fallthrough();
  psy->add_option("--values", values_csv)->required();
  auto* por = pat->add_subcommand("ortho", "orthogonalizing distribution of a witness");
  por->fallthrough();
  por->add_option("--witness", witness_path)->required();
  por->add_option("--fn", fn_path)->required();
  por->add_option("--emit", emit_path);
  auto* psm = pat->add_subcommand("smooth", "mass smoothness report");
  psm->fallthrough();
  psm->add_option("--witness", witness_path)->required();
  psm->add_option("--d", smooth_d);
  psm->add_option("--alpha", alpha);
  psm->add_option("--emit", emit_path);

  auto* dst = app.add_subcommand("dist", "distribution utilities");
  dst->fallthrough();
  auto* dm2 = dst->add_subcommand("m2", "two-sample tester acceptance");
  dm2->fallthrough();
  dm2->add_option("--p", p_path)->required();
  dm2->add_option("--q", q_path)->required();
  auto* dme = dst->add_subcommand("metrics", "tvd, l2^2, entropy bracket");
  dme->fallthrough();
  dme->add_option("--p", p_path)->required();
  dme->add_option("--q", q_path)->required();
  auto* dpo = dst->add_subcommand("postselect", "three-sample postselection");
  dpo->fallthrough();
  dpo->add_option("--p", p_path)->required();
  dpo->add_option("--q", q_path)->required();
  dpo->add_option("--emit", emit_path);
  auto* dpl = dst->add_subcommand("polarize", "pseudo-polarizer transform");
  dpl->fallthrough();
  dpl->add_option("--pp", input_path)->required();
  dpl->add_option("--alpha", alpha);
  dpl->add_option("--beta", beta);
  auto* dgc = dst->add_subcommand("gcol", "collision-to-SDU reduction");
  dgc->fallthrough();
  dgc->add_option("--input", input_path)->required();
  dgc->add_option("--emit", emit_path);
  auto* dea = dst->add_subcommand("ea", "entropy-approximation reduction");
  dea->fallthrough();
  dea->add_option("--input", input_path)->required();
  dea->add_option("--emit", emit_path);

  auto* sut = app.add_subcommand("suite", "run the acceptance battery");
  sut->fallthrough();
  sut->add_flag("--quick", quick);
  sut->add_option("--out", emit_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (rc.threads > 0) omp_set_num_threads(rc.threads);

  try {
    if (*deg) {
      auto r = run_degree(rc, fn_path, measure, eps);
      json j = degree_result_to_json(r);
      stamp(j, rc);
      emit(j, emit_path);
    } else if (*wit) {
      auto r = run_degree(rc, fn_path, measure, eps);
      if (!r.dual) throw Error("degree is 0; no dual witness exists");
      json j = cubefn_to_json(*r.dual);
      j["for_degree"] = r.degree - 1;
      if (emit_parts) {
        auto f = fn_from_json(load_json(fn_path), rc.cap_arity);
        auto [parts, rep] = decompose_dual(*r.dual, f, r.degree - 1,
                                           r.eps ? *r.eps : Rational(0),
                                           r.measure == Measure::OneSided);
        j["decomposition_report"] = mu_decomposition_to_json(rep);
        j["mu_plus"] = cubefn_to_json(parts.plus);
        j["mu_minus"] = cubefn_to_json(parts.minus);
      }
      stamp(j, rc);
      emit(j, emit_path);
    } else if (*amp) {
      auto f = fn_from_json(load_json(fn_path), rc.cap_arity);
      auto mu = cubefn_from_json(load_json(witness_path));
      ECOptions opt;
      opt.override_alpha = override_alpha;
      auto b = upp_witness(mu, f, nn, rat_parse(eps),
                           mode == "gapand" ? AmplifyMode::GapAnd : AmplifyMode::GapMaj,
                           rat_parse(eps2), opt);
      auto cert = certify_amplification(b);
      json j = bundle_to_json(b);
      j["certificate"] = certificate_to_json(cert);
      stamp(j, rc);
      emit(j, emit_path);
      return cert.accepted ? 0 : 1;
    } else if (*ver) {
      auto f = fn_from_json(load_json(fn_path), rc.cap_arity);
      auto psi = cubefn_from_json(load_json(witness_path));
      WitnessKind k = kind_of(kind);
      std::optional<Rational> e;
      if (k != WitnessKind::ThresholdDual) e = rat_parse(eps);
      auto rep = verify_dual(psi, f, k, degree_d, e);
      json j = witness_report_to_json(rep);
      stamp(j, rc);
      emit(j, emit_path);
      return rep.verdict ? 0 : 1;
    } else if (*pmx) {
      auto phi = fn_from_json(load_json(fn_path), rc.cap_arity);
      auto m = pattern_matrix(phi, big_n, small_n, rc.cap_matrix);
      export_csv(m, csv_path, labels_path);
    } else if (*psy) {
      std::vector<long> vals;
      for (size_t pos = 0; pos < values_csv.size();) {
        size_t comma = values_csv.find(',', pos);
        if (comma == std::string::npos) comma = values_csv.size();
        vals.push_back(std::stol(values_csv.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      json j;
      j["sorted_counts"] = symmetrize_ptp(vals);
      emit(j, emit_path);
    } else if (*por) {
      auto h = fn_from_json(load_json(fn_path), rc.cap_arity);
      auto psi = cubefn_from_json(load_json(witness_path));
      auto [mu, d] = orthogonalizing_distribution(psi, h);
      json j = cubefn_to_json(mu);
      j["pure_high_degree"] = d;
      stamp(j, rc);
      emit(j, emit_path);
    } else if (*psm) {
      auto mu = cubefn_from_json(load_json(witness_path));
      auto rep = smoothness_report(mu, smooth_d, rat_parse(alpha));
      json j;
      j["threshold_log2"] = rat_str(rep.threshold_log2);
      j["below"] = rep.below;
      j["total"] = rep.total;
      j["fraction"] = rat_str(rep.fraction);
      stamp(j, rc);
      emit(j, emit_path);
    } else if (*dm2) {
      auto p = dist_from_json(load_json(p_path));
      auto q = dist_from_json(load_json(q_path));
      json j;
      j["accept_probability"] = rat_str(m2_accept(p, q));
      emit(j, emit_path);
    } else if (*dme) {
      auto p = dist_from_json(load_json(p_path));
      auto q = dist_from_json(load_json(q_path));
      auto m = metrics(p, q, rc.entropy_bits);
      json j;
      j["tvd"] = rat_str(m.tvd);
      j["l2sq"] = rat_str(m.l2sq);
      j["entropy_p"] = bracket_to_json(m.entropy_p);
      emit(j, emit_path);
    } else if (*dpo) {
      auto p = dist_from_json(load_json(p_path));
      auto q = dist_from_json(load_json(q_path));
      emit(dist_to_json(postselect_three(p, q)), emit_path);
    } else if (*dpl) {
      auto j0 = load_json(input_path);
      PseudoPolarizer pp;
      pp.n = j0.at("n").get<int>();
      pp.ell = j0.at("ell").get<int>();
      for (const auto& v : j0.at("joint0")) pp.joint0.push_back(rat_parse(v.get<std::string>()));
      for (const auto& v : j0.at("joint1")) pp.joint1.push_back(rat_parse(v.get<std::string>()));
      auto ra = polarizer_apply(pp, rat_parse(alpha));
      json j;
      j["tvd_alpha"] = rat_str(ra.tvd);
      j["tvd_beta"] = rat_str(polarizer_apply(pp, rat_parse(beta)).tvd);
      j["ratio_bound_holds"] = polarizer_ratio_check(pp, rat_parse(alpha), rat_parse(beta));
      emit(j, emit_path);
    } else if (*dgc) {
      auto j0 = load_json(input_path);
      GColInput x;
      x.k = j0.at("k").get<long>();
      x.to1 = j0.value("to1", 0L);
      x.eps = j0.contains("eps") ? rat_parse(j0.at("eps").get<std::string>()) : Rational(0);
      for (const auto& fn : j0.at("funcs")) x.funcs.push_back(fn.get<std::vector<long>>());
      auto [d, rep] = reduce_gcol_to_sdu(x);
      json j;
      j["distribution"] = dist_to_json(d);
      json tv = json::array();
      for (const auto& t : rep.block_tvd) tv.push_back(rat_str(t));
      j["block_tvd"] = std::move(tv);
      j["avg_tvd"] = rat_str(rep.avg_tvd);
      j["perm_count"] = rep.perm_count;
      j["to1_count"] = rep.to1_count;
      j["gapmaj_value"] = rep.gapmaj_value;
      j["yes_bound_ok"] = rep.yes_bound_ok;
      j["no_bound_ok"] = rep.no_bound_ok;
      stamp(j, rc);
      emit(j, emit_path);
    } else if (*dea) {
      auto j0 = load_json(input_path);
      long k = j0.at("k").get<long>();
      std::vector<std::vector<long>> funcs;
      for (const auto& fn : j0.at("funcs")) funcs.push_back(fn.get<std::vector<long>>());
      auto rep = reduce_gapmajptp_to_ea(k, funcs, rc.entropy_bits);
      json j;
      j["h_d"] = bracket_to_json(rep.h_d);
      j["h_a"] = bracket_to_json(rep.h_a);
      j["threshold"] = rat_str(rep.threshold);
      j["classification"] = rep.classification;
      stamp(j, rc);
      emit(j, emit_path);
    } else if (*sut) {
      SuiteConfig cfg;
      cfg.seed = rc.seed;
      cfg.quick = quick;
      auto results = run_acceptance(cfg);
      int failed = 0;
      for (const auto& r : results) {
        printf("[%2d] %s %-26s (%.1fs) %s\n", r.id, r.pass ? "PASS" : "FAIL",
               r.name.c_str(), r.seconds, r.details.c_str());
        if (!r.pass) failed++;
      }
      json j = suite_summary(results, cfg);
      stamp(j, rc);
      if (!emit_path.empty()) save_json(j, emit_path);
      return failed == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
