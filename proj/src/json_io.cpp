#include "padic/json_io.hpp"

namespace padic::io {

Json to_json(const PadicNumber& x) {
  Json j;
  j["prime"] = x.prime();
  if (x.is_exact_zero()) {
    j["zero"] = true;
    j["bound"] = nullptr;
    return j;
  }
  if (x.is_zero_at_precision()) {
    j["zero"] = true;
    j["bound"] = x.zero_bound();
    return j;
  }
  j["valuation"] = x.valuation();
  j["unit_digits"] = x.digits(x.rel_precision());
  j["rel_precision"] = x.rel_precision();
  return j;
}

Json to_json(const tree::Configuration& sigma) {
  Json j;
  j["depth"] = sigma.depth();
  j["q"] = sigma.q();
  j["domain"] =
      sigma.domain() == tree::Configuration::Domain::Volume ? "volume" : "level";
  j["spins"] = sigma.spins();
  return j;
}

Json to_json(const potts::ModelParams& params) {
  Json j;
  j["p"] = params.prime;
  j["q"] = params.q;
  j["N"] = params.coupling;
  j["k"] = params.branching;
  j["precision"] = params.prec.digits;
  return j;
}

Json to_json(const SqrtResult& r, const PadicNumber& input) {
  Json j;
  j["input"] = to_json(input);
  j["exists"] = r.exists;
  if (r.exists) {
    j["canonical_root"] = to_json(*r.canonical);
    j["negated_root"] = to_json(*r.negated);
  } else {
    j["reason"] = r.detail;
    j["failed_condition"] =
        r.failure == SqrtFailure::OddValuation ? "valuation-parity" : "residue";
  }
  return j;
}

namespace {

Json info_json(const char* name, const dynamics::FixedPointInfo& info) {
  Json j;
  j["name"] = name;
  j["value"] = to_json(info.value);
  j["norm_exponent"] = info.norm_exponent;
  j["theta_x_plus_q_norm_exponent"] = info.theta_x_q_exponent;
  j["x_plus_theta_q_minus1_norm_exponent"] = info.shifted_exponent;
  j["multiplier_norm_exponent"] = info.multiplier_exponent;
  j["class"] = dynamics::to_string(info.cls);
  return j;
}

}  // namespace

Json to_json(const dynamics::FixedPointReport& r) {
  Json j;
  j["discriminant"] = to_json(r.discriminant);
  j["roots_exist"] = r.roots_exist;
  j["degenerate"] = r.degenerate;
  j["existence_detail"] = r.existence_detail;
  Json points = Json::array();
  points.push_back(info_json("x0", r.x0));
  if (r.x1) points.push_back(info_json("x1", *r.x1));
  if (r.x2) points.push_back(info_json("x2", *r.x2));
  j["points"] = points;
  return j;
}

Json to_json(const dynamics::OrbitResult& r) {
  Json j;
  switch (r.status) {
    case dynamics::OrbitStatus::Converged: j["status"] = "converged"; break;
    case dynamics::OrbitStatus::Cycle: j["status"] = "cycle"; break;
    case dynamics::OrbitStatus::PoleHit: j["status"] = "pole-hit"; break;
    case dynamics::OrbitStatus::Undecided: j["status"] = "undecided"; break;
  }
  j["target"] = r.target ? Json(*r.target) : Json(nullptr);
  j["steps"] = r.steps;
  Json traj = Json::array();
  for (const auto& x : r.trajectory) {
    if (x.is_zero())
      traj.push_back(nullptr);
    else
      traj.push_back(-x.valuation());  // |x|_p = p^e per step
  }
  j["norm_exponents"] = traj;
  return j;
}

Json to_json(const potts::CompatibilityReport& r) {
  Json j;
  j["depth"] = r.depth;
  j["tol_exponent"] = r.tol_exponent;
  j["pass"] = r.pass;
  j["checked"] = r.checked;
  j["max_violation_exponent"] =
      r.max_violation_exponent ? Json(*r.max_violation_exponent) : Json(nullptr);
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    Json jf;
    jf["sigma"] = to_json(f.sigma);
    jf["lhs"] = to_json(f.lhs);
    jf["rhs"] = to_json(f.rhs);
    fails.push_back(jf);
  }
  j["failures"] = fails;
  return j;
}

Json to_json(const phase::PhaseReport& r) {
  Json j;
  j["params"] = to_json(r.params);
  j["regime"] = r.regime == phase::Regime::Ferromagnetic ? "ferromagnetic"
                                                         : "antiferromagnetic";
  j["verdict"] = phase::to_string(r.verdict);
  Json measures = Json::array();
  for (int i = 0; i < 3; ++i) {
    const auto& m = r.measures[static_cast<std::size_t>(i)];
    Json jm;
    jm["measure"] = i;
    jm["exists"] = m.exists;
    jm["bounded"] = phase::to_string(m.bounded);
    jm["bound_exponent"] = m.bound_exponent ? Json(*m.bound_exponent) : Json(nullptr);
    measures.push_back(jm);
  }
  j["per_measure"] = measures;
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json jw;
    jw["measure"] = w.measure;
    jw["n"] = w.depth;
    jw["sigma_descriptor"] = w.sigma;
    jw["exponent"] = w.exponent;
    witnesses.push_back(jw);
  }
  j["witnesses"] = witnesses;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const phase::CrossCheckReport& r) {
  Json j;
  j["depth"] = r.depth;
  j["measure"] = r.measure;
  j["checked"] = r.checked;
  j["undecidable"] = r.undecidable;
  j["pass"] = r.pass;
  Json mis = Json::array();
  for (const auto& m : r.mismatches) {
    Json jm;
    jm["sigma"] = to_json(m.sigma);
    jm["formula_exponent"] = m.formula_exponent;
    jm["brute_exponent"] = m.brute_exponent ? Json(*m.brute_exponent) : Json(nullptr);
    mis.push_back(jm);
  }
  j["mismatches"] = mis;
  return j;
}

Json to_json(const std::vector<selftest::SuiteResult>& results) {
  Json suites = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json js;
    js["suite"] = r.name;
    js["pass"] = r.pass;
    js["detail"] = r.detail;
    suites.push_back(js);
    all = all && r.pass;
  }
  Json j;
  j["all_pass"] = all;
  j["suites"] = suites;
  return j;
}

PadicNumber padic_from_json(const Json& j, long prime, const PrecisionConfig& cfg) {
  if (j.contains("zero") && j["zero"].get<bool>())
    return PadicNumber::zero(prime, cfg);
  long v = j.at("valuation").get<long>();
  const auto& digits = j.contains("digits") ? j.at("digits") : j.at("unit_digits");
  mpz_class unit = 0, scale = 1;
  for (const auto& d : digits) {
    long dv = d.get<long>();
    if (dv < 0 || dv >= prime) throw Error("digit out of range in field file");
    unit += dv * scale;
    scale *= prime;
  }
  if (digits.empty() || unit == 0)
    throw Error("empty digit expansion in field file");
  // The digit array denotes the exact integer sum d_i p^i.
  return PadicNumber::from_unit(prime, v, unit, cfg.digits, cfg);
}

potts::BoundaryField field_from_json(const Json& j, const potts::ModelParams& params) {
  std::map<tree::Vertex, std::vector<PadicNumber>> values;
  for (auto it = j.begin(); it != j.end(); ++it) {
    tree::Vertex v = tree::Vertex::parse(it.key());
    std::vector<PadicNumber> h;
    for (const auto& comp : it.value())
      h.push_back(padic_from_json(comp, params.prime, params.prec));
    if (static_cast<int>(h.size()) != params.q + 1)
      throw Error("field entry at " + it.key() + " needs q+1 components");
    values[v] = std::move(h);
  }
  return potts::BoundaryField::per_vertex(std::move(values));
}

}  // namespace padic::io
