#include "padic/dynamics.hpp"

#include <algorithm>

namespace padic::dynamics {

namespace {

// theta = p^N as an exact rational, the base for discriminant bookkeeping.
mpq_class theta_rational(const ModelParams& params) {
  mpq_class t;
  if (params.coupling > 0) {
    t = mpq_class(pow_of(params.prime, params.coupling));
  } else {
    t = mpq_class(1, pow_of(params.prime, -params.coupling));
  }
  t.canonicalize();
  return t;
}

PadicNumber from_rational(const mpq_class& r, const ModelParams& params) {
  return PadicNumber::from_rational(r.get_num(), r.get_den(), params.prime,
                                    params.prec);
}

long norm_exp(const PadicNumber& x) { return -x.valuation(); }

StabilityClass class_from_norm_exponent(long e) {
  if (e < 0) return StabilityClass::Attractive;
  if (e == 0) return StabilityClass::Neutral;
  return StabilityClass::Repelling;
}

long valuation_of_int(long value, long prime) {
  if (value == 0) throw Error("valuation of 0");
  long v = 0;
  while (value % prime == 0) {
    value /= prime;
    ++v;
  }
  return v;
}

}  // namespace

std::string to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Attractive: return "attractive";
    case StabilityClass::Neutral: return "neutral";
    case StabilityClass::Repelling: return "repelling";
  }
  return "?";
}

std::string to_string(BasinVerdict v) {
  switch (v) {
    case BasinVerdict::InProvenBasin: return "in-proven-basin";
    case BasinVerdict::OutsideProvenRegion: return "outside-proven-region";
    case BasinVerdict::Excluded: return "excluded";
  }
  return "?";
}

PadicNumber pole_of_f(const ModelParams& params) {
  params.validate();
  mpq_class pole = 1 - theta_rational(params) - params.q;
  return from_rational(pole, params);
}

PadicNumber eval_g(const PadicNumber& x, const ModelParams& params) {
  params.validate();
  PadicNumber theta = params.theta();
  PadicNumber denom = x + theta + params.constant(params.q - 1);
  if (denom.is_zero())
    throw PoleEncountered("g evaluated at the pole 1 - theta - q + O(...)");
  return (theta * x + params.constant(params.q)) / denom;
}

PadicNumber eval_f(const PadicNumber& x, const ModelParams& params) {
  PadicNumber g = eval_g(x, params);
  return g * g;
}

PadicNumber eval_f_prime(const PadicNumber& x, const ModelParams& params) {
  params.validate();
  PadicNumber theta = params.theta();
  PadicNumber one = params.constant(1);
  PadicNumber denom = x + theta + params.constant(params.q - 1);
  if (denom.is_zero())
    throw PoleEncountered("f' evaluated at the pole 1 - theta - q");
  PadicNumber numer = params.constant(2) * (theta * x + params.constant(params.q)) *
                      (theta - one) * (theta + params.constant(params.q));
  return numer / (denom * denom * denom);
}

PadicNumber eval_g_inverse(const PadicNumber& x, const ModelParams& params) {
  params.validate();
  PadicNumber theta = params.theta();
  PadicNumber denom = theta - x;
  if (denom.is_zero()) throw PoleEncountered("g^{-1} evaluated at theta");
  return ((theta + params.constant(params.q - 1)) * x - params.constant(params.q)) /
         denom;
}

PadicNumber eval_eta(const PadicNumber& x, const PadicNumber& y,
                     const ModelParams& params) {
  params.validate();
  PadicNumber theta = params.theta();
  PadicNumber a = theta + params.constant(params.q - 1);
  PadicNumber q = params.constant(params.q);
  PadicNumber sum = x + y;
  return a * theta * sum + params.constant(2) * theta * x * y +
         params.constant(2) * q * a + q * sum;
}

namespace {

FixedPointInfo make_info(const PadicNumber& x, const ModelParams& params) {
  PadicNumber theta = params.theta();
  FixedPointInfo info{x, 0, 0, 0, 0, StabilityClass::Neutral};
  info.norm_exponent = norm_exp(x);
  info.theta_x_q_exponent = norm_exp(theta * x + params.constant(params.q));
  info.shifted_exponent =
      norm_exp(x + theta + params.constant(params.q - 1));
  PadicNumber fp = eval_f_prime(x, params);
  if (fp.is_zero()) {
    // |f'| is only bounded above; still certifies attraction.
    info.multiplier_exponent =
        fp.is_zero_at_precision() ? -fp.zero_bound() : -params.prec.digits;
    info.cls = StabilityClass::Attractive;
  } else {
    info.multiplier_exponent = norm_exp(fp);
    info.cls = class_from_norm_exponent(info.multiplier_exponent);
  }
  return info;
}

}  // namespace

FixedPointReport fixed_points(const ModelParams& params) {
  params.validate();
  if (params.branching != 2)
    throw Error("the invariant-line system is derived for branching k = 2");

  mpq_class theta_q = theta_rational(params);
  mpq_class disc = theta_q * theta_q - 2 * theta_q - 4 * params.q + 1;
  mpq_class sum_roots = (theta_q - 1) * (theta_q - 1) - 2 * params.q;

  FixedPointReport report{
      from_rational(disc, params), false, false, SqrtFailure::None, "",
      make_info(params.constant(1), params), std::nullopt, std::nullopt};

  PadicNumber two = params.constant(2);
  PadicNumber sum_pn = from_rational(sum_roots, params);

  if (disc == 0) {
    report.roots_exist = true;
    report.degenerate = true;
    report.existence_detail = "discriminant vanishes identically: double root";
    PadicNumber x = sum_pn / two;
    report.x1 = make_info(x, params);
    report.x2 = report.x1;
    return report;
  }

  SqrtResult sq = padic_sqrt(report.discriminant);
  if (!sq.exists) {
    report.failure = sq.failure;
    report.existence_detail = sq.detail;
    return report;
  }
  report.roots_exist = true;
  report.existence_detail = "sqrt(D) exists; canonical root taken first";

  PadicNumber theta_m1 = from_rational(theta_q - 1, params);
  PadicNumber half_term = theta_m1 * (*sq.canonical);
  PadicNumber splus = sum_pn + half_term;
  PadicNumber sminus = sum_pn - half_term;

  // When the roots have different norms, the branch carrying the small
  // root cancels leading digits; that root is recovered at full precision
  // from the product x1 x2 = q^2 instead. The larger-norm branch is the
  // well-conditioned one.
  PadicNumber q_squared = params.constant(params.q).pow(2);
  PadicNumber plus = two, minus = two;  // overwritten below
  bool plus_dead = splus.is_zero(), minus_dead = sminus.is_zero();
  if (plus_dead && minus_dead)
    throw Error("both quadratic branches cancelled (internal)");
  if (plus_dead || (!minus_dead && sminus.valuation() < splus.valuation())) {
    minus = sminus / two;
    plus = q_squared / minus;
  } else if (minus_dead || splus.valuation() < sminus.valuation()) {
    plus = splus / two;
    minus = q_squared / plus;
  } else {
    plus = splus / two;
    minus = sminus / two;
  }

  const long vq = valuation_of_int(params.q, params.prime);
  PadicNumber first = plus, second = minus;
  if (params.ferromagnetic() && vq > 0) {
    // |x1| = |q|^2, |x2| = 1.
    if (plus.valuation() != 2 * vq) std::swap(first, second);
    if (first.valuation() != 2 * vq || second.valuation() != 0)
      throw Error("unexpected ferromagnetic root norms (internal)");
  } else if (!params.ferromagnetic()) {
    // |x1| = |theta|^2 = p^{2(-N)}, |x2| = |q/theta|^2.
    long want = 2L * params.coupling;  // valuation of x1
    if (plus.valuation() != want) std::swap(first, second);
    if (first.valuation() != want ||
        second.valuation() != 2 * vq - 2L * params.coupling)
      throw Error("unexpected antiferromagnetic root norms (internal)");
  }
  // |q| = 1 ferromagnetic: the canonical sqrt branch labels x1.

  report.x1 = make_info(first, params);
  report.x2 = make_info(second, params);
  return report;
}

Classification classify_fixed_point(const PadicNumber& x_star,
                                    const ModelParams& params) {
  params.validate();
  const long tol = (params.prec.digits + 1) / 2;
  PadicNumber fx = eval_f(x_star, params);
  if (!fx.within(x_star, tol))
    throw NotAFixedPoint("|f(x) - x|_p > p^(-" + std::to_string(tol) + ")");
  PadicNumber fp = eval_f_prime(x_star, params);
  if (fp.is_zero()) {
    long e = fp.is_zero_at_precision() ? -fp.zero_bound() : -params.prec.digits;
    return {StabilityClass::Attractive, e};
  }
  long e = norm_exp(fp);
  return {class_from_norm_exponent(e), e};
}

OrbitResult iterate_orbit(const PadicNumber& start, const ModelParams& params,
                          int max_iter, std::size_t trajectory_cap) {
  params.validate();
  const long tol = (params.prec.digits + 1) / 2;
  FixedPointReport fps = fixed_points(params);
  std::vector<std::pair<int, PadicNumber>> targets;
  targets.emplace_back(0, fps.x0.value);
  if (fps.x1) targets.emplace_back(1, fps.x1->value);
  if (fps.x2 && !fps.degenerate) targets.emplace_back(2, fps.x2->value);
  PadicNumber pole = pole_of_f(params);

  OrbitResult out;
  PadicNumber x = start;
  std::vector<PadicNumber> recent;
  for (int step = 0; step <= max_iter; ++step) {
    if (out.trajectory.size() < trajectory_cap) out.trajectory.push_back(x);
    out.steps = step;
    if ((x - pole).is_zero()) {
      out.status = OrbitStatus::PoleHit;
      return out;
    }
    for (const auto& [idx, t] : targets) {
      if (x.within(t, tol)) {
        out.status = OrbitStatus::Converged;
        out.target = idx;
        return out;
      }
    }
    for (const auto& prev : recent) {
      if (x.same_value(prev)) {
        out.status = OrbitStatus::Cycle;
        return out;
      }
    }
    recent.push_back(x);
    if (recent.size() > 24) recent.erase(recent.begin());
    if (step == max_iter) break;
    try {
      x = eval_f(x, params);
    } catch (const PoleEncountered&) {
      out.status = OrbitStatus::PoleHit;
      return out;
    } catch (const Error&) {
      out.status = OrbitStatus::Undecided;
      return out;
    }
  }
  out.status = OrbitStatus::Undecided;
  return out;
}

namespace {

// Open annulus |q|^2 < |y - c|_p < |q| as valuation bounds.
bool in_j_annulus(const PadicNumber& y, const PadicNumber& center, long vq) {
  PadicNumber d = y - center;
  if (d.is_zero()) return false;
  long v = d.valuation();
  return v > vq && v < 2 * vq;
}

}  // namespace

BasinVerdict basin_predicate(const PadicNumber& x, const ModelParams& params,
                             int target, int depth_cap) {
  params.validate();
  if (target != 1 && target != 2) throw Error("basin target must be 1 or 2");
  FixedPointReport fps = fixed_points(params);
  if (!fps.roots_exist)
    throw RegimeMismatch("no fixed points x1/x2 for these parameters");
  const long vq = valuation_of_int(params.q, params.prime);

  if (params.ferromagnetic()) {
    if (vq < 1 || params.coupling < 2 * vq)
      throw RegimeMismatch(
          "ferromagnetic basin analysis needs |q|_p < 1 and |theta|_p <= |q|_p^2");
    if (target == 2)
      return x.same_value(fps.x2->value) ? BasinVerdict::InProvenBasin
                                         : BasinVerdict::OutsideProvenRegion;

    if (x.is_exact_zero()) return BasinVerdict::InProvenBasin;  // |x| < 1
    if (x.is_zero_at_precision())
      return x.zero_bound() >= 1 ? BasinVerdict::InProvenBasin
                                 : BasinVerdict::OutsideProvenRegion;
    if (x.valuation() != 0) return BasinVerdict::InProvenBasin;
    PadicNumber d1 = x - params.constant(1);
    if (!d1.is_zero() && d1.valuation() < vq) return BasinVerdict::InProvenBasin;

    // J-set exploration: iterate until an annulus around x0 or x2 is hit.
    PadicNumber y = x;
    PadicNumber pole = pole_of_f(params);
    for (int n = 0; n <= depth_cap; ++n) {
      if ((y - pole).is_zero()) return BasinVerdict::Excluded;
      if (in_j_annulus(y, params.constant(1), vq) ||
          in_j_annulus(y, fps.x2->value, vq))
        return BasinVerdict::InProvenBasin;
      try {
        y = eval_f(y, params);
      } catch (const Error&) {
        return BasinVerdict::OutsideProvenRegion;
      }
      if (y.is_zero() || y.valuation() != 0) return BasinVerdict::InProvenBasin;
      PadicNumber dy = y - params.constant(1);
      if (!dy.is_zero() && dy.valuation() < vq) return BasinVerdict::InProvenBasin;
    }
    return BasinVerdict::OutsideProvenRegion;
  }

  // Antiferromagnetic: |theta|_p > 1. A(x2) = B_1(0) exactly; A(x1) is
  // {|x| > 1} minus the pole preimages, which are the Excluded points.
  const long contraction_ball = 2L * params.coupling;  // val(x - x1) > 2N
  if (target == 2) {
    if (x.is_exact_zero()) return BasinVerdict::InProvenBasin;
    if (x.is_zero_at_precision())
      return x.zero_bound() >= 1 ? BasinVerdict::InProvenBasin
                                 : BasinVerdict::OutsideProvenRegion;
    return x.valuation() >= 1 ? BasinVerdict::InProvenBasin
                              : BasinVerdict::OutsideProvenRegion;
  }
  // target x1
  if (x.is_zero() || x.valuation() >= 0) return BasinVerdict::OutsideProvenRegion;
  PadicNumber pole = pole_of_f(params);
  PadicNumber y = x;
  for (int n = 0; n <= depth_cap; ++n) {
    if ((y - pole).is_zero()) return BasinVerdict::Excluded;
    PadicNumber d = y - fps.x1->value;
    if (d.is_zero() || d.valuation() > contraction_ball)
      return BasinVerdict::InProvenBasin;
    try {
      y = eval_f(y, params);
    } catch (const PoleEncountered&) {
      return BasinVerdict::Excluded;
    } catch (const Error&) {
      return BasinVerdict::OutsideProvenRegion;
    }
  }
  return BasinVerdict::OutsideProvenRegion;
}

RigidityReport field_rigidity_check(
    const std::vector<std::vector<PadicNumber>>& level_scalars,
    const ModelParams& params) {
  params.validate();
  if (params.branching != 2) throw Error("rigidity analysis needs k = 2");
  RigidityReport report;
  if (level_scalars.size() < 2) {
    report.detail = "need at least two levels";
    return report;
  }

  // Expand per-level data to k^level entries if given uniformly.
  std::vector<std::vector<PadicNumber>> levels;
  std::size_t want = 1;
  for (const auto& lv : level_scalars) {
    want *= 2;
    if (lv.size() == want) {
      levels.push_back(lv);
    } else if (lv.size() == 1) {
      levels.push_back(std::vector<PadicNumber>(want, lv.front()));
    } else {
      report.detail = "level sizes must be 1 or 2^level";
      return report;
    }
  }

  // The field must actually solve h_x = g(h_{x,1}) g(h_{x,2}).
  const long tol = (params.prec.digits + 1) / 2;
  for (std::size_t m = 0; m + 1 < levels.size(); ++m) {
    for (std::size_t j = 0; j < levels[m].size(); ++j) {
      try {
        PadicNumber rhs = eval_g(levels[m + 1][2 * j], params) *
                          eval_g(levels[m + 1][2 * j + 1], params);
        if (!levels[m][j].within(rhs, tol)) {
          report.detail = "field does not solve the invariant-line recursion";
          return report;
        }
      } catch (const Error&) {
        report.detail = "recursion hits a pole";
        return report;
      }
    }
  }

  FixedPointReport fps = fixed_points(params);
  if (!fps.roots_exist) {
    report.detail = "no fixed points x1/x2 for these parameters";
    return report;
  }
  const long vq = valuation_of_int(params.q, params.prime);

  PadicNumber target = fps.x0.value;
  if (params.ferromagnetic()) {
    if (vq < 1 || params.coupling < 2 * vq) {
      report.detail = "regime needs |q|_p < 1 and |theta|_p <= |q|_p^2";
      return report;
    }
    for (const auto& lv : levels)
      for (const auto& h : lv)
        if (!h.is_zero() && h.valuation() == 0) {
          report.detail = "hypothesis |h_x|_p != 1 violated";
          return report;
        }
    report.fixed_point = 1;
    report.contraction_rate_exponent = 2 * vq;
    target = fps.x1->value;
  } else {
    bool all_small = true, all_large = true;
    for (const auto& lv : levels)
      for (const auto& h : lv) {
        if (h.is_zero() || h.valuation() > 0) all_large = false;
        else if (h.valuation() < 0) all_small = false;
        else { all_small = false; all_large = false; }
      }
    if (!all_small && !all_large) {
      report.detail = "need all |h_x|_p < 1 or all |h_x|_p > 1";
      return report;
    }
    report.fixed_point = all_small ? 2 : 1;
    report.contraction_rate_exponent = -params.coupling;  // 1/|theta|
    target = all_small ? fps.x2->value : fps.x1->value;
  }

  for (const auto& lv : levels) {
    std::optional<long> worst;  // max |h - x*| as exponent
    for (const auto& h : lv) {
      PadicNumber d = h - target;
      // Differences that vanish at working precision count as "at x*".
      if (d.is_zero()) continue;
      long e = -d.valuation();
      if (!worst || e > *worst) worst = e;
    }
    report.level_distance_exponents.push_back(worst);
  }

  for (std::size_t m = 0; m + 1 < report.level_distance_exponents.size(); ++m) {
    const auto& top = report.level_distance_exponents[m];
    const auto& below = report.level_distance_exponents[m + 1];
    if (!top) continue;  // exactly x*: decay trivially fine
    if (!below || *top > *below - report.contraction_rate_exponent) {
      report.status = RigidityStatus::DecayViolated;
      report.detail = "per-level contraction estimate violated at level " +
                      std::to_string(m + 1);
      return report;
    }
  }
  report.status = RigidityStatus::Rigid;
  report.detail = "hypotheses hold; distances contract level by level";
  return report;
}

}  // namespace padic::dynamics
