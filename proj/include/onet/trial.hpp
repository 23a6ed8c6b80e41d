#pragma once

// Experiment harness: replay a generated instance through the matching online
// algorithm, validate coverage after every arrival, attach an offline
// denominator with its provenance spelled out, and compare against the
// closed-form guarantee.  Trials are independent and keyed by seed, so any
// execution order produces the same per-seed rows.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "box_net3.hpp"
#include "generators.hpp"
#include "geometry.hpp"
#include "interval_net.hpp"
#include "json_codec.hpp"
#include "offline_oracle.hpp"
#include "piercing_center.hpp"
#include "piercing_fat.hpp"
#include "rect_net.hpp"
#include "rng.hpp"

namespace onet {

enum class OracleMode { exact, bounds, paper_lower_bound };

inline std::string oracle_mode_name(OracleMode m) {
  switch (m) {
    case OracleMode::exact: return "exact";
    case OracleMode::bounds: return "bounds";
    case OracleMode::paper_lower_bound: return "paper_lower_bound";
  }
  throw std::logic_error("oracle_mode_name: unknown mode");
}

inline OracleMode oracle_mode_from(const std::string& s) {
  if (s == "exact") return OracleMode::exact;
  if (s == "bounds") return OracleMode::bounds;
  if (s == "paper_lower_bound") return OracleMode::paper_lower_bound;
  throw std::invalid_argument("oracle_mode_from: unknown mode '" + s + "'");
}

struct ExperimentConfig {
  InstanceSpec instance;
  std::size_t trials = 1;
  OracleMode oracle = OracleMode::exact;
  RectNetParams rect;      // rect_net2 knobs (eps/seed overridden per trial)
  BoxNet3Params box3;      // box_net3 knobs (likewise)
  double fat_scale = 0.25; // layer-table scale for pierce_fat
  OracleLimits limits;
  bool timing = true;      // false zeroes wall_ms so repeated runs byte-match
  std::string report_path; // json; empty = skip
  std::string csv_path;    // csv; empty = skip
  std::string render_path; // svg; empty = skip
};

// Modes a family can actually serve: the analytic denominator only exists for
// the 2D/3D range nets, and those are the two families without a general
// exact oracle at experiment scale.
inline void validate_config(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  const bool net2or3 =
      cfg.instance.family == Family::rect_net2 || cfg.instance.family == Family::box_net3;
  if (cfg.oracle == OracleMode::paper_lower_bound && !net2or3)
    throw std::invalid_argument("config: paper_lower_bound mode needs a 2D/3D net family");
  if (cfg.oracle == OracleMode::bounds && family_is_net(cfg.instance.family))
    throw std::invalid_argument("config: bounds mode applies to piercing families only");
}

inline void to_json(json& j, const OracleLimits& l) {
  j = json{{"points", l.points}, {"sets", l.sets}, {"objects", l.objects}};
}

inline void from_json(const json& j, OracleLimits& l) {
  j.at("points").get_to(l.points);
  j.at("sets").get_to(l.sets);
  j.at("objects").get_to(l.objects);
}

inline void to_json(json& j, const RectNetParams& p) {
  j = json{{"eps", p.eps}, {"delta", p.delta}, {"c1", p.c1},
           {"c_a", p.c_a}, {"gamma", p.gamma}, {"seed", p.seed}};
}

inline void from_json(const json& j, RectNetParams& p) {
  j.at("eps").get_to(p.eps);
  j.at("delta").get_to(p.delta);
  j.at("c1").get_to(p.c1);
  j.at("c_a").get_to(p.c_a);
  j.at("gamma").get_to(p.gamma);
  j.at("seed").get_to(p.seed);
}

inline void to_json(json& j, const BoxNet3Params& p) {
  j = json{{"eps", p.eps}, {"delta", p.delta}, {"c1", p.c1},
           {"c_a", p.c_a}, {"gamma", p.gamma}, {"seed", p.seed}};
}

inline void from_json(const json& j, BoxNet3Params& p) {
  j.at("eps").get_to(p.eps);
  j.at("delta").get_to(p.delta);
  j.at("c1").get_to(p.c1);
  j.at("c_a").get_to(p.c_a);
  j.at("gamma").get_to(p.gamma);
  j.at("seed").get_to(p.seed);
}

inline void to_json(json& j, const ExperimentConfig& c) {
  j = json{{"instance", c.instance},
           {"trials", c.trials},
           {"oracle", oracle_mode_name(c.oracle)},
           {"rect", c.rect},
           {"box3", c.box3},
           {"fat_scale", c.fat_scale},
           {"limits", c.limits},
           {"timing", c.timing},
           {"report_path", c.report_path},
           {"csv_path", c.csv_path},
           {"render_path", c.render_path}};
}

inline void from_json(const json& j, ExperimentConfig& c) {
  j.at("instance").get_to(c.instance);
  j.at("trials").get_to(c.trials);
  c.oracle = oracle_mode_from(j.at("oracle").get<std::string>());
  if (j.contains("rect")) j.at("rect").get_to(c.rect);
  if (j.contains("box3")) j.at("box3").get_to(c.box3);
  if (j.contains("fat_scale")) j.at("fat_scale").get_to(c.fat_scale);
  if (j.contains("limits")) j.at("limits").get_to(c.limits);
  if (j.contains("timing")) j.at("timing").get_to(c.timing);
  if (j.contains("report_path")) j.at("report_path").get_to(c.report_path);
  if (j.contains("csv_path")) j.at("csv_path").get_to(c.csv_path);
  if (j.contains("render_path")) j.at("render_path").get_to(c.render_path);
}

inline void to_json(json& j, const OracleResult& r) {
  j = json{{"kind", r.kind == OracleResult::Kind::exact ? "exact" : "bounds"},
           {"value", r.value},
           {"lower", r.lower},
           {"upper", r.upper},
           {"certificate", r.certificate},
           {"disjoint_witness", r.disjoint_witness},
           {"approximate", r.approximate}};
}

inline void from_json(const json& j, OracleResult& r) {
  r.kind = j.at("kind").get<std::string>() == "exact" ? OracleResult::Kind::exact
                                                      : OracleResult::Kind::bounds;
  j.at("value").get_to(r.value);
  j.at("lower").get_to(r.lower);
  j.at("upper").get_to(r.upper);
  j.at("certificate").get_to(r.certificate);
  j.at("disjoint_witness").get_to(r.disjoint_witness);
  j.at("approximate").get_to(r.approximate);
}

struct TrialReport {
  std::uint64_t seed = 0;
  std::string family;
  std::string eps_or_M;
  bool validity = false;
  std::int64_t alg_size = 0;
  OracleResult oracle;
  std::string opt_kind;  // exact | collapsed_bounds | lower_bound | analytic_lower_bound
  double opt_value = 0;  // denominator the ratio divides by
  double ratio = 0;
  std::string bound_kind;  // ratio | net_size | region_count
  double bound = 0;
  bool bound_pass = false;
  std::vector<std::int64_t> charges;  // per optimal point, when a certificate exists
  bool charge_pass = true;
  double regions = 0;  // distinct safety-net keys (3D net family)
  double wall_ms = 0;

  bool pass() const { return validity && bound_pass && charge_pass; }
};

inline void to_json(json& j, const TrialReport& r) {
  j = json{{"seed", r.seed},
           {"family", r.family},
           {"eps_or_M", r.eps_or_M},
           {"validity", r.validity},
           {"alg_size", r.alg_size},
           {"oracle", r.oracle},
           {"opt_kind", r.opt_kind},
           {"opt_value", r.opt_value},
           {"ratio", r.ratio},
           {"bound_kind", r.bound_kind},
           {"bound", r.bound},
           {"bound_pass", r.bound_pass},
           {"charges", r.charges},
           {"charge_pass", r.charge_pass},
           {"regions", r.regions},
           {"wall_ms", r.wall_ms},
           {"pass", r.pass()}};
}

inline void from_json(const json& j, TrialReport& r) {
  j.at("seed").get_to(r.seed);
  j.at("family").get_to(r.family);
  j.at("eps_or_M").get_to(r.eps_or_M);
  j.at("validity").get_to(r.validity);
  j.at("alg_size").get_to(r.alg_size);
  j.at("oracle").get_to(r.oracle);
  j.at("opt_kind").get_to(r.opt_kind);
  j.at("opt_value").get_to(r.opt_value);
  j.at("ratio").get_to(r.ratio);
  j.at("bound_kind").get_to(r.bound_kind);
  j.at("bound").get_to(r.bound);
  j.at("bound_pass").get_to(r.bound_pass);
  j.at("charges").get_to(r.charges);
  j.at("charge_pass").get_to(r.charge_pass);
  j.at("regions").get_to(r.regions);
  j.at("wall_ms").get_to(r.wall_ms);
}

// Pach-Tardos style analytic floor for unit-square range nets: any net must
// hold (1/eps) * lnln(1/eps) points up to constants, which serves as a
// clearly-labeled ratio denominator when exact search is out of reach.
inline double analytic_net_lower(const Rational& eps) {
  double inv = double(eps.den) / double(eps.num);
  if (inv <= std::exp(1.0)) return 1.0;
  return std::max(1.0, inv * std::log(std::log(inv)));
}

// Size budget for the 2D net: K * (1/eps) * log2(1/eps) * lnln(1/eps) with
// K = 10 * c_a * delta, compared against the mean final size.
inline double rect_size_bound(const Rational& eps, const RectNetParams& p) {
  double inv = double(eps.den) / double(eps.num);
  double ll = std::max(std::log(std::log(std::max(inv, 2.72))), 0.25);
  double K = 10.0 * p.c_a * p.delta.to_double();
  return K * inv * std::log2(inv) * ll;
}

// Distinct-region budget for the 3D net: C3 * |P| * (1/eps) * log2(1/eps)^2.
inline double box3_region_bound(const Rational& eps, std::size_t n, double C3 = 8.0) {
  double inv = double(eps.den) / double(eps.num);
  double lg = std::log2(inv);
  return C3 * double(n) * inv * lg * lg;
}

namespace detail {

inline std::string eps_or_m_label(const InstanceSpec& s) {
  if (family_is_net(s.family))
    return std::to_string(s.eps.num) + "/" + std::to_string(s.eps.den);
  std::ostringstream os;
  os << s.M;
  return os.str();
}

// minimal-index certificate point inside the trigger, or -1
inline std::ptrdiff_t charge_target(const std::vector<Point>& cert, const Shape& trigger) {
  for (std::size_t i = 0; i < cert.size(); ++i)
    if (contains(trigger, cert[i])) return std::ptrdiff_t(i);
  return -1;
}

// Attribute interval-net growth to certificate points: every trigger adds its
// step's points to the first certificate point it contains.
inline std::vector<std::int64_t> interval_charges(const IntervalNet& alg,
                                                  const std::vector<Point>& cert) {
  std::vector<std::int64_t> charges(cert.size(), 0);
  for (const IntervalStep& step : alg.history()) {
    std::ptrdiff_t t = charge_target(cert, Shape{step.sigma});
    if (t >= 0) charges[std::size_t(t)] += std::int64_t(step.added.size());
  }
  return charges;
}

struct OracleChoice {
  OracleResult oracle;
  std::string opt_kind;
  double denominator = 1.0;
};

// Denominator with provenance: exact value when the solver finished, the
// sandwich lower bound otherwise (flagged as collapsed when it already meets
// the upper bound).
inline OracleChoice choose_piercing_denominator(const std::vector<Shape>& shapes,
                                                OracleMode mode, const OracleLimits& limits) {
  OracleChoice out;
  if (mode == OracleMode::exact) {
    bool all_boxes = true;
    std::vector<AxisBox> boxes;
    for (const Shape& s : shapes) {
      if (const AxisBox* b = std::get_if<AxisBox>(&s)) boxes.push_back(*b);
      else { all_boxes = false; break; }
    }
    if (all_boxes) {
      if (auto res = opt_piercing_boxes_exact(boxes, limits)) {
        out.oracle = *res;
        out.opt_kind = "exact";
        out.denominator = double(std::max<std::int64_t>(1, res->value));
        return out;
      }
    }
  }
  out.oracle = piercing_bounds(shapes);
  out.opt_kind = out.oracle.lower == out.oracle.upper ? "collapsed_bounds" : "lower_bound";
  out.denominator = double(std::max<std::int64_t>(1, out.oracle.lower));
  return out;
}

}  // namespace detail

inline TrialReport run_trial(const ExperimentConfig& cfg, std::size_t trial_index) {
  InstanceSpec s = cfg.instance;
  s.seed = mix_seed(cfg.instance.seed, trial_index);
  Instance inst = materialize(s);

  TrialReport rep;
  rep.seed = s.seed;
  rep.family = family_name(s.family);
  rep.eps_or_M = detail::eps_or_m_label(s);
  rep.validity = true;

  auto t0 = std::chrono::steady_clock::now();

  switch (s.family) {
    case Family::interval_net: {
      IntervalNet alg(inst.ground, s.eps);
      for (const Shape& sh : inst.shapes) {
        const Interval& iv = std::get<Interval>(sh);
        auto step = alg.process(iv);
        if (step.heavy && !alg.is_hit(iv)) rep.validity = false;
      }
      rep.alg_size = std::int64_t(alg.net_size());

      std::vector<Interval> ivs;
      for (const Shape& sh : inst.shapes) ivs.push_back(std::get<Interval>(sh));
      rep.oracle = opt_interval_net(inst.ground, s.eps, ivs);
      rep.opt_kind = "exact";
      rep.opt_value = double(std::max<std::int64_t>(1, rep.oracle.value));
      rep.ratio = double(rep.alg_size) / rep.opt_value;
      rep.bound_kind = "ratio";
      rep.bound = double(interval_ratio_bound(s.eps));
      rep.bound_pass = rep.ratio <= rep.bound;

      rep.charges = detail::interval_charges(alg, rep.oracle.certificate);
      for (std::int64_t c : rep.charges)
        if (double(c) > rep.bound) rep.charge_pass = false;
      break;
    }
    case Family::rect_net2:
    case Family::box_net3: {
      const bool is3 = s.family == Family::box_net3;
      std::int64_t regions = 0;
      if (is3) {
        BoxNet3Params p = cfg.box3;
        p.eps = s.eps;
        p.seed = mix_seed(s.seed, 0xB0E7ull);
        BoxNet3 alg(inst.ground, p);
        for (const Shape& sh : inst.shapes) {
          const AxisBox& b = std::get<AxisBox>(sh);
          auto step = alg.process(b);
          if (step.heavy && !alg.is_hit(b)) rep.validity = false;
        }
        rep.alg_size = std::int64_t(alg.net_size());
        regions = std::int64_t(alg.metrics().distinct_regions);
      } else {
        RectNetParams p = cfg.rect;
        p.eps = s.eps;
        p.seed = mix_seed(s.seed, 0x2EC7ull);
        RectNet alg(inst.ground, p);
        for (const Shape& sh : inst.shapes) {
          const AxisBox& b = std::get<AxisBox>(sh);
          auto step = alg.process(b);
          if (step.heavy && !alg.is_hit(b)) rep.validity = false;
        }
        rep.alg_size = std::int64_t(alg.net_size());
      }

      if (cfg.oracle == OracleMode::exact) {
        std::vector<AxisBox> boxes;
        for (const Shape& sh : inst.shapes) boxes.push_back(std::get<AxisBox>(sh));
        std::optional<OracleResult> res;  // no exact search in 3D, always refused there
        if (!is3) res = opt_rect_net_exact(inst.ground, s.eps, boxes, cfg.limits);
        if (res) {
          rep.oracle = *res;
          rep.opt_kind = "exact";
          rep.opt_value = double(std::max<std::int64_t>(1, res->value));
        } else {
          // refusal: fall back to the trivial sandwich, plainly labeled
          rep.oracle.kind = OracleResult::Kind::bounds;
          rep.oracle.lower = inst.shapes.empty() ? 0 : 1;
          rep.oracle.upper = rep.alg_size;
          rep.opt_kind = "lower_bound";
          rep.opt_value = double(std::max<std::int64_t>(1, rep.oracle.lower));
        }
      } else {
        rep.oracle.kind = OracleResult::Kind::bounds;
        rep.oracle.lower = std::int64_t(std::floor(analytic_net_lower(s.eps)));
        rep.oracle.upper = rep.alg_size;
        rep.opt_kind = "analytic_lower_bound";
        rep.opt_value = analytic_net_lower(s.eps);
      }
      rep.ratio = double(rep.alg_size) / rep.opt_value;

      if (is3) {
        rep.regions = double(regions);
        rep.bound_kind = "region_count";
        rep.bound = box3_region_bound(s.eps, inst.ground.size());
        rep.bound_pass = rep.regions <= rep.bound;
      } else {
        rep.bound_kind = "net_size";
        rep.bound = rect_size_bound(s.eps, cfg.rect);
        rep.bound_pass = double(rep.alg_size) <= rep.bound;
      }
      break;
    }
    case Family::pierce_box:
    case Family::pierce_ellipsoid: {
      CenterPiercer alg(s.dim());
      for (const Shape& sh : inst.shapes) {
        alg.process(sh);
        if (!alg.is_pierced(sh)) rep.validity = false;
      }
      rep.alg_size = std::int64_t(alg.points().size());

      auto choice = detail::choose_piercing_denominator(inst.shapes, cfg.oracle, cfg.limits);
      rep.oracle = choice.oracle;
      rep.opt_kind = choice.opt_kind;
      rep.opt_value = choice.denominator;
      rep.ratio = double(rep.alg_size) / rep.opt_value;

      BoundParams bp;
      bp.M = s.M;
      bp.C = s.C;
      PierceFamily fam = s.family == Family::pierce_box ? PierceFamily::box
                                                        : PierceFamily::ellipsoid;
      rep.bound_kind = "ratio";
      rep.bound = center_charge_bound(fam, s.dim(), bp);
      rep.bound_pass = rep.ratio <= rep.bound;

      if (!rep.oracle.certificate.empty()) {
        auto creport = check_charge_bound(alg, rep.oracle.certificate, bp, fam);
        rep.charges.assign(creport.charges.begin(), creport.charges.end());
        rep.charge_pass = creport.pass;
      }
      break;
    }
    case Family::pierce_fat: {
      LayerTable table(s.M, cfg.fat_scale);
      FatPiercer alg(s.dim(), table);
      std::vector<Shape> pierceable;
      for (const Shape& sh : inst.shapes) {
        const FatObject& f = std::get<FatObject>(sh);
        alg.process(f);
        if (!alg.is_pierced(f)) rep.validity = false;
        pierceable.push_back(to_pierceable(f));
      }
      rep.alg_size = std::int64_t(alg.points().size());

      auto choice = detail::choose_piercing_denominator(pierceable, cfg.oracle, cfg.limits);
      rep.oracle = choice.oracle;
      rep.opt_kind = choice.opt_kind;
      rep.opt_value = choice.denominator;
      rep.ratio = double(rep.alg_size) / rep.opt_value;

      rep.bound_kind = "ratio";
      rep.bound = fat_total_bound(s.alpha, s.dim(), s.M);
      rep.bound_pass = rep.ratio <= rep.bound;

      if (!rep.oracle.certificate.empty()) {
        auto freport = check_fat_bound(alg, rep.oracle.certificate, s.alpha, s.dim(), s.M);
        rep.charges.assign(freport.layer_charges.size(), 0);
        for (std::size_t i = 0; i < freport.layer_charges.size(); ++i)
          for (std::size_t cnt : freport.layer_charges[i])
            rep.charges[i] += std::int64_t(cnt);
        rep.charge_pass = freport.pass;
      }
      break;
    }
  }

  auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms = cfg.timing ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
  return rep;
}

// Final state of one replay as plain points, for rendering: the algorithm's
// placed points plus whatever optimal certificate the offline side can
// produce cheaply (possibly none).
struct ReplayOutcome {
  std::vector<Point> alg_points;
  std::vector<Point> opt_points;
};

inline ReplayOutcome replay_final_state(const Instance& inst, const ExperimentConfig& cfg) {
  const InstanceSpec& s = inst.spec;
  ReplayOutcome out;
  switch (s.family) {
    case Family::interval_net: {
      IntervalNet alg(inst.ground, s.eps);
      std::vector<Interval> ivs;
      for (const Shape& sh : inst.shapes) {
        alg.process(std::get<Interval>(sh));
        ivs.push_back(std::get<Interval>(sh));
      }
      for (double x : alg.net_coords()) out.alg_points.push_back({x});
      out.opt_points = opt_interval_net(inst.ground, s.eps, ivs).certificate;
      break;
    }
    case Family::rect_net2: {
      RectNetParams p = cfg.rect;
      p.eps = s.eps;
      p.seed = mix_seed(s.seed, 0x2EC7ull);
      RectNet alg(inst.ground, p);
      for (const Shape& sh : inst.shapes) alg.process(std::get<AxisBox>(sh));
      for (std::size_t id : alg.all_ids()) out.alg_points.push_back(inst.ground.point(id));
      break;
    }
    case Family::box_net3: {
      BoxNet3Params p = cfg.box3;
      p.eps = s.eps;
      p.seed = mix_seed(s.seed, 0xB0E7ull);
      BoxNet3 alg(inst.ground, p);
      for (const Shape& sh : inst.shapes) alg.process(std::get<AxisBox>(sh));
      for (std::size_t id : alg.all_ids()) out.alg_points.push_back(inst.ground.point(id));
      break;
    }
    case Family::pierce_box:
    case Family::pierce_ellipsoid: {
      CenterPiercer alg(s.dim());
      for (const Shape& sh : inst.shapes) alg.process(sh);
      out.alg_points = alg.points();
      out.opt_points = piercing_bounds(inst.shapes).certificate;
      break;
    }
    case Family::pierce_fat: {
      LayerTable table(s.M, cfg.fat_scale);
      FatPiercer alg(s.dim(), table);
      std::vector<Shape> pierceable;
      for (const Shape& sh : inst.shapes) {
        alg.process(std::get<FatObject>(sh));
        pierceable.push_back(to_pierceable(std::get<FatObject>(sh)));
      }
      for (const FatPiercePoint& p : alg.points()) out.alg_points.push_back(p.r);
      out.opt_points = piercing_bounds(pierceable).certificate;
      break;
    }
  }
  return out;
}

struct ExperimentResult {
  std::vector<TrialReport> reports;
  double max_ratio = 0;
  double mean_ratio = 0;
  double mean_alg_size = 0;
  bool all_valid = true;
  bool all_pass = true;

  json summary(const ExperimentConfig& cfg) const {
    return json{{"trials", reports.size()},
                {"max_ratio", max_ratio},
                {"mean_ratio", mean_ratio},
                {"mean_alg_size", mean_alg_size},
                {"all_valid", all_valid},
                {"all_pass", all_pass},
                {"size_bound_K", 10.0 * cfg.rect.c_a * cfg.rect.delta.to_double()}};
  }
};

inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  ExperimentResult out;
  out.reports.reserve(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) out.reports.push_back(run_trial(cfg, t));

  double ratio_sum = 0, size_sum = 0;
  for (const TrialReport& r : out.reports) {
    out.max_ratio = std::max(out.max_ratio, r.ratio);
    ratio_sum += r.ratio;
    size_sum += double(r.alg_size);
    out.all_valid = out.all_valid && r.validity;
    out.all_pass = out.all_pass && r.pass();
  }
  out.mean_ratio = ratio_sum / double(out.reports.size());
  out.mean_alg_size = size_sum / double(out.reports.size());
  return out;
}

inline std::string csv_header() {
  return "seed,family,eps_or_M,alg_size,opt_kind,opt_value_or_lower,ratio,bound,pass,wall_ms";
}

inline std::string csv_row(const TrialReport& r) {
  char ratio[32], bound[32], wall[32];
  std::snprintf(ratio, sizeof ratio, "%.6g", r.ratio);
  std::snprintf(bound, sizeof bound, "%.6g", r.bound);
  std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
  std::ostringstream os;
  os << r.seed << ',' << r.family << ',' << r.eps_or_M << ',' << r.alg_size << ','
     << r.opt_kind << ',' << std::int64_t(r.opt_value) << ',' << ratio << ',' << bound << ','
     << (r.pass() ? "true" : "false") << ',' << wall;
  return os.str();
}

inline std::string csv_table(const std::vector<TrialReport>& reports) {
  std::string out = csv_header() + "\n";
  for (const TrialReport& r : reports) out += csv_row(r) + "\n";
  return out;
}

}  // namespace onet
