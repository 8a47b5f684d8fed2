#include "cosalg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "cosalg/rng.hpp"

namespace cosalg {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double fmt_tol(const SuiteConfig& cfg, double dflt) {
  return cfg.tol_override ? *cfg.tol_override : dflt;
}

PropertyRecord make_record(const SuiteConfig& cfg, std::string name,
                           std::string identity, long trials, long skipped,
                           double max_residual, double dflt_tol) {
  PropertyRecord r;
  r.name = std::move(name);
  r.identity = std::move(identity);
  r.trials = trials;
  r.skipped = skipped;
  r.max_residual = max_residual;
  r.tol = fmt_tol(cfg, dflt_tol);
  r.pass = max_residual <= r.tol;
  return r;
}

std::vector<Group> sweep_groups(const SuiteConfig& cfg) {
  std::vector<Group> gs;
  for (int n : cfg.cyclic_sizes) gs.push_back(Group::cyclic(n));
  gs.push_back(Group::circle(cfg.circle_size));
  gs.push_back(Group::integers(cfg.integers_radius));
  gs.push_back(Group::real_line(cfg.real_half_width, cfg.real_step));
  return gs;
}

// On R / Z, signals supported in the middle half of the window keep
// every sum that appears in the verified identities inside the window.
Signal random_windowed(const Group& g, SplitMix64& rng) {
  Signal f = random_signal(g, rng);
  if (!g.wraps()) {
    const int n = g.size();
    for (int i = 0; i < n; ++i)
      if (i < n / 4 || i >= (3 * n) / 4) f.values[i] = 0;
  }
  return f;
}

int random_small_shift(const Group& g, SplitMix64& rng) {
  if (g.wraps()) return static_cast<int>(rng.below(static_cast<std::uint64_t>(g.size())));
  const int radius = std::max(1, g.size() / 8);
  const int off = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * radius + 1))) - radius;
  return g.zero_index() + off;
}

double sampled_coord(const Group& g, SplitMix64& rng) {
  switch (g.kind()) {
    case GroupKind::RealLine: return 2.0 * rng.uniform01();
    case GroupKind::Integers: return 0.5 * rng.uniform01();
    case GroupKind::Circle:
      return static_cast<double>(rng.below(static_cast<std::uint64_t>(g.sample_count() / 2)));
    case GroupKind::CyclicGroup:
      return static_cast<double>(rng.below(static_cast<std::uint64_t>(half_range_size(g.order()))));
  }
  return 0;
}

}  // namespace

std::vector<PropertyRecord> check_submultiplicativity(const SuiteConfig& cfg) {
  SplitMix64 rng(cfg.seed + 0x01);
  double worst_ineq = 0, worst_eq = 0;
  long trials_ineq = 0, trials_eq = 0;
  for (const Group& g : sweep_groups(cfg)) {
    for (int t = 0; t < cfg.trials; ++t) {
      const Signal f = random_signal(g, rng), h = random_signal(g, rng);
      const double bound = l1_norm(f) * l1_norm(h);
      const double scale = 1 + bound;
      worst_ineq = std::max(worst_ineq, (l1_norm(cosine_convolve(f, h)) - bound) / scale);
      ++trials_ineq;
      if (g.kind() == GroupKind::CyclicGroup) {
        Signal fp(g, f.values.cwiseAbs()), hp(g, h.values.cwiseAbs());
        const double b = l1_norm(fp) * l1_norm(hp);
        worst_eq = std::max(worst_eq,
                            std::abs(l1_norm(cosine_convolve(fp, hp)) - b) / (1 + b));
        ++trials_eq;
      }
    }
  }
  return {
      make_record(cfg, "submultiplicativity", "|f*c g|_1 <= |f|_1 |g|_1",
                  trials_ineq, 0, std::max(0.0, worst_ineq), 1e-10),
      make_record(cfg, "submultiplicativity_equality_nonneg",
                  "|f*c g|_1 = |f|_1 |g|_1 for f,g >= 0 on Z_n", trials_eq, 0,
                  worst_eq, 1e-12),
  };
}

std::vector<PropertyRecord> check_dalembert_convolution(const SuiteConfig& cfg) {
  SplitMix64 rng(cfg.seed + 0x02);
  double worst = 0;
  long trials = 0, skipped = 0;
  for (const Group& g : sweep_groups(cfg)) {
    const int n = g.size();
    for (int t = 0; t < cfg.trials; ++t) {
      const Signal even = symmetrize(random_windowed(g, rng));
      const double scale = 1 + l1_norm(even) * l1_norm(even);
      const bool exhaustive = g.wraps() && n <= 16;
      const int pairs = exhaustive ? n * n : 32;
      for (int p = 0; p < pairs; ++p) {
        const int x = exhaustive ? p / n : random_small_shift(g, rng);
        const int y = exhaustive ? p % n : random_small_shift(g, rng);
        const int sum = g.add(x, y), diff = g.sub(x, y);
        if (sum == kOffWindow || diff == kOffWindow) {
          ++skipped;
          continue;
        }
        const Signal lhs = cosine_convolve(translate(even, y), translate(even, x));
        Signal mean = translate(even, sum);
        mean.values = (mean.values + translate(even, diff).values) / 2;
        const Signal rhs = cosine_convolve(even, mean);
        worst = std::max(worst,
                         (lhs.values - rhs.values).cwiseAbs().maxCoeff() / scale);
        ++trials;
      }
    }
  }

  // one deliberately odd g: the identity needs evenness and must fail
  const Group g8 = Group::cyclic(8);
  Signal odd = Signal::zero(g8);
  odd.values[1] = 1;
  odd.values[7] = -1;
  const Signal lhs = cosine_convolve(translate(odd, 2), translate(odd, 1));
  Signal mean = translate(odd, 3);
  mean.values = (mean.values + translate(odd, g8.sub(1, 2)).values) / 2;
  const Signal rhs = cosine_convolve(odd, mean);
  const double odd_residual = (lhs.values - rhs.values).cwiseAbs().maxCoeff();

  PropertyRecord main = make_record(cfg, "dalembert_convolution",
                                    "L_y g *c L_x g = g *c (L_{x+y} g + L_{x-y} g)/2",
                                    trials, skipped, worst, 1e-10);
  PropertyRecord control = make_record(cfg, "dalembert_odd_control",
                                       "odd g breaks the identity", 1, 0,
                                       odd_residual, 1e-10);
  control.informational = true;
  control.pass = odd_residual > control.tol;  // caught, as expected
  return {main, control};
}

std::vector<PropertyRecord> check_multiplicativity(const SuiteConfig& cfg) {
  SplitMix64 rng(cfg.seed + 0x03);
  double worst = 0;
  long trials = 0;
  for (const Group& g : sweep_groups(cfg)) {
    std::vector<CosineElement> phis;
    if (g.kind() == GroupKind::CyclicGroup) {
      phis = enumerate_class(g);
    } else {
      for (int i = 0; i < 8; ++i)
        phis.push_back(CosineElement::from_coord(g, sampled_coord(g, rng)));
    }
    for (int t = 0; t < cfg.trials; ++t) {
      const Signal f = random_windowed(g, rng), h = random_windowed(g, rng);
      const Signal fc = cosine_convolve(f, h);
      const double scale = 1 + l1_norm(f) * l1_norm(h);
      for (const CosineElement& phi : phis) {
        const double lhs = functional_apply(phi, fc);
        const double rhs = functional_apply(phi, f) * functional_apply(phi, h);
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
        ++trials;
      }
    }
  }
  return {make_record(cfg, "gelfand_multiplicativity",
                      "m_phi(f *c g) = m_phi(f) m_phi(g)", trials, 0, worst, 1e-10)};
}

std::vector<PropertyRecord> check_reflection_identity(const SuiteConfig& cfg) {
  SplitMix64 rng(cfg.seed + 0x04);
  double worst_conv = 0, worst_func = 0;
  long trials = 0;
  for (const Group& g : sweep_groups(cfg)) {
    for (int t = 0; t < cfg.trials; ++t) {
      const Signal f = random_signal(g, rng);
      const double scale = 1 + l1_norm(f) * l1_norm(f);
      const Signal lhs = cosine_convolve(reflect(f), f);
      const Signal rhs = cosine_convolve(f, f);
      worst_conv = std::max(worst_conv,
                            (lhs.values - rhs.values).cwiseAbs().maxCoeff() / scale);
      const CosineElement phi = CosineElement::from_coord(g, sampled_coord(g, rng));
      const double lf = functional_apply(phi, symmetrize(f));
      const double rf = 2 * functional_apply(phi, f);
      worst_func = std::max(worst_func, std::abs(lf - rf) / (1 + l1_norm(f)));
      ++trials;
    }
  }
  return {
      make_record(cfg, "reflection_identity", "(f o iota) *c f = f *c f", trials,
                  0, worst_conv, 1e-12),
      make_record(cfg, "symmetrize_functional", "m_phi(f + f o iota) = 2 m_phi(f)",
                  trials, 0, worst_func, 1e-12),
  };
}

std::vector<PropertyRecord> check_cosine_class(const SuiteConfig& cfg) {
  SplitMix64 rng(cfg.seed + 0x05);
  double worst_dalembert = 0, worst_bounds = 0, worst_character = 0;
  long trials = 0, skipped = 0;
  for (const Group& g : sweep_groups(cfg)) {
    std::vector<CosineElement> phis;
    if (g.kind() == GroupKind::CyclicGroup && g.order() <= 64) {
      phis = enumerate_class(g);
    } else {
      for (int i = 0; i < 8; ++i)
        phis.push_back(CosineElement::from_coord(g, sampled_coord(g, rng)));
    }
    const bool exhaustive = g.wraps() && g.size() <= 64;
    for (const CosineElement& phi : phis) {
      double sup = 0;
      for (int i = 0; i < g.size(); ++i) {
        sup = std::max(sup, std::abs(phi(i)));
        worst_character = std::max(worst_character,
                                   std::abs(phi.character(i).real() - phi(i)));
      }
      worst_bounds = std::max(worst_bounds, sup - 1);
      worst_bounds = std::max(worst_bounds, std::abs(phi(g.zero_index()) - 1));
      const int pairs = exhaustive ? g.size() * g.size() : 64;
      for (int p = 0; p < pairs; ++p) {
        const int x = exhaustive ? p / g.size() : random_small_shift(g, rng);
        const int y = exhaustive ? p % g.size() : random_small_shift(g, rng);
        if (g.add(x, y) == kOffWindow || g.sub(x, y) == kOffWindow) {
          ++skipped;
          continue;
        }
        worst_dalembert = std::max(worst_dalembert,
                                   std::abs(dalembert_residual(phi, x, y)));
        ++trials;
      }
    }
  }

  // negative control: sin(2 pi x) on the circle, x = y = 1/4
  const Group circ = Group::circle(cfg.circle_size);
  const auto sine = [](double x) { return std::sin(kTwoPi * x); };
  const int quarter = cfg.circle_size / 4;
  const double control = std::abs(dalembert_residual(sine, circ, quarter, quarter));

  PropertyRecord dal = make_record(cfg, "cosine_class_dalembert",
                                   "phi(x) phi(y) = (phi(x+y) + phi(x-y))/2",
                                   trials, skipped, worst_dalembert, 1e-12);
  PropertyRecord bounds = make_record(cfg, "cosine_class_bounds",
                                      "sup|phi| <= 1 and phi(0) = 1", trials, 0,
                                      worst_bounds, 1e-15);
  PropertyRecord chr = make_record(cfg, "cosine_class_character",
                                   "phi = Re(chi_phi), |chi_phi| = 1", trials, 0,
                                   worst_character, 1e-15);
  PropertyRecord neg = make_record(cfg, "cosine_class_negative_control",
                                   "sin(2 pi x) is not in the cosine class", 1, 0,
                                   std::abs(control - 1), 1e-12);
  neg.informational = true;
  return {dal, bounds, chr, neg};
}

std::vector<PropertyRecord> check_separation_functionals(const SuiteConfig& cfg) {
  // sinc identity on a RealLine window containing [0, 1]
  const Group real = Group::real_line(std::max(2.0, cfg.real_half_width), cfg.real_step);
  Signal box = Signal::zero(real);
  for (int i = 0; i < real.size(); ++i) {
    const double x = real.point(i);
    if (x >= 0 && x <= 1) box.values[i] = 1;
  }
  double worst_sinc = 0;
  long trials = 0;
  for (int i = 0; i <= 40; ++i) {
    const double y = i * 0.05;
    const double got = functional_apply(CosineElement::from_coord(real, y), box);
    const double want = (y == 0) ? 1.0 : std::sin(kTwoPi * y) / (kTwoPi * y);
    worst_sinc = std::max(worst_sinc, std::abs(got - want));
    ++trials;
  }

  // cos(2 pi alpha) = m_phi(delta_1) separates alpha in [0, 1/2]:
  // strictly decreasing on a fine grid
  const Group ints = Group::integers(cfg.integers_radius);
  const Signal d1 = Signal::delta(ints, ints.zero_index() + 1);
  double worst_mono = 0;
  double prev = 2;
  for (int i = 0; i <= 100; ++i) {
    const double alpha = 0.5 * i / 100.0;
    const double v = functional_apply(CosineElement::from_coord(ints, alpha), d1);
    if (i > 0) worst_mono = std::max(worst_mono, v - prev);  // must decrease
    prev = v;
  }

  return {
      make_record(cfg, "separation_sinc", "m_phi(1_[0,1]) = sinc(2 pi y)", trials,
                  0, worst_sinc, 2 * cfg.real_step),
      make_record(cfg, "separation_integers",
                  "alpha -> cos(2 pi alpha) is injective on [0, 1/2]", 101, 0,
                  worst_mono, 0.0),
  };
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  VerificationReport report;
  const auto append = [&report](std::vector<PropertyRecord> rs) {
    for (auto& r : rs) report.records.push_back(std::move(r));
  };
  append(check_submultiplicativity(cfg));
  append(check_dalembert_convolution(cfg));
  append(check_multiplicativity(cfg));
  append(check_reflection_identity(cfg));
  append(check_cosine_class(cfg));
  append(check_separation_functionals(cfg));
  return report;
}

bool VerificationReport::pass() const {
  for (const auto& r : records)
    if (!r.informational && !r.pass) return false;
  return true;
}

std::string VerificationReport::to_text() const {
  std::string out;
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf,
                  "[%s] %-34s trials=%-7ld skipped=%-5ld max_residual=%.17g tol=%.17g%s\n",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.trials, r.skipped,
                  r.max_residual, r.tol, r.informational ? " (control)" : "");
    out += buf;
  }
  out += pass() ? "overall: PASS\n" : "overall: FAIL\n";
  return out;
}

std::string VerificationReport::to_csv() const {
  std::string out = "property,identity,trials,skipped,max_residual,tol,verdict\n";
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%s,\"%s\",%ld,%ld,%.17g,%.17g,%s\n",
                  r.name.c_str(), r.identity.c_str(), r.trials, r.skipped,
                  r.max_residual, r.tol, r.pass ? "pass" : "fail");
    out += buf;
  }
  return out;
}

}  // namespace cosalg
