#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cosalg/io.hpp"
#include "cosalg/rng.hpp"
#include "cosalg/transform.hpp"
#include "cosalg/verify.hpp"

namespace {

using namespace cosalg;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

Signal load_signal(const Group& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return read_signal_csv(in, g);
}

std::vector<double> parse_coords(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("COSALG_SEED")) return std::stoull(env);
  return 42;
}

int cmd_gen(const std::string& group, const std::string& kind, const std::string& output) {
  const Group g = Group::parse(group);
  const Signal f = generate_signal(g, kind);
  std::ofstream file;
  write_signal_csv(open_output(file, output), f);
  return 0;
}

int cmd_transform(const std::string& group, const std::string& input,
                  const std::string& coords, int kmax, bool naive,
                  bool full_range, const std::string& output) {
  const Group g = Group::parse(group);
  const Signal f = load_signal(g, input);
  Spectrum s{g, {}, {}};
  std::string kind;
  switch (g.kind()) {
    case GroupKind::RealLine:
      if (coords.empty()) throw CLI::ValidationError("--coords is required for real groups");
      s = cosine_transform_real(f, parse_coords(coords));
      kind = "cosine-transform";
      break;
    case GroupKind::Integers:
      if (coords.empty()) throw CLI::ValidationError("--coords is required for integer groups");
      s = cosine_transform_integers(f, parse_coords(coords));
      kind = "discrete-time-cosine-transform";
      break;
    case GroupKind::Circle:
      if (kmax < 0) throw CLI::ValidationError("--kmax is required for circle groups");
      s = fourier_cosine_coeffs(f, kmax);
      kind = "fourier-cosine-coefficients";
      break;
    case GroupKind::CyclicGroup:
      if (!coords.empty()) {
        // explicit coordinate list goes through the slow path so the
        // domain check in from_coord applies per coordinate
        Spectrum picked{g, {}, {}};
        const auto cs = parse_coords(coords);
        picked.values.resize(static_cast<Eigen::Index>(cs.size()));
        for (size_t i = 0; i < cs.size(); ++i) {
          picked.coords.push_back(cs[i]);
          picked.values[static_cast<Eigen::Index>(i)] =
              functional_apply(CosineElement::from_coord(g, cs[i]), f);
        }
        s = picked;
      } else if (full_range) {
        s = dct_full_range(f, !naive);
      } else {
        s = naive ? dct_naive(f) : dct_fast(f);
      }
      kind = naive ? "dct-naive" : "dct";
      break;
  }
  std::ofstream file;
  write_spectrum_csv(open_output(file, output), s, kind);
  return 0;
}

int cmd_convolve(const std::string& group, const std::string& f_path,
                 const std::string& g_path, const std::string& mode, bool fast,
                 const std::string& output) {
  const Group g = Group::parse(group);
  const Signal f = load_signal(g, f_path);
  const Signal h = load_signal(g, g_path);
  Signal result = Signal::zero(g);
  if (mode == "classic") {
    result = convolve(f, h);
  } else if (mode == "anti") {
    result = anticonvolve(f, h);
  } else if (mode == "cosine") {
    result = fast ? cosine_convolve_fast(f, h) : cosine_convolve(f, h);
  } else {
    throw CLI::ValidationError("--mode must be classic, anti or cosine");
  }
  std::ofstream file;
  write_signal_csv(open_output(file, output), result);
  return 0;
}

int cmd_verify(std::uint64_t seed, int trials, double tol, bool has_tol,
               const std::string& output, const std::string& csv_path) {
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  if (has_tol) cfg.tol_override = tol;
  const VerificationReport report = run_suite(cfg);
  std::ofstream file;
  open_output(file, output) << report.to_text();
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path);
    csv << report.to_csv();
  }
  return report.pass() ? 0 : kExitVerifyFailure;
}

template <typename F>
long median_ns(int reps, F&& body) {
  std::vector<long> times;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

int cmd_bench(const std::string& sizes_text, int reps, std::uint64_t seed,
              const std::string& output) {
  std::ofstream file;
  std::ostream& os = open_output(file, output);
  os << "n,dct_naive_ns,dct_fast_ns,cosine_naive_ns,cosine_fast_ns\n";
  SplitMix64 rng(seed);
  for (double size : parse_coords(sizes_text)) {
    const int n = static_cast<int>(size);
    if (n < 1) throw CLI::ValidationError("bench sizes must be >= 1");
    const Group g = Group::cyclic(n);
    const Signal f = random_signal(g, rng), h = random_signal(g, rng);

    // fast paths must agree with the naive oracles before timing counts
    const double scale = 1e-9 * (1 + l1_norm(f) * l1_norm(h));
    const Spectrum sn = dct_naive(f), sf = dct_fast(f);
    if ((sn.values - sf.values).cwiseAbs().maxCoeff() > scale)
      throw std::runtime_error("bench: dct_fast disagrees with dct_naive at n=" + std::to_string(n));
    const Signal cn = cosine_convolve(f, h), cf = cosine_convolve_fast(f, h);
    if ((cn.values - cf.values).cwiseAbs().maxCoeff() > scale)
      throw std::runtime_error("bench: cosine_convolve_fast disagrees at n=" + std::to_string(n));

    double sink = 0;
    const long t_dct_naive = median_ns(reps, [&] { sink += dct_naive(f).values[0]; });
    const long t_dct_fast = median_ns(reps, [&] { sink += dct_fast(f).values[0]; });
    const long t_cc_naive = median_ns(reps, [&] { sink += cosine_convolve(f, h).values[0]; });
    const long t_cc_fast = median_ns(reps, [&] { sink += cosine_convolve_fast(f, h).values[0]; });
    if (!std::isfinite(sink)) throw std::runtime_error("bench: non-finite result");
    os << n << ',' << t_dct_naive << ',' << t_dct_fast << ',' << t_cc_naive
       << ',' << t_cc_fast << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cosine-convolution algebra toolkit"};
  app.require_subcommand(1);

  std::string group, kind, input, f_path, g_path, mode = "cosine";
  std::string coords, output, csv_path, sizes = "64,256,1024,4096";
  int kmax = -1, trials = 100, reps = 5;
  bool naive = false, full_range = false, fast = false;
  std::uint64_t seed = default_seed();
  double tol = 0;

  auto* gen = app.add_subcommand("gen", "generate a signal CSV");
  gen->add_option("--group", group, "group descriptor, e.g. cyclic:8")->required();
  gen->add_option("--kind", kind, "delta:<p> | box[:lo,hi] | gaussian | random:<seed>")->required();
  gen->add_option("--output,-o", output, "output path (default stdout)");

  auto* tr = app.add_subcommand("transform", "cosine transform of a signal CSV");
  tr->add_option("--group", group)->required();
  tr->add_option("--input,-i", input, "signal CSV")->required();
  tr->add_option("--coords", coords, "comma-separated coordinates (real/integers/cyclic)");
  tr->add_option("--kmax", kmax, "highest coefficient index (circle)");
  tr->add_flag("--naive", naive, "use the reference summation on cyclic groups");
  tr->add_flag("--full-range", full_range, "emit the redundant full range on cyclic groups");
  tr->add_option("--output,-o", output);

  auto* cv = app.add_subcommand("convolve", "convolve two signal CSVs");
  cv->add_option("--group", group)->required();
  cv->add_option("--f", f_path, "left signal CSV")->required();
  cv->add_option("--g", g_path, "right signal CSV")->required();
  cv->add_option("--mode", mode, "classic | anti | cosine");
  cv->add_flag("--fast", fast, "transform-domain path on cyclic groups");
  cv->add_option("--output,-o", output);

  auto* vf = app.add_subcommand("verify", "run the identity verification suite");
  vf->add_option("--seed", seed, "rng seed (default $COSALG_SEED or 42)");
  vf->add_option("--trials", trials, "trials per property");
  auto* tol_opt = vf->add_option("--tol", tol, "override every tolerance");
  vf->add_option("--output,-o", output, "text report path (default stdout)");
  vf->add_option("--csv", csv_path, "machine-readable CSV report path");

  auto* bn = app.add_subcommand("bench", "time naive vs fast paths");
  bn->add_option("--sizes", sizes, "comma-separated cyclic orders");
  bn->add_option("--reps", reps, "repetitions per timing (median)");
  bn->add_option("--seed", seed);
  bn->add_option("--output,-o", output);

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return cmd_gen(group, kind, output);
    if (tr->parsed()) return cmd_transform(group, input, coords, kmax, naive, full_range, output);
    if (cv->parsed()) return cmd_convolve(group, f_path, g_path, mode, fast, output);
    if (vf->parsed()) return cmd_verify(seed, trials, tol, !tol_opt->empty(), output, csv_path);
    if (bn->parsed()) return cmd_bench(sizes, reps, seed, output);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
