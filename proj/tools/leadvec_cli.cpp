// leadvec_cli.cpp — command-line front end: reads state files, runs the
// library operations, emits machine-readable JSON reports.
//
// State file: {"l": <int>, "amplitudes": [[re, im], ...]} with exactly 2^l
// entries; bit k of the entry index is the value of register bit k (k = 0
// least significant). Exit codes: 0 success, 1 input or verification error,
// 2 non-convergence, 3 not-a-product (check-product only).

#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leadvec/leadvec.hpp"
#include "leadvec/rng.hpp"

namespace {

using nlohmann::json;
using namespace leadvec;

constexpr const char* kIndexHelp =
    "Amplitude index convention: entry i of \"amplitudes\" is the basis state "
    "whose register bit k equals bit k of i, with k = 0 the least significant "
    "bit.";

json complex_pair(Complex c) { return json::array({c.real(), c.imag()}); }

json frame_to_json(const LocalFrame& f) {
  json out = json::array();
  for (int m = 0; m < f.num_bits(); ++m) {
    out.push_back(json::array(
        {json::array({complex_pair(f[m](0, 0)), complex_pair(f[m](0, 1))}),
         json::array({complex_pair(f[m](1, 0)), complex_pair(f[m](1, 1))})}));
  }
  return out;
}

json state_to_json_object(const RegisterState& h) {
  json amps = json::array();
  for (std::uint64_t i = 0; i < h.dim(); ++i) {
    amps.push_back(complex_pair(h[i]));
  }
  json out;
  out["l"] = h.num_bits();
  out["amplitudes"] = std::move(amps);
  return out;
}

json report_header(const std::string& command, const RegisterState& input) {
  json r;
  r["tool_version"] = version_string;
  r["command"] = command;
  r["input_digest"] = amplitude_digest(input);
  return r;
}

void emit(const std::string& path, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + path);
  }
  out << text;
}

double relative_difference(const RegisterState& a, const RegisterState& b) {
  double sq = 0.0;
  for (std::uint64_t i = 0; i < a.dim(); ++i) sq += std::norm(a[i] - b[i]);
  const double ref = a.norm();
  return ref > 0.0 ? std::sqrt(sq) / ref : std::sqrt(sq);
}

struct DecomposeOpts {
  std::string input;
  std::string output;
  OptimizerConfig cfg;
};

int cmd_decompose(const DecomposeOpts& o) {
  const RegisterState h = read_state_file(o.input);
  const Decomposition d = decompose(h, o.cfg);

  json terms = json::array();
  for (const ProductTerm& t : d.terms) {
    json factors = json::array();
    for (const auto& f : t.factors) {
      factors.push_back(json::array({complex_pair(f[0]), complex_pair(f[1])}));
    }
    terms.push_back({{"coefficient", complex_pair(t.coefficient)},
                     {"factors", std::move(factors)},
                     {"source_index", t.source_index.bits}});
  }

  json r = report_header("decompose", h);
  json& res = r["result"];
  res["l"] = h.num_bits();
  res["terms"] = std::move(terms);
  res["term_count"] = term_count(d, o.cfg.zero_tol);
  res["leading_index"] = d.leading_index;
  res["frame"] = frame_to_json(d.frame);
  res["reconstruction_error"] = relative_difference(h, reconstruct(d));
  res["diagnostics"] = {
      {"sweeps", d.diagnostics.sweeps},
      {"restarts_used", d.diagnostics.restarts_used},
      {"converged", d.diagnostics.converged},
      {"leading_sq_norm", d.diagnostics.leading_sq_norm},
      {"residual_sq_norm", d.diagnostics.residual_sq_norm},
      {"max_single_excitation", d.diagnostics.max_single_excitation},
      {"kappa", d.diagnostics.kappa_at_optimum}};
  emit(o.output, r);
  return d.diagnostics.converged ? 0 : 2;
}

struct CheckProductOpts {
  std::string input;
  std::string output;
  double product_tol = 1e-10;
  double zero_tol = 1e-12;
};

int cmd_check_product(const CheckProductOpts& o) {
  const RegisterState h = read_state_file(o.input);
  json r = report_header("check-product", h);
  try {
    const ProductFactorization f =
        factorize_product(h, o.product_tol, o.zero_tol);
    json& res = r["result"];
    res["is_product"] = true;
    res["factorization"] = {{"global_phase", complex_pair(f.global_phase)},
                            {"scale", f.scale},
                            {"angles", f.angles},
                            {"phases", f.phases},
                            {"relabel_mask", f.relabel_mask}};
    res["reconstruction_error"] = relative_difference(h, f.reconstruct());
    emit(o.output, r);
    return 0;
  } catch (const NotProductError& e) {
    json& res = r["result"];
    res["is_product"] = false;
    res["worst_defect"] = {{"s_bits", e.worst_defect().s.bits},
                           {"t_bits", e.worst_defect().t.bits},
                           {"bit", e.worst_defect().bit},
                           {"value", complex_pair(e.worst_defect().value)},
                           {"magnitude", std::abs(e.worst_defect().value)}};
    res["tolerance"] = e.tolerance();
    emit(o.output, r);
    return 3;
  }
}

int cmd_random(int l, std::uint64_t seed, const std::string& output) {
  const RegisterState h = random_state(l, seed);
  if (output.empty() || output == "-") {
    std::cout << state_to_json(h) << "\n";
  } else {
    write_state_file(output, h);
  }
  return 0;
}

int cmd_leading(const std::string& input, const std::string& output,
                double zero_tol) {
  const RegisterState h = read_state_file(input);
  const LeadingSplit s = leading_split(h, zero_tol);
  const std::uint64_t bound =
      (std::uint64_t{1} << h.num_bits()) - h.num_bits() - 1;

  json r = report_header("leading", h);
  json& res = r["result"];
  res["leading"] = state_to_json_object(s.leading);
  res["residual"] = state_to_json_object(s.residual);
  res["kappa"] = s.kappa;
  res["residual_nonzero_count"] =
      nonzero_count(s.residual, zero_tol, h.norm());
  res["residual_nonzero_bound"] = bound;
  emit(output, r);
  return 0;
}

struct VerifyOpts {
  int l = 3;
  int trials = 100;
  int samples = 20000;
  std::uint64_t seed = 0;
  std::string output;
};

// Oracle cross-check suite: every property pits the production path against
// an independent implementation on seeded random inputs.
int cmd_verify(const VerifyOpts& o) {
  if (o.l < 1 || o.l > 3) {
    throw std::invalid_argument("verify runs at l in [1, 3], got l=" +
                                std::to_string(o.l));
  }
  json checks = json::array();
  bool all_pass = true;
  const auto add = [&](const std::string& name, double max_err, double bound) {
    const bool pass = max_err <= bound;
    all_pass = all_pass && pass;
    checks.push_back({{"name", name},
                      {"max_error", max_err},
                      {"bound", bound},
                      {"pass", pass}});
  };

  OptimizerConfig cfg;
  cfg.seed = o.seed;

  if (o.l == 2) {
    double worst_sigma = 0.0, worst_recon = 0.0, worst_sum = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      const RegisterState h = random_state(2, mix_seed(o.seed, t));
      const SchmidtResult sr = schmidt_svd(h);
      worst_sum = std::max(
          worst_sum, std::abs(sr.sigma[0] * sr.sigma[0] +
                              sr.sigma[1] * sr.sigma[1] - h.squared_norm()));
      RegisterState rec = RegisterState::zero(2);
      for (int i = 0; i < 2; ++i) {
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            rec[a + 2 * b] +=
                sr.sigma[i] * sr.left_vectors[i][a] * sr.right_vectors[i][b];
          }
        }
      }
      worst_recon = std::max(worst_recon, relative_difference(h, rec));
      const OptimizeResult opt = optimize_frame(h, cfg);
      worst_sigma = std::max(
          worst_sigma, std::abs(sr.sigma[0] - std::abs(opt.state[0])));
    }
    add("schmidt-sigma-sq-sum", worst_sum, 1e-10);
    add("schmidt-reconstruction", worst_recon, 1e-10);
    add("schmidt-vs-sweep-leading", worst_sigma, 1e-8);
  }

  {
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      const RegisterState h = random_state(o.l, mix_seed(o.seed, 1000 + t));
      if (std::abs(h[0]) <= 1e-6 * h.norm()) continue;
      const RegisterState a = leading_vector(h);
      const RegisterState b = naive_leading_vector(h);
      worst = std::max(worst, relative_difference(a, b));
    }
    add("naive-leading-vector-agreement", worst, 1e-10);
  }

  {
    double worst = 0.0;
    const int cases = std::min(o.trials, 10);
    for (int t = 0; t < cases; ++t) {
      const RegisterState h = random_state(o.l, mix_seed(o.seed, 2000 + t));
      const double oracle =
          brute_force_max_leading(h, o.samples, mix_seed(o.seed, 3000 + t));
      const OptimizeResult opt = optimize_frame(h, cfg);
      worst = std::max(worst, oracle - std::abs(opt.state[0]));
    }
    add("brute-force-never-beats-sweep", worst, 1e-6);
  }

  {
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      std::mt19937_64 rng(mix_seed(o.seed, 4000 + t));
      const RegisterState h = random_state(o.l, rng());
      if (std::abs(h[0]) <= 1e-6 * h.norm()) continue;
      const Complex lambda(uniform_in(rng, -2.0, 2.0),
                           uniform_in(rng, -2.0, 2.0));
      RegisterState hl = h;
      for (std::uint64_t i = 0; i < hl.dim(); ++i) hl[i] *= lambda;
      RegisterState scaled = leading_vector(h);
      for (std::uint64_t i = 0; i < scaled.dim(); ++i) scaled[i] *= lambda;
      worst = std::max(worst,
                       relative_difference(scaled, leading_vector(hl)));
    }
    add("leading-vector-homogeneity", worst, 1e-12);
  }

  {
    int disagreements = 0;
    for (int t = 0; t < o.trials; ++t) {
      const RegisterState h = random_state(o.l, mix_seed(o.seed, 5000 + t));
      if (is_product(h) != is_product_full_scan(h)) ++disagreements;
      std::mt19937_64 rng(mix_seed(o.seed, 6000 + t));
      const RegisterState p = apply_local_frame(RegisterState::basis(o.l, 0),
                                                random_local_frame(o.l, rng));
      if (is_product(p) != is_product_full_scan(p)) ++disagreements;
      if (!is_product(p)) ++disagreements;
    }
    add("reduced-vs-full-product-test", disagreements, 0);
  }

  json r;
  r["tool_version"] = version_string;
  r["command"] = "verify";
  r["result"] = {{"l", o.l},
                 {"trials", o.trials},
                 {"checks", std::move(checks)},
                 {"all_pass", all_pass}};
  emit(o.output, r);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("leadvec — orthogonal product-state decomposition "
                           "of qubit register states.\n") +
               kIndexHelp};
  app.require_subcommand(1);

  DecomposeOpts dec;
  dec.cfg.threads = 0;  // CLI default: available parallelism
  CLI::App* sub_dec =
      app.add_subcommand("decompose",
                         "Decompose a state into at most 2^l - l orthogonal "
                         "product terms");
  sub_dec->add_option("--input", dec.input, "state file (JSON)")->required();
  sub_dec->add_option("--output", dec.output, "report path (default stdout)");
  sub_dec->add_option("--tol", dec.cfg.zero_tol, "zero tolerance (relative)");
  sub_dec->add_option("--conv-eps", dec.cfg.conv_eps,
                      "sweep gain convergence threshold");
  sub_dec->add_option("--stationarity-tol", dec.cfg.stationarity_tol,
                      "single-excitation stationarity tolerance");
  sub_dec->add_option("--max-sweeps", dec.cfg.max_sweeps, "sweep budget");
  sub_dec->add_option("--restarts", dec.cfg.restarts,
                      "optimizer restarts (first is the identity frame)");
  sub_dec->add_option("--seed", dec.cfg.seed, "restart seed");
  sub_dec->add_option("--threads", dec.cfg.threads,
                      "parallel restarts (0 = available parallelism)");

  CheckProductOpts chk;
  CLI::App* sub_chk = app.add_subcommand(
      "check-product", "Test the exchangeability conditions and factorize");
  sub_chk->add_option("--input", chk.input, "state file (JSON)")->required();
  sub_chk->add_option("--output", chk.output, "report path (default stdout)");
  sub_chk->add_option("--tol", chk.zero_tol, "zero tolerance (relative)");
  sub_chk->add_option("--product-tol", chk.product_tol,
                      "defect tolerance, relative to ||h||^2");

  int rnd_l = 0;
  std::uint64_t rnd_seed = 0;
  std::string rnd_output;
  CLI::App* sub_rnd = app.add_subcommand(
      "random", "Write a seeded Haar-like random state file");
  sub_rnd->add_option("--l", rnd_l, "register length")->required();
  sub_rnd->add_option("--seed", rnd_seed, "seed");
  sub_rnd->add_option("--output", rnd_output, "state path (default stdout)");

  std::string lead_input, lead_output;
  double lead_tol = 1e-12;
  CLI::App* sub_lead = app.add_subcommand(
      "leading", "Split a state into its leading vector and residual");
  sub_lead->add_option("--input", lead_input, "state file (JSON)")->required();
  sub_lead->add_option("--output", lead_output, "report path (default stdout)");
  sub_lead->add_option("--tol", lead_tol, "zero tolerance (relative)");

  VerifyOpts ver;
  CLI::App* sub_ver = app.add_subcommand(
      "verify", "Run the oracle cross-check suite (l <= 3)");
  sub_ver->add_option("--l", ver.l, "register length (1-3)");
  sub_ver->add_option("--trials", ver.trials, "trials per property");
  sub_ver->add_option("--samples", ver.samples,
                      "brute-force frame samples (>= 10000)");
  sub_ver->add_option("--seed", ver.seed, "seed");
  sub_ver->add_option("--output", ver.output, "report path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sub_dec->parsed()) return cmd_decompose(dec);
    if (sub_chk->parsed()) return cmd_check_product(chk);
    if (sub_rnd->parsed()) return cmd_random(rnd_l, rnd_seed, rnd_output);
    if (sub_lead->parsed()) return cmd_leading(lead_input, lead_output, lead_tol);
    if (sub_ver->parsed()) return cmd_verify(ver);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
