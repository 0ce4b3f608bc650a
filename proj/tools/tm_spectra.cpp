// tm-spectra: spectral and fractal characteristics of the generalized
// Thue-Morse family on the binary torus. Subcommands cover the sequence,
// autocorrelations, the Riesz product, partition pressure, the word-level
// combinatorics around the singularity, and the derived spectra.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tmspectra/autocorr.hpp"
#include "tmspectra/combinatorics.hpp"
#include "tmspectra/measure.hpp"
#include "tmspectra/potential.hpp"
#include "tmspectra/pressure.hpp"
#include "tmspectra/sequence.hpp"
#include "tmspectra/spectra.hpp"

using json = nlohmann::ordered_json;
using namespace tmspectra;

namespace {

constexpr const char* kSchema = "tm-spectra/1";

struct Options {
  std::string format = "json";
  unsigned workers = 0;
  std::uint64_t seed = 20240101;
};

CircleParameter parse_c(const std::string& spec) {
  const auto slash = spec.find('/');
  if (slash != std::string::npos) {
    const std::int64_t p = std::stoll(spec.substr(0, slash));
    const std::int64_t q = std::stoll(spec.substr(slash + 1));
    return make_parameter(p, q);
  }
  return make_parameter(std::stod(spec));
}

// "a:b:k" (k points from a to b), "x,y,z", or a single value.
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    double a, b;
    int k;
    char c1, c2;
    std::istringstream in(spec);
    if (!(in >> a >> c1 >> b >> c2 >> k) || c1 != ':' || c2 != ':' || k < 1)
      throw CLI::ValidationError("grid", "expected start:stop:count");
    for (int i = 0; i < k; ++i)
      out.push_back(k == 1 ? a : a + (b - a) * static_cast<double>(i) / (k - 1));
  } else {
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stod(tok));
  }
  if (out.empty()) throw CLI::ValidationError("grid", "empty grid");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> parse_c_list(const std::string& spec) {
  std::vector<std::string> out;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(tok);
  return out;
}

void emit(const Options& opt, const json& doc, const std::vector<std::string>& columns,
          const std::vector<std::vector<double>>& rows) {
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < columns.size(); ++i)
    std::cout << columns[i] << (i + 1 < columns.size() ? "," : "\n");
  std::cout.precision(17);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
  }
}

json doc_header(const std::string& quantity, double c, json params) {
  json doc;
  doc["schema"] = kSchema;
  doc["quantity"] = quantity;
  doc["c"] = c;
  doc["params"] = std::move(params);
  return doc;
}

// -------------------------------------------------------------- subcommands

int run_sequence(const Options& opt, const std::string& cspec, std::uint64_t length) {
  const CircleParameter param = parse_c(cspec);
  const TmPrefix prefix = tm_prefix(param, length);
  json doc = doc_header("sequence", param.c, {{"length", length}});
  std::vector<std::vector<double>> rows;
  json jrows = json::array();
  for (std::uint64_t n = 0; n < prefix.size(); ++n) {
    rows.push_back({static_cast<double>(n), prefix.values[n].real(), prefix.values[n].imag()});
    if (opt.format == "json")
      jrows.push_back({{"n", n}, {"re", prefix.values[n].real()}, {"im", prefix.values[n].imag()}});
  }
  doc["rows"] = std::move(jrows);
  emit(opt, doc, {"n", "re", "im"}, rows);
  return 0;
}

int run_eta(const Options& opt, const std::string& cspec, std::uint64_t max_index) {
  const CircleParameter param = parse_c(cspec);
  const EtaTable table = eta_table(param, max_index);
  json doc = doc_header("eta", param.c, {{"max", max_index}});
  std::vector<std::vector<double>> rows;
  json jrows = json::array();
  for (std::uint64_t n = 0; n <= max_index; ++n) {
    rows.push_back({static_cast<double>(n), table[n].real(), table[n].imag()});
    if (opt.format == "json")
      jrows.push_back({{"n", n}, {"re", table[n].real()}, {"im", table[n].imag()}});
  }
  doc["rows"] = std::move(jrows);
  emit(opt, doc, {"n", "re", "im"}, rows);
  return 0;
}

int run_d2(const Options& opt, const std::string& cspec, bool plotdata) {
  std::vector<CircleParameter> params;
  if (cspec.find(':') != std::string::npos) {
    for (double c : parse_grid(cspec)) params.push_back(make_parameter(c));
  } else {
    for (const auto& tok : parse_c_list(cspec)) params.push_back(parse_c(tok));
  }
  json doc;
  doc["schema"] = kSchema;
  doc["quantity"] = "d2";
  doc["params"] = {{"count", params.size()}};
  std::vector<std::vector<double>> rows;
  json jrows = json::array();
  for (const auto& p : params) {
    const Bracket l = lambda1(p);
    const Bracket d = correlation_exponent(p);
    rows.push_back({p.c, l.lo, l.hi, d.lo, d.hi});
    if (opt.format == "json")
      jrows.push_back({{"c", p.c},
                       {"lambda1", {{"lo", l.lo}, {"hi", l.hi}}},
                       {"d2", {{"lo", d.lo}, {"hi", d.hi}}}});
  }
  doc["rows"] = std::move(jrows);
  if (plotdata) {
    std::cout << "# c lambda1_lo lambda1_hi d2_lo d2_hi\n";
    std::cout.precision(17);
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) std::cout << r[i] << (i + 1 < r.size() ? " " : "\n");
    }
    return 0;
  }
  emit(opt, doc, {"c", "lambda1_lo", "lambda1_hi", "d2_lo", "d2_hi"}, rows);
  return 0;
}

int run_riesz(const Options& opt, const std::string& cspec, int order, const std::string& at,
              const std::string& cylinder) {
  const CircleParameter param = parse_c(cspec);
  if (!at.empty()) {
    const double x = std::stod(at);
    const PartialProduct pp = partial_product(param, order);
    const double d = density_at(pp, x);
    json doc = doc_header("riesz-density", param.c, {{"order", order}, {"x", x}});
    doc["rows"] = json::array({{{"x", x}, {"density", d}}});
    emit(opt, doc, {"x", "density"}, {{x, d}});
    return 0;
  }
  if (!cylinder.empty()) {
    const DyadicWord w = DyadicWord::parse(cylinder);
    const CylinderMeasure cm = cylinder_measure(param, w, 8);
    json doc = doc_header("riesz-cylinder", param.c, {{"order", order}, {"cylinder", cylinder}});
    doc["lo"] = cm.estimate.lo;
    doc["hi"] = cm.estimate.hi;
    doc["meta"] = {{"gibbs_lo", cm.gibbs_lo.is_minus_inf() ? json(nullptr)
                                                           : json(cm.gibbs_lo.as_double())},
                   {"gibbs_hi", cm.gibbs_hi},
                   {"clamped", cm.clamped}};
    emit(opt, doc, {"lo", "hi"}, {{cm.estimate.lo, cm.estimate.hi}});
    return 0;
  }
  const PartialProduct pp = partial_product(param, order);
  json doc = doc_header("riesz-coefficients", param.c, {{"order", order}});
  std::vector<std::vector<double>> rows;
  json jrows = json::array();
  const auto& coeffs = pp.nonnegative_coeffs();
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    rows.push_back({static_cast<double>(m), coeffs[m].real(), coeffs[m].imag()});
    if (opt.format == "json")
      jrows.push_back({{"m", m}, {"re", coeffs[m].real()}, {"im", coeffs[m].imag()}});
  }
  doc["rows"] = std::move(jrows);
  emit(opt, doc, {"m", "re", "im"}, rows);
  return 0;
}

int run_pressure(const Options& opt, const std::string& cspec, const std::string& tspec, int depth,
                 int restrict_m, int grid_depth) {
  const CircleParameter param = parse_c(cspec);
  const std::vector<double> ts = parse_grid(tspec);
  json doc = doc_header("pressure", param.c,
                        {{"depth", depth}, {"grid_depth", grid_depth}, {"restrict", restrict_m}});
  std::vector<std::vector<double>> rows;
  json jrows = json::array();
  for (double t : ts) {
    const PressureEstimate est =
        restrict_m > 0 ? restricted_partition_pressure(param, t, depth, restrict_m, grid_depth)
                       : partition_pressure(param, t, depth, grid_depth, opt.workers);
    rows.push_back({t, est.value.lo, est.value.hi});
    if (opt.format == "json")
      jrows.push_back({{"t", t},
                       {"lo", est.value.lo},
                       {"hi", est.value.hi},
                       {"depth", est.depth},
                       {"mode", est.mode == PressureEstimate::Mode::kSupBased ? "sup" : "inf"}});
  }
  doc["rows"] = std::move(jrows);
  emit(opt, doc, {"t", "lo", "hi"}, rows);
  return 0;
}

int run_words(const Options& opt, const std::string& cspec, int m, int count_n, bool markov,
              int g_depth) {
  const CircleParameter param = parse_c(cspec);
  const SingularityCoding coding(param);
  if (g_depth > 0) {
    json doc = doc_header("words-g", param.c, {{"n", g_depth}});
    json names = json::array();
    for (const DyadicWord& w : coding.g_n(g_depth)) names.push_back(w.to_string());
    doc["rows"] = std::move(names);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  const ForbiddenAutomaton aut = forbidden_automaton(coding, m);
  json doc = doc_header("words", param.c, {{"m", m}});
  doc["meta"] = {{"dyadic", coding.is_dyadic()},
                 {"states", aut.state_count()},
                 {"forbidden", aut.forbidden.size()}};
  if (count_n > 0) {
    json counts = json::array();
    std::vector<std::vector<double>> rows;
    for (int n = 1; n <= count_n; ++n) {
      const std::uint64_t cnt = aut.count_words(n);
      counts.push_back({{"n", n}, {"count", cnt}});
      rows.push_back({static_cast<double>(n), static_cast<double>(cnt)});
    }
    doc["rows"] = std::move(counts);
    if (markov) {
      const MarkovReport rep = markov_check(aut);
      doc["markov"] = {{"irreducible", rep.irreducible},
                       {"aperiodic", rep.aperiodic},
                       {"spectral_radius", rep.spectral_radius},
                       {"essential_states", rep.essential_states}};
    }
    emit(opt, doc, {"n", "count"}, rows);
    return 0;
  }
  if (markov) {
    const MarkovReport rep = markov_check(aut);
    doc["markov"] = {{"irreducible", rep.irreducible},
                     {"aperiodic", rep.aperiodic},
                     {"spectral_radius", rep.spectral_radius},
                     {"essential_states", rep.essential_states}};
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_spectrum(const Options& opt, const std::string& cspec, const std::string& kind,
                 const std::string& gridspec, int depth, double r, const std::string& pipeline,
                 bool plotdata) {
  const CircleParameter param = parse_c(cspec);
  json doc = doc_header("spectrum-" + kind, param.c,
                        {{"depth", depth}, {"kind", kind}, {"r", r}, {"pipeline", pipeline}});
  std::vector<std::string> cols;
  std::vector<std::vector<double>> rows;
  json jrows = json::array();

  auto lq_curve = [&](const std::vector<double>& qs) {
    const LqPipeline pipe = pipeline == "measure" ? LqPipeline::kMeasurePartition
                                                  : LqPipeline::kPressurePartition;
    return lq_spectrum(param, qs, depth, pipe, 8, opt.workers);
  };

  if (kind == "lq") {
    const std::vector<double> qs = parse_grid(gridspec.empty() ? "0:2:17" : gridspec);
    const SpectrumCurve curve = lq_curve(qs);
    cols = {"q", "lo", "hi"};
    for (std::size_t i = 0; i < curve.size(); ++i) {
      rows.push_back({curve.arguments[i], curve.values[i].lo, curve.values[i].hi});
      jrows.push_back(
          {{"q", curve.arguments[i]}, {"lo", curve.values[i].lo}, {"hi", curve.values[i].hi}});
    }
  } else if (kind == "birkhoff" || kind == "dimension") {
    std::vector<double> alphas;
    if (!gridspec.empty()) {
      alphas = parse_grid(gridspec);
    } else {
      const SpectrumCurve p = pressure_curve(
          param, parse_grid("0:3:25"), depth, 3, opt.workers);
      alphas = default_alpha_grid(p);
      if (kind == "dimension") {
        for (double& a : alphas) a /= -kLog2;
        std::sort(alphas.begin(), alphas.end());
      }
    }
    const LegendreCurve curve = kind == "birkhoff"
                                    ? birkhoff_spectrum(param, alphas, depth, opt.workers)
                                    : dimension_spectrum(param, alphas, depth, opt.workers);
    cols = {"alpha", "lo", "hi"};
    for (std::size_t i = 0; i < curve.alphas.size(); ++i) {
      rows.push_back({curve.alphas[i], curve.values[i].lo, curve.values[i].hi});
      jrows.push_back(
          {{"alpha", curve.alphas[i]}, {"lo", curve.values[i].lo}, {"hi", curve.values[i].hi}});
    }
    doc["meta"] = {{"alpha_min", curve.alpha_min}, {"alpha_max", curve.alpha_max}};
    if (curve.excluded_alpha) doc["meta"]["excluded_alpha"] = *curve.excluded_alpha;
  } else if (kind == "fourier") {
    const FourierDimensionReport rep = fourier_dimension(param, depth, 20, opt.workers);
    cols = {"route", "lo", "hi"};
    rows = {{0, rep.eigen_route.lo, rep.eigen_route.hi},
            {1, rep.pressure_route.lo, rep.pressure_route.hi},
            {2, rep.theta_route.lo, rep.theta_route.hi}};
    jrows.push_back({{"route", "eigen"}, {"lo", rep.eigen_route.lo}, {"hi", rep.eigen_route.hi}});
    jrows.push_back(
        {{"route", "pressure"}, {"lo", rep.pressure_route.lo}, {"hi", rep.pressure_route.hi}});
    jrows.push_back({{"route", "theta"}, {"lo", rep.theta_route.lo}, {"hi", rep.theta_route.hi}});
  } else if (kind == "quantization" || kind == "spectral") {
    const std::vector<double> qs = parse_grid(gridspec.empty() ? "0:2:33" : gridspec);
    const SpectrumCurve curve = lq_curve(qs);
    const Bracket v = kind == "quantization" ? quantization_dimension(param, r, curve)
                                             : spectral_dimension(param, curve);
    doc["lo"] = v.lo;
    doc["hi"] = v.hi;
    cols = {"lo", "hi"};
    rows = {{v.lo, v.hi}};
    jrows.push_back({{"lo", v.lo}, {"hi", v.hi}});
  } else {
    throw CLI::ValidationError("kind", "unknown spectrum kind");
  }
  doc["rows"] = std::move(jrows);
  if (plotdata) {
    std::cout << "# ";
    for (std::size_t i = 0; i < cols.size(); ++i) std::cout << cols[i] << (i + 1 < cols.size() ? " " : "\n");
    std::cout.precision(17);
    for (const auto& rw : rows) {
      for (std::size_t i = 0; i < rw.size(); ++i) std::cout << rw[i] << (i + 1 < rw.size() ? " " : "\n");
    }
    return 0;
  }
  emit(opt, doc, cols, rows);
  return 0;
}

// Cross-method verification table; every line prints PASS or FAIL.
int run_verify(const Options& opt, bool quick) {
  (void)quick;
  int failures = 0;
  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.empty() ? "" : "  ",
                detail.c_str());
    if (!ok) ++failures;
  };
  char buf[256];

  {
    const Bracket l0 = lambda1(make_parameter(0, 1));
    const Bracket lh = lambda1(make_parameter(1, 2));
    const double golden = (1.0 + std::sqrt(17.0)) / 4.0;
    check("eigenvalue golden values",
          std::fabs(l0.mid() - 2.0) < 1e-10 && std::fabs(lh.mid() - golden) < 1e-10);
  }
  {
    bool ok = true;
    for (auto& p : {make_parameter(1, 2), make_parameter(1, 3)}) {
      const EtaTable tab = eta_table(p, 40);
      const TmPrefix pre = tm_prefix(p, (1u << 14) + 40);
      for (std::uint64_t lag = 0; lag <= 16 && ok; ++lag)
        ok = std::abs(tab[lag] - empirical_eta(pre, lag, 1u << 14)) < 2e-2;
    }
    check("eta recursion vs Birkhoff averages", ok);
  }
  {
    const CircleParameter p = make_parameter(1, 2);
    const ThetaGrowth g = theta_growth(p, 16);
    const Bracket d2 = correlation_exponent(p);
    std::snprintf(buf, sizeof buf, "slope %.4f vs eigen %.4f", g.slope, d2.mid());
    check("correlation exponent cross-method", std::fabs(g.slope - d2.mid()) < 0.03, buf);
  }
  {
    const CircleParameter p = make_parameter(1, 3);
    const PartialProduct pp = partial_product(p, 8);
    const TmPrefix pre = tm_prefix(p, 1u << 8);
    std::mt19937 rng(static_cast<unsigned>(opt.seed));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      const double x = unif(rng);
      Complex s{0.0, 0.0};
      for (std::uint64_t k = 0; k < pre.size(); ++k)
        s += pre.values[k] * std::polar(1.0, -kTwoPi * static_cast<double>(k) * x);
      const double comb = std::norm(s) / static_cast<double>(pre.size());
      ok = std::fabs(comb - density_at(pp, x)) < 1e-6 * std::max(1.0, comb);
    }
    check("diffraction identity (Dirac comb)", ok);
  }
  {
    const CylinderMeasure cm = cylinder_measure(make_parameter(1, 2), DyadicWord::parse("0"), 8);
    check("Riesz halves at c = 1/2", std::fabs(cm.estimate.mid() - 0.5) < 1e-6);
  }
  {
    bool ok = true;
    std::size_t clamps = 0;
    for (auto& p : {make_parameter(1, 2), make_parameter(1, 3)}) {
      for (int n = 1; n <= 8 && ok; ++n) {
        const CylinderMeasureSweep sweep = cylinder_measure_sweep(p, n, 8);
        clamps += sweep.clamp_events;
        for (std::size_t w = 0; w < sweep.estimate.size() && ok; ++w) {
          const double lo =
              std::isinf(sweep.gibbs_lo[w]) ? 0.0 : std::exp(sweep.gibbs_lo[w]);
          ok = sweep.estimate[w].lo >= lo - 1e-12 &&
               sweep.estimate[w].hi <= std::exp(sweep.gibbs_hi[w]) + 1e-12;
        }
      }
    }
    std::snprintf(buf, sizeof buf, "clamp events %zu", clamps);
    check("Gibbs sandwich |w| <= 8", ok, buf);
  }
  {
    const PressureEstimate p0 = partition_pressure(make_parameter(1, 3), 0.0, 10);
    const PressureEstimate p1 = partition_pressure(make_parameter(0, 1), 1.0, 14);
    std::snprintf(buf, sizeof buf, "t=0 -> %.6f; c=0 t=1 lo %.4f", p0.value.mid(), p1.value.lo);
    check("pressure normalization",
          p0.value.contains(kLog2) && p0.value.width() < 1e-12 && p1.value.lo < 0.1, buf);
  }
  {
    bool ok = true;
    for (auto& p : {make_parameter(1, 2), make_parameter(1, 3)}) {
      const SingularityCoding coding(p);
      for (int m = 1; m <= 3 && ok; ++m) {
        const ForbiddenAutomaton aut = forbidden_automaton(coding, m);
        for (int n = m + 1; n <= 10 && ok; ++n) {
          std::uint64_t brute = 0;
          for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
            brute += aut.word_admissible(DyadicWord::from_value(w, n));
          ok = brute == aut.count_words(n);
        }
      }
    }
    check("automaton counts vs enumeration", ok);
  }
  {
    const std::vector<double> qs = parse_grid("0:2:33");
    const SpectrumCurve uni = uniform_measure_curve(qs);
    const Bracket q1 = q_r(uni, 1.0);
    const Bracket d2u = quantization_dimension(make_parameter(1, 2), 2.0, uni);
    check("uniform harness closed forms",
          std::fabs(q1.mid() - 0.5) < 1e-12 && std::fabs(d2u.mid() - 1.0) < 1e-12);
  }
  {
    const CircleParameter p = make_parameter(1, 3);
    const PressureEstimate a = partition_pressure(p, 0.7, 12, 3, 1);
    const PressureEstimate b = partition_pressure(p, 0.7, 12, 3, 3);
    check("worker-count independence",
          a.value.lo == b.value.lo && a.value.hi == b.value.hi);
  }

  std::printf("%s\n", failures == 0 ? "verify: all checks passed" : "verify: FAILURES present");
  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral and fractal characteristics of generalized Thue-Morse measures"};
  app.require_subcommand(1);
  app.set_config("--config");

  Options opt;
  app.add_option("--format", opt.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--workers", opt.workers, "worker threads (0 = hardware)");
  app.add_option("--seed", opt.seed, "seed for randomized checks");

  std::string cspec = "1/2", tspec = "0:2:9", grid, at, cylinder, kind = "lq",
              pipeline = "pressure";
  std::uint64_t length = 32, max_index = 64;
  int depth = 12, restrict_m = 0, grid_depth = 3, order = 10, m_depth = 2, count_n = 0,
      g_depth = 0;
  double r_order = 1.0;
  bool plotdata = false, markov = false, quick = false;

  auto* seq = app.add_subcommand("sequence", "sequence entries t_n");
  seq->add_option("--c", cspec, "parameter c (decimal or p/q)")->required();
  seq->add_option("--length", length, "number of entries")->required();

  auto* eta = app.add_subcommand("eta", "autocorrelation coefficients");
  eta->add_option("--c", cspec)->required();
  eta->add_option("--max", max_index, "largest lag");

  auto* d2 = app.add_subcommand("d2", "dominant eigenvalue and correlation exponent");
  d2->add_option("--c", cspec, "value, comma list, or a:b:k grid")->required();
  d2->add_flag("--emit-plotdata", plotdata, "space-separated plot columns");

  auto* riesz = app.add_subcommand("riesz", "Riesz product coefficients/density/cylinders");
  riesz->add_option("--c", cspec)->required();
  riesz->add_option("--order", order, "partial product order");
  riesz->add_option("--at", at, "evaluate the density at x");
  riesz->add_option("--cylinder", cylinder, "binary word for a cylinder measure");

  auto* pres = app.add_subcommand("pressure", "partition pressure estimates");
  pres->add_option("--c", cspec)->required();
  pres->add_option("--t", tspec, "value, comma list, or a:b:k grid");
  pres->add_option("--depth", depth, "partition depth n");
  pres->add_option("--restrict", restrict_m, "forbidden-word depth m (0 = unrestricted)");
  pres->add_option("--grid-depth", grid_depth, "per-cylinder grid depth b");

  auto* words = app.add_subcommand("words", "forbidden-word language and Markov structure");
  words->add_option("--c", cspec)->required();
  words->add_option("--m", m_depth, "forbidden-word depth")->required();
  words->add_option("--count", count_n, "count admissible words up to this length");
  words->add_flag("--markov-check", markov, "irreducibility/aperiodicity/spectral radius");
  words->add_option("--g", g_depth, "print the neighborhood set G_n instead");

  auto* spec = app.add_subcommand("spectrum", "L^q, Birkhoff, dimension, Fourier, quantization");
  spec->add_option("--c", cspec)->required();
  spec->add_option("--kind", kind)
      ->check(CLI::IsMember({"lq", "birkhoff", "dimension", "fourier", "quantization", "spectral"}));
  spec->add_option("--grid", grid, "argument grid (a:b:k or comma list)");
  spec->add_option("--depth", depth, "partition depth n");
  spec->add_option("--r", r_order, "quantization order r");
  spec->add_option("--pipeline", pipeline)->check(CLI::IsMember({"pressure", "measure"}));
  spec->add_flag("--emit-plotdata", plotdata);

  auto* verify = app.add_subcommand("verify", "run the cross-method check table");
  verify->add_flag("--quick", quick, "short variant (default)");

  for (CLI::App* sub : {seq, eta, d2, riesz, pres, words, spec, verify})
    sub->fallthrough();  // shared options may follow the subcommand arguments

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // bad flags
  }

  try {
    if (seq->parsed()) return run_sequence(opt, cspec, length);
    if (eta->parsed()) return run_eta(opt, cspec, max_index);
    if (d2->parsed()) return run_d2(opt, cspec, plotdata);
    if (riesz->parsed()) return run_riesz(opt, cspec, order, at, cylinder);
    if (pres->parsed()) return run_pressure(opt, cspec, tspec, depth, restrict_m, grid_depth);
    if (words->parsed()) return run_words(opt, cspec, m_depth, count_n, markov, g_depth);
    if (spec->parsed())
      return run_spectrum(opt, cspec, kind, grid, depth, r_order, pipeline, plotdata);
    if (verify->parsed()) return run_verify(opt, quick);
  } catch (const PrecisionError& e) {
    std::cerr << "precision guard: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
