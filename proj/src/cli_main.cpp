#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hullwalk/comboracle.hpp"
#include "hullwalk/exactforms.hpp"
#include "hullwalk/mcharness.hpp"
#include "hullwalk/spitzer.hpp"

namespace {

using nlohmann::json;
namespace ef = hullwalk::exactforms;
namespace mc = hullwalk::mc;

constexpr const char* kVersion = "hullwalk 1.0.0";

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// flags > config file > defaults; config file is flat key=value lines of the
// form <command>.<flag>=<value> (e.g. "exact.n=3")
void enable_config(CLI::App* app) {
  app->set_config("--config", "", "flat key=value config file mirroring flag names");
}

struct SpecOpts {
  std::string dist = "gaussian";
  int d = 2;
  double rate = 1.0;
  double radius = 1.0;
  double half_width = 1.0;
  std::vector<double> scale_values = {1.0, 2.0};
};

void add_spec_opts(CLI::App* cmd, SpecOpts& so) {
  cmd->add_option("--dist", so.dist, "increment law")
      ->check(CLI::IsMember({"gaussian", "uniform-sphere", "uniform-cube", "centered-exponential",
                             "scaled-mixture"}));
  cmd->add_option("--d", so.d, "dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--rate", so.rate, "exponential rate");
  cmd->add_option("--radius", so.radius, "sphere radius");
  cmd->add_option("--half-width", so.half_width, "cube half-width");
  cmd->add_option("--scales", so.scale_values, "scaled-mixture scale values");
}

hullwalk::IncrementSpec make_spec(const SpecOpts& so) {
  using hullwalk::IncrementSpec;
  if (so.dist == "gaussian") return IncrementSpec::standard_gaussian(so.d);
  if (so.dist == "uniform-sphere") return IncrementSpec::uniform_sphere(so.d, so.radius);
  if (so.dist == "uniform-cube") return IncrementSpec::uniform_cube(so.d, so.half_width);
  if (so.dist == "centered-exponential") return IncrementSpec::centered_exponential(so.d, so.rate);
  return IncrementSpec::scaled_mixture(IncrementSpec::standard_gaussian(so.d),
                                       hullwalk::ScaleLaw::uniform_on(so.scale_values));
}

mc::PathKind parse_path(const std::string& p) {
  if (p == "walk") return mc::PathKind::walk;
  if (p == "bridge") return mc::PathKind::bridge_difference;
  if (p == "bridge-conditional") return mc::PathKind::bridge_conditional;
  if (p == "exchangeable") return mc::PathKind::exchangeable;
  throw std::invalid_argument("unknown path kind: " + p);
}

void emit(const json& j, const std::string& format, const std::string& out_path,
          const std::vector<std::string>& csv_cols) {
  std::string text;
  if (format == "json") {
    text = j.dump(2);
    text += '\n';
  } else {
    // fixed, documented columns; floats already serialized with 17 digits
    std::string header, row;
    const json& rows = j.contains("rows") ? j.at("rows") : json::array({j});
    for (std::size_t c = 0; c < csv_cols.size(); ++c)
      header += (c ? "," : "") + csv_cols[c];
    text = header + "\n";
    for (const auto& r : rows) {
      row.clear();
      for (std::size_t c = 0; c < csv_cols.size(); ++c) {
        if (c) row += ',';
        if (!r.contains(csv_cols[c])) continue;
        const auto& v = r.at(csv_cols[c]);
        if (v.is_number_float())
          row += fmt17(v.get<double>());
        else if (v.is_string())
          row += v.get<std::string>();
        else
          row += v.dump();
      }
      text += row + "\n";
    }
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    f << text;
  }
}

json estimate_json(const hullwalk::Estimate& e) {
  const auto [lo, hi] = e.ci95();
  json j;
  j["mean"] = e.mean;
  j["stderr"] = e.stderror;
  j["ci95"] = {lo, hi};
  j["samples"] = e.n_samples;
  j["discard_rate"] = e.discard_rate;
  j["warning"] = e.warning;
  return j;
}

const std::vector<std::string> kExactNames = {
    "sparre-andersen", "theorem1",  "bridge",        "wendel",      "pinned",
    "pinned-bridge",   "temporal",  "faces",         "faces-at-origin",
    "perimeter",       "volume",    "orthoscheme-vk", "spherical-u", "v1"};

ef::ExactValue eval_exact(const std::string& name, std::int64_t n, int d, int k,
                          const std::vector<int>& indices, const std::vector<int>& gaps) {
  if (name == "sparre-andersen") return ef::sparre_andersen(n);
  if (name == "theorem1") return ef::theorem1_prob(n);
  if (name == "bridge") return ef::bridge_prob(n);
  if (name == "wendel") return ef::wendel_prob(n, d);
  if (name == "pinned") return ef::face_prob_pinned(static_cast<int>(n), indices);
  if (name == "pinned-bridge") return ef::face_prob_bridge(static_cast<int>(n), indices);
  if (name == "temporal") return ef::face_prob_temporal_sum(static_cast<int>(n), gaps);
  if (name == "faces") return ef::expected_faces(n, d);
  if (name == "faces-at-origin") return ef::expected_faces_at_origin(n, d);
  if (name == "perimeter") return ef::spitzer_widom_perimeter(n);
  if (name == "volume") return ef::gaussian_expected_volume(n, d);
  if (name == "orthoscheme-vk") return ef::orthoscheme_intrinsic_volume(n, k);
  if (name == "spherical-u") return ef::spherical_U(n, k);
  if (name == "v1") return ef::gaussian_v1(n, d);
  throw std::invalid_argument("unknown formula: " + name);
}

std::optional<ef::FormulaId> sweep_asymptotic(const std::string& name) {
  if (name == "theorem1") return ef::FormulaId::log_asympt;
  if (name == "sparre-andersen") return ef::FormulaId::gamma_asympt;
  if (name == "faces") return ef::FormulaId::e_rw;
  if (name == "faces-at-origin") return ef::FormulaId::e_rw_0;
  return std::nullopt;
}

int run(int argc, char** argv) {
  CLI::App app{"exact evaluation and Monte Carlo verification of convex hulls of random walks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags (--format, --config, ...) may follow the subcommand
  app.set_version_flag("--version", kVersion);

  std::string format = "json", out_path;
  enable_config(&app);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", out_path, "output path (default stdout)");

  // shared numeric options, registered per subcommand
  std::string name, quantity_name, path_kind = "walk", route = "series", lemma = "1";
  std::int64_t n = 10, samples = 100000;
  std::uint64_t seed = 1;
  int d_override = 0, k = 1, threads = 0, frames = 4, directions = 1000, max_steps = 100000,
      terms = 200, paths = 100;
  std::vector<int> indices, gaps;
  std::vector<double> u_dir;
  SpecOpts so;

  auto add_common = [&](CLI::App* cmd, bool with_spec) {

    cmd->add_option("--n", n, "step count")->check(CLI::PositiveNumber);
    cmd->add_option("--k", k, "intrinsic-volume order / spherical index");
    cmd->add_option("--indices", indices, "face index tuple i_1<...");
    cmd->add_option("--gaps", gaps, "temporal gaps j_1,...");
    if (with_spec) {
      add_spec_opts(cmd, so);
      cmd->add_option("--samples", samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
      cmd->add_option("--seed", seed, "master seed");
      cmd->add_option("--threads", threads, "worker threads (0 = HULLWALK_THREADS or 1)");
      cmd->add_option("--path", path_kind, "path kind")
          ->check(CLI::IsMember({"walk", "bridge", "bridge-conditional", "exchangeable"}));
      cmd->add_option("--frames", frames, "Haar frames per sample (crofton-vk)");
      cmd->add_option("--directions", directions, "directions per sample (3d opening angle)");
    }
  };

  auto* c_exact = app.add_subcommand("exact", "evaluate a closed form");
  c_exact->add_option("formula", name, "formula id")->required();
  c_exact->add_option("--d", d_override, "dimension");
  add_common(c_exact, false);

  auto* c_sweep = app.add_subcommand("sweep", "closed form over a list of n");
  std::vector<std::int64_t> n_list;
  c_sweep->add_option("formula", name, "formula id")->required();
  c_sweep->add_option("--n", n_list, "n values")->required()->delimiter(',');
  c_sweep->add_option("--d", d_override, "dimension");
  c_sweep->add_option("--k", k, "intrinsic-volume order");


  auto* c_sim = app.add_subcommand("simulate", "Monte Carlo estimate");
  c_sim->add_option("quantity", quantity_name, "quantity id")->required();
  add_common(c_sim, true);

  auto* c_cmp = app.add_subcommand("compare", "Monte Carlo vs exact");
  c_cmp->add_option("quantity", quantity_name, "quantity id")->required();
  add_common(c_cmp, true);

  auto* c_sp = app.add_subcommand("spitzer", "R(u) and half-space persistence");
  c_sp->add_option("--route", route, "estimator route")
      ->check(CLI::IsMember({"ladder", "series", "angular", "persistence"}));
  c_sp->add_option("--u", u_dir, "direction vector")->delimiter(',');
  c_sp->add_option("--max-steps", max_steps, "ladder cap");
  c_sp->add_option("--terms", terms, "Spitzer series terms");
  c_sp->add_option("--n-directions", directions, "angular average directions");
  add_common(c_sp, true);

  auto* c_ortho = app.add_subcommand("orthoscheme", "V_k of the canonical orthoscheme T_n");
  add_common(c_ortho, false);

  auto* c_lemma = app.add_subcommand("lemma-check", "exhaustive combinatorial lemma checks");
  c_lemma->add_option("--lemma", lemma, "which lemma")->check(CLI::IsMember({"1", "2", "3"}));
  c_lemma->add_option("--paths", paths, "number of random configurations");
  add_common(c_lemma, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // validation failures use a fixed exit code
  }

  const auto t0 = std::chrono::steady_clock::now();
  json j;
  j["library_version"] = kVersion;
  std::vector<std::string> csv_cols;

  auto finish = [&](json& out) {
    out["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    emit(out, format, out_path, csv_cols);
    return 0;
  };

  if (*c_exact) {
    const int d = d_override > 0 ? d_override : 2;
    const auto v = eval_exact(name, n, d, k, indices, gaps);
    j["command"] = "exact";
    j["quantity"] = name;
    j["params"] = {{"k", k}, {"indices", indices}, {"gaps", gaps}};
    j["n"] = n;
    j["d"] = d;
    j["exact"] = v.value;
    if (v.rational) j["rational"] = *v.rational;
    csv_cols = {"quantity", "n", "d", "exact", "rational"};
    return finish(j);
  }

  if (*c_sweep) {
    const int d = d_override > 0 ? d_override : 2;
    const auto aid = sweep_asymptotic(name);
    json rows = json::array();
    for (std::int64_t nn : n_list) {
      const auto v = eval_exact(name, nn, d, k, indices, gaps);
      json r = {{"n", nn}, {"exact", v.value}};
      if (aid) {
        const double a = ef::asymptotic(*aid, nn, {d, 0.0}).value;
        r["asymptotic"] = a;
        r["ratio"] = v.value / a;
      }
      rows.push_back(r);
    }
    j["command"] = "sweep";
    j["quantity"] = name;
    j["d"] = d;
    j["rows"] = rows;
    csv_cols = {"n", "exact", "asymptotic", "ratio"};
    return finish(j);
  }

  if (*c_sim || *c_cmp) {
    const auto q = mc::parse_quantity(quantity_name);
    if (!q) {
      std::cerr << "unknown quantity '" << quantity_name << "'; known ids:";
      for (const char* id : {"origin-avoidance", "faces", "faces-at-origin", "updates", "surface",
                             "volume", "crofton-vk", "opening-angle-deficit", "temporal-census",
                             "pinned-face", "wendel-iid"})
        std::cerr << ' ' << id;
      std::cerr << '\n';
      return 2;
    }
    const auto spec = make_spec(so);
    mc::RunOptions opt;
    opt.path = parse_path(path_kind);
    opt.threads = threads;
    opt.indices = indices;
    opt.gaps = gaps;
    opt.k = k;
    opt.frames_per_sample = frames;
    opt.angle_directions = directions;

    j["command"] = *c_cmp ? "compare" : "simulate";
    j["quantity"] = quantity_name;
    j["params"] = {{"dist", so.dist}, {"path", path_kind}, {"k", k},
                   {"indices", indices}, {"gaps", gaps}};
    j["n"] = n;
    j["d"] = so.d;
    j["seed"] = seed;
    if (*c_cmp) {
      const auto row = mc::compare(*q, spec, static_cast<int>(n), samples, seed, opt);
      j.update(estimate_json(row.estimate));
      j["exact"] = row.exact.value;
      if (row.exact.rational) j["rational"] = *row.exact.rational;
      j["z"] = row.z;
      csv_cols = {"quantity", "n", "d", "exact", "mean", "stderr", "z", "samples", "seed"};
    } else {
      const auto est = mc::estimate(*q, spec, static_cast<int>(n), samples, seed, opt);
      j.update(estimate_json(est));
      csv_cols = {"quantity", "n", "d", "mean", "stderr", "samples", "seed"};
    }
    return finish(j);
  }

  if (*c_sp) {
    const auto spec = make_spec(so);
    j["command"] = "spitzer";
    j["quantity"] = "R(u)";
    j["d"] = so.d;
    j["seed"] = seed;
    j["params"] = {{"dist", so.dist}, {"route", route}, {"u", u_dir}, {"terms", terms},
                   {"max_steps", max_steps}};
    if (route == "angular") {
      const auto est = hullwalk::spitzer::angular_average_R(spec, directions, terms, samples, seed);
      j["quantity"] = "E R(Sigma^{-1/2} U)";
      j.update(estimate_json(est));
    } else {
      if (u_dir.empty()) u_dir.assign(static_cast<std::size_t>(so.d), 0.0), u_dir[0] = 1.0;
      hullwalk::spitzer::DirectionalWalkView view(spec, u_dir);
      if (route == "ladder") {
        j.update(estimate_json(hullwalk::spitzer::r_of_u_ladder(view, max_steps, samples, seed)));
      } else if (route == "series") {
        const auto res = hullwalk::spitzer::r_of_u_series(view, terms, samples, seed);
        j.update(estimate_json(res.estimate));
        j["truncation_bound"] = res.truncation_bound;
      } else {
        j["quantity"] = "halfspace-persistence";
        j["n"] = n;
        j.update(estimate_json(
            hullwalk::spitzer::halfspace_persistence(view, static_cast<int>(n), samples, seed)));
      }
    }
    csv_cols = {"quantity", "d", "mean", "stderr", "samples", "seed"};
    return finish(j);
  }

  if (*c_ortho) {
    const auto v = ef::orthoscheme_intrinsic_volume(n, k);
    const double kappa = ef::ball_volume(k);
    double kfac = 1.0;
    for (int i = 2; i <= k; ++i) kfac *= i;
    j["command"] = "orthoscheme";
    j["quantity"] = "orthoscheme-vk";
    j["n"] = n;
    j["params"] = {{"k", k}};
    j["exact"] = v.value;
    if (v.rational) j["rational"] = *v.rational;
    // V_k(T_n)/n^{k/2} -> kappa_k/k! as T_n/sqrt(n) approaches the Wiener-spiral hull
    j["limit_ratio"] = v.value / (kappa / kfac * std::pow(static_cast<double>(n), k / 2.0));
    csv_cols = {"quantity", "n", "exact", "limit_ratio"};
    return finish(j);
  }

  if (*c_lemma) {
    namespace co = hullwalk::comboracle;
    const auto spec = make_spec(so);
    j["command"] = "lemma-check";
    j["quantity"] = "lemma-" + lemma;
    j["d"] = so.d;
    j["n"] = n;
    j["seed"] = seed;
    int failures = 0;
    if (lemma == "1") {
      for (int p = 0; p < paths; ++p) {
        hullwalk::RngStream rng = hullwalk::RngStream::derive(seed, p);
        // random config with endpoints on {first coordinate = 0}
        const int steps = 3 + static_cast<int>(rng.next_u64() % 6);
        co::PointSequence seq;
        seq.base.assign(so.d, 0.0);
        seq.steps.resize(steps, std::vector<double>(so.d));
        double drift = 0.0;
        for (int s = 0; s < steps; ++s) {
          for (int c = 0; c < so.d; ++c) seq.steps[s][c] = rng.gaussian();
          drift += seq.steps[s][0];
        }
        for (int s = 0; s < steps; ++s) seq.steps[s][0] -= drift / steps;
        co::HalfSpace h;
        h.normal.assign(so.d, 0.0);
        h.normal[0] = 1.0;
        const int kshift = co::cycle_lemma_witness(seq, h);
        int valid = 0;
        for (int s = 0; s < steps; ++s) valid += co::shift_stays_inside(seq, h, s) ? 1 : 0;
        if (valid != 1 || !co::shift_stays_inside(seq, h, kshift)) ++failures;
      }
    } else {
      for (int p = 0; p < paths; ++p) {
        const std::uint64_t ps = seed + 7919ULL * (p + 1);
        const auto census =
            lemma == "2"
                ? co::halfspace_fraction_oracle(hullwalk::sample_walk(spec, static_cast<int>(n), ps),
                                                indices)
                : co::bridge_fraction_oracle(
                      hullwalk::sample_bridge(spec, static_cast<int>(n) + 1,
                                              hullwalk::BridgeKind::difference, ps),
                      indices);
        if (census.hits_plus != 1 || census.hits_minus != 1) ++failures;
      }
    }
    j["params"] = {{"paths", paths}, {"indices", indices}};
    j["failures"] = failures;
    j["pass"] = failures == 0;
    csv_cols = {"quantity", "d", "n", "failures", "pass"};
    const int rc = finish(j);
    return failures == 0 ? rc : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hullwalk::DegenerateGeometryError& e) {
    std::cerr << "degenerate geometry: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
