#include "hullwalk/mcharness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "hullwalk/rng.hpp"

namespace hullwalk::mc {

namespace {

constexpr std::int64_t kChunk = 4096;  // fixed work unit, independent of thread count
constexpr int kMaxResamples = 64;

std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

bool is_bridge(PathKind k) {
  return k == PathKind::bridge_difference || k == PathKind::bridge_conditional;
}

// Path with points S_0..S_n. For bridges this is the first n+1 points of a
// bridge of length n+1 (the terminal 0 duplicates S_0 and is dropped).
WalkPath sample_path(const IncrementSpec& spec, int n, PathKind kind, std::uint64_t seed) {
  switch (kind) {
    case PathKind::walk:
      return sample_walk(spec, n, seed);
    case PathKind::exchangeable:
      return sample_exchangeable(spec, n, seed);
    case PathKind::bridge_difference:
    case PathKind::bridge_conditional: {
      const BridgeKind bk = kind == PathKind::bridge_difference ? BridgeKind::difference
                                                                : BridgeKind::conditional_gaussian;
      WalkPath full = sample_bridge(spec, n + 1, bk, seed);
      WalkPath head(spec.dim(), n);
      std::copy(full.pts.begin(), full.pts.begin() + static_cast<std::ptrdiff_t>(n + 1) * spec.dim(),
                head.pts.begin());
      return head;
    }
  }
  throw std::logic_error("sample_path: unreachable");
}

// one k x d row-orthonormal Haar frame
Matrix haar_frame(int k, int d, RngStream& rng) {
  Matrix f(k, d);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < d; ++c) f(r, c) = rng.gaussian();
    for (int pass = 0; pass < 2; ++pass)  // twice for orthogonality to ~1e-15
      for (int p = 0; p < r; ++p) {
        double dp = 0.0;
        for (int c = 0; c < d; ++c) dp += f(r, c) * f(p, c);
        for (int c = 0; c < d; ++c) f(r, c) -= dp * f(p, c);
      }
    double nn = 0.0;
    for (int c = 0; c < d; ++c) nn += f(r, c) * f(r, c);
    nn = std::sqrt(nn);
    if (nn < 1e-12) throw DegenerateGeometryError("haar_frame: degenerate Gaussian draw");
    for (int c = 0; c < d; ++c) f(r, c) /= nn;
  }
  return f;
}

double crofton_constant(int d, int k) {
  double binom = 1.0;
  for (int i = 0; i < k; ++i) binom = binom * (d - i) / (i + 1);
  return binom * exactforms::ball_volume(d) /
         (exactforms::ball_volume(k) * exactforms::ball_volume(d - k));
}

double projected_extent(const WalkPath& p) {  // Vol_1 of a 1-d path
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i <= p.n; ++i) {
    lo = std::min(lo, p.pts[i]);
    hi = std::max(hi, p.pts[i]);
  }
  return hi - lo;
}

double sample_value(Quantity q, const IncrementSpec& spec, int n, const RunOptions& opt,
                    std::uint64_t sseed) {
  const int d = spec.dim();
  switch (q) {
    case Quantity::wendel_iid: {
      RngStream rng(sseed);
      std::vector<double> pts(static_cast<std::size_t>(n) * d);
      for (int i = 0; i < n; ++i) spec.sample_increment(rng, pts.data() + static_cast<std::size_t>(i) * d);
      return origin_outside_points(pts.data(), n, d, opt.hull.tol) ? 1.0 : 0.0;
    }
    case Quantity::origin_avoidance: {
      const WalkPath path = sample_path(spec, n, opt.path, sseed);
      return origin_outside_points(path.point(1), n, d, opt.hull.tol) ? 1.0 : 0.0;
    }
    case Quantity::updates: {
      const WalkPath path = sample_path(spec, n, opt.path, sseed);
      const auto flags = update_flags(path, opt.hull);
      double s = 0.0;
      for (bool f : flags) s += f ? 1.0 : 0.0;
      return s;
    }
    case Quantity::opening_angle_deficit: {
      const WalkPath path = sample_path(spec, n, opt.path, sseed);
      const double omega = opening_angle(path, opt.angle_directions, sub_seed(sseed, 1), opt.hull);
      const double full = d == 2 ? 3.14159265358979323846 : 6.28318530717958647692;
      return std::max(full - omega, 0.0);
    }
    case Quantity::crofton_vk: {
      const WalkPath path = sample_path(spec, n, opt.path, sseed);
      RngStream frng = RngStream::derive(sseed, 2);
      double acc = 0.0;
      for (int f = 0; f < opt.frames_per_sample; ++f) {
        const Matrix frame = haar_frame(opt.k, d, frng);
        const WalkPath proj = project_hull(path, frame);
        acc += opt.k == 1 ? projected_extent(proj) : build_hull(proj, opt.hull).volume;
      }
      return crofton_constant(d, opt.k) * acc / opt.frames_per_sample;
    }
    default:
      break;
  }
  // hull-based quantities
  const WalkPath path = sample_path(spec, n, opt.path, sseed);
  const HullSummary hull = build_hull(path, opt.hull);
  switch (q) {
    case Quantity::faces:
      return static_cast<double>(hull.facets.size());
    case Quantity::faces_at_origin:
      return static_cast<double>(hull.facets_at_origin);
    case Quantity::surface:
      return hull.surface_area;
    case Quantity::volume:
      return hull.volume;
    case Quantity::temporal_census: {
      const auto census = temporal_census(hull);
      const auto it = census.find(opt.gaps);
      return it == census.end() ? 0.0 : static_cast<double>(it->second);
    }
    case Quantity::pinned_face: {
      for (const auto& f : hull.facets)
        if (f.vertex_indices == opt.indices) return 1.0;
      return 0.0;
    }
    default:
      throw std::logic_error("sample_value: unhandled quantity");
  }
}

void validate(Quantity q, const IncrementSpec& spec, int n, const RunOptions& opt) {
  const int d = spec.dim();
  if (n < 1) throw std::invalid_argument("estimate: n must be >= 1");
  if (q == Quantity::temporal_census) {
    if (static_cast<int>(opt.gaps.size()) != d - 1)
      throw std::invalid_argument("temporal_census: need d-1 gaps");
    int tot = 0;
    for (int g : opt.gaps) {
      if (g < 1) throw std::invalid_argument("temporal_census: gaps must be >= 1");
      tot += g;
    }
    if (tot > n) throw std::invalid_argument("temporal_census: gaps exceed n");
  }
  if (q == Quantity::pinned_face) {
    if (static_cast<int>(opt.indices.size()) != d)
      throw std::invalid_argument("pinned_face: need d indices");
    int prev = -1;
    for (int i : opt.indices) {
      if (i <= prev || i > n) throw std::invalid_argument("pinned_face: bad index tuple");
      prev = i;
    }
  }
  if (q == Quantity::crofton_vk && (opt.k < 1 || opt.k > d))
    throw std::invalid_argument("crofton_vk: need 1 <= k <= d");
  if (q == Quantity::opening_angle_deficit && d != 2 && d != 3)
    throw std::invalid_argument("opening_angle_deficit: d in {2,3} only");
  if (is_bridge(opt.path) && opt.path == PathKind::bridge_conditional &&
      spec.kind() != IncrementKind::gaussian)
    throw std::invalid_argument("conditional bridge requires a gaussian spec");
  if (opt.path == PathKind::exchangeable && spec.kind() != IncrementKind::scaled_mixture)
    throw std::invalid_argument("exchangeable path requires a scaled-mixture spec");
}

}  // namespace

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HULLWALK_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

Estimate estimate(Quantity q, const IncrementSpec& spec, int n, std::int64_t samples,
                  std::uint64_t seed, const RunOptions& opt) {
  validate(q, spec, n, opt);
  if (samples < 1) throw std::invalid_argument("estimate: samples must be >= 1");

  const std::int64_t nchunks = (samples + kChunk - 1) / kChunk;
  std::vector<Accumulator> chunk_acc(static_cast<std::size_t>(nchunks));
  std::vector<std::int64_t> chunk_resamples(static_cast<std::size_t>(nchunks), 0);

  auto run_chunk = [&](std::int64_t c) {
    Accumulator acc;
    std::int64_t resamples = 0;
    const std::int64_t lo = c * kChunk;
    const std::int64_t hi = std::min(samples, lo + kChunk);
    for (std::int64_t s = lo; s < hi; ++s) {
      for (int attempt = 0;; ++attempt) {
        // attempt > 0 uses a fresh derived stream (degenerate resample)
        const std::uint64_t sseed =
            sub_seed(seed, static_cast<std::uint64_t>(s) * (kMaxResamples + 1) + attempt);
        try {
          acc.add(sample_value(q, spec, n, opt, sseed));
          break;
        } catch (const DegenerateGeometryError&) {
          if (attempt + 1 >= kMaxResamples) throw;
          ++resamples;
        }
      }
    }
    chunk_acc[static_cast<std::size_t>(c)] = acc;
    chunk_resamples[static_cast<std::size_t>(c)] = resamples;
  };

  const int threads = std::min<std::int64_t>(resolve_threads(opt.threads), nchunks);
  if (threads <= 1) {
    for (std::int64_t c = 0; c < nchunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::int64_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1)) run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }

  Accumulator total;
  std::int64_t resamples = 0;
  for (std::int64_t c = 0; c < nchunks; ++c) {  // fixed merge order
    total.merge(chunk_acc[static_cast<std::size_t>(c)]);
    resamples += chunk_resamples[static_cast<std::size_t>(c)];
  }
  Estimate e = total.finish();
  e.discard_rate = static_cast<double>(resamples) / static_cast<double>(samples);
  e.warning = e.discard_rate >= 1e-6;
  return e;
}

Estimate crofton_intrinsic_volume(const IncrementSpec& spec, int n, int k, std::int64_t samples,
                                  int frames_per_sample, std::uint64_t seed, const RunOptions& opt) {
  RunOptions o = opt;
  o.k = k;
  o.frames_per_sample = frames_per_sample;
  return estimate(Quantity::crofton_vk, spec, n, samples, seed, o);
}

std::optional<exactforms::ExactValue> exact_counterpart(Quantity q, const IncrementSpec& spec,
                                                        int n, const RunOptions& opt) {
  namespace ef = exactforms;
  const int d = spec.dim();
  const bool bridge = is_bridge(opt.path);
  const bool std_gauss = [&] {
    if (spec.kind() != IncrementKind::gaussian) return false;
    const Matrix& c = spec.covariance();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (std::fabs(c(i, j) - (i == j ? 1.0 : 0.0)) > 1e-12) return false;
    return true;
  }();

  switch (q) {
    case Quantity::origin_avoidance:
      if (d != 2) return std::nullopt;
      if (bridge) return ef::bridge_prob(n);
      if (spec.symmetric()) return ef::theorem1_prob(n);
      return std::nullopt;
    case Quantity::faces:
      if (bridge) return std::nullopt;
      return ef::expected_faces(n, d);
    case Quantity::faces_at_origin:
      if (bridge || !spec.symmetric() || d > 3) return std::nullopt;
      return ef::expected_faces_at_origin(n, d);
    case Quantity::updates: {
      if (bridge || !spec.symmetric() || d != 2) return std::nullopt;
      // conv(0, S_1, ..., S_{k-1}) has k points, so reversing the walk gives
      // P(S_k updates) = theorem1(k)
      double s = 0.0;
      for (int k = 1; k <= n; ++k) s += ef::theorem1_prob(k).value;
      return ef::ExactValue{s, std::nullopt};
    }
    case Quantity::surface:
      if (!bridge && std_gauss && d == 2) return ef::spitzer_widom_perimeter(n);
      return std::nullopt;
    case Quantity::volume:
      if (!bridge && std_gauss) return ef::gaussian_expected_volume(n, d);
      return std::nullopt;
    case Quantity::crofton_vk:
      if (bridge || !std_gauss) return std::nullopt;
      if (opt.k == 1) return ef::gaussian_v1(n, d);
      if (opt.k == d) return ef::gaussian_expected_volume(n, d);
      return std::nullopt;
    case Quantity::opening_angle_deficit: {
      if (bridge || !spec.symmetric()) return std::nullopt;
      if (d == 2) {
        auto a = ef::sparre_andersen(n);
        return ef::ExactValue{2.0 * 3.14159265358979323846 * a.value, std::nullopt};
      }
      if (d == 3) {
        auto t = ef::theorem1_prob(n);
        return ef::ExactValue{2.0 * 3.14159265358979323846 * t.value, std::nullopt};
      }
      return std::nullopt;
    }
    case Quantity::temporal_census:
      return ef::face_prob_temporal_sum(n, opt.gaps);
    case Quantity::pinned_face:
      if (bridge) return ef::face_prob_bridge(n, opt.indices);
      if (spec.symmetric()) return ef::face_prob_pinned(n, opt.indices);
      return std::nullopt;
    case Quantity::wendel_iid:
      if (spec.symmetric()) return ef::wendel_prob(n, d);
      return std::nullopt;
  }
  return std::nullopt;
}

ComparisonRow compare(Quantity q, const IncrementSpec& spec, int n, std::int64_t samples,
                      std::uint64_t seed, const RunOptions& opt) {
  const auto exact = exact_counterpart(q, spec, n, opt);
  if (!exact)
    throw std::invalid_argument("compare: no exact counterpart for quantity '" + quantity_name(q) +
                                "' with this spec (MC-only)");
  ComparisonRow row;
  row.quantity = quantity_name(q);
  row.exact = *exact;
  row.estimate = estimate(q, spec, n, samples, seed, opt);
  row.z = row.estimate.z_against(exact->value);
  return row;
}

double distribution_freeness_test(Quantity q, const std::vector<IncrementSpec>& specs, int n,
                                  std::int64_t samples, std::uint64_t seed, const RunOptions& opt) {
  if (specs.empty()) throw std::invalid_argument("distribution_freeness_test: no specs");
  std::vector<Estimate> ests;
  ests.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i)
    ests.push_back(estimate(q, specs[i], n, samples, seed + 0x51ed2700 * (i + 1), opt));
  double worst = 0.0;
  for (std::size_t i = 0; i < ests.size(); ++i)
    for (std::size_t j = i + 1; j < ests.size(); ++j)
      worst = std::max(worst, std::fabs(two_sample_z(ests[i], ests[j])));
  return worst;
}

std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::origin_avoidance: return "origin-avoidance";
    case Quantity::faces: return "faces";
    case Quantity::faces_at_origin: return "faces-at-origin";
    case Quantity::updates: return "updates";
    case Quantity::surface: return "surface";
    case Quantity::volume: return "volume";
    case Quantity::crofton_vk: return "crofton-vk";
    case Quantity::opening_angle_deficit: return "opening-angle-deficit";
    case Quantity::temporal_census: return "temporal-census";
    case Quantity::pinned_face: return "pinned-face";
    case Quantity::wendel_iid: return "wendel-iid";
  }
  return "?";
}

std::optional<Quantity> parse_quantity(const std::string& name) {
  for (Quantity q : {Quantity::origin_avoidance, Quantity::faces, Quantity::faces_at_origin,
                     Quantity::updates, Quantity::surface, Quantity::volume, Quantity::crofton_vk,
                     Quantity::opening_angle_deficit, Quantity::temporal_census,
                     Quantity::pinned_face, Quantity::wendel_iid})
    if (quantity_name(q) == name) return q;
  return std::nullopt;
}

}  // namespace hullwalk::mc
