#include "hullwalk/hullgeom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hullwalk/rng.hpp"
#include "hullwalk/simplex.hpp"

namespace hullwalk {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct PlaneFacet {
  std::vector<int> verts;  // sorted
  std::vector<double> normal;
  double offset;
};

// unit normal and offset of the hyperplane through the given d points
bool hyperplane(const WalkPath& path, const std::vector<int>& verts, std::vector<double>& normal,
                double& offset, double tol_scale) {
  const int d = path.d;
  std::vector<std::vector<double>> rows(d - 1, std::vector<double>(d));
  const double* q0 = path.point(verts[0]);
  for (int r = 1; r < d; ++r) {
    const double* q = path.point(verts[r]);
    for (int c = 0; c < d; ++c) rows[r - 1][c] = q[c] - q0[c];
  }
  normal = orthogonal_complement(rows, d);
  const double nn = norm(normal);
  if (nn <= tol_scale) return false;
  for (double& x : normal) x /= nn;
  offset = dot(normal, path.at(verts[0]));
  return true;
}

HullSummary build_hull_2d(const WalkPath& path) {
  const int npts = path.n + 1;
  std::vector<int> idx(npts);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const double* p = path.point(a);
    const double* q = path.point(b);
    return p[0] < q[0] || (p[0] == q[0] && p[1] < q[1]);
  });
  auto cross = [&](int o, int a, int b) {
    const double* po = path.point(o);
    const double* pa = path.point(a);
    const double* pb = path.point(b);
    return (pa[0] - po[0]) * (pb[1] - po[1]) - (pa[1] - po[1]) * (pb[0] - po[0]);
  };
  // Andrew monotone chain, counter-clockwise
  std::vector<int> hull(2 * npts);
  int k = 0;
  for (int i = 0; i < npts; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], idx[i]) <= 0.0) --k;
    hull[k++] = idx[i];
  }
  const int lower = k + 1;
  for (int i = npts - 2; i >= 0; --i) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], idx[i]) <= 0.0) --k;
    hull[k++] = idx[i];
  }
  hull.resize(k - 1);  // last repeats the first
  const int m = static_cast<int>(hull.size());
  if (m < 3) throw DegenerateGeometryError("build_hull: collinear planar input");

  HullSummary s;
  s.d = 2;
  s.n = path.n;
  double area2 = 0.0;
  for (int i = 0; i < m; ++i) {
    const int a = hull[i];
    const int b = hull[(i + 1) % m];
    const double* pa = path.point(a);
    const double* pb = path.point(b);
    area2 += pa[0] * pb[1] - pb[0] * pa[1];
    const double dx = pb[0] - pa[0];
    const double dy = pb[1] - pa[1];
    const double len = std::hypot(dx, dy);
    s.surface_area += len;
    Facet f;
    f.vertex_indices = {std::min(a, b), std::max(a, b)};
    f.normal = {dy / len, -dx / len};  // outward for CCW traversal
    f.offset = f.normal[0] * pa[0] + f.normal[1] * pa[1];
    s.facets.push_back(std::move(f));
  }
  s.volume = 0.5 * std::fabs(area2);
  return s;
}

}  // namespace

HullSummary build_hull(const WalkPath& path, const HullConfig& cfg) {
  const int d = path.d;
  const int npts = path.n + 1;
  if (path.n < d) throw std::invalid_argument("build_hull: need n >= d");

  HullSummary s;
  if (d == 2) {
    s = build_hull_2d(path);
  } else {
    double scale = 1.0;
    for (int k = 0; k < npts; ++k) scale = std::max(scale, norm(path.at(k)));
    const double tol = cfg.tol * scale;

    // initial simplex: greedily maximize the residual against the affine span
    std::vector<int> simp = {0};
    std::vector<std::vector<double>> basis;  // orthonormalized span directions
    while (static_cast<int>(simp.size()) < d + 1) {
      int best = -1;
      double best_res = tol;
      std::vector<double> best_dir;
      for (int k = 0; k < npts; ++k) {
        if (std::find(simp.begin(), simp.end(), k) != simp.end()) continue;
        std::vector<double> v(d);
        const double* p = path.point(k);
        const double* p0 = path.point(simp[0]);
        for (int i = 0; i < d; ++i) v[i] = p[i] - p0[i];
        for (const auto& e : basis) {
          const double c = dot(v, e);
          for (int i = 0; i < d; ++i) v[i] -= c * e[i];
        }
        const double res = norm(v);
        if (res > best_res) {
          best_res = res;
          best = k;
          best_dir = std::move(v);
        }
      }
      if (best < 0) throw DegenerateGeometryError("build_hull: co-hyperplanar input");
      for (double& x : best_dir) x /= best_res;
      basis.push_back(std::move(best_dir));
      simp.push_back(best);
    }

    std::vector<double> center(d, 0.0);
    for (int v : simp)
      for (int i = 0; i < d; ++i) center[i] += path.point(v)[i] / (d + 1);

    auto make_facet = [&](std::vector<int> verts) {
      std::sort(verts.begin(), verts.end());
      PlaneFacet f;
      if (!hyperplane(path, verts, f.normal, f.offset, cfg.tol))
        throw DegenerateGeometryError("build_hull: degenerate facet");
      if (dot(f.normal, center) > f.offset) {
        for (double& x : f.normal) x = -x;
        f.offset = -f.offset;
      }
      f.verts = std::move(verts);
      return f;
    };

    std::vector<PlaneFacet> facets;
    for (int skip = 0; skip <= d; ++skip) {
      std::vector<int> verts;
      for (int i = 0; i <= d; ++i)
        if (i != skip) verts.push_back(simp[i]);
      facets.push_back(make_facet(std::move(verts)));
    }

    for (int k = 0; k < npts; ++k) {
      if (std::find(simp.begin(), simp.end(), k) != simp.end()) continue;
      const double* p = path.point(k);
      std::vector<char> visible(facets.size(), 0);
      bool any = false;
      for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        const double dist = dot(facets[fi].normal, {p, static_cast<std::size_t>(d)}) - facets[fi].offset;
        if (dist > tol) {
          visible[fi] = 1;
          any = true;
        }
      }
      if (!any) continue;

      // horizon = ridges owned by exactly one visible facet
      std::map<std::vector<int>, int> ridge_count;
      for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        if (!visible[fi]) continue;
        for (int drop = 0; drop < d; ++drop) {
          std::vector<int> ridge;
          for (int i = 0; i < d; ++i)
            if (i != drop) ridge.push_back(facets[fi].verts[i]);
          ++ridge_count[ridge];
        }
      }
      std::vector<PlaneFacet> next;
      for (std::size_t fi = 0; fi < facets.size(); ++fi)
        if (!visible[fi]) next.push_back(std::move(facets[fi]));
      for (auto& [ridge, count] : ridge_count) {
        if (count != 1) continue;
        std::vector<int> verts = ridge;
        verts.push_back(k);
        next.push_back(make_facet(std::move(verts)));
      }
      facets = std::move(next);
    }

    s.d = d;
    s.n = path.n;
    for (auto& pf : facets) {
      // cone volume from the interior point
      Matrix m(d, d);
      for (int r = 0; r < d; ++r) {
        const double* q = path.point(pf.verts[r]);
        for (int c = 0; c < d; ++c) m(r, c) = q[c] - center[c];
      }
      double fact = 1.0;
      for (int i = 2; i <= d; ++i) fact *= i;
      s.volume += std::fabs(det(m)) / fact;

      std::vector<std::vector<double>> edges(d - 1, std::vector<double>(d));
      const double* q0 = path.point(pf.verts[0]);
      for (int r = 1; r < d; ++r)
        for (int c = 0; c < d; ++c) edges[r - 1][c] = path.point(pf.verts[r])[c] - q0[c];
      double fact1 = 1.0;
      for (int i = 2; i <= d - 1; ++i) fact1 *= i;
      s.surface_area += gram_volume(edges) / fact1;

      Facet out;
      out.vertex_indices = std::move(pf.verts);
      out.normal = std::move(pf.normal);
      out.offset = pf.offset;
      s.facets.push_back(std::move(out));
    }
  }

  for (const auto& f : s.facets)
    if (f.vertex_indices.front() == 0) ++s.facets_at_origin;
  s.origin_outside = s.facets_at_origin > 0;  // the F_n' identity, valid under (G)
  return s;
}

std::map<std::vector<int>, int> temporal_census(const HullSummary& summary) {
  std::map<std::vector<int>, int> census;
  for (const auto& f : summary.facets) {
    std::vector<int> gaps;
    for (std::size_t i = 1; i < f.vertex_indices.size(); ++i)
      gaps.push_back(f.vertex_indices[i] - f.vertex_indices[i - 1]);
    ++census[gaps];
  }
  return census;
}

bool origin_outside_points(const double* points, int npts, int d, double tol) {
  if (d == 2) {
    // outside iff some open half-plane contains all points, i.e. the largest
    // angular gap exceeds pi
    std::vector<double> ang;
    ang.reserve(npts);
    for (int k = 0; k < npts; ++k) {
      const double x = points[2 * k];
      const double y = points[2 * k + 1];
      if (std::fabs(x) <= tol && std::fabs(y) <= tol) return false;  // a point at the origin
      ang.push_back(std::atan2(y, x));
    }
    std::sort(ang.begin(), ang.end());
    double max_gap = ang.front() + 2.0 * kPi - ang.back();
    for (std::size_t i = 1; i < ang.size(); ++i) max_gap = std::max(max_gap, ang[i] - ang[i - 1]);
    return max_gap > kPi;
  }
  return !origin_in_convex_hull(points, npts, d, tol);
}

bool origin_membership(const WalkPath& path, const HullConfig& cfg) {
  return origin_outside_points(path.point(1), path.n, path.d, cfg.tol);
}

double opening_angle(const WalkPath& path, int mc_directions, std::uint64_t seed,
                     const HullConfig& cfg) {
  const int d = path.d;
  if (d == 2) {
    std::vector<double> ang;
    ang.reserve(path.n);
    for (int k = 1; k <= path.n; ++k) {
      const double* p = path.point(k);
      ang.push_back(std::atan2(p[1], p[0]));
    }
    std::sort(ang.begin(), ang.end());
    double max_gap = ang.front() + 2.0 * kPi - ang.back();
    for (std::size_t i = 1; i < ang.size(); ++i) max_gap = std::max(max_gap, ang[i] - ang[i - 1]);
    return max_gap <= kPi ? 2.0 * kPi : 2.0 * kPi - max_gap;
  }
  if (d == 3) {
    RngStream rng(seed);
    int inside = 0;
    double u[3];
    for (int t = 0; t < mc_directions; ++t) {
      double nn = 0.0;
      for (double& x : u) {
        x = rng.gaussian();
        nn += x * x;
      }
      nn = std::sqrt(nn);
      for (double& x : u) x /= nn;
      if (in_conic_hull(path.point(1), path.n, 3, u, cfg.tol)) ++inside;
    }
    return 4.0 * kPi * static_cast<double>(inside) / mc_directions;
  }
  throw std::invalid_argument("opening_angle: only d = 2 or 3 supported");
}

std::vector<bool> update_flags(const WalkPath& path, const HullConfig& cfg) {
  const int d = path.d;
  std::vector<bool> flags(path.n);
  std::vector<double> translated;
  for (int k = 1; k <= path.n; ++k) {
    // S_k outside conv(0, S_1, ..., S_{k-1})  <=>  0 outside the translated set
    translated.assign(static_cast<std::size_t>(k) * d, 0.0);
    const double* sk = path.point(k);
    for (int j = 0; j < k; ++j) {
      const double* p = path.point(j);
      for (int i = 0; i < d; ++i) translated[static_cast<std::size_t>(j) * d + i] = p[i] - sk[i];
    }
    flags[k - 1] = origin_outside_points(translated.data(), k, d, cfg.tol);
  }
  return flags;
}

WalkPath project_hull(const WalkPath& path, const Matrix& frame) {
  const int k = frame.rows;
  const int d = frame.cols;
  if (d != path.d) throw std::invalid_argument("project_hull: frame dimension mismatch");
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      double s = 0.0;
      for (int c = 0; c < d; ++c) s += frame(i, c) * frame(j, c);
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::fabs(s - want) > 1e-12)
        throw std::invalid_argument("project_hull: frame rows not orthonormal");
    }
  }
  WalkPath out(k, path.n);
  for (int p = 0; p <= path.n; ++p) {
    const double* src = path.point(p);
    double* dst = out.point(p);
    for (int i = 0; i < k; ++i) {
      double s = 0.0;
      for (int c = 0; c < d; ++c) s += frame(i, c) * src[c];
      dst[i] = s;
    }
  }
  return out;
}

}  // namespace hullwalk
