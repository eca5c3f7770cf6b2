#include "sitepc/triangle.hpp"

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <mutex>

#include "sitepc/connectivity.hpp"
#include "sitepc/errors.hpp"
#include "sitepc/parallel.hpp"

namespace sitepc {

namespace {

void check_field_size(const TorusGeometry& g) {
  if (g.size() > kMaxFieldSites) {
    throw ResourceError("torus fields support at most " + std::to_string(kMaxFieldSites) + " sites");
  }
}

std::vector<std::uint64_t> strides(const TorusGeometry& g) {
  std::vector<std::uint64_t> s(static_cast<std::size_t>(g.d()));
  std::uint64_t v = 1;
  for (auto& x : s) {
    x = v;
    v *= static_cast<std::uint64_t>(g.L());
  }
  return s;
}

}  // namespace

std::vector<std::uint64_t> connected_pair_counts(const Configuration& c) {
  const TorusGeometry& g = c.geometry();
  check_field_size(g);
  if (!c.is_dense()) throw DomainError("connected_pair_counts needs dense storage");
  const std::size_t n = static_cast<std::size_t>(g.size());
  const auto labels = cluster_labels(c);
  const auto stride = strides(g);
  const int L = g.L();

  // Closure of each cluster: its sites plus its vacant outer boundary.
  std::vector<std::vector<SiteIndex>> closure(n);
  std::vector<std::uint64_t> stamp(n, 0);
  std::uint64_t generation = 0;
  for (SiteIndex i = 0; i < n; ++i) {
    if (labels[i] != kVacantLabel) closure[labels[i]].push_back(i);
  }
  for (SiteIndex r = 0; r < n; ++r) {
    auto& sites = closure[r];
    if (sites.empty()) continue;
    ++generation;
    for (SiteIndex v : sites) stamp[v] = generation;
    const std::size_t members = sites.size();
    for (std::size_t k = 0; k < members; ++k) {
      for (int dir = 0; dir < g.degree(); ++dir) {
        const SiteIndex w = g.neighbor(sites[k], dir);
        if (stamp[w] != generation) {
          stamp[w] = generation;
          sites.push_back(w);
        }
      }
    }
  }

  std::vector<std::uint64_t> counts(n, 0);
  std::vector<std::uint32_t> roots;
  auto record = [&](SiteIndex s, SiteIndex y) {
    if (y == s || stamp[y] == generation) return;
    stamp[y] = generation;
    SiteIndex disp = 0;
    for (int axis = 0; axis < g.d(); ++axis) {
      const int delta = (g.raw_coord(y, axis) - g.raw_coord(s, axis) + L) % L;
      disp += static_cast<std::uint64_t>(delta) * stride[static_cast<std::size_t>(axis)];
    }
    ++counts[disp];
  };
  for (SiteIndex s = 0; s < n; ++s) {
    ++generation;
    roots.clear();
    if (labels[s] != kVacantLabel) {
      roots.push_back(labels[s]);
    } else {
      for (int dir = 0; dir < g.degree(); ++dir) {
        const std::uint32_t r = labels[g.neighbor(s, dir)];
        if (r != kVacantLabel && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
    }
    for (std::uint32_t r : roots) {
      for (SiteIndex y : closure[r]) record(s, y);
    }
    for (int dir = 0; dir < g.degree(); ++dir) record(s, g.neighbor(s, dir));
  }
  return counts;
}

std::vector<double> estimate_tau_field(const TorusGeometry& g, double p, const RunOptions& run) {
  check_field_size(g);
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
  if (run.samples == 0) throw DomainError("samples must be at least 1");
  const auto per_sample = parallel_map(run.samples, run.threads, [&](std::size_t i) {
    return connected_pair_counts(Configuration::sample(g, p, run.seed, i, Storage::dense));
  });
  const std::size_t n = static_cast<std::size_t>(g.size());
  std::vector<double> tau(n, 0.0);
  for (const auto& counts : per_sample) {
    for (std::size_t x = 0; x < n; ++x) tau[x] += static_cast<double>(counts[x]);
  }
  const double norm = static_cast<double>(n) * static_cast<double>(run.samples);
  for (double& v : tau) v /= norm;
  return tau;
}

std::vector<double> torus_convolve(const TorusGeometry& g, const std::vector<double>& a, const std::vector<double>& b) {
  check_field_size(g);
  const std::size_t n = static_cast<std::size_t>(g.size());
  if (a.size() != n || b.size() != n) throw DomainError("convolution inputs must cover the torus");
  const int d = g.d();
  const std::vector<int> dims(static_cast<std::size_t>(d), g.L());
  const std::size_t half = n / static_cast<std::size_t>(g.L()) * static_cast<std::size_t>(g.L() / 2 + 1);

  std::vector<double> in(n);
  std::vector<std::complex<double>> fa(half), fb(half);
  auto* in_ptr = in.data();
  auto* fa_ptr = reinterpret_cast<fftw_complex*>(fa.data());
  auto* fb_ptr = reinterpret_cast<fftw_complex*>(fb.data());

  // The planner is not thread-safe.
  static std::mutex planner;
  fftw_plan forward_a, forward_b, backward;
  {
    std::lock_guard lock(planner);
    forward_a = fftw_plan_dft_r2c(d, dims.data(), in_ptr, fa_ptr, FFTW_ESTIMATE);
    forward_b = fftw_plan_dft_r2c(d, dims.data(), in_ptr, fb_ptr, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r(d, dims.data(), fa_ptr, in_ptr, FFTW_ESTIMATE);
  }
  std::copy(a.begin(), a.end(), in.begin());
  fftw_execute(forward_a);
  std::copy(b.begin(), b.end(), in.begin());
  fftw_execute(forward_b);
  for (std::size_t k = 0; k < half; ++k) fa[k] *= fb[k];
  fftw_execute(backward);
  {
    std::lock_guard lock(planner);
    fftw_destroy_plan(forward_a);
    fftw_destroy_plan(forward_b);
    fftw_destroy_plan(backward);
  }
  for (double& v : in) v /= static_cast<double>(n);
  return in;
}

TriangleResult triangles_from_tau(const TorusGeometry& g, double p, const std::vector<double>& tau, double seam_floor) {
  const std::size_t n = static_cast<std::size_t>(g.size());
  if (tau.size() != n) throw DomainError("tau field must cover the torus");
  std::vector<double> circ = tau, bullet(n);
  circ[0] += 1.0;
  for (std::size_t x = 0; x < n; ++x) bullet[x] = p * tau[x];
  bullet[0] += 1.0;

  const auto bt = torus_convolve(g, bullet, tau);
  const auto btt = torus_convolve(g, bt, tau);
  const auto btc = torus_convolve(g, bt, circ);
  const auto bbc = torus_convolve(g, torus_convolve(g, bullet, bullet), circ);

  TriangleResult r;
  r.bullet_at_0 = p * btt[0];
  r.bullet_circ_at_0 = p * btc[0];
  r.bullet_bullet_circ = bbc[0];
  for (std::size_t x = 1; x < n; ++x) {
    r.bullet = std::max(r.bullet, p * btt[x]);
    r.bullet_circ = std::max(r.bullet_circ, p * btc[x]);
    r.bullet_bullet_circ = std::max(r.bullet_bullet_circ, bbc[x]);
  }
  const int seam = g.L() / 2;
  for (SiteIndex x = 0; x < n; ++x) {
    for (int axis = 0; axis < g.d(); ++axis) {
      if (g.raw_coord(x, axis) == seam) {
        r.seam_tau = std::max(r.seam_tau, tau[x]);
        break;
      }
    }
  }
  r.finite_size_warning = r.seam_tau > seam_floor;
  return r;
}

TriangleResult triangle_diagrams(const TorusGeometry& g, double p, const RunOptions& run, double seam_floor) {
  return triangles_from_tau(g, p, estimate_tau_field(g, p, run), seam_floor);
}

}  // namespace sitepc
