#include "spectra/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

constexpr double kBig = 1e150;

struct Coeffs {
  std::vector<double> w;  // 1 - h^2 f / 12
};

Coeffs numerov_coeffs(const Grid1D& V, double eps) {
  const double h2 = V.step() * V.step() / 12.0;
  Coeffs c;
  c.w.resize(V.values.size());
  for (std::size_t i = 0; i < V.values.size(); ++i) c.w[i] = 1.0 - h2 * (V.values[i] - eps);
  return c;
}

// One Numerov step: returns psi_{next} from psi_cur (index i) and psi_prev.
inline double step(const Coeffs& c, int prev, int cur, int next, double psi_prev, double psi_cur) {
  return ((12.0 - 10.0 * c.w[cur]) * psi_cur - c.w[prev] * psi_prev) / c.w[next];
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Left shot from psi_0 = 0; returns psi_m and psi_{m+1} (common positive scale).
void shoot_left(const Coeffs& c, int m, double& at_m, double& at_m1) {
  double prev = 0.0, cur = 1.0;
  for (int i = 1; i <= m; ++i) {
    double next = step(c, i - 1, i, i + 1, prev, cur);
    prev = cur;
    cur = next;
    if (std::fabs(cur) > kBig) {
      prev /= kBig;
      cur /= kBig;
    }
  }
  at_m = prev;
  at_m1 = cur;
}

// Right shot from psi_{n-1} = 0; returns psi_m and psi_{m+1}.
void shoot_right(const Coeffs& c, int n, int m, double& at_m, double& at_m1) {
  double prev = 0.0, cur = 1.0;
  for (int i = n - 2; i > m; --i) {
    double next = step(c, i + 1, i, i - 1, prev, cur);
    prev = cur;
    cur = next;
    if (std::fabs(cur) > kBig) {
      prev /= kBig;
      cur /= kBig;
    }
  }
  at_m = cur;
  at_m1 = prev;
}

int matching_index(const Grid1D& V, double eps) {
  const int n = V.n;
  int best = -1;
  double best_dist = INFINITY;
  for (int i = 1; i < n; ++i) {
    bool a = V.values[i - 1] < eps, b = V.values[i] < eps;
    if (a != b) {
      double d = std::fabs(V.x(i));
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
  }
  if (best < 0) best = static_cast<int>(std::min_element(V.values.begin(), V.values.end()) - V.values.begin());
  return std::clamp(best, 2, n - 4);
}

double wronskian(const Grid1D& V, double eps, int m) {
  Coeffs c = numerov_coeffs(V, eps);
  double lm, lm1, rm, rm1;
  shoot_left(c, m, lm, lm1);
  shoot_right(c, V.n, m, rm, rm1);
  return lm * rm1 - lm1 * rm;
}

}  // namespace

Grid1D Grid1D::sample(double x_min, double x_max, int n, const std::function<double(double)>& f) {
  Grid1D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n = n;
  g.values.resize(n);
  for (int i = 0; i < n; ++i) g.values[i] = f(g.x(i));
  return g;
}

void Grid1D::validate() const {
  if (n < 256 || static_cast<int>(values.size()) != n || !(x_max > x_min))
    throw Error(ErrorCode::InvalidArgument, "grid needs at least 256 uniformly spaced samples");
  for (double v : values)
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "grid contains non-finite values");
}

int numerov_node_count(const Grid1D& V, double eps) {
  Coeffs c = numerov_coeffs(V, eps);
  double prev = 0.0, cur = 1.0;
  int nodes = 0, last = 1;
  for (int i = 1; i < V.n - 1; ++i) {
    double next = step(c, i - 1, i, i + 1, prev, cur);
    prev = cur;
    cur = next;
    if (std::fabs(cur) > kBig) {
      prev /= kBig;
      cur /= kBig;
    }
    int s = sign_of(cur);
    if (s != 0 && s != last) {
      ++nodes;
      last = s;
    }
  }
  return nodes;
}

std::vector<EigenEstimate> numerov_solve(const Grid1D& V, int count, const NumerovOptions& opts) {
  V.validate();
  if (opts.require_decay) {
    if (std::fabs(V.values.front()) >= 1e-2 || std::fabs(V.values.back()) >= 1e-2) {
      std::ostringstream os;
      os << "potential does not decay at the grid ends (|V| = " << std::fabs(V.values.front()) << ", "
         << std::fabs(V.values.back()) << ")";
      throw Error(ErrorCode::InsufficientDecay, os.str());
    }
  }
  const double vmin = *std::min_element(V.values.begin(), V.values.end());
  double e_max = opts.e_max;
  int available = numerov_node_count(V, e_max);
  if (!opts.require_decay) {
    for (int k = 0; k < 64 && available < count; ++k) {
      e_max = vmin + 2.0 * (e_max - vmin) + 1.0;
      available = numerov_node_count(V, e_max);
    }
  }
  const int want = count <= 0 ? available : std::min(count, available);
  std::vector<EigenEstimate> out;
  for (int n = 0; n < want; ++n) {
    double lo = vmin, hi = e_max;
    bool seeded = false;
    if (opts.seeds && static_cast<int>(opts.seeds->size()) > n) {
      const double s = (*opts.seeds)[n];
      const double d = 1e-3 * std::max(1.0, std::fabs(s));
      if (s - d > vmin && s + d < e_max && numerov_node_count(V, s - d) == n &&
          numerov_node_count(V, s + d) == n + 1) {
        lo = s - d;
        hi = s + d;
        seeded = true;
      }
    }
    if (!seeded && !out.empty()) lo = std::max(lo, out.back().energy);
    // Stage 1: node-count bisection until the bracket isolates level n.
    for (int it = 0; it < 200; ++it) {
      int nlo = numerov_node_count(V, lo), nhi = numerov_node_count(V, hi);
      if (nlo == n && nhi == n + 1 && hi - lo < 1e-4 * std::max(1.0, std::fabs(lo))) break;
      if (hi - lo < opts.tol) break;
      double mid = 0.5 * (lo + hi);
      if (numerov_node_count(V, mid) >= n + 1) hi = mid; else lo = mid;
    }
    // Stage 2: bisection on the matching Wronskian.
    const int m = matching_index(V, 0.5 * (lo + hi));
    double wlo = wronskian(V, lo, m), whi = wronskian(V, hi, m);
    bool use_w = sign_of(wlo) * sign_of(whi) < 0;
    for (int it = 0; it < 200 && hi - lo > opts.tol; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (use_w) {
        double wm = wronskian(V, mid, m);
        if (sign_of(wm) == sign_of(wlo)) {
          lo = mid;
          wlo = wm;
        } else {
          hi = mid;
        }
      } else {
        if (numerov_node_count(V, mid) >= n + 1) hi = mid; else lo = mid;
      }
    }
    if (!(hi - lo <= opts.tol * 1.0000001) && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(lo)) {
      std::ostringstream os;
      os << "level " << n << " bracket did not shrink below " << opts.tol;
      throw Error(ErrorCode::NotConverged, os.str());
    }
    EigenEstimate e;
    e.energy = 0.5 * (lo + hi);
    e.nodes = numerov_node_count(V, lo);
    e.bracket_width = hi - lo;
    out.push_back(e);
  }
  return out;
}

std::vector<EigenEstimate> numerov_spectrum(const Grid1D& V, int count, double tol,
                                            const std::vector<double>* seeds) {
  NumerovOptions o;
  o.tol = tol;
  o.seeds = seeds;
  return numerov_solve(V, count, o);
}

std::vector<EigenEstimate> numerov_box_spectrum(const Grid1D& V, int count, double tol) {
  NumerovOptions o;
  o.tol = tol;
  o.require_decay = false;
  o.e_max = *std::min_element(V.values.begin(), V.values.end()) + 1.0;
  return numerov_solve(V, count, o);
}

std::vector<double> numerov_shoot_left(const Grid1D& V, double eps) {
  V.validate();
  Coeffs c = numerov_coeffs(V, eps);
  std::vector<double> psi(V.n, 0.0);
  psi[1] = 1e-200;
  for (int i = 1; i < V.n - 1; ++i) {
    psi[i + 1] = step(c, i - 1, i, i + 1, psi[i - 1], psi[i]);
    if (std::fabs(psi[i + 1]) > kBig) {
      for (int j = 0; j <= i + 1; ++j) psi[j] /= kBig;
    }
  }
  double mx = 0.0;
  for (double v : psi) mx = std::max(mx, std::fabs(v));
  if (mx > 0.0)
    for (double& v : psi) v /= mx;
  return psi;
}

int count_sign_changes(const std::vector<double>& s) {
  return count_sign_changes(nullptr, s);
}

int count_sign_changes(const std::function<double(double)>& f, const std::vector<double>& xs) {
  // With f == nullptr, xs holds the samples themselves.
  std::vector<double> v;
  if (f) {
    v.reserve(xs.size());
    for (double x : xs) v.push_back(f(x));
  } else {
    v = xs;
  }
  double mx = 0.0;
  for (double a : v) mx = std::max(mx, std::fabs(a));
  if (mx == 0.0) throw Error(ErrorCode::AmbiguousZero, "function vanishes on all samples");
  const double thr = 1e-12 * mx;
  int first = 0, last = static_cast<int>(v.size()) - 1;
  while (first <= last && std::fabs(v[first]) < thr) ++first;
  while (last >= first && std::fabs(v[last]) < thr) --last;
  int count = 0, prev_sign = 0;
  for (int i = first; i <= last; ++i) {
    if (std::fabs(v[i]) < thr) {
      if (i + 1 <= last && std::fabs(v[i + 1]) < thr) {
        if (!f) throw Error(ErrorCode::AmbiguousZero, "samples vanish over an interval");
        // Refine: any sample in the stretch clearly away from zero?
        bool resolved = false;
        for (int k = 1; k < 64 && !resolved; ++k) {
          double xm = xs[i] + (xs[i + 1] - xs[i]) * k / 64.0;
          if (std::fabs(f(xm)) >= thr) resolved = true;
        }
        if (!resolved) throw Error(ErrorCode::AmbiguousZero, "function is below 1e-12 over an interval");
      }
      continue;
    }
    int s = sign_of(v[i]);
    if (prev_sign != 0 && s != prev_sign) {
      // A grazing dip between two same-sign samples is not a sign change;
      // a near-zero sample between opposite signs still counts once.
      ++count;
    } else if (f && prev_sign != 0 && i > first && std::fabs(v[i - 1]) < thr) {
      // Same sign on both sides of a near-zero sample: look for a hidden double crossing.
      int crossings = 0, ps = prev_sign;
      for (int k = 1; k < 64; ++k) {
        double xm = xs[i - 2 >= 0 ? i - 2 : 0] + (xs[i] - xs[i - 2 >= 0 ? i - 2 : 0]) * k / 64.0;
        double fm = f(xm);
        if (std::fabs(fm) < thr) continue;
        int q = sign_of(fm);
        if (q != ps) {
          ++crossings;
          ps = q;
        }
      }
      count += crossings;
    }
    prev_sign = s;
  }
  return count;
}

}  // namespace spectra
