#include "tropnev/slice.hpp"

#include <algorithm>
#include <cmath>

namespace tropnev {

Envelope upper_envelope(std::vector<Line> lines) {
  if (lines.empty()) throw Error(Errc::invalid_argument, "envelope of no lines");
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.intercept > b.intercept;
  });
  // Equal slopes: keep the highest intercept (sorted first).
  lines.erase(std::unique(lines.begin(), lines.end(),
                          [](const Line& a, const Line& b) { return a.slope == b.slope; }),
              lines.end());

  auto cross = [](const Line& a, const Line& b) {
    return (a.intercept - b.intercept) / (b.slope - a.slope);
  };
  std::vector<Line> hull;
  for (const auto& l : lines) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], l) <= cross(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(l);
  }

  Envelope env;
  env.leftmost_slope = hull.front().slope;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    env.breakpoints.push_back({cross(hull[k], hull[k + 1]), hull[k + 1].slope - hull[k].slope});
  }
  return env;
}

namespace {

std::vector<Line> restrict_to_ray(const TropicalPolynomial& p, std::span<const double> theta) {
  std::vector<Line> lines;
  lines.reserve(p.size());
  for (const auto& t : p.terms()) {
    double s = 0.0;
    for (std::size_t k = 0; k < theta.size(); ++k) s += t.expo[k] * theta[k];
    lines.push_back({s, t.coeff.value()});
  }
  return lines;
}

RaySlice assemble(std::span<const double> theta, double R, double tol, double value_at_0,
                  double leftmost_slope, std::vector<Breakpoint> events) {
  std::stable_sort(events.begin(), events.end(),
                   [](const Breakpoint& a, const Breakpoint& b) { return a.t < b.t; });
  std::vector<Breakpoint> merged;
  for (const auto& e : events) {
    if (!merged.empty() &&
        std::abs(e.t - merged.back().t) <= tol * std::max(1.0, std::abs(e.t))) {
      merged.back().jump += e.jump;
    } else {
      merged.push_back(e);
    }
  }

  RaySlice s;
  s.direction.assign(theta.begin(), theta.end());
  s.lo = -R;
  s.hi = R;
  s.value_at_0 = value_at_0;
  double slope = leftmost_slope;
  for (const auto& b : merged) {
    if (b.t <= s.lo) {
      slope += b.jump;  // left of the window: shifts the first slope
      continue;
    }
    if (b.t >= s.hi) break;
    if (std::abs(b.jump) < tol) continue;
    if (s.slopes.empty()) s.slopes.push_back(slope);
    s.breakpoints.push_back(b);
    slope += b.jump;
    s.slopes.push_back(slope);
  }
  if (s.slopes.empty()) s.slopes.push_back(slope);
  return s;
}

void check_radius(double R) {
  if (!(R > 0.0)) throw Error(Errc::invalid_argument, "slice radius must be positive");
}

}  // namespace

RaySlice ray_slice(const TropicalRational& f, std::span<const double> theta, double R, double tol) {
  check_dim(f.dim(), theta.size());
  check_radius(R);
  Envelope num = upper_envelope(restrict_to_ray(f.num(), theta));
  Envelope den = upper_envelope(restrict_to_ray(f.den(), theta));
  std::vector<Breakpoint> events = num.breakpoints;
  for (const auto& b : den.breakpoints) events.push_back({b.t, -b.jump});
  std::vector<double> zero(f.dim(), 0.0);
  return assemble(theta, R, tol, f.eval(zero), num.leftmost_slope - den.leftmost_slope,
                  std::move(events));
}

RaySlice ray_slice(const TropicalPolynomial& p, std::span<const double> theta, double R, double tol) {
  return ray_slice(TropicalRational(p), theta, R, tol);
}

namespace {

struct Piece {
  double a, b, ga, gb;
  bool kink = false;  // terminal-width cell that failed the linearity test
};

class Bisector {
 public:
  Bisector(const std::function<double(double)>& g, const BlackboxOptions& opts, double min_width)
      : g_(g), opts_(opts), min_width_(min_width) {}

  double eval(double t) {
    if (++count_ > opts_.max_evaluations) {
      throw Error(Errc::budget_exceeded, "blackbox slicing exceeded its evaluation budget");
    }
    return g_(t);
  }

  bool on_chord(double a, double ga, double b, double gb, double t, double gt) const {
    double chord = ga + (gb - ga) * (t - a) / (b - a);
    return std::abs(gt - chord) <= opts_.tol * (1.0 + std::abs(gt));
  }

  void split(double a, double ga, double b, double gb, double gm, std::vector<Piece>& out) {
    const double m = 0.5 * (a + b);
    const double q1 = 0.5 * (a + m), q3 = 0.5 * (m + b);
    const double g1 = eval(q1), g3 = eval(q3);
    bool linear = on_chord(a, ga, b, gb, m, gm) && on_chord(a, ga, b, gb, q1, g1) &&
                  on_chord(a, ga, b, gb, q3, g3);
    if (linear || b - a <= min_width_) {
      out.push_back({a, b, ga, gb, !linear});
      return;
    }
    split(a, ga, m, gm, g1, out);
    split(m, gm, b, gb, g3, out);
  }

 private:
  const std::function<double(double)>& g_;
  const BlackboxOptions& opts_;
  double min_width_;
  std::size_t count_ = 0;
};

}  // namespace

RaySlice blackbox_slice(const std::function<double(double)>& g, double lo, double hi,
                        const BlackboxOptions& opts) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(Errc::invalid_argument, "blackbox slicing needs a finite interval lo < hi");
  }
  const std::size_t cells = std::max<std::size_t>(1, opts.initial_cells);
  Bisector bis(g, opts, (hi - lo) * opts.min_width_fraction);

  std::vector<Piece> pieces;
  std::vector<double> knots(cells + 1), vals(cells + 1);
  for (std::size_t k = 0; k <= cells; ++k) {
    knots[k] = k == cells ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(cells);
    vals[k] = bis.eval(knots[k]);
  }
  for (std::size_t k = 0; k < cells; ++k) {
    double m = 0.5 * (knots[k] + knots[k + 1]);
    bis.split(knots[k], vals[k], knots[k + 1], vals[k + 1], bis.eval(m), pieces);
  }

  // Merge collinear neighbours into maximal segments. A run of kink cells
  // between two segments is dropped so that the segments meet at one
  // breakpoint; kink cells at either end are kept as short segments.
  std::vector<Piece> segs;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const Piece& p = pieces[k];
    if (p.kink && !segs.empty()) {
      std::size_t next = k;
      while (next < pieces.size() && pieces[next].kink) ++next;
      if (next < pieces.size()) {
        k = next - 1;
        segs.push_back(pieces[next]);
        ++k;
        continue;
      }
    }
    if (!segs.empty() && !segs.back().kink && !p.kink) {
      Piece& s = segs.back();
      if (s.b == p.a &&
          (bis.on_chord(s.a, s.ga, s.b, s.gb, p.b, p.gb) || bis.on_chord(s.a, s.ga, p.b, p.gb, s.b, s.gb))) {
        s.b = p.b;
        s.gb = p.gb;
        continue;
      }
    }
    segs.push_back(p);
  }

  // A kink close to a cell edge can pass the linearity test and leave a
  // short segment of intermediate slope. Drop a middle segment when g at the
  // intersection of its neighbours' lines agrees with those lines.
  auto slope = [](const Piece& s) { return (s.gb - s.ga) / (s.b - s.a); };
  std::vector<Piece> kept;
  for (const auto& p : segs) {
    kept.push_back(p);
    while (kept.size() >= 3) {
      const Piece& l = kept[kept.size() - 3];
      const Piece& m = kept[kept.size() - 2];
      const Piece& r = kept.back();
      const double sl = slope(l), sr = slope(r);
      if (std::abs(sl - sr) < opts.tol) break;
      const double t = (r.ga - sr * r.a - (l.ga - sl * l.a)) / (sl - sr);
      if (!(t >= m.a && t <= m.b)) break;
      const double gt = bis.eval(t);
      if (std::abs(gt - (l.ga + sl * (t - l.a))) > opts.tol * (1.0 + std::abs(gt))) break;
      kept.erase(kept.end() - 2);
    }
  }
  segs = std::move(kept);

  RaySlice out;
  out.lo = lo;
  out.hi = hi;
  out.value_at_0 = (lo <= 0.0 && 0.0 <= hi) ? g(0.0) : std::nan("");
  out.slopes.push_back(slope(segs.front()));
  for (std::size_t k = 0; k + 1 < segs.size(); ++k) {
    const Piece& l = segs[k];
    const Piece& r = segs[k + 1];
    double sl = slope(l), sr = slope(r);
    double jump = sr - sl;
    if (std::abs(jump) < opts.tol) {
      out.slopes.back() = slope({l.a, r.b, l.ga, r.gb});
      continue;
    }
    // Intersection of the two supporting lines, kept inside their joint extent.
    double t = (r.ga - sr * r.a - (l.ga - sl * l.a)) / (sl - sr);
    t = std::clamp(t, l.a, r.b);
    if (t <= lo || t >= hi) continue;
    out.breakpoints.push_back({t, jump});
    out.slopes.push_back(sr);
  }
  return out;
}

RaySlice mirrored(const RaySlice& s) {
  RaySlice m;
  m.direction = s.direction;
  for (double& c : m.direction) c = -c;
  m.lo = -s.hi;
  m.hi = -s.lo;
  m.value_at_0 = s.value_at_0;
  for (auto it = s.breakpoints.rbegin(); it != s.breakpoints.rend(); ++it) {
    m.breakpoints.push_back({-it->t, it->jump});
  }
  for (auto it = s.slopes.rbegin(); it != s.slopes.rend(); ++it) m.slopes.push_back(-*it);
  return m;
}

RaySlice negated(const RaySlice& s) {
  RaySlice m = s;
  m.value_at_0 = -s.value_at_0;
  for (auto& b : m.breakpoints) b.jump = -b.jump;
  for (double& v : m.slopes) v = -v;
  return m;
}

double slice_pole_mass(const RaySlice& s, double t_max) {
  double mass = 0.0;
  for (const auto& b : s.breakpoints) {
    if (b.jump < 0.0 && std::abs(b.t) < t_max) mass -= b.jump;
  }
  return mass;
}

double slice_counting(const RaySlice& s, double r) {
  double acc = 0.0;
  for (const auto& b : s.breakpoints) {
    if (b.jump < 0.0 && std::abs(b.t) < r) acc += -b.jump * (r - std::abs(b.t));
  }
  return 0.5 * acc;
}

double slice_value(const RaySlice& s, double t) {
  const auto& bp = s.breakpoints;
  double v = s.value_at_0;
  if (t >= 0.0) {
    std::size_t j = 0;
    while (j < bp.size() && bp[j].t <= 0.0) ++j;
    double cur = 0.0;
    while (j < bp.size() && bp[j].t < t) {
      v += s.slopes[j] * (bp[j].t - cur);
      cur = bp[j].t;
      ++j;
    }
    return v + s.slopes[j] * (t - cur);
  }
  std::size_t j = 0;
  while (j < bp.size() && bp[j].t < 0.0) ++j;
  // slopes[j] is the slope just left of 0.
  double cur = 0.0;
  while (j > 0 && bp[j - 1].t > t) {
    v -= s.slopes[j] * (cur - bp[j - 1].t);
    cur = bp[j - 1].t;
    --j;
  }
  return v - s.slopes[j] * (cur - t);
}

}  // namespace tropnev
