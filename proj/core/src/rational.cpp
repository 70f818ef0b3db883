#include "tropnev/rational.hpp"

#include <cmath>

namespace tropnev {

TropicalRational::TropicalRational(TropicalPolynomial num)
    : num_(std::move(num)), den_(TropicalPolynomial::unit(num_.dim())) {}

TropicalRational::TropicalRational(TropicalPolynomial num, TropicalPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  check_dim(num_.dim(), den_.dim());
}

TropicalRational TropicalRational::constant(std::size_t dim, double c) {
  return TropicalRational(TropicalPolynomial::constant(dim, c));
}

bool TropicalRational::is_entire() const noexcept { return den_.is_constant(); }

double TropicalRational::dir_deriv_plus(std::span<const double> x, std::span<const double> phi,
                                        double tol) const {
  return num_.dir_deriv_plus(x, phi, tol) - den_.dir_deriv_plus(x, phi, tol);
}

double TropicalRational::jump(std::span<const double> x, std::span<const double> phi, double tol) const {
  std::vector<double> neg(phi.begin(), phi.end());
  for (double& c : neg) c = -c;
  return dir_deriv_plus(x, phi, tol) + dir_deriv_plus(x, neg, tol);
}

TropicalRational TropicalRational::shifted(std::span<const double> c) const {
  return TropicalRational(num_.shifted(c), den_.shifted(c));
}

TropicalRational TropicalRational::q_scaled(double q) const {
  return TropicalRational(num_.q_scaled(q), den_.q_scaled(q));
}

TropicalRational TropicalRational::scaled(double alpha) const {
  return TropicalRational(num_.scaled(alpha), den_.scaled(alpha));
}

TropicalRational t_add(const TropicalRational& f, const TropicalRational& g) {
  if (f.den() == g.den()) return TropicalRational(t_add(f.num(), g.num()), f.den());
  return TropicalRational(t_add(t_mul(f.num(), g.den()), t_mul(g.num(), f.den())),
                          t_mul(f.den(), g.den()));
}

TropicalRational t_add(const TropicalRational& f, double a) {
  return TropicalRational(t_add(f.num(), f.den().times_constant(a)), f.den());
}

TropicalRational t_mul(const TropicalRational& f, const TropicalRational& g) {
  return TropicalRational(t_mul(f.num(), g.num()), t_mul(f.den(), g.den()));
}

TropicalRational t_div(const TropicalRational& f, const TropicalRational& g) {
  return TropicalRational(t_mul(f.num(), g.den()), t_mul(f.den(), g.num()));
}

double eval_poly(const TropicalPolynomial& p, std::span<const double> x) { return p.eval(x); }
double eval_rational(const TropicalRational& f, std::span<const double> x) { return f.eval(x); }

double dir_deriv_plus(const TropicalRational& f, std::span<const double> x,
                      std::span<const double> phi, double tol) {
  return f.dir_deriv_plus(x, phi, tol);
}

double jump_J(const TropicalRational& f, std::span<const double> x, std::span<const double> phi,
              double tol) {
  return f.jump(x, phi, tol);
}

TropicalRational shift(const TropicalRational& f, std::span<const double> c) { return f.shifted(c); }
TropicalRational q_scale(const TropicalRational& f, double q) { return f.q_scaled(q); }

std::string_view to_string(PointKind k) noexcept {
  switch (k) {
    case PointKind::smooth: return "smooth";
    case PointKind::root: return "root";
    case PointKind::pole: return "pole";
  }
  return "unknown";
}

namespace {

// Coordinate axes and the diagonals e_i +- e_j, always probed for signs.
std::vector<std::vector<double>> probe_directions(std::size_t n) {
  std::vector<std::vector<double>> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    dirs.push_back(e);
  }
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<double> a(n, 0.0), b(n, 0.0);
      a[i] = h;
      a[j] = h;
      b[i] = h;
      b[j] = -h;
      dirs.push_back(std::move(a));
      dirs.push_back(std::move(b));
    }
  }
  return dirs;
}

}  // namespace

PointClass classify_point(const TropicalRational& f, std::span<const double> x,
                          const SphereQuadrature& quad, double tol) {
  check_dim(f.dim(), x.size());
  check_dim(f.dim(), quad.dim);

  bool neg = false, pos = false;
  double neg_mass = 0.0, pos_mass = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    double J = f.jump(x, quad.nodes[i], tol);
    if (J < -tol) {
      neg = true;
      neg_mass += quad.weights[i] * -J;
    } else if (J > tol) {
      pos = true;
      pos_mass += quad.weights[i] * J;
    }
  }
  for (const auto& d : probe_directions(f.dim())) {
    double J = f.jump(x, d, tol);
    neg = neg || J < -tol;
    pos = pos || J > tol;
  }
  if (neg) return {PointKind::pole, neg_mass};
  if (pos) return {PointKind::root, pos_mass};
  return {PointKind::smooth, 0.0};
}

}  // namespace tropnev
