#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tropnev/nevanlinna.hpp"
#include "tropnev/polynomial.hpp"
#include "tropnev/rational.hpp"

namespace tropnev {

/// Point of TP^m: coordinates modulo adding a common real.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<TropicalNumber> coords);

  const std::vector<TropicalNumber>& coords() const noexcept { return coords_; }
  /// Representative with maximum coordinate 0.
  ProjectivePoint normalized() const;
  /// lambda (x) p
  ProjectivePoint scaled(double lambda) const;

  bool equivalent(const ProjectivePoint& other, double tol = kDefaultTol) const;

 private:
  std::vector<TropicalNumber> coords_;
};

/// Reduced representation [f_0 : ... : f_m] of a map R^n -> TP^m by tropical
/// entire functions.
class ProjectiveMap {
 public:
  explicit ProjectiveMap(std::vector<TropicalPolynomial> components);

  /// [den : num] for f = num (/) den.
  static ProjectiveMap from_rational(const TropicalRational& f);

  std::size_t dim() const noexcept { return components_.front().dim(); }
  std::size_t target_dim() const noexcept { return components_.size() - 1; }
  const std::vector<TropicalPolynomial>& components() const noexcept { return components_; }

  std::vector<double> eval(std::span<const double> x) const;
  /// ||f(x)|| = max_k f_k(x)
  double norm(std::span<const double> x) const;

 private:
  std::vector<TropicalPolynomial> components_;
};

struct ReducedCheck {
  bool reduced = true;
  bool exact = false;                 // exact breakpoint intersection (n = 1)
  std::vector<double> common_root;    // witness when !reduced
};

/// Looks for a point that is a corner of every component. Exact in n = 1;
/// for n >= 2 it probes the corner points found along the quadrature rays.
ReducedCheck check_reduced(const ProjectiveMap& f, const SphereQuadrature& quad,
                           double tol = kDefaultTol);

struct HomogeneousTerm {
  std::vector<unsigned> index;  // (i_0, ..., i_m), summing to d
  TropicalNumber coeff;
};

/// Homogeneous max-plus polynomial of degree d in m + 1 variables.
class HomogeneousPolynomial {
 public:
  HomogeneousPolynomial(std::size_t m, unsigned d, std::vector<HomogeneousTerm> terms);

  std::size_t m() const noexcept { return m_; }
  unsigned degree() const noexcept { return d_; }
  const std::vector<HomogeneousTerm>& terms() const noexcept { return terms_; }

  /// Number of monomials of degree d in m + 1 variables, minus one.
  std::size_t M() const;
  /// All C(m+d, d) coefficients present and finite.
  bool is_complete() const;
  std::size_t finite_count() const;
  double max_coeff() const;  // ||a||
  double min_coeff() const;
  TropicalNumber coeff(std::span<const unsigned> index) const;

  double eval(std::span<const double> y) const;

  /// P^(k): degree k d, coefficients and indices scaled by k.
  HomogeneousPolynomial power(unsigned k) const;

 private:
  std::size_t m_;
  unsigned d_;
  std::vector<HomogeneousTerm> terms_;
};

/// Multi-indices of total degree d in m + 1 variables, in lexicographically
/// decreasing order (d,0,...,0) first.
std::vector<std::vector<unsigned>> degree_indices(std::size_t m, unsigned d);
std::size_t binomial(std::size_t n, std::size_t k);

/// f^I = f_0^(i_0) (x) ... (x) f_m^(i_m)
TropicalPolynomial monomial_of_map(const ProjectiveMap& f, std::span<const unsigned> index,
                                   std::size_t limit = kDefaultTermLimit);

/// Symbolic P o f. Throws Errc::arity_mismatch or Errc::term_limit.
TropicalPolynomial compose(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                           std::size_t limit = kDefaultTermLimit);

/// P(f(x)) evaluated directly.
double compose_eval(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                    std::span<const double> x);

/// T_f(r) = (1/omega_n) int ||f(r theta)|| dsigma - ||f(0)||
double cartan_characteristic(const ProjectiveMap& f, double r, const SphereQuadrature& quad);

/// d ||f(x)|| + ||a|| - P(f(x)), with ||a|| the largest finite coefficient.
double weil_function(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                     std::span<const double> x);

/// m_f(r, V_P)
double hyper_proximity(const HomogeneousPolynomial& P, const ProjectiveMap& f, double r,
                       const SphereQuadrature& quad);

struct ProbeOptions {
  std::size_t samples = 512;
  double radius = 100.0;
  std::uint64_t seed = 0;
};

/// True when some probe point has a single monomial of P o f strictly on
/// top by more than tol. A P with fewer than two finite monomials defines
/// an empty hypersurface and is reported as degenerate.
bool is_nondegenerate(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                      const SphereQuadrature& quad, const ProbeOptions& probe = {},
                      double tol = kDefaultTol);
/// Throws Errc::degenerate_map when is_nondegenerate fails.
void require_nondegenerate(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                           const SphereQuadrature& quad, const ProbeOptions& probe = {},
                           double tol = kDefaultTol);

struct HyperFmtTable {
  std::vector<double> r;
  std::vector<double> mf;
  std::vector<double> Nf;
  std::vector<double> dTf;
  std::vector<double> residual;

  double spread() const;
};

/// m_f(r, V_P) + N(r, 1_T (/) P o f) - d T_f(r) over the grid.
HyperFmtTable hyper_fmt_residual(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                                 std::span<const double> r_grid, const SphereQuadrature& quad);

/// T_f(r) - (1/d) N(r, 1_T (/) P o f); throws Errc::not_complete for incomplete P.
std::vector<double> complete_poly_gap(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                                      std::span<const double> r_grid,
                                      const SphereQuadrature& quad);

struct DefectEstimate {
  double value = 0.0;  // min over the top decade of m_f / (d T_f)
  std::vector<double> r;
  std::vector<double> ratio;
};

/// Throws Errc::degenerate_map or Errc::bounded_characteristic.
DefectEstimate defect(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                      std::span<const double> r_grid, const SphereQuadrature& quad);

struct IdentityResidual {
  bool skipped = false;  // f constant
  std::vector<double> residual;
};

/// T(r,f) - [N(r, 1_T (/) (f (+) a)) - N(r, f (+) a) + N(r, f)]
IdentityResidual one_dim_identity_residual(const TropicalRational& f, double a,
                                           std::span<const double> r_grid,
                                           const SphereQuadrature& quad);

}  // namespace tropnev
