#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tropnev/casorati.hpp"
#include "tropnev/combination.hpp"
#include "tropnev/nevanlinna.hpp"
#include "tropnev/projective.hpp"

namespace tropnev {

struct SmtOptions {
  EssentialOptions essential;
  BlackboxOptions blackbox;
  ProbeOptions probe;
  double trend_fraction = 0.05;  // trend holds when slack >= -trend_fraction * T_f at r_max
  double tol = 1e-9;             // violations are slacks below -tol
};

/// One grid radius of the second-main-theorem report. `lhs` and `slack`
/// use lambda_min (the conservative end); the *_lambda_max fields use the
/// other end of the lambda interval.
struct SmtRow {
  double r = 0.0;
  double T_f = 0.0;
  std::vector<double> N;  // N(r, 1_T (/) P_j o f), j = 1..q
  double casorati_N = 0.0;
  double lhs = 0.0;
  double lhs_lambda_max = 0.0;
  double middle = 0.0;  // sum_j N_j / d_j - casorati_N / d
  double rhs = 0.0;     // sum_{j >= M+2} N_j / d_j
  double upper = 0.0;   // (q - M - 1) T_f
  double slack = 0.0;   // rhs - lhs
  double slack_lambda_max = 0.0;
  double middle_slack = 0.0;  // middle - lhs
};

/// Finite-grid evaluation of the second main theorem chain. The report lists
/// what was computed; it never certifies the asymptotic statement.
struct SmtReport {
  std::size_t m = 0;
  std::size_t q = 0;
  unsigned d = 1;  // lcm of the degrees
  std::size_t M = 0;
  std::vector<unsigned> degrees;
  bool q_variant = false;
  std::vector<double> shift;
  double scale = 0.0;

  std::size_t lambda_min = 0;
  std::size_t lambda_max = 0;
  bool lambda_exact = true;
  bool vacuous = false;            // q - M - 1 - lambda_min <= 0: LHS <= 0 across the interval
  bool casorati_available = true;  // q >= M + 1

  std::vector<SmtRow> rows;
  std::vector<double> violations;  // radii with slack < -tol
  bool trend_ok = false;
  double trend_ratio = 0.0;  // slack / T_f at r_max

  bool growth_available = false;
  GrowthEstimate growth;

  /// max over the grid of N_j - d_j T_f, bounded by the first main theorem.
  std::vector<double> fmt_excess;
};

/// Throws Errc::too_few_hypersurfaces (q < m), Errc::arity_mismatch,
/// Errc::degenerate_map, Errc::dim_mismatch.
SmtReport smt_check(const ProjectiveMap& f, std::span<const HomogeneousPolynomial> hypersurfaces,
                    std::span<const double> c, std::span<const double> r_grid,
                    const SphereQuadrature& quad, const SmtOptions& opts = {});

/// As smt_check with the q-Casorati determinant. Throws Errc::excluded_scale
/// for a scale in {0, 1}.
SmtReport q_smt_check(const ProjectiveMap& f, std::span<const HomogeneousPolynomial> hypersurfaces,
                      double scale, std::span<const double> r_grid, const SphereQuadrature& quad,
                      const SmtOptions& opts = {});

struct DefectRelationReport {
  std::size_t M = 0;
  unsigned d = 1;
  std::size_t lambda_min = 0;
  std::size_t lambda_max = 0;
  std::vector<double> defects;  // grid estimates, one per hypersurface
  double sum_all = 0.0;
  double sum_tail = 0.0;  // j >= M + 2
  double bound_all = 0.0;   // M + 1 + lambda_max
  double bound_tail = 0.0;  // lambda_max
  bool holds = false;       // both sums within their bounds plus trend_fraction
};

DefectRelationReport defect_relation_check(const ProjectiveMap& f,
                                           std::span<const HomogeneousPolynomial> hypersurfaces,
                                           std::span<const double> r_grid,
                                           const SphereQuadrature& quad,
                                           const SmtOptions& opts = {});

/// lcm of the degrees.
unsigned common_degree(std::span<const HomogeneousPolynomial> hypersurfaces);

/// P^(d / deg P) o f expanded over the basis f^I, |I| = d.
CombinationBasis combination_of(const HomogeneousPolynomial& P, const ProjectiveMap& f, unsigned d);

}  // namespace tropnev
