#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropnev/cli/parse.hpp"
#include "tropnev/projective.hpp"
#include "tropnev/quadrature.hpp"

namespace tropnev::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Grid, quadrature, tolerances and output settings shared by every command.
struct RunConfig {
  RadiusGrid grid;
  std::size_t K = kDefaultQuadratureSize;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::optional<double> threshold;
  std::string format = "csv";
  std::string out;
};

/// Functions from -f: an expression, a JSON object, or a file holding a JSON
/// array or one expression per line (blank lines and '#' comments skipped).
std::vector<TropicalRational> load_functions(const std::string& src, std::vector<std::string>* warnings);
ProjectiveMap load_map(const std::string& src);
/// A JSON hypersurface object, an array of them, or a file holding either.
std::vector<HomogeneousPolynomial> load_hypersurfaces(const std::string& src);

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropnev::cli
