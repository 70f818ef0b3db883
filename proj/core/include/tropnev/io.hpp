#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tropnev/nevanlinna.hpp"
#include "tropnev/projective.hpp"
#include "tropnev/smt.hpp"

namespace tropnev {

/// {"dim": n, "num": [{"c": number|"-inf", "m": [...]}, ...], "den": [...]}
/// Throws Errc::parse_error.
TropicalRational rational_from_json(std::string_view text);
std::string to_json(const TropicalRational& f);

/// {"dim": n, "components": [poly, ...]} where poly is a term list.
ProjectiveMap map_from_json(std::string_view text);
std::string to_json(const ProjectiveMap& f);

/// {"m": m, "d": d, "coeffs": [{"I": [...], "c": number|"-inf"}, ...]}
HomogeneousPolynomial hypersurface_from_json(std::string_view text);
std::string to_json(const HomogeneousPolynomial& P);

/// Rectangular numeric output. Metadata is repeated as trailing constant
/// columns in CSV and stored under "meta" in JSON.
using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> meta;
};

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

Table to_table(const CharTable& t);
Table to_table(const HyperFmtTable& t);
Table to_table(const SmtReport& rep);

/// Full report: header fields plus per-radius rows.
std::string to_json(const SmtReport& rep);
std::string to_json(const DefectRelationReport& rep);

}  // namespace tropnev
