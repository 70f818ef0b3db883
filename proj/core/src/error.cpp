#include "tropnev/error.hpp"

namespace tropnev {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::bottom_divisor: return "BottomDivisor";
    case Errc::negative_power_of_bottom: return "NegativePowerOfBottom";
    case Errc::not_square: return "NotSquare";
    case Errc::bad_partition: return "BadPartition";
    case Errc::dim_mismatch: return "DimMismatch";
    case Errc::zero_q: return "ZeroQ";
    case Errc::excluded_scale: return "ExcludedScale";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::bad_size: return "BadSize";
    case Errc::degenerate_grid: return "DegenerateGrid";
    case Errc::degenerate_map: return "DegenerateMap";
    case Errc::not_complete: return "NotComplete";
    case Errc::bounded_characteristic: return "BoundedCharacteristic";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::too_few_hypersurfaces: return "TooFewHypersurfaces";
    case Errc::term_limit: return "TermLimit";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tropnev
