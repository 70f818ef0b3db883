#include "tropnev/cli/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

#include "json.hpp"
#include "tropnev/nevanlinna.hpp"

namespace tropnev::cli {

namespace {

struct RawTerm {
  double coeff;
  bool bottom;
  std::optional<std::vector<double>> expo;
  std::size_t column;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::size_t line) : src_(src), line_(line) {}

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= src_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void error(const std::string& what) const { throw ParseError(line_, column(), what); }

  // A real number, or -inf when allow_bottom is set.
  double real(bool allow_bottom, bool* bottom = nullptr) {
    skip_ws();
    if (allow_bottom && src_.substr(pos_, 4) == "-inf") {
      pos_ += 4;
      if (bottom) *bottom = true;
      return -INFINITY;
    }
    std::size_t start = pos_;
    if (pos_ < src_.size() && src_[pos_] == '+') ++pos_;
    double v = 0.0;
    auto res = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), v);
    if (res.ec != std::errc() || !std::isfinite(v)) {
      pos_ = start;
      error("expected a number");
    }
    pos_ = static_cast<std::size_t>(res.ptr - src_.data());
    return v;
  }

 private:
  std::string_view src_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::vector<RawTerm> parse_poly(Lexer& lx) {
  std::vector<RawTerm> terms;
  do {
    lx.skip_ws();
    RawTerm t{0.0, false, std::nullopt, lx.column()};
    t.coeff = lx.real(true, &t.bottom);
    if (lx.accept(':')) {
      std::vector<double> e;
      do {
        e.push_back(lx.real(false));
      } while (lx.accept(','));
      t.expo = std::move(e);
    }
    terms.push_back(std::move(t));
  } while (lx.accept('|'));
  return terms;
}

TropicalPolynomial build(const std::vector<RawTerm>& raw, std::size_t dim, std::size_t line,
                         std::vector<std::string>* warnings) {
  std::vector<Monomial> terms;
  for (const auto& t : raw) {
    if (t.bottom) {
      if (warnings) {
        warnings->push_back("line " + std::to_string(line) + ", column " + std::to_string(t.column) +
                            ": dropping term with coefficient -inf");
      }
      continue;
    }
    terms.push_back({TropicalNumber(t.coeff), t.expo ? *t.expo : std::vector<double>(dim, 0.0)});
  }
  if (terms.empty()) throw ParseError(line, raw.front().column, "polynomial has no finite term");
  return TropicalPolynomial(dim, std::move(terms));
}

}  // namespace

TropicalRational parse_expr(std::string_view src, std::vector<std::string>* warnings, std::size_t line) {
  Lexer lx(src, line);
  if (lx.at_end()) lx.error("empty expression");
  auto num = parse_poly(lx);
  std::optional<std::vector<RawTerm>> den;
  if (lx.accept('/')) den = parse_poly(lx);
  if (!lx.at_end()) lx.error("unexpected character");

  std::optional<std::size_t> dim;
  auto scan = [&](const std::vector<RawTerm>& terms) {
    for (const auto& t : terms) {
      if (!t.expo) continue;
      if (dim && *dim != t.expo->size()) {
        throw ParseError(line, t.column, "exponent vector has length " + std::to_string(t.expo->size()) +
                                             ", expected " + std::to_string(*dim));
      }
      dim = t.expo->size();
    }
  };
  scan(num);
  if (den) scan(*den);
  const std::size_t n = dim.value_or(1);
  TropicalPolynomial p = build(num, n, line, warnings);
  if (!den) return TropicalRational(std::move(p));
  return TropicalRational(std::move(p), build(*den, n, line, warnings));
}

std::string print_poly(const TropicalPolynomial& p) {
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += " | ";
    out += format_double(t.coeff.value());
    out += ':';
    for (std::size_t k = 0; k < t.expo.size(); ++k) {
      if (k) out += ',';
      out += format_double(t.expo[k]);
    }
  }
  return out;
}

std::string print_expr(const TropicalRational& f) {
  if (f.den() == TropicalPolynomial::unit(f.dim())) return print_poly(f.num());
  return print_poly(f.num()) + " / " + print_poly(f.den());
}

std::vector<double> parse_vector(std::string_view src) {
  Lexer lx(src, 1);
  std::vector<double> v;
  do {
    v.push_back(lx.real(false));
  } while (lx.accept(','));
  if (!lx.at_end()) lx.error("unexpected character in vector");
  return v;
}

TropicalMatrix parse_matrix(std::string_view src) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(src);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("matrix: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw Error(Errc::parse_error, "matrix must be a nonempty array of rows");
  std::vector<std::vector<TropicalNumber>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error(Errc::parse_error, "matrix rows must be arrays");
    std::vector<TropicalNumber> row;
    for (const auto& e : r) {
      if (e.is_string() && e.get<std::string>() == "-inf") {
        row.push_back(TropicalNumber::bottom());
      } else if (e.is_number()) {
        row.push_back(TropicalNumber(e.get<double>()));
      } else {
        throw Error(Errc::parse_error, "matrix entries must be numbers or \"-inf\"");
      }
    }
    rows.push_back(std::move(row));
  }
  return TropicalMatrix::from_rows(rows);
}

std::vector<double> RadiusGrid::points() const {
  return log ? log_grid(lo, hi, count) : linear_grid(lo, hi, count);
}

RadiusGrid parse_grid(std::string_view src) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= src.size(); ++k) {
    if (k == src.size() || src[k] == ':') {
      parts.push_back(src.substr(start, k - start));
      start = k + 1;
    }
  }
  if (parts.size() < 3 || parts.size() > 4 || (parts.size() == 4 && parts[3] != "log" && parts[3] != "lin")) {
    throw Error(Errc::parse_error, "radius grid must look like min:max:count[:log]");
  }
  RadiusGrid g;
  auto num = [](std::string_view s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw Error(Errc::parse_error, "bad number '" + std::string(s) + "' in radius grid");
    }
    return v;
  };
  g.lo = num(parts[0]);
  g.hi = num(parts[1]);
  double count = num(parts[2]);
  if (count < 1 || count != std::floor(count)) throw Error(Errc::parse_error, "grid count must be a positive integer");
  g.count = static_cast<std::size_t>(count);
  g.log = parts.size() == 4 && parts[3] == "log";
  if (!(g.lo > 0.0) || !(g.hi >= g.lo) || (g.count > 1 && !(g.hi > g.lo))) {
    throw Error(Errc::invalid_argument, "radius grid needs 0 < min < max");
  }
  return g;
}

}  // namespace tropnev::cli
