#include "tropnev/io.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace tropnev {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::parse_error, what); }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
}

TropicalNumber read_coeff(const json& c) {
  if (c.is_string()) {
    if (c.get<std::string>() == "-inf") return TropicalNumber::bottom();
    fail("coefficient strings other than \"-inf\" are not allowed");
  }
  if (!c.is_number()) fail("coefficient must be a number or \"-inf\"");
  double v = c.get<double>();
  if (!std::isfinite(v)) fail("coefficient must be finite");
  return TropicalNumber(v);
}

json write_number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v < 0 ? json("-inf") : json("inf");
  return v;
}

std::size_t read_dim(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_unsigned()) {
    fail(std::string("missing or invalid \"") + key + "\"");
  }
  return j[key].get<std::size_t>();
}

TropicalPolynomial read_poly(const json& terms, std::size_t dim) {
  if (!terms.is_array()) fail("polynomial must be an array of terms");
  std::vector<Monomial> out;
  for (const auto& t : terms) {
    if (!t.is_object() || !t.contains("c")) fail("term needs a \"c\" coefficient");
    Monomial m{read_coeff(t["c"]), std::vector<double>(dim, 0.0)};
    if (t.contains("m")) {
      if (!t["m"].is_array() || t["m"].size() != dim) fail("exponent vector must have length dim");
      for (std::size_t k = 0; k < dim; ++k) {
        if (!t["m"][k].is_number()) fail("exponents must be numbers");
        m.expo[k] = t["m"][k].get<double>();
      }
    }
    out.push_back(std::move(m));
  }
  try {
    return TropicalPolynomial(dim, std::move(out));
  } catch (const Error& e) {
    fail(e.what());
  }
}

json write_poly(const TropicalPolynomial& p) {
  json arr = json::array();
  for (const auto& t : p.terms()) arr.push_back({{"c", write_number(t.coeff.value())}, {"m", t.expo}});
  return arr;
}

}  // namespace

TropicalRational rational_from_json(std::string_view text) {
  json j = parse(text);
  std::size_t dim = read_dim(j, "dim");
  if (!j.contains("num")) fail("missing \"num\"");
  TropicalPolynomial num = read_poly(j["num"], dim);
  if (!j.contains("den")) return TropicalRational(std::move(num));
  return TropicalRational(std::move(num), read_poly(j["den"], dim));
}

std::string to_json(const TropicalRational& f) {
  json j{{"dim", f.dim()}, {"num", write_poly(f.num())}};
  if (!(f.den() == TropicalPolynomial::unit(f.dim()))) j["den"] = write_poly(f.den());
  return j.dump();
}

ProjectiveMap map_from_json(std::string_view text) {
  json j = parse(text);
  std::size_t dim = read_dim(j, "dim");
  if (!j.contains("components") || !j["components"].is_array() || j["components"].empty()) {
    fail("missing \"components\"");
  }
  std::vector<TropicalPolynomial> comps;
  for (const auto& c : j["components"]) comps.push_back(read_poly(c, dim));
  return ProjectiveMap(std::move(comps));
}

std::string to_json(const ProjectiveMap& f) {
  json comps = json::array();
  for (const auto& c : f.components()) comps.push_back(write_poly(c));
  return json{{"dim", f.dim()}, {"components", comps}}.dump();
}

HomogeneousPolynomial hypersurface_from_json(std::string_view text) {
  json j = parse(text);
  std::size_t m = read_dim(j, "m");
  std::size_t d = read_dim(j, "d");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) fail("missing \"coeffs\"");
  std::vector<HomogeneousTerm> terms;
  for (const auto& t : j["coeffs"]) {
    if (!t.is_object() || !t.contains("I") || !t.contains("c")) fail("coefficient entries need \"I\" and \"c\"");
    HomogeneousTerm h;
    for (const auto& i : t["I"]) {
      if (!i.is_number_unsigned()) fail("multi-index entries must be nonnegative integers");
      h.index.push_back(i.get<unsigned>());
    }
    h.coeff = read_coeff(t["c"]);
    terms.push_back(std::move(h));
  }
  try {
    return HomogeneousPolynomial(m, static_cast<unsigned>(d), std::move(terms));
  } catch (const Error& e) {
    fail(e.what());
  }
}

std::string to_json(const HomogeneousPolynomial& P) {
  json coeffs = json::array();
  for (const auto& t : P.terms()) coeffs.push_back({{"I", t.index}, {"c", write_number(t.coeff.value())}});
  return json{{"m", P.m()}, {"d", P.degree()}, {"coeffs", coeffs}}.dump();
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ',';
    first = false;
  };
  for (const auto& c : t.columns) {
    sep();
    os << c;
  }
  for (const auto& [k, v] : t.meta) {
    sep();
    os << k;
  }
  os << '\n';
  for (const auto& row : t.rows) {
    first = true;
    for (const auto& v : row) {
      sep();
      if (const double* d = std::get_if<double>(&v)) {
        os << format_double(*d);
      } else {
        os << std::get<std::string>(v);
      }
    }
    for (const auto& [k, v] : t.meta) {
      sep();
      os << v;
    }
    os << '\n';
  }
  return os.str();
}

std::string to_json(const Table& t) {
  json meta = json::object();
  for (const auto& [k, v] : t.meta) meta[k] = v;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::object();
    for (std::size_t k = 0; k < t.columns.size() && k < row.size(); ++k) {
      if (const double* d = std::get_if<double>(&row[k])) {
        r[t.columns[k]] = write_number(*d);
      } else {
        r[t.columns[k]] = std::get<std::string>(row[k]);
      }
    }
    rows.push_back(std::move(r));
  }
  return json{{"meta", meta}, {"rows", rows}}.dump(2) + "\n";
}

Table to_table(const CharTable& t) {
  Table out;
  out.columns = {"r", "m", "n", "N", "T"};
  for (std::size_t k = 0; k < t.r.size(); ++k) out.rows.push_back({t.r[k], t.m[k], t.n[k], t.N[k], t.T[k]});
  out.meta = {{"scheme", std::string(to_string(t.scheme))},
              {"K", std::to_string(t.K)},
              {"seed", std::to_string(t.seed)}};
  return out;
}

Table to_table(const HyperFmtTable& t) {
  Table out;
  out.columns = {"r", "mf", "Nf", "dTf", "residual"};
  for (std::size_t k = 0; k < t.r.size(); ++k) {
    out.rows.push_back({t.r[k], t.mf[k], t.Nf[k], t.dTf[k], t.residual[k]});
  }
  return out;
}

Table to_table(const SmtReport& rep) {
  Table out;
  out.columns = {"r", "T_f"};
  for (std::size_t j = 1; j <= rep.q; ++j) out.columns.push_back("N_" + std::to_string(j));
  for (const char* c : {"casorati_N", "lhs", "middle", "rhs", "upper", "slack", "middle_slack",
                        "slack_lambda_max", "lambda_min", "lambda_max"}) {
    out.columns.push_back(c);
  }
  for (const auto& row : rep.rows) {
    std::vector<Cell> v{row.r, row.T_f};
    v.insert(v.end(), row.N.begin(), row.N.end());
    v.insert(v.end(), {row.casorati_N, row.lhs, row.middle, row.rhs, row.upper, row.slack, row.middle_slack,
                       row.slack_lambda_max, static_cast<double>(rep.lambda_min),
                       static_cast<double>(rep.lambda_max)});
    out.rows.push_back(std::move(v));
  }
  return out;
}

std::string to_json(const SmtReport& rep) {
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json N = json::array();
    for (double v : row.N) N.push_back(write_number(v));
    rows.push_back({{"r", row.r},
                    {"T_f", write_number(row.T_f)},
                    {"N", N},
                    {"casorati_N", write_number(row.casorati_N)},
                    {"lhs", write_number(row.lhs)},
                    {"middle", write_number(row.middle)},
                    {"rhs", write_number(row.rhs)},
                    {"upper", write_number(row.upper)},
                    {"slack", write_number(row.slack)},
                    {"middle_slack", write_number(row.middle_slack)},
                    {"slack_lambda_max", write_number(row.slack_lambda_max)},
                    {"lambda_interval", {rep.lambda_min, rep.lambda_max}}});
  }
  json fmt = json::array();
  for (double v : rep.fmt_excess) fmt.push_back(write_number(v));
  json viol = json::array();
  for (double v : rep.violations) viol.push_back(v);
  json head{{"m", rep.m},
            {"q", rep.q},
            {"d", rep.d},
            {"M", rep.M},
            {"degrees", rep.degrees},
            {"variant", rep.q_variant ? "q-casorati" : "casorati"},
            {"lambda_interval", {rep.lambda_min, rep.lambda_max}},
            {"lambda_exact", rep.lambda_exact},
            {"vacuous", rep.vacuous},
            {"casorati_available", rep.casorati_available},
            {"violations", viol},
            {"trend_ok", rep.trend_ok},
            {"trend_ratio", write_number(rep.trend_ratio)},
            {"fmt_excess", fmt},
            {"note", "finite-grid estimates; the asymptotic statement is not certified"}};
  if (rep.q_variant) {
    head["scale"] = rep.scale;
  } else {
    head["shift"] = rep.shift;
  }
  if (rep.growth_available) {
    head["growth"] = {{"rho", write_number(rep.growth.rho)},
                      {"rho2", write_number(rep.growth.rho2)},
                      {"subnormal", rep.growth.subnormal}};
  }
  return json{{"report", head}, {"rows", rows}}.dump(2) + "\n";
}

std::string to_json(const DefectRelationReport& rep) {
  json defects = json::array();
  for (double v : rep.defects) defects.push_back(write_number(v));
  return json{{"M", rep.M},
              {"d", rep.d},
              {"lambda_interval", {rep.lambda_min, rep.lambda_max}},
              {"defects", defects},
              {"sum_all", rep.sum_all},
              {"sum_tail", rep.sum_tail},
              {"bound_all", rep.bound_all},
              {"bound_tail", rep.bound_tail},
              {"holds", rep.holds},
              {"note", "defects are minima over the top decade of the grid"}}
             .dump(2) +
         "\n";
}

}  // namespace tropnev
