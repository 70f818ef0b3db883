#include "tropnev/cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropnev/casorati.hpp"
#include "tropnev/io.hpp"
#include "tropnev/nevanlinna.hpp"
#include "tropnev/smt.hpp"

namespace tropnev::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kCommands = {"eval",     "classify", "slice", "charfun", "jensen", "fmt",
                                            "ldl",      "qldl",     "cartan", "hyperfmt", "defect",
                                            "casorati", "det",      "smt",    "qsmt",     "growth"};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// File contents when `src` names an existing file.
std::optional<std::string> read_if_file(const std::string& src) {
  std::error_code ec;
  if (src.empty() || src.size() > 4096 || !std::filesystem::is_regular_file(src, ec)) return std::nullopt;
  std::ifstream in(src);
  if (!in) throw Error(Errc::invalid_argument, "cannot read " + src);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<TropicalRational> load_functions(const std::string& src, std::vector<std::string>* warnings) {
  auto file = read_if_file(src);
  std::string text = trim(file ? *file : src);
  if (!text.empty() && text.front() == '{') return {rational_from_json(text)};
  if (!text.empty() && text.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(Errc::parse_error, e.what());
    }
    std::vector<TropicalRational> out;
    for (const auto& item : j) out.push_back(rational_from_json(item.dump()));
    if (out.empty()) throw Error(Errc::parse_error, "function list is empty");
    return out;
  }
  if (!file) return {parse_expr(text, warnings)};
  std::vector<TropicalRational> out;
  std::istringstream lines(*file);
  std::string line;
  for (std::size_t no = 1; std::getline(lines, line); ++no) {
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(parse_expr(line, warnings, no));
  }
  if (out.empty()) throw Error(Errc::parse_error, src + ": no expressions");
  return out;
}

ProjectiveMap load_map(const std::string& src) {
  auto file = read_if_file(src);
  return map_from_json(file ? *file : src);
}

std::vector<HomogeneousPolynomial> load_hypersurfaces(const std::string& src) {
  auto file = read_if_file(src);
  std::string text = trim(file ? *file : src);
  if (!text.empty() && text.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(Errc::parse_error, e.what());
    }
    std::vector<HomogeneousPolynomial> out;
    for (const auto& item : j) out.push_back(hypersurface_from_json(item.dump()));
    return out;
  }
  return {hypersurface_from_json(text)};
}

namespace {

struct Inputs {
  std::string command;
  RunConfig cfg;
  std::vector<std::string> functions;
  std::string map;
  std::vector<std::string> hypers;
  std::vector<std::string> at;
  std::string theta;
  std::optional<double> R, a, q, alpha;
  std::string c;
  std::string matrix;
  bool grid_given = false;
};

class Context {
 public:
  Context(Inputs in, std::ostream& out, std::ostream& err) : in_(std::move(in)), out_(out), err_(err) {}

  int dispatch() {
    static const std::map<std::string, int (Context::*)()> table = {
        {"eval", &Context::cmd_eval},         {"classify", &Context::cmd_classify},
        {"slice", &Context::cmd_slice},       {"charfun", &Context::cmd_charfun},
        {"jensen", &Context::cmd_jensen},     {"fmt", &Context::cmd_fmt},
        {"ldl", &Context::cmd_ldl},           {"qldl", &Context::cmd_qldl},
        {"cartan", &Context::cmd_cartan},     {"hyperfmt", &Context::cmd_hyperfmt},
        {"defect", &Context::cmd_defect},     {"casorati", &Context::cmd_casorati},
        {"det", &Context::cmd_det},           {"smt", &Context::cmd_smt},
        {"qsmt", &Context::cmd_qsmt},         {"growth", &Context::cmd_growth}};
    return (this->*table.at(in_.command))();
  }

 private:
  // ---- inputs -------------------------------------------------------------

  const std::vector<TropicalRational>& functions() {
    if (!fns_.empty()) return fns_;
    if (in_.functions.empty()) usage("command '" + in_.command + "' needs -f/--function");
    std::vector<std::string> warnings;
    for (const auto& src : in_.functions) {
      auto part = load_functions(src, &warnings);
      fns_.insert(fns_.end(), part.begin(), part.end());
    }
    for (const auto& w : warnings) err_ << "warning: " << w << '\n';
    for (const auto& f : fns_) check_dim(fns_.front().dim(), f.dim());
    return fns_;
  }

  ProjectiveMap map() {
    if (!in_.map.empty()) return load_map(in_.map);
    if (!in_.functions.empty()) return ProjectiveMap::from_rational(functions().front());
    usage("command '" + in_.command + "' needs --map (or -f to use [den : num])");
  }

  std::vector<HomogeneousPolynomial> hypers() {
    if (in_.hypers.empty()) usage("command '" + in_.command + "' needs --hyper");
    std::vector<HomogeneousPolynomial> out;
    for (const auto& src : in_.hypers) {
      auto part = load_hypersurfaces(src);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  std::vector<std::vector<double>> points(std::size_t dim) {
    if (in_.at.empty()) usage("command '" + in_.command + "' needs --at x1,...,xn");
    std::vector<std::vector<double>> pts;
    for (const auto& s : in_.at) {
      pts.push_back(parse_vector(s));
      check_dim(dim, pts.back().size());
    }
    return pts;
  }

  std::vector<double> vector_or(const std::string& src, std::size_t dim) {
    if (src.empty()) {
      std::vector<double> e(dim, 0.0);
      e[0] = 1.0;
      return e;
    }
    auto v = parse_vector(src);
    check_dim(dim, v.size());
    return v;
  }

  SphereQuadrature quad(std::size_t dim) { return make_quadrature(dim, in_.cfg.K, in_.cfg.seed); }

  std::vector<double> grid() { return in_.cfg.grid.points(); }

  [[noreturn]] void usage(const std::string& what) { throw Error(Errc::invalid_argument, what); }

  // ---- output -------------------------------------------------------------

  void add_meta(Table& t, const SphereQuadrature& q) {
    t.meta.insert(t.meta.begin(), {{"scheme", std::string(to_string(q.scheme))},
                                   {"K", std::to_string(q.size())},
                                   {"seed", std::to_string(q.seed)},
                                   {"tol", format_double(in_.cfg.tol)}});
    // CharTable already carries scheme/K/seed; keep the first occurrence of each key.
    std::vector<std::pair<std::string, std::string>> uniq;
    for (auto& kv : t.meta) {
      if (std::none_of(uniq.begin(), uniq.end(), [&](const auto& u) { return u.first == kv.first; })) {
        uniq.push_back(kv);
      }
    }
    t.meta = std::move(uniq);
  }

  void write(const std::string& text) {
    if (in_.cfg.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(in_.cfg.out);
    if (!f) throw Error(Errc::invalid_argument, "cannot write " + in_.cfg.out);
    f << text;
  }

  void emit(Table t, const SphereQuadrature& q) {
    add_meta(t, q);
    write(in_.cfg.format == "json" ? to_json(t) : to_csv(t));
  }

  // Prepends an "fn" column when several functions are processed.
  template <class Body>
  Table per_function(std::vector<std::string> columns, Body body) {
    const auto& fs = functions();
    Table t;
    const bool multi = fs.size() > 1;
    if (multi) columns.insert(columns.begin(), "fn");
    t.columns = std::move(columns);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (auto& row : body(fs[i])) {
        if (multi) row.insert(row.begin(), Cell(static_cast<double>(i)));
        t.rows.push_back(std::move(row));
      }
    }
    return t;
  }

  std::vector<std::string> coord_columns(std::size_t n) {
    std::vector<std::string> cols;
    for (std::size_t k = 1; k <= n; ++k) cols.push_back(n == 1 ? "x" : "x" + std::to_string(k));
    return cols;
  }

  int fail_if(bool failed, const std::string& what) {
    if (!failed) return kOk;
    err_ << "check failed: " << what << '\n';
    return kCheckFailed;
  }

  // ---- commands -----------------------------------------------------------

  int cmd_eval() {
    const std::size_t n = functions().front().dim();
    auto pts = points(n);
    auto cols = coord_columns(n);
    cols.push_back("value");
    Table t = per_function(cols, [&](const TropicalRational& f) {
      std::vector<std::vector<Cell>> rows;
      for (const auto& x : pts) {
        std::vector<Cell> row(x.begin(), x.end());
        row.push_back(f.eval(x));
        rows.push_back(std::move(row));
      }
      return rows;
    });
    emit(std::move(t), quad(n));
    return kOk;
  }

  int cmd_classify() {
    const std::size_t n = functions().front().dim();
    auto pts = points(n);
    auto q = quad(n);
    auto cols = coord_columns(n);
    cols.insert(cols.end(), {"kind", "multiplicity"});
    Table t = per_function(cols, [&](const TropicalRational& f) {
      std::vector<std::vector<Cell>> rows;
      for (const auto& x : pts) {
        PointClass pc = classify_point(f, x, q, in_.cfg.tol);
        std::vector<Cell> row(x.begin(), x.end());
        row.push_back(std::string(to_string(pc.kind)));
        row.push_back(pc.multiplicity);
        rows.push_back(std::move(row));
      }
      return rows;
    });
    emit(std::move(t), q);
    return kOk;
  }

  int cmd_slice() {
    const std::size_t n = functions().front().dim();
    auto theta = vector_or(in_.theta, n);
    const double R = in_.R.value_or(in_.cfg.grid.hi);
    Table t = per_function({"t", "jump", "slope_left", "slope_right", "value_at_0"},
                           [&](const TropicalRational& f) {
                             RaySlice s = ray_slice(f, theta, R, in_.cfg.tol);
                             std::vector<std::vector<Cell>> rows;
                             for (std::size_t k = 0; k < s.breakpoints.size(); ++k) {
                               rows.push_back({s.breakpoints[k].t, s.breakpoints[k].jump, s.slopes[k],
                                               s.slopes[k + 1], s.value_at_0});
                             }
                             return rows;
                           });
    emit(std::move(t), quad(n));
    return kOk;
  }

  int cmd_charfun() {
    const std::size_t n = functions().front().dim();
    auto q = quad(n);
    auto r = grid();
    Table t = per_function({"r", "m", "n", "N", "T"}, [&](const TropicalRational& f) {
      return to_table(char_table(f, r, q)).rows;
    });
    emit(std::move(t), q);
    return kOk;
  }

  int cmd_jensen() {
    const std::size_t n = functions().front().dim();
    auto q = quad(n);
    auto r = grid();
    const double thr = in_.cfg.threshold.value_or(n == 1 ? 1e-9 : 5.0 / static_cast<double>(q.size()));
    double worst = 0.0;
    Table t = per_function({"r", "residual"}, [&](const TropicalRational& f) {
      RadialProfile p(f, q, r.back(), in_.cfg.tol);
      RadialProfile neg = p.negated();
      std::vector<std::vector<Cell>> rows;
      for (double x : r) {
        double res = p.characteristic(x) - neg.characteristic(x) - p.value_at_origin();
        worst = std::max(worst, std::abs(res));
        rows.push_back({x, res});
      }
      return rows;
    });
    emit(std::move(t), q);
    return fail_if(worst >= thr, "max |residual| = " + format_double(worst) + " >= " + format_double(thr));
  }

  int cmd_fmt() {
    const std::size_t n = functions().front().dim();
    auto q = quad(n);
    auto r = grid();
    bool failed = false;
    Table t = per_function({"r", "gap", "a", "L_f"}, [&](const TropicalRational& f) {
      double L = pole_infimum(f, q, in_.cfg.tol);
      double a = in_.a.value_or(std::isfinite(L) ? L - 1.0 : 0.0);
      FmtGap g = fmt_gap(f, a, r, q);
      if (g.above_lf) err_ << "warning: a = " << format_double(a) << " is not below L_f = " << format_double(L) << '\n';
      auto [lo, hi] = std::minmax_element(g.gap.begin(), g.gap.end());
      double thr = in_.cfg.threshold.value_or(2.0 * (std::abs(a) + 1.0));
      if (!g.above_lf && *hi - *lo >= thr) {
        failed = true;
        err_ << "check failed: gap spread " << format_double(*hi - *lo) << " >= " << format_double(thr) << '\n';
      }
      std::vector<std::vector<Cell>> rows;
      for (std::size_t k = 0; k < r.size(); ++k) rows.push_back({r[k], g.gap[k], a, L});
      return rows;
    });
    emit(std::move(t), q);
    return failed ? kCheckFailed : kOk;
  }

  int cmd_ldl() {
    const std::size_t n = functions().front().dim();
    auto q = quad(n);
    auto r = grid();
    auto c = vector_or(in_.c, n);
    const double alpha = in_.alpha.value_or(2.0);
    bool failed = false;
    Table t = per_function({"r", "m", "bound", "T"}, [&](const TropicalRational& f) {
      RadialProfile quot(shift_quotient(f, c), q, r.back(), in_.cfg.tol);
      RadialProfile pf(f, q, r.back(), in_.cfg.tol);
      std::vector<std::vector<Cell>> rows;
      for (double x : r) {
        double m = quot.proximity(x);
        double b = ldl_bound(f, c, x, alpha, q);
        if (n == 1 && m > b + in_.cfg.tol) failed = true;
        rows.push_back({x, m, b, pf.characteristic(x)});
      }
      return rows;
    });
    emit(std::move(t), q);
    return fail_if(failed, "m(r, f(x+c)/f(x)) exceeds the bound");
  }

  int cmd_qldl() {
    const std::size_t n = functions().front().dim();
    auto q = quad(n);
    auto r = grid();
    const double scale = in_.q.value_or(2.0);
    Table t = per_function({"r", "m", "T", "ratio"}, [&](const TropicalRational& f) {
      RadialProfile quot(q_quotient(f, scale), q, r.back(), in_.cfg.tol);
      RadialProfile pf(f, q, r.back(), in_.cfg.tol);
      std::vector<std::vector<Cell>> rows;
      for (double x : r) {
        double m = quot.proximity(x), T = pf.characteristic(x);
        rows.push_back({x, m, T, T > 0.0 ? m / T : std::nan("")});
      }
      return rows;
    });
    emit(std::move(t), q);
    return kOk;
  }

  int cmd_cartan() {
    ProjectiveMap f = map();
    auto q = quad(f.dim());
    Table t;
    t.columns = {"r", "T_f"};
    for (double x : grid()) t.rows.push_back({x, cartan_characteristic(f, x, q)});
    emit(std::move(t), q);
    return kOk;
  }

  int cmd_hyperfmt() {
    ProjectiveMap f = map();
    auto Ps = hypers();
    auto q = quad(f.dim());
    auto r = grid();
    const double extra = in_.cfg.threshold.value_or(f.dim() == 1 ? 1e-6 : 50.0 / static_cast<double>(q.size()));
    Table t;
    t.columns = {"r", "mf", "Nf", "dTf", "residual"};
    if (Ps.size() > 1) t.columns.insert(t.columns.begin(), "hyper");
    bool failed = false;
    for (std::size_t j = 0; j < Ps.size(); ++j) {
      HyperFmtTable h = hyper_fmt_residual(Ps[j], f, r, q);
      double bound = Ps[j].max_coeff() - Ps[j].min_coeff() + extra;
      if (h.spread() >= bound) {
        failed = true;
        err_ << "check failed: hypersurface " << j << " residual spread " << format_double(h.spread())
             << " >= " << format_double(bound) << '\n';
      }
      for (auto& row : to_table(h).rows) {
        if (Ps.size() > 1) row.insert(row.begin(), Cell(static_cast<double>(j)));
        t.rows.push_back(std::move(row));
      }
    }
    emit(std::move(t), q);
    return failed ? kCheckFailed : kOk;
  }

  int cmd_defect() {
    auto r = grid();
    if (in_.hypers.empty()) {
      const std::size_t n = functions().front().dim();
      auto q = quad(n);
      if (!in_.a) usage("defect needs --hyper, or -f with --a");
      Table t = per_function({"a", "defect"}, [&](const TropicalRational& f) {
        return std::vector<std::vector<Cell>>{{*in_.a, value_defect(f, *in_.a, r, q)}};
      });
      emit(std::move(t), q);
      return kOk;
    }
    ProjectiveMap f = map();
    auto Ps = hypers();
    auto q = quad(f.dim());
    Table t;
    t.columns = {"hyper", "defect"};
    for (std::size_t j = 0; j < Ps.size(); ++j) {
      t.rows.push_back({static_cast<double>(j), defect(Ps[j], f, r, q).value});
    }
    emit(std::move(t), q);
    return kOk;
  }

  int cmd_casorati() {
    std::vector<TropicalPolynomial> base;
    for (const auto& f : functions()) {
      if (!f.is_entire()) usage("Casorati families need entire functions");
      base.push_back(f.num().times_constant(-f.den().terms().front().coeff.value()));
    }
    const std::size_t n = base.front().dim();
    ShiftFamily fam = in_.q ? ShiftFamily::q_family(base, *in_.q) : ShiftFamily(base, vector_or(in_.c, n));
    auto q = quad(n);
    Table t;
    if (!in_.at.empty()) {
      t.columns = coord_columns(n);
      t.columns.push_back("value");
      for (const auto& x : points(n)) {
        std::vector<Cell> row(x.begin(), x.end());
        row.push_back(casorati_eval(fam, x).value());
        t.rows.push_back(std::move(row));
      }
    } else {
      auto r = grid();
      RadialProfile p = RadialProfile(casorati_function(fam), q, r.back()).negated();
      t.columns = {"r", "casorati_N"};
      for (double x : r) t.rows.push_back({x, p.counting(x)});
    }
    emit(std::move(t), q);
    return kOk;
  }

  int cmd_det() {
    if (in_.matrix.empty()) usage("det needs -A '[[...],...]'");
    auto file = read_if_file(in_.matrix);
    TropicalNumber v = trop_det(parse_matrix(file ? *file : in_.matrix));
    if (in_.cfg.format == "json") {
      write(json{{"value", v.is_bottom() ? json("-inf") : json(v.value())}}.dump() + "\n");
    } else {
      write(format_tropical(v) + "\n");
    }
    return kOk;
  }

  int smt_common(bool q_variant) {
    ProjectiveMap f = map();
    auto Ps = hypers();
    auto q = quad(f.dim());
    auto r = grid();
    SmtOptions opts;
    opts.tol = in_.cfg.tol;
    opts.essential.seed = in_.cfg.seed;
    opts.probe.seed = in_.cfg.seed;
    if (in_.cfg.threshold) opts.trend_fraction = *in_.cfg.threshold;
    SmtReport rep = q_variant ? q_smt_check(f, Ps, in_.q.value_or(2.0), r, q, opts)
                              : smt_check(f, Ps, vector_or(in_.c, f.dim()), r, q, opts);
    if (in_.cfg.format == "json") {
      json j = json::parse(to_json(rep));
      j["meta"] = {{"scheme", std::string(to_string(q.scheme))},
                   {"K", std::to_string(q.size())},
                   {"seed", std::to_string(q.seed)},
                   {"tol", format_double(in_.cfg.tol)}};
      write(j.dump(2) + "\n");
    } else {
      emit(to_table(rep), q);
    }
    if (!rep.violations.empty()) {
      err_ << "note: " << rep.violations.size() << " grid radii have negative slack"
           << " (finite-grid estimate, exceptional radii are not filtered)\n";
    }
    return fail_if(!rep.trend_ok, "slack / T_f = " + format_double(rep.trend_ratio) + " at r_max");
  }

  int cmd_smt() { return smt_common(false); }
  int cmd_qsmt() { return smt_common(true); }

  int cmd_growth() {
    const std::size_t n = functions().front().dim();
    auto q = quad(n);
    if (!in_.grid_given) in_.cfg.grid = RadiusGrid{1.0, 1e4, 61, true};
    auto r = grid();
    Table t = per_function({"rho", "rho2", "subnormal"}, [&](const TropicalRational& f) {
      GrowthEstimate g = growth_estimate(f, r, q);
      return std::vector<std::vector<Cell>>{{g.rho, g.rho2, g.subnormal ? 1.0 : 0.0}};
    });
    emit(std::move(t), q);
    return kOk;
  }

  Inputs in_;
  std::ostream& out_;
  std::ostream& err_;
  std::vector<TropicalRational> fns_;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::degenerate_map:
    case Errc::bounded_characteristic:
    case Errc::budget_exceeded:
    case Errc::term_limit:
    case Errc::bottom_divisor:
    case Errc::negative_power_of_bottom:
      return kCheckFailed;
    default:
      return kUsage;
  }
}

// Values from --config fill every option not given on the command line.
void apply_config(const std::string& path, CLI::App& app, Inputs& in) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::invalid_argument, "cannot read config " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::parse_error, "config must be a JSON object");
  auto unset = [&](const std::string& name) { return app.get_option(name)->count() == 0; };
  auto as_string = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto strings = [&](const json& v) {
    std::vector<std::string> out;
    if (v.is_array() && !v.empty() && v.front().is_string()) {
      for (const auto& s : v) out.push_back(s.get<std::string>());
    } else {
      out.push_back(as_string(v));
    }
    return out;
  };
  try {
    for (auto& [key, v] : j.items()) {
      if (key == "r" && unset("--r")) {
        in.cfg.grid = parse_grid(v.get<std::string>());
        in.grid_given = true;
      } else if (key == "K" && unset("--K")) {
        in.cfg.K = v.get<std::size_t>();
      } else if (key == "seed" && unset("--seed")) {
        in.cfg.seed = v.get<std::uint64_t>();
      } else if (key == "tol" && unset("--tol")) {
        in.cfg.tol = v.get<double>();
      } else if (key == "threshold" && unset("--threshold")) {
        in.cfg.threshold = v.get<double>();
      } else if (key == "format" && unset("--format")) {
        in.cfg.format = v.get<std::string>();
      } else if (key == "out" && unset("--out")) {
        in.cfg.out = v.get<std::string>();
      } else if (key == "function" && unset("--function")) {
        in.functions = strings(v);
      } else if (key == "map" && unset("--map")) {
        in.map = as_string(v);
      } else if (key == "hyper" && unset("--hyper")) {
        in.hypers = v.is_array() && !v.empty() && v.front().is_object() ? std::vector<std::string>{v.dump()}
                                                                         : strings(v);
      } else if (key == "a" && unset("--a")) {
        in.a = v.get<double>();
      } else if (key == "q" && unset("--q")) {
        in.q = v.get<double>();
      } else if (key == "alpha" && unset("--alpha")) {
        in.alpha = v.get<double>();
      } else if (key == "R" && unset("--R")) {
        in.R = v.get<double>();
      } else if (key == "c" && unset("--c")) {
        in.c = as_string(v);
      } else if (key == "theta" && unset("--theta")) {
        in.theta = as_string(v);
      }
    }
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("config: ") + e.what());
  }
  if (in.cfg.format != "csv" && in.cfg.format != "json") {
    throw Error(Errc::invalid_argument, "format must be csv or json");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Inputs in;
  if (const char* env = std::getenv("TROPNEV_SEED")) {
    try {
      in.cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: TROPNEV_SEED must be a nonnegative integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Tropical Nevanlinna theory toolkit", "tropnev"};
  std::string grid_src, config;
  std::optional<double> threshold;
  std::string commands_help;
  for (const auto& c : kCommands) commands_help += (commands_help.empty() ? "" : ", ") + c;
  app.add_option("command", in.command, "One of: " + commands_help)->required()->check(CLI::IsMember(kCommands));
  app.add_option("-f,--function", in.functions, "Expression, JSON object, or file of functions")
      ->allow_extra_args(false);
  app.add_option("--map", in.map, "Projective map as JSON or a JSON file");
  app.add_option("--hyper", in.hypers, "Hypersurface(s) as JSON or a JSON file")->allow_extra_args(false);
  app.add_option("--r", grid_src, "Radius grid min:max:count[:log] (default 1:100:100)");
  app.add_option("--K", in.cfg.K, "Quadrature nodes (even)");
  app.add_option("--seed", in.cfg.seed, "Quadrature and probe seed (fallback: TROPNEV_SEED)");
  app.add_option("--tol", in.cfg.tol, "Equality tolerance");
  app.add_option("--threshold", threshold, "Check threshold for the command");
  app.add_option("--out", in.cfg.out, "Write output to this file");
  app.add_option("--format", in.cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", config, "JSON file with option values");
  app.add_option("--at", in.at, "Point x1,...,xn (repeatable)")->allow_extra_args(false);
  app.add_option("--theta", in.theta, "Slice direction");
  app.add_option("--R", in.R, "Slice radius");
  app.add_option("--a", in.a, "Target value a");
  app.add_option("--c", in.c, "Shift vector");
  app.add_option("--q", in.q, "Scale factor for q-shifts");
  app.add_option("--alpha", in.alpha, "alpha > 1 in the logarithmic-derivative bound");
  app.add_option("-A,--matrix", in.matrix, "Matrix as a JSON array of rows");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (!grid_src.empty()) {
      in.cfg.grid = parse_grid(grid_src);
      in.grid_given = true;
    }
    in.cfg.threshold = threshold;
    if (!config.empty()) apply_config(config, app, in);
    return Context(std::move(in), out, err).dispatch();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace tropnev::cli
