#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "sumlab/claims.hpp"
#include "sumlab/density.hpp"
#include "sumlab/families.hpp"
#include "sumlab/morphology.hpp"
#include "sumlab/report.hpp"
#include "sumlab/serialize.hpp"
#include "sumlab/setlang.hpp"
#include "sumlab/verify.hpp"

namespace sumlab::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(sep, pos);
    out.emplace_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) return out;
    pos = next + 1;
  }
}

std::int64_t parse_int64(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw UsageError("expected an integer, got '" + s + "'");
  return v;
}

Rational parse_ratio(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Set sources

struct Source {
  std::string expr;
  std::string file;
  std::string family;
  std::string member;
  std::string coords;
  std::vector<std::string> params;

  [[nodiscard]] int count() const {
    return !expr.empty() + !file.empty() + !family.empty() + !coords.empty();
  }
};

void add_source(CLI::App* app, Source& s, const std::string& suffix = "") {
  app->add_option("--expr" + suffix, s.expr, "set expression");
  app->add_option("--file" + suffix, s.file, "serialized set, or a file holding a set expression");
  app->add_option("--family" + suffix, s.family, "family name");
  app->add_option("--param" + suffix, s.params, "family parameter k=v (repeatable)");
  app->add_option("--member" + suffix, s.member, "member A or B of a pair family");
  app->add_option("--coords" + suffix, s.coords, "points 'x;y;...' with comma-separated axes");
}

struct Common {
  std::string window;
  std::string format;
  std::string out;
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--window", c.window, "window spec 1d:N or cN:d");
  app->add_option("--out", c.out, "write the report here instead of standard output");
  app->add_option("--threads", c.threads, "worker threads (0 = all cores)");
  app->add_option("--seed", c.seed, "seed for randomized runs");
}

Window require_window(const Common& c) {
  if (c.window.empty()) throw UsageError("--window is required");
  return Window::parse(c.window);
}

FamilyParams parse_params(const std::vector<std::string>& raw) {
  FamilyParams params;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects k=v, got '" + kv + "'");
    params[kv.substr(0, eq)] = parse_int64(kv.substr(eq + 1));
  }
  return params;
}

LatticeSet load(const Source& s, const Common& c, const char* what = "set") {
  if (s.count() != 1) {
    throw UsageError(std::string("give exactly one of --expr, --file, --family, --coords for the ") + what);
  }
  if (!s.file.empty()) {
    const std::string text = read_file(s.file);
    if (text.rfind("window ", 0) == 0) {
      LatticeSet set = deserialize(text);
      if (!c.window.empty() && Window::parse(c.window) != set.window()) throw WindowMismatch();
      return set;
    }
    const setlang::SetExpr e = setlang::parse(text);
    return setlang::evaluate(e, require_window(c));
  }
  if (!s.expr.empty()) {
    const setlang::SetExpr e = setlang::parse(s.expr);
    return setlang::evaluate(e, require_window(c));
  }
  const Window w = require_window(c);
  if (!s.family.empty()) return family_member(s.family, parse_params(s.params), s.member, w);
  std::vector<Point> pts;
  for (const auto& tuple : split(s.coords, ';')) {
    if (tuple.empty()) continue;
    const auto axes = split(tuple, ',');
    if (static_cast<int>(axes.size()) != w.dim()) throw UsageError("point '" + tuple + "' has the wrong dimension");
    Point p{0, 0, 0};
    for (std::size_t a = 0; a < axes.size(); ++a) p[a] = parse_int64(axes[a]);
    pts.push_back(p);
  }
  return build_set(w, pts);
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + c.out + "'");
  f << text;
}

std::string render_set(const LatticeSet& s, const std::string& format) {
  const Window& w = s.window();
  if (format == "set") return serialize(s);
  if (format == "json") {
    Json j = {{"window", w.spec()}, {"cardinality", s.cardinality()}, {"clipped", s.clipped()}};
    Json items = Json::array();
    if (w.dim() == 1) {
      for (auto [start, len] : s.bits().runs()) {
        const auto lo = static_cast<std::int64_t>(start) + w.lower();
        items.push_back({lo, lo + static_cast<std::int64_t>(len) - 1});
      }
      j["intervals"] = items;
    } else {
      for (const Point& p : s.points()) items.push_back(std::vector<std::int64_t>(p.begin(), p.begin() + w.dim()));
      j["points"] = items;
    }
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = w.dim() == 1 ? "x\n" : w.dim() == 2 ? "x,y\n" : "x,y,z\n";
    for (const Point& p : s.points()) {
      for (int a = 0; a < w.dim(); ++a) out += (a ? "," : "") + std::to_string(p[a]);
      out += "\n";
    }
    return out;
  }
  throw UsageError("unknown --format '" + format + "' (set, json, csv)");
}

void check_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), format) == allowed.end()) {
    throw UsageError("unsupported --format '" + format + "'");
  }
}

// ---------------------------------------------------------------------------
// Cover and Besicovitch inputs

Point json_point(const Json& j, int dim) {
  Point p{0, 0, 0};
  if (j.is_number_integer()) {
    if (dim != 1) throw UsageError("scalar cell in a multi-dimensional instance");
    p[0] = j.get<std::int64_t>();
    return p;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != dim) throw UsageError("cell " + j.dump() + " has the wrong shape");
  for (int a = 0; a < dim; ++a) p[a] = j[static_cast<std::size_t>(a)].get<std::int64_t>();
  return p;
}

std::vector<Point> json_points(const Json& j, int dim) {
  std::vector<Point> out;
  for (const auto& cell : j) out.push_back(json_point(cell, dim));
  return out;
}

CoverInstance parse_cover(const Json& j) {
  CoverInstance inst;
  inst.dim = j.value("dim", 1);
  inst.ground = json_points(j.at("ground"), inst.dim);
  for (const auto& t : j.at("subsets")) inst.subsets.push_back(json_points(t, inst.dim));
  inst.mult_bound = j.at("m").get<std::int64_t>();
  const Json& t = j.at("t");
  inst.threshold = t.is_string() ? parse_ratio(t.get<std::string>()) : parse_ratio(t.dump());
  inst.target = json_points(j.value("target", Json::array()), inst.dim);
  return inst;
}

// ---------------------------------------------------------------------------
// Subcommand state

struct State {
  Common common;
  Source a;
  Source b;

  std::string translate;
  std::int64_t samples = kDefaultSamples;
  std::string tail = "1/2";
  std::vector<std::int64_t> n_values;
  std::int64_t m_max = 8;
  std::int64_t k_max = 8;
  std::vector<std::int64_t> strong;
  std::string level;
  std::string epsilon = "0";
  std::string mode;
  std::int64_t m_cap = -1;
  std::int64_t n_test = 0;
  std::vector<std::int64_t> f_table;
  std::int64_t m_f = 1;
  std::int64_t block_n = 2;
  std::string block_kind = "fill";
  int exhaustive = 0;
  std::uint64_t random = 0;
  std::string cover_file;
  std::string cover_instance;
  bool cover_exhaustive = false;
  int max_ground = 6;
  int max_subsets = 3;
  std::string thresholds = "1/4,1/3,1/2,2/3";
  int dim = 1;
  std::int64_t smear = 10;
  std::int64_t inner = 1000;
  std::string delta = "1/50";
  std::string example;
  std::string config;
};

LatticeSet load_operand(State& st) {
  LatticeSet s = load(st.a, st.common);
  if (st.b.count() > 0) s = sumset(s, load(st.b, st.common, "second set"));
  return s;
}

// ---------------------------------------------------------------------------
// Handlers

int do_eval(State& st, std::ostream& out) {
  LatticeSet s = load(st.a, st.common);
  if (!st.translate.empty()) {
    const auto parts = split(st.translate, ',');
    if (static_cast<int>(parts.size()) != s.window().dim()) throw UsageError("--translate needs one value per axis");
    Point v{0, 0, 0};
    for (std::size_t i = 0; i < parts.size(); ++i) v[i] = parse_int64(parts[i]);
    s = translate(s, v);
  }
  emit(st.common, render_set(s, st.common.format), out);
  return kExitOk;
}

int do_density(State& st, std::ostream& out) {
  check_format(st.common.format, {"csv", "json"});
  const LatticeSet s = load(st.a, st.common);
  if (st.samples < 2) throw UsageError("--samples must be at least 2");
  const DensityProfile p = prefix_profile(s, static_cast<int>(st.samples), parse_ratio(st.tail));
  std::optional<Rational> sigma;
  if (s.window().is_classical()) sigma = schnirelmann(s);
  if (st.common.format == "json") {
    Json j = to_json(p);
    if (sigma) j["schnirelmann"] = to_string(*sigma);
    emit(st.common, j.dump(2) + "\n", out);
  } else {
    std::string text = profile_csv(p);
    if (sigma) text += "# schnirelmann," + to_string(*sigma) + "," + fixed(to_double(*sigma)) + "\n";
    emit(st.common, text, out);
  }
  return kExitOk;
}

int do_banach(State& st, std::ostream& out) {
  check_format(st.common.format, {"csv", "json"});
  const LatticeSet s = load(st.a, st.common);
  if (st.n_values.empty()) throw UsageError("--n needs at least one radius");
  const auto values = banach_profile(s, st.n_values);
  if (st.common.format == "json") {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back({{"n", v.n}, {"sup_ratio", to_string(v.sup_ratio)}});
    emit(st.common, Json{{"banach", arr}}.dump(2) + "\n", out);
  } else {
    std::string text = "n,sup_ratio\n";
    for (const auto& v : values) text += std::to_string(v.n) + "," + to_string(v.sup_ratio) + "\n";
    emit(st.common, text, out);
  }
  return kExitOk;
}

int do_witness(State& st, std::ostream& out) {
  check_format(st.common.format, {"csv", "json"});
  const LatticeSet s = load_operand(st);
  const std::string source = st.b.count() > 0 ? "sum of two sets" : "single set";
  const WitnessTable t = witness_table(s, st.m_max, st.k_max, st.strong, source, st.common.threads);
  emit(st.common, st.common.format == "json" ? to_json(t).dump(2) + "\n" : witness_csv(t), out);
  return kExitOk;
}

int do_search_m(State& st, std::ostream& out) {
  if (st.level.empty()) throw UsageError("--level is required");
  if (st.mode != "lower" && st.mode != "upper") throw UsageError("--mode must be lower or upper");
  const LatticeSet s = load_operand(st);
  std::optional<std::int64_t> cap;
  if (st.m_cap >= 0) cap = st.m_cap;
  const auto m = minimal_m_search(s, parse_ratio(st.level), parse_ratio(st.epsilon), st.k_max,
                                  st.mode == "lower" ? EstimateMode::Lower : EstimateMode::Upper, cap);
  Json j = {{"level", st.level}, {"epsilon", st.epsilon}, {"k_max", st.k_max}, {"mode", st.mode}};
  j["m"] = m ? Json(*m) : Json(nullptr);
  emit(st.common, j.dump(2) + "\n", out);
  return kExitOk;
}

int do_saturation(State& st, std::ostream& out, std::ostream& err) {
  SaturationMode mode;
  if (st.mode == "schnirelmann_union") mode = SaturationMode::SchnirelmannUnion;
  else if (st.mode == "banach_dilate") mode = SaturationMode::BanachDilate;
  else throw UsageError("--mode must be schnirelmann_union or banach_dilate");
  const LatticeSet s = load(st.a, st.common);
  try {
    const auto r = saturation_search(s, parse_ratio(st.epsilon), mode, st.n_test);
    const Json j = {{"mode", st.mode}, {"m", r.m}, {"achieved", to_string(r.achieved)}, {"target", to_string(r.target)}};
    emit(st.common, j.dump(2) + "\n", out);
    return kExitOk;
  } catch (const NotFound& e) {
    err << "saturation: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int do_adaptive(State& st, std::ostream& out) {
  if (st.level.empty()) throw UsageError("--level is required");
  const LatticeSet s = load_operand(st);
  const auto r = adaptive_gap_check(s, st.f_table, st.m_f, parse_ratio(st.level));
  const Json j = {{"lower_est", to_string(r.lower)}, {"lower_approx", fixed(to_double(r.lower))},
                  {"level", to_string(r.level)}, {"meets_level", r.meets_level}};
  emit(st.common, j.dump(2) + "\n", out);
  return r.meets_level ? kExitOk : kExitCheckFailed;
}

int do_block(State& st, std::ostream& out) {
  const LatticeSet s = load(st.a, st.common);
  LatticeSet r = s;
  if (st.block_kind == "quotient") r = block_quotient(s, st.block_n);
  else if (st.block_kind == "fill") r = block_fill(s, st.block_n);
  else if (st.block_kind == "dilate") r = dilate_block(s, st.block_n);
  else throw UsageError("--kind must be quotient, fill or dilate");
  emit(st.common, render_set(r, st.common.format), out);
  return kExitOk;
}

int do_mann(State& st, std::ostream& out) {
  if (st.exhaustive > 0) {
    const auto r = mann_exhaustive(st.exhaustive, st.common.threads);
    emit(st.common, std::to_string(r.violations) + " violations / " + std::to_string(r.cases) + " pairs\n", out);
    return r.violations == 0 ? kExitOk : kExitCheckFailed;
  }
  if (st.random > 0) {
    const Window w = require_window(st.common);
    if (!w.is_classical()) throw UsageError("Mann checks need a 1d:N window");
    const auto r = mann_random(w.radius(), st.random, st.common.seed, st.common.threads);
    emit(st.common, std::to_string(r.violations) + " violations / " + std::to_string(r.cases) + " pairs\n", out);
    return r.violations == 0 ? kExitOk : kExitCheckFailed;
  }
  const LatticeSet a = load(st.a, st.common);
  const LatticeSet b = load(st.b, st.common, "second set");
  const MannVerdict v = mann_check(a, b);
  const Rational sigma_sum = mann_sigma_sum(a, b);
  const std::string digest = fnv1a_hex(serialize(a) + serialize(b));
  emit(st.common, verdict("mann", digest, v.holds, sigma_sum, v.bound, to_json(v)).dump(2) + "\n", out);
  return v.holds ? kExitOk : kExitCheckFailed;
}

int do_cover(State& st, std::ostream& out) {
  if (st.cover_exhaustive) {
    std::vector<Rational> ts;
    for (const auto& t : split(st.thresholds, ',')) ts.push_back(parse_ratio(t));
    const auto r = covering_exhaustive(st.max_ground, st.max_subsets, ts);
    const Json j = {{"instances", r.instances}, {"hypotheses_ok", r.hypotheses_ok}, {"violations", r.violations}};
    emit(st.common, j.dump(2) + "\n", out);
    return r.violations == 0 ? kExitOk : kExitCheckFailed;
  }
  if (st.cover_file.empty() == st.cover_instance.empty()) throw UsageError("give one of --instance, --file or --exhaustive");
  const std::string text = st.cover_file.empty() ? st.cover_instance : read_file(st.cover_file);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("cover instance: ") + e.what());
  }
  CoverInstance inst;
  try {
    inst = parse_cover(j);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("cover instance: ") + e.what());
  }
  const std::string digest = fnv1a_hex(j.dump());
  try {
    const CoverVerdict v = covering_bound_check(inst);
    emit(st.common, verdict("covering_bound", digest, v.holds, v.lhs, v.rhs).dump(2) + "\n", out);
    return v.holds ? kExitOk : kExitCheckFailed;
  } catch (const HypothesisFailed& e) {
    const Json w = {{"hypothesis_failed", std::string(to_string(e.reason()))}, {"detail", e.what()}};
    emit(st.common, verdict("covering_bound", digest, false, 0, 0, w).dump(2) + "\n", out);
    return kExitCheckFailed;
  }
}

int do_besicovitch(State& st, std::ostream& out) {
  std::vector<Cube> cubes;
  std::optional<LatticeSet> ground;
  std::string digest_src;
  if (st.random > 0) {
    const Window w = st.common.window.empty() ? Window::centered(10, st.dim) : Window::parse(st.common.window);
    std::mt19937_64 rng(st.common.seed);
    BitVector bits(static_cast<std::size_t>(w.cell_count()));
    std::bernoulli_distribution member(0.3);
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (member(rng)) bits.set(i);
    }
    ground.emplace(w, std::move(bits));
    std::uniform_int_distribution<std::int64_t> radius(1, std::max<std::int64_t>(1, w.radius() / 2));
    for (const Point& p : ground->points()) cubes.push_back({p, radius(rng)});
    std::uniform_int_distribution<std::int64_t> coord(w.lower(), w.upper());
    for (std::uint64_t i = 0; i < st.random; ++i) {
      Point c{0, 0, 0};
      for (int a = 0; a < w.dim(); ++a) c[a] = coord(rng);
      cubes.push_back({c, radius(rng)});
    }
    digest_src = serialize(*ground) + std::to_string(cubes.size()) + ":" + std::to_string(st.common.seed);
  } else {
    if (st.cover_file.empty()) throw UsageError("give --file or --random");
    const std::string text = read_file(st.cover_file);
    Json j;
    try {
      j = Json::parse(text);
      const Window w = Window::parse(j.at("window").get<std::string>());
      ground.emplace(build_set(w, json_points(j.at("ground"), w.dim())));
      for (const auto& c : j.at("cubes")) cubes.push_back({json_point(c.at("center"), w.dim()), c.at("radius").get<std::int64_t>()});
    } catch (const Json::exception& e) {
      throw UsageError(std::string("besicovitch input: ") + e.what());
    }
    digest_src = j.dump();
  }
  const auto r = besicovitch_select(cubes, *ground);
  const Json w = {{"selected", r.selected}, {"candidates", cubes.size()},
                  {"min_multiplicity", r.min_multiplicity}, {"max_multiplicity", r.max_multiplicity}};
  emit(st.common,
       verdict("besicovitch", fnv1a_hex(digest_src), r.audit_ok(), r.max_multiplicity, r.bound, w).dump(2) + "\n", out);
  return r.audit_ok() ? kExitOk : kExitCheckFailed;
}

TwoScaleConfig two_scale_config(const State& st, const Window& w) {
  return {w.radius(), st.inner, st.smear, parse_ratio(st.delta)};
}

int do_two_scale(State& st, std::ostream& out) {
  const LatticeSet e = load(st.a, st.common);
  const auto r = two_scale_density_fraction(e, two_scale_config(st, e.window()));
  const Json j = {{"fraction_density_points", to_string(r.fraction)},
                  {"measure_smeared", to_string(r.smeared_measure)},
                  {"fraction_approx", fixed(to_double(r.fraction))},
                  {"measure_approx", fixed(to_double(r.smeared_measure))}};
  emit(st.common, j.dump(2) + "\n", out);
  return kExitOk;
}

int do_syndetic(State& st, std::ostream& out) {
  const LatticeSet x = load(st.a, st.common);
  const LatticeSet y = load(st.b, st.common, "second set");
  const auto rows = syndetic_point_fraction(x, y, two_scale_config(st, x.window()), st.m_max);
  std::string text = "m,fraction\n";
  for (const auto& r : rows) text += std::to_string(r.m) + "," + to_string(r.fraction) + "\n";
  emit(st.common, text, out);
  return kExitOk;
}

int do_family(State& st, std::ostream& out) {
  if (st.a.family.empty()) throw UsageError("--family is required");
  return do_eval(st, out);
}

int do_verify_example(State& st, std::ostream& out) {
  const auto& ids = example_ids();
  if (std::find(ids.begin(), ids.end(), st.example) == ids.end()) {
    throw UsageError("unknown example '" + st.example + "'");
  }
  std::string text;
  bool all = true;
  for (const auto& c : verify_example(st.example, st.common.threads)) {
    text += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name + "  (" + c.detail + ")\n";
    all = all && c.pass;
  }
  emit(st.common, text, out);
  return all ? kExitOk : kExitCheckFailed;
}

// Turns one batch record into an argument vector for run().
std::vector<std::string> batch_args(const Json& rec) {
  std::vector<std::string> args;
  if (!rec.contains("operation")) throw UsageError("batch record without 'operation'");
  args.push_back(rec.at("operation").get<std::string>());
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
      return s;
    }
    return v.dump();
  };
  auto add_source_args = [&](const Json& src, const std::string& suffix) {
    for (const auto& [key, value] : src.items()) {
      if (key == "params") {
        for (const auto& [pk, pv] : value.items()) {
          args.push_back("--param" + suffix);
          args.push_back(pk + "=" + scalar(pv));
        }
      } else {
        args.push_back("--" + key + suffix);
        args.push_back(scalar(value));
      }
    }
  };
  for (const auto& [key, value] : rec.items()) {
    if (key == "operation") continue;
    if (key == "source") {
      add_source_args(value, "");
    } else if (key == "source_b") {
      add_source_args(value, "-b");
    } else if (key == "params") {
      for (const auto& [pk, pv] : value.items()) {
        std::string flag = "--" + pk;
        std::replace(flag.begin(), flag.end(), '_', '-');
        if (pv.is_boolean()) {
          if (pv.get<bool>()) args.push_back(flag);
          continue;
        }
        args.push_back(flag);
        args.push_back(scalar(pv));
      }
    } else if (key == "positional") {
      args.push_back(scalar(value));
    } else {
      args.push_back("--" + key);
      args.push_back(scalar(value));
    }
  }
  return args;
}

int do_batch(State& st, std::ostream& out, std::ostream& err) {
  Json config;
  try {
    config = Json::parse(read_file(st.config));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("batch config: ") + e.what());
  }
  const Json runs = config.contains("runs") ? config.at("runs") : Json::array({config});
  int worst = kExitOk;
  for (const auto& rec : runs) {
    if (!rec.is_object()) throw UsageError("batch records must be objects");
    if (rec.value("operation", "") == "batch") throw UsageError("batch configs cannot nest");
    const int code = run(batch_args(rec), out, err);
    worst = std::max(worst, code);
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-window laboratory for sumset densities and piecewise syndeticity", "sumlab"};
  app.require_subcommand(1);
  State st;
  std::map<CLI::App*, std::string> defaults;

  auto* eval = app.add_subcommand("eval", "evaluate a set and print it");
  add_common(eval, st.common);
  defaults[eval] = "set";
  add_source(eval, st.a);
  eval->add_option("--translate", st.translate, "translation vector v1[,v2,v3]");
  eval->add_option("--format", st.common.format, "set, json or csv");

  auto* family = app.add_subcommand("family", "generate a named family");
  add_common(family, st.common);
  defaults[family] = "set";
  add_source(family, st.a);
  family->add_option("--format", st.common.format, "set, json or csv");

  auto* density = app.add_subcommand("density", "prefix density profile and tail estimates");
  add_common(density, st.common);
  defaults[density] = "csv";
  add_source(density, st.a);
  density->add_option("--samples", st.samples, "geometric sample count");
  density->add_option("--tail", st.tail, "tail fraction");
  density->add_option("--format", st.common.format, "csv or json");

  auto* banach = app.add_subcommand("banach", "sliding-window Banach density");
  add_common(banach, st.common);
  defaults[banach] = "csv";
  add_source(banach, st.a);
  banach->add_option("--n", st.n_values, "radii")->delimiter(',');
  banach->add_option("--format", st.common.format, "csv or json");

  auto* witness = app.add_subcommand("witness", "witness-density table");
  add_common(witness, st.common);
  defaults[witness] = "csv";
  add_source(witness, st.a);
  add_source(witness, st.b, "-b");
  witness->add_option("--m-max", st.m_max, "largest dilation radius");
  witness->add_option("--k-max", st.k_max, "largest erosion radius");
  witness->add_option("--strong", st.strong, "radii for the strong estimate")->delimiter(',');
  witness->add_option("--format", st.common.format, "csv or json");

  auto* search = app.add_subcommand("search-m", "smallest m reaching a witness level");
  add_common(search, st.common);
  defaults[search] = "json";
  add_source(search, st.a);
  add_source(search, st.b, "-b");
  search->add_option("--level", st.level, "target level");
  search->add_option("--epsilon", st.epsilon, "slack");
  search->add_option("--k-max", st.k_max, "largest erosion radius");
  search->add_option("--mode", st.mode, "lower or upper")->required();
  search->add_option("--m-cap", st.m_cap, "largest m to try");

  auto* saturation = app.add_subcommand("saturation", "saturation radius search");
  add_common(saturation, st.common);
  defaults[saturation] = "json";
  add_source(saturation, st.a);
  saturation->add_option("--epsilon", st.epsilon, "epsilon in (0,1)");
  saturation->add_option("--mode", st.mode, "schnirelmann_union or banach_dilate")->required();
  saturation->add_option("--n-test", st.n_test, "Banach radius (default N/16)");

  auto* adaptive = app.add_subcommand("adaptive", "adaptive-gap witness density");
  add_common(adaptive, st.common);
  defaults[adaptive] = "json";
  add_source(adaptive, st.a);
  add_source(adaptive, st.b, "-b");
  adaptive->add_option("--f", st.f_table, "f(0),f(1),...")->delimiter(',')->required();
  adaptive->add_option("--m-f", st.m_f, "number of m values");
  adaptive->add_option("--level", st.level, "level to meet");

  auto* block = app.add_subcommand("block", "n-block transforms");
  add_common(block, st.common);
  defaults[block] = "set";
  add_source(block, st.a);
  block->add_option("--n", st.block_n, "block size");
  block->add_option("--kind", st.block_kind, "quotient, fill or dilate");
  block->add_option("--format", st.common.format, "set, json or csv");

  auto* mann = app.add_subcommand("mann", "Mann inequality checks");
  add_common(mann, st.common);
  defaults[mann] = "json";
  add_source(mann, st.a);
  add_source(mann, st.b, "-b");
  mann->add_option("--exhaustive", st.exhaustive, "all subset pairs of [1,n]");
  mann->add_option("--random", st.random, "number of random pairs on --window");

  auto* cover = app.add_subcommand("cover", "covering-multiplicity bound");
  add_common(cover, st.common);
  defaults[cover] = "json";
  cover->add_option("--file", st.cover_file, "instance JSON file");
  cover->add_option("--instance", st.cover_instance, "instance JSON text");
  cover->add_flag("--exhaustive", st.cover_exhaustive, "exhaustive oracle over small instances");
  cover->add_option("--max-ground", st.max_ground, "largest ground set");
  cover->add_option("--max-subsets", st.max_subsets, "largest number of subsets");
  cover->add_option("--thresholds", st.thresholds, "comma-separated thresholds");

  auto* besicovitch = app.add_subcommand("besicovitch", "greedy cube selection with multiplicity audit");
  add_common(besicovitch, st.common);
  defaults[besicovitch] = "json";
  besicovitch->add_option("--file", st.cover_file, "JSON with window, ground and cubes");
  besicovitch->add_option("--random", st.random, "extra random cubes on a random instance");
  besicovitch->add_option("--dim", st.dim, "dimension of the random instance");

  auto* two_scale = app.add_subcommand("two-scale", "density-point fraction at two scales");
  add_common(two_scale, st.common);
  defaults[two_scale] = "json";
  add_source(two_scale, st.a);
  two_scale->add_option("--smear", st.smear, "smear radius s");
  two_scale->add_option("--inner", st.inner, "inner radius ν");
  two_scale->add_option("--delta", st.delta, "tolerance δ");

  auto* syndetic = app.add_subcommand("syndetic", "syndetic-point fractions of X+Y");
  add_common(syndetic, st.common);
  defaults[syndetic] = "csv";
  add_source(syndetic, st.a);
  add_source(syndetic, st.b, "-b");
  syndetic->add_option("--smear", st.smear, "smear radius s");
  syndetic->add_option("--inner", st.inner, "inner radius ν");
  syndetic->add_option("--delta", st.delta, "tolerance δ");
  syndetic->add_option("--m-max", st.m_max, "largest dilation radius");

  auto* verify_ex = app.add_subcommand("verify-example", "claim bundle for one worked example");
  add_common(verify_ex, st.common);
  defaults[verify_ex] = "text";
  verify_ex->add_option("name", st.example, "upper-42, epsilon-28, optimal-41, big-44 or nonpws-12")->required();

  auto* batch = app.add_subcommand("batch", "run experiment configs");
  batch->add_option("config", st.config, "JSON config")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (const auto& [sub, format] : defaults) {
    if (sub->parsed() && st.common.format.empty()) st.common.format = format;
  }

  try {
    if (eval->parsed()) return do_eval(st, out);
    if (family->parsed()) return do_family(st, out);
    if (density->parsed()) return do_density(st, out);
    if (banach->parsed()) return do_banach(st, out);
    if (witness->parsed()) return do_witness(st, out);
    if (search->parsed()) return do_search_m(st, out);
    if (saturation->parsed()) return do_saturation(st, out, err);
    if (adaptive->parsed()) return do_adaptive(st, out);
    if (block->parsed()) return do_block(st, out);
    if (mann->parsed()) return do_mann(st, out);
    if (cover->parsed()) return do_cover(st, out);
    if (besicovitch->parsed()) return do_besicovitch(st, out);
    if (two_scale->parsed()) return do_two_scale(st, out);
    if (syndetic->parsed()) return do_syndetic(st, out);
    if (verify_ex->parsed()) return do_verify_example(st, out);
    if (batch->parsed()) return do_batch(st, out, err);
  } catch (const setlang::SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

const std::vector<OperationRoute>& operation_routes() {
  static const std::vector<OperationRoute> routes = {
      {"lattice-sets", "build_set", {"eval", "--window", "c1:2", "--coords", "0,0;1,1"}},
      {"lattice-sets", "boolean_op", {"eval", "--window", "1d:10", "--expr", "(interval(1,2) | interval(2,3)) \\ interval(3,3)"}},
      {"lattice-sets", "translate", {"eval", "--window", "1d:10", "--expr", "interval(1,2)", "--translate", "3"}},
      {"lattice-sets", "serialize", {"eval", "--window", "1d:10", "--expr", "interval(2,5)", "--format", "set"}},
      {"morphology", "sumset", {"eval", "--window", "1d:30", "--expr", "sum(interval(1,2), mod(10,{0}))"}},
      {"morphology", "dilate_cube", {"eval", "--window", "1d:10", "--expr", "dilate(interval(5,5), 2)"}},
      {"morphology", "erode_cube", {"eval", "--window", "1d:10", "--expr", "erode(interval(1,10), 1)"}},
      {"morphology", "block_quotient", {"block", "--window", "c6:1", "--coords", "0;5", "--n", "3", "--kind", "quotient"}},
      {"morphology", "block_fill", {"block", "--window", "c6:1", "--coords", "0;5", "--n", "3", "--kind", "fill"}},
      {"density", "prefix_profile", {"density", "--window", "1d:1000", "--expr", "mod(2,{1})", "--samples", "16"}},
      {"density", "tail_estimates", {"density", "--window", "1d:1000", "--expr", "mod(2,{1})", "--format", "json"}},
      {"density", "schnirelmann", {"density", "--window", "1d:100", "--expr", "mod(2,{1})", "--samples", "4"}},
      {"density", "banach_profile", {"banach", "--window", "1d:100", "--expr", "mod(2,{0})", "--n", "5,10"}},
      {"density", "witness_table", {"witness", "--window", "1d:4096", "--family", "upper_pair", "--member", "A",
                                    "--m-max", "2", "--k-max", "2"}},
      {"density", "minimal_m_search", {"search-m", "--window", "1d:1000", "--expr", "mod(3,{0})", "--level", "1",
                                       "--mode", "lower", "--k-max", "2"}},
      {"density", "saturation_search", {"saturation", "--window", "1d:1000", "--expr", "mod(2,{1})", "--epsilon",
                                        "1/10", "--mode", "schnirelmann_union"}},
      {"density", "adaptive_gap_check", {"adaptive", "--window", "1d:1000", "--expr", "interval(1,1000)", "--f",
                                         "0,1,2", "--m-f", "2", "--level", "1/2"}},
      {"families", "gen_upper_pair", {"family", "--window", "1d:20", "--family", "upper_pair", "--member", "B"}},
      {"families", "gen_epsilon_set", {"family", "--window", "1d:64", "--family", "epsilon_set", "--format", "csv"}},
      {"families", "gen_optimal_C", {"family", "--window", "1d:720", "--family", "optimal_C", "--format", "json"}},
      {"families", "gen_big_pair", {"family", "--window", "1d:1594323", "--family", "big_pair", "--param", "base=3",
                                    "--member", "A", "--format", "json"}},
      {"families", "gen_non_pws", {"family", "--window", "c1000:1", "--family", "non_pws", "--param", "n0=4"}},
      {"verify", "mann_sigma_sum", {"mann", "--window", "1d:50", "--expr", "mod(2,{1})", "--expr-b", "mod(2,{1})"}},
      {"verify", "mann_check", {"mann", "--window", "1d:50", "--expr", "mod(3,{1})", "--expr-b", "mod(3,{2})"}},
      {"verify", "mann_exhaustive", {"mann", "--exhaustive", "4"}},
      {"verify", "covering_bound_check", {"cover", "--instance",
                                          R"({"ground":[1,2,3,4],"subsets":[[1,2],[3,4]],"m":1,"t":"1/2","target":[1]})"}},
      {"verify", "besicovitch_select", {"besicovitch", "--random", "20", "--dim", "2", "--seed", "3"}},
      {"verify", "two_scale_density_fraction", {"two-scale", "--window", "c2000:1", "--expr", "interval(0,2000)",
                                                "--smear", "2", "--inner", "100"}},
      {"verify", "syndetic_point_fraction", {"syndetic", "--window", "1d:4096", "--family", "upper_pair", "--member",
                                             "A", "--family-b", "upper_pair", "--member-b", "B", "--inner", "16",
                                             "--smear", "1", "--m-max", "2"}},
      {"setlang", "parse", {"eval", "--window", "1d:20", "--expr", "union(n=1..3, interval(2^n, 2^n + 2^(n-1)))"}},
      {"setlang", "evaluate", {"eval", "--window", "1d:100", "--expr", "erode(dilate(mod(2,{0}),1),1)", "--format",
                               "json"}},
  };
  return routes;
}

}  // namespace sumlab::cli
