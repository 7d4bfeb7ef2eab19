#include "srgft/descriptor.hpp"
#include "srgft/quaternion_io.hpp"
#include "srgft/registry.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace srgft;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  RunConfig run;
  std::string mode = "exact";
  std::string radii;
  std::string out;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--degree", o.run.degree, "truncation degree")->capture_default_str();
  cmd->add_option("--tol", o.run.tolerance, "tolerance on relative margins")->capture_default_str();
  cmd->add_option("--mode", o.mode, "exact or float")->capture_default_str();
  cmd->add_option("--seed", o.run.seed, "seed")->envname("SRGFT_SEED")->capture_default_str();
  cmd->add_option("--out", o.out, "output file (stdout when omitted)");
  cmd->add_option("--grid-radii", o.radii, "comma separated radii in (0, 1)");
  cmd->add_option("--grid-units", o.run.units, "imaginary units per radius")->capture_default_str();
  cmd->add_option("--grid-angles", o.run.angles, "angles per slice")->capture_default_str();
}

void finalize(Options& o) {
  o.run.mode = parse_mode(o.mode);
  if (!o.radii.empty()) {
    o.run.radii.clear();
    std::stringstream ss(o.radii);
    std::string item;
    while (std::getline(ss, item, ',')) o.run.radii.push_back(parse_double(item));
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

Json read_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read '" + path + "'");
  try {
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_check(const std::string& suite, Options& o, int random, int jobs) {
  finalize(o);
  o.run.random = random;
  o.run.jobs = jobs;
  if (!is_known_selection(suite)) throw UsageError("unknown suite '" + suite + "'");
  const auto tasks = build_tasks(suite, o.run);
  const auto reports = run_tasks(tasks, o.run.jobs);
  emit(o.out, to_json(reports).dump(2) + "\n");
  long failed = 0;
  for (const auto& r : reports) failed += r.passed ? 0 : 1;
  std::cerr << reports.size() << " reports, " << failed << " failed\n";
  return failed == 0 ? 0 : kExitFailure;
}

// Self-map verdict sup |f| <= 1 on the grid.
ClassVerdict self_map(const SliceFunction& f, const SamplingGrid& grid) {
  ClassVerdict v;
  v.class_name = "B(B)";
  v.margin = std::numeric_limits<double>::infinity();
  for (const auto& point : grid.points()) {
    const double m = 1.0 - abs(f.value(point.q));
    if (m < v.margin) {
      v.margin = m;
      v.witness = point.q;
    }
  }
  v.member = v.margin >= 0.0;
  v.certificate = v.member ? Certificate::Sampled : Certificate::Refuted;
  return v;
}

struct GenArgs {
  std::string u = "1";
  std::string a = "1/2i";
  std::string b = "1/2";
  std::string p = "1";
  std::string alpha = "0";
  int gap = 1;
  int k = 2;
};

Json any_json(const AnyQuaternion& q) {
  return std::visit([](const auto& v) { return to_json(v); }, q);
}

QuaternionD any_double(const AnyQuaternion& q) {
  return std::visit([](const auto& v) { return quaternion_cast<double>(v); }, q);
}

AnyQuaternion parse_unit(const std::string& text) {
  const AnyQuaternion u = parse_quaternion_auto(text);
  if (const auto* d = std::get_if<QuaternionD>(&u)) {
    const double n = abs(*d);
    if (!(std::fabs(n - 1.0) <= 1e-6)) throw UsageError("'" + text + "' is not a unit quaternion");
    return *d / n;
  }
  return u;
}

int cmd_gen(const std::string& kind, Options& o, const GenArgs& g) {
  finalize(o);
  const CheckConfig config = o.run.check_config();
  Json descriptor;
  Json series;
  ClassVerdict verdict;
  std::optional<SliceFunction> f;
  auto exact_or_float = [&](const SliceFunction& fn) {
    if (o.run.mode == Mode::Exact) {
      if (auto s = fn.exact_series(o.run.degree)) return to_json(*s);
    }
    return to_json(fn.series(o.run.degree));
  };

  try {
    if (kind == "koebe") {
      descriptor = {{"kind", "koebe"}, {"u", any_json(parse_unit(g.u))}};
    } else if (kind == "mobius") {
      descriptor = {{"kind", "mobius"}, {"a", any_json(parse_quaternion_auto(g.a))}};
    } else if (kind == "rogosinski") {
      descriptor = {{"kind", "rogosinski"},
                    {"b", any_json(parse_quaternion_auto(g.b))},
                    {"p", any_json(parse_quaternion_auto(g.p))}};
    } else if (kind == "caratheodory") {
      const auto m = generate_caratheodory_mixture(derive_seed(o.run.seed, "gen-caratheodory", 0), g.k);
      Json weights = Json::array();
      Json units = Json::array();
      for (const auto& w : m.weights) weights.push_back(format_scalar(w));
      for (const auto& u : m.units) units.push_back(to_json(u));
      descriptor = {{"kind", "caratheodory"}, {"weights", weights}, {"units", units}};
    } else if (kind == "class-c") {
      const SeriesQ h = generate_small_coeff_sstar(derive_seed(o.run.seed, "gen-class-c-h", 0), o.run.degree);
      const auto m = generate_caratheodory_mixture(derive_seed(o.run.seed, "gen-class-c-p", 0), g.k);
      Json hc = Json::array();
      for (int n = 0; n <= h.degree(); ++n) hc.push_back(to_json(h.coeff(n)));
      Json weights = Json::array();
      Json units = Json::array();
      for (const auto& w : m.weights) weights.push_back(format_scalar(w));
      for (const auto& u : m.units) units.push_back(to_json(u));
      descriptor = {{"kind", "class-c"},
                    {"h", {{"kind", "polynomial"}, {"coeffs", hc}}},
                    {"p", {{"kind", "caratheodory"}, {"weights", weights}, {"units", units}}}};
    } else if (kind == "sstar") {
      const SeriesQ s = generate_small_coeff_sstar(derive_seed(o.run.seed, "gen-sstar", 0), o.run.degree,
                                                   parse_rational(g.alpha), g.gap);
      f = o.run.mode == Mode::Exact ? SliceFunction::from_series("sstar", s)
                                    : SliceFunction::from_series("sstar", series_cast<double>(s));
    } else if (kind == "identity" || kind == "convex-extremal" || kind == "odd-starlike" || kind == "bloch") {
      descriptor = {{"kind", kind}};
    } else {
      throw UsageError("unknown class '" + kind + "'");
    }
    if (!f) f = function_from_descriptor(descriptor, o.run.mode);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }

  series = exact_or_float(*f);
  if (kind == "caratheodory") {
    verdict = is_caratheodory(*f, config.grid);
  } else if (kind == "mobius" || kind == "rogosinski") {
    verdict = self_map(*f, config.grid);
  } else if (kind == "bloch") {
    verdict = is_slice_preserving(f->series(o.run.degree));
  } else if (kind == "class-c") {
    verdict = is_class_c(*f, function_from_descriptor(descriptor.at("h"), o.run.mode), config.grid);
  } else {
    const double alpha = kind == "sstar" ? to_double(parse_rational(g.alpha)) : 0.0;
    verdict = is_sstar(*f, config.grid, alpha);
  }

  Json out = Json::object();
  out["class"] = kind;
  out["function"] = descriptor.is_null() ? Json(f->id()) : Json(describe(descriptor));
  for (auto& [key, value] : series.items()) out[key] = value;
  if (!descriptor.is_null()) out["closed_form"] = descriptor;
  out["verdict"] = to_json(verdict);
  emit(o.out, out.dump(2) + "\n");
  return 0;
}

SliceFunction load_function(const std::string& path, Mode mode) {
  const Json j = read_json(path);
  try {
    if (j.contains("closed_form")) return function_from_descriptor(j.at("closed_form"), mode);
    const AnySeries s = series_from_json(j);
    const std::string id = j.value("function", path);
    if (const auto* q = std::get_if<SeriesQ>(&s)) {
      return mode == Mode::Exact ? SliceFunction::from_series(id, *q) : SliceFunction::from_series(id, series_cast<double>(*q));
    }
    return SliceFunction::from_series(id, std::get<SeriesD>(s));
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_eval(const std::string& path, const std::string& at, Options& o) {
  finalize(o);
  const SliceFunction f = load_function(path, o.run.mode);
  AnyQuaternion point;
  try {
    point = parse_quaternion_auto(at);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  const QuaternionD qd = any_double(point);
  if (!(abs(qd) < 1.0)) throw DomainError("point " + at + " lies outside the open unit ball");
  const auto* exact = f.exact_rational();
  const auto* qq = std::get_if<QuaternionQ>(&point);
  if (o.run.mode == Mode::Exact && exact != nullptr && qq != nullptr) {
    std::cout << format_quaternion(exact->value(*qq)) << "\n" << format_quaternion(exact->derivative_value(*qq)) << "\n";
  } else {
    std::cout << format_quaternion(f.value(qd)) << "\n" << format_quaternion(f.derivative(qd)) << "\n";
  }
  return 0;
}

int cmd_slice_image(const std::string& path, const std::string& unit, int radial, int angular, Options& o) {
  finalize(o);
  const SliceFunction f = load_function(path, Mode::Float);
  QuaternionD d;
  try {
    d = any_double(parse_unit(unit));
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  if (!(d.w == 0.0)) throw UsageError("slice unit must be purely imaginary");
  const ImaginaryUnit<double> u(d.x, d.y, d.z);
  if (radial < 1 || angular < 1) throw UsageError("sample counts must be positive");
  std::ostringstream csv;
  csv << "re_in,i_in,re_out,i_out,off_slice\n";
  auto row = [&](double x, double y) {
    const QuaternionD q = QuaternionD(x) + u.quaternion() * y;
    const QuaternionD v = f.value(q);
    const QuaternionD im = v.imag();
    const double along = im.x * d.x + im.y * d.y + im.z * d.z;
    const double off = abs(im - u.quaternion() * along);
    csv << format_scalar(x) << ',' << format_scalar(y) << ',' << format_scalar(v.w) << ',' << format_scalar(along)
        << ',' << format_scalar(off) << '\n';
  };
  row(0.0, 0.0);
  for (int m = 1; m <= radial; ++m) {
    const double r = (m - 0.5) / radial;
    for (int n = 0; n < angular; ++n) {
      const double t = 2.0 * std::numbers::pi * n / angular;
      row(r * std::cos(t), r * std::sin(t));
    }
  }
  emit(o.out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice regular quaternionic function calculus and theorem checks"};
  app.require_subcommand(1);

  Options check_opts, gen_opts, eval_opts, image_opts;
  std::string suite = "all";
  int random = 5;
  int jobs = 1;
  auto* check = app.add_subcommand("check", "run check suites and write a JSON report");
  check->add_option("--suite", suite, "suite name, check id or all")->capture_default_str();
  check->add_option("--random", random, "generated members per family")->capture_default_str();
  check->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  add_common(check, check_opts);

  std::string kind;
  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a class member as a series file");
  gen->add_option("class", kind, "sstar, caratheodory, koebe, rogosinski, class-c, mobius, identity, "
                                 "convex-extremal, odd-starlike or bloch")
      ->required();
  gen->add_option("--u", gen_args.u, "Koebe direction")->capture_default_str();
  gen->add_option("--a", gen_args.a, "Moebius parameter")->capture_default_str();
  gen->add_option("--b", gen_args.b, "Rogosinski f'(0)")->capture_default_str();
  gen->add_option("--p", gen_args.p, "Rogosinski parameter")->capture_default_str();
  gen->add_option("--alpha", gen_args.alpha, "order of starlikeness")->capture_default_str();
  gen->add_option("--gap", gen_args.gap, "first nonzero coefficient after a_1 is a_{gap+1}")->capture_default_str();
  gen->add_option("--k", gen_args.k, "Caratheodory mixture size")->capture_default_str();
  add_common(gen, gen_opts);

  std::string file, at;
  auto* eval = app.add_subcommand("eval", "print f(q) and f'(q)");
  eval->add_option("file", file, "series file")->required();
  eval->add_option("--at", at, "quaternion literal")->required();
  add_common(eval, eval_opts);

  std::string image_file, unit = "i";
  int radial = 64;
  int angular = 256;
  auto* image = app.add_subcommand("slice-image", "sample a slice and write CSV");
  image->add_option("file", image_file, "series file")->required();
  image->add_option("--unit", unit, "imaginary unit of the slice")->capture_default_str();
  image->add_option("--radial", radial, "radial samples")->capture_default_str();
  image->add_option("--angular", angular, "angular samples")->capture_default_str();
  add_common(image, image_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return cmd_check(suite, check_opts, random, jobs);
    if (*gen) return cmd_gen(kind, gen_opts, gen_args);
    if (*eval) return cmd_eval(file, at, eval_opts);
    if (*image) return cmd_slice_image(image_file, unit, radial, angular, image_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
