/* Copyright 2026 The Supersep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "supersep/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "supersep/combine.hpp"
#include "supersep/error.hpp"
#include "supersep/io.hpp"
#include "supersep/optics.hpp"
#include "supersep/planner.hpp"
#include "supersep/reeh.hpp"
#include "supersep/schmudgen.hpp"
#include "supersep/sector.hpp"

namespace supersep::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kCsvVersion = "v1";

// A numerical identity the run was supposed to confirm did not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class Params {
 public:
  Params(const std::map<std::string, std::string>& values,
         std::initializer_list<const char*> allowed)
      : values_(values) {
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : values_)
      if (!ok.count(k)) throw InvalidInput("unknown parameter --" + k);
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  const std::string& get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end())
      throw InvalidInput("missing required parameter --" + key);
    return it->second;
  }

  std::string get_or(const std::string& key, std::string fallback) const {
    return has(key) ? get(key) : fallback;
  }

  double length(const std::string& key) const {
    return io::parse_length(get(key));
  }

  long integer_or(const std::string& key, long fallback) const {
    return has(key) ? io::parse_integer(get(key)) : fallback;
  }

 private:
  const std::map<std::string, std::string>& values_;
};

std::string format_complex(std::complex<double> z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

void require_format(OutputFormat f, std::initializer_list<OutputFormat> ok,
                    const char* sub) {
  if (std::find(ok.begin(), ok.end(), f) == ok.end())
    throw InvalidInput(std::string("output format not supported by ") + sub);
}

std::size_t sample_count(const Params& p) {
  const long n = p.integer_or("samples", optics::kDefaultSamples);
  if (n < 3) throw InvalidInput("--samples must be >= 3");
  return static_cast<std::size_t>(n);
}

Json extrema_json(const std::vector<optics::Extremum>& ex) {
  Json arr = Json::array();
  for (const auto& e : ex)
    arr.push_back({{"u_m", e.coordinate},
                   {"value", e.value},
                   {"kind", e.kind == optics::ExtremumKind::max ? "max" : "min"}});
  return arr;
}

// ---------------------------------------------------------------- pattern

void run_pattern(const RunConfig& cfg, std::ostream& os) {
  const Params p(cfg.parameters,
                 {"n", "b", "s", "lambda", "x", "window", "samples", "center",
                  "amplitude-scale", "kind", "extrema"});
  optics::SlitSystem sys;
  sys.slit_count = static_cast<int>(p.integer_or("n", 1));
  sys.slit_width = p.length("b");
  sys.slit_separation = sys.slit_count > 1 || p.has("s") ? p.length("s") : 0.0;
  sys.center_offset = p.has("center") ? p.length("center") : 0.0;
  optics::BeamGeometry geom{p.length("lambda"), p.length("x"),
                            p.has("amplitude-scale")
                                ? io::parse_number(p.get("amplitude-scale"))
                                : 1.0};
  sys.validate();
  geom.validate();
  optics::Window window;
  if (p.has("window")) {
    window = io::parse_window(p.get("window"));
  } else {
    if (!(geom.wavelength < sys.slit_width))
      throw NoFarFieldMinimum("default window needs lambda < b");
    const double half = geom.detector_distance *
                        std::tan(std::asin(geom.wavelength / sys.slit_width));
    window = {sys.center_offset - half, sys.center_offset + half};
  }
  const std::string kind = p.get_or("kind", "intensity");
  const bool extrema = p.has("extrema") && io::parse_bool(p.get("extrema"));
  const std::size_t n = sample_count(p);

  std::ostringstream meta;
  meta << "N=" << sys.slit_count << " b_m=" << io::format_double(sys.slit_width)
       << " s_m=" << io::format_double(sys.slit_separation)
       << " center_m=" << io::format_double(sys.center_offset)
       << " lambda_m=" << io::format_double(geom.wavelength)
       << " x_m=" << io::format_double(geom.detector_distance);

  if (kind == "amplitude") {
    if (extrema) throw InvalidInput("--extrema needs --kind intensity");
    const auto pat = optics::sample_amplitude(sys, geom, window, n);
    if (cfg.output_format == OutputFormat::json) {
      Json j;
      j["kind"] = "amplitude";
      j["u_m"] = pat.u;
      Json re = Json::array(), im = Json::array();
      for (const auto& z : pat.field) {
        re.push_back(z.real());
        im.push_back(z.imag());
      }
      j["re"] = re;
      j["im"] = im;
      os << j.dump(2) << '\n';
      return;
    }
    require_format(cfg.output_format, {OutputFormat::csv}, "pattern");
    io::CsvTable t;
    t.comments = {std::string("supersep pattern ") + kCsvVersion +
                      " amplitude",
                  meta.str()};
    t.columns = {"u_m", "re", "im"};
    for (std::size_t i = 0; i < pat.size(); ++i)
      t.rows.push_back({pat.u[i], pat.field[i].real(), pat.field[i].imag()});
    io::write_csv(os, t);
    return;
  }
  if (kind != "intensity")
    throw InvalidInput("--kind must be intensity or amplitude");

  const auto pat = optics::sample_intensity(sys, geom, window, n);
  if (extrema) {
    const auto ex = optics::find_extrema(pat);
    if (cfg.output_format == OutputFormat::json) {
      os << Json{{"extrema", extrema_json(ex)}}.dump(2) << '\n';
      return;
    }
    require_format(cfg.output_format, {OutputFormat::csv}, "pattern");
    io::CsvTable t;
    t.comments = {std::string("supersep extrema ") + kCsvVersion +
                      " is_max: 1 maximum, 0 minimum",
                  meta.str()};
    t.columns = {"u_m", "value", "is_max"};
    for (const auto& e : ex)
      t.rows.push_back({e.coordinate, e.value,
                        e.kind == optics::ExtremumKind::max ? 1.0 : 0.0});
    io::write_csv(os, t);
    return;
  }
  if (cfg.output_format == OutputFormat::json) {
    os << Json{{"kind", "intensity"}, {"u_m", pat.u}, {"intensity", pat.value}}
              .dump(2)
       << '\n';
    return;
  }
  require_format(cfg.output_format, {OutputFormat::csv}, "pattern");
  io::CsvTable t;
  t.comments = {std::string("supersep pattern ") + kCsvVersion + " intensity",
                meta.str()};
  t.columns = {"u_m", "intensity"};
  for (std::size_t i = 0; i < pat.size(); ++i)
    t.rows.push_back({pat.u[i], pat.value[i]});
  io::write_csv(os, t);
}

// ---------------------------------------------------------------- combine

void run_combine(const RunConfig& cfg, std::ostream& os) {
  const Params p(cfg.parameters,
                 {"mode", "b", "s", "lambda", "x", "window", "samples",
                  "coherent-model", "count-match"});
  const double b = p.length("b");
  const double s = p.length("s");
  const double lambda = p.length("lambda");
  const double x = p.length("x");
  const auto window = p.has("window")
                          ? io::parse_window(p.get("window"))
                          : combine::superseparable_window(b, s, lambda, x);
  const std::string mode = p.get_or("mode", "both");
  if (mode != "both" && mode != "superseparable" && mode != "coherent")
    throw InvalidInput("--mode must be superseparable, coherent or both");
  const std::string model_name = p.get_or("coherent-model", "fraunhofer");
  combine::CoherentModel model;
  if (model_name == "fraunhofer")
    model = combine::CoherentModel::fraunhofer;
  else if (model_name == "exact-path")
    model = combine::CoherentModel::exact_path;
  else
    throw InvalidInput("--coherent-model must be fraunhofer or exact-path");
  const bool match =
      p.has("count-match") ? io::parse_bool(p.get("count-match")) : true;

  const auto layout =
      combine::canonical_layout(b, s, lambda, x, window, sample_count(p));
  const bool want_inc = mode != "coherent";
  const bool want_coh = mode != "superseparable";
  optics::ScreenPattern inc, coh;
  if (want_inc) inc = combine::combine_incoherent(layout);
  if (want_coh) coh = combine::combine_coherent(layout, model);
  if (want_inc && want_coh && match)
    coh = combine::count_matched(coh, combine::integrate(inc));

  const auto& grid = want_inc ? inc.u : coh.u;
  if (cfg.output_format == OutputFormat::json) {
    Json j;
    j["u_m"] = grid;
    const double period = lambda * x / (s + b);
    const double sep = x * std::tan(std::asin(lambda / b));
    if (want_inc) {
      j["intensity_superseparable"] = inc.value;
      j["envelope_maxima_superseparable"] =
          extrema_json(combine::envelope_maxima(inc, period, sep));
    }
    if (want_coh) {
      j["intensity_coherent"] = coh.value;
      j["envelope_maxima_coherent"] =
          extrema_json(combine::envelope_maxima(coh, period, sep));
    }
    if (want_inc && want_coh)
      j["discriminator"] = combine::pattern_discriminator(inc, coh);
    os << j.dump(2) << '\n';
    return;
  }
  require_format(cfg.output_format, {OutputFormat::csv}, "combine");
  io::CsvTable t;
  std::ostringstream meta;
  meta << "b_m=" << io::format_double(b) << " s_m=" << io::format_double(s)
       << " lambda_m=" << io::format_double(lambda)
       << " x_m=" << io::format_double(x) << " coherent_model=" << model_name
       << " count_matched=" << (want_inc && want_coh && match ? 1 : 0);
  t.comments = {std::string("supersep combine ") + kCsvVersion +
                    " double slit centred at u=0, single slit at +3(s+b)/2",
                meta.str()};
  t.columns = {"u_m"};
  if (want_inc) t.columns.push_back("intensity_superseparable");
  if (want_coh) t.columns.push_back("intensity_coherent");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i]};
    if (want_inc) row.push_back(inc.value[i]);
    if (want_coh) row.push_back(coh.value[i]);
    t.rows.push_back(std::move(row));
  }
  io::write_csv(os, t);
}

// ---------------------------------------------------------------- reeh

void run_reeh(const RunConfig& cfg, std::ostream& os) {
  const Params p(cfg.parameters, {"flux-quanta", "alpha", "charge", "flux",
                                  "probe", "confines", "superseparable"});
  const int sources = static_cast<int>(p.has("flux-quanta")) +
                      static_cast<int>(p.has("alpha")) +
                      static_cast<int>(p.has("charge") || p.has("flux"));
  if (sources != 1)
    throw InvalidInput(
        "give exactly one of --flux-quanta, --alpha, or --charge with --flux");
  Json j;
  reeh::FluxConfig flux;
  bool weyl = false;
  if (p.has("flux-quanta")) {
    const long n = io::parse_integer(p.get("flux-quanta"));
    if (n < 0 || n > std::numeric_limits<int>::max())
      throw InvalidParameter("--flux-quanta must be >= 0");
    const auto sc = reeh::superconducting_case(static_cast<int>(n));
    flux.alpha = sc.alpha;
    weyl = sc.weyl;
  } else if (p.has("alpha")) {
    flux.alpha = io::parse_number(p.get("alpha"));
    weyl = reeh::is_weyl(flux);
  } else {
    flux = reeh::make_alpha(io::parse_number(p.get("charge")),
                            io::parse_number(p.get("flux")));
    weyl = reeh::is_weyl(flux);
  }
  j["alpha"] = flux.alpha;
  j["weyl"] = weyl;
  if (p.has("probe")) {
    std::vector<double> v;
    std::stringstream ss(p.get("probe"));
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(io::parse_number(cell));
    if (v.size() != 4) throw InvalidInput("--probe needs x,y,a,b");
    const reeh::TranslationProbe probe{v[0], v[1], v[2], v[3]};
    j["bracket_product"] = reeh::bracket_product(probe);
    j["phase"] = format_complex(reeh::commutator_phase(flux, probe));
  }
  if (p.has("confines") || p.has("superseparable")) {
    const auto outcome =
        reeh::predict_outcome(io::parse_bool(p.get("confines")),
                              io::parse_bool(p.get("superseparable")));
    j["outcome"] = std::string(reeh::to_string(outcome));
  }
  if (cfg.output_format == OutputFormat::text) {
    for (const auto& [k, v] : j.items())
      os << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump())
         << '\n';
    return;
  }
  require_format(cfg.output_format, {OutputFormat::json}, "reeh");
  os << j.dump(2) << '\n';
}

// ---------------------------------------------------------------- schmudgen

schmudgen::GridField parse_field(const std::string& text, int radius,
                                 double h, double s, double t) {
  if (text.empty())
    return schmudgen::make_gaussian(0.5 * s, 0.5 * t, 0.5, 2.0, radius, h);
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  std::vector<double> v;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(io::parse_number(cell));
  }
  if (kind == "gaussian" && v.size() == 4)
    return schmudgen::make_gaussian(v[0], v[1], v[2], v[3], radius, h);
  if (kind == "bump" && v.size() == 3)
    return schmudgen::make_bump(v[0], v[1], v[2], radius, h);
  throw InvalidInput(
      "--field must be gaussian:cx,cy,sigma,cutoff or bump:cx,cy,rho");
}

schmudgen::PhaseZ parse_z(const Params& p) {
  if (p.has("z") && p.has("z-angle"))
    throw InvalidInput("give --z or --z-angle, not both");
  if (p.has("z-angle"))
    return schmudgen::PhaseZ::from_angle(io::parse_angle(p.get("z-angle")));
  const std::string z = p.get_or("z", "i");
  if (z == "i") return schmudgen::PhaseZ::make({0.0, 1.0});
  if (z == "-1") return schmudgen::PhaseZ::make({-1.0, 0.0});
  if (z == "-i") return schmudgen::PhaseZ::make({0.0, -1.0});
  const auto comma = z.find(',');
  if (comma == std::string::npos)
    throw InvalidInput("--z must be i, -i, -1 or re,im");
  return schmudgen::PhaseZ::make(
      {io::parse_number(z.substr(0, comma)), io::parse_number(z.substr(comma + 1))});
}

void run_schmudgen(const RunConfig& cfg, std::ostream& os) {
  const Params p(cfg.parameters, {"z", "z-angle", "s-steps", "t-steps",
                                  "radius", "spacing", "field"});
  const auto z = parse_z(p);
  const long ms = p.integer_or("s-steps", 4);
  const long mt = p.integer_or("t-steps", 4);
  const long radius = p.integer_or("radius", schmudgen::kDefaultRadius);
  if (ms <= 0 || mt <= 0) throw InvalidParameter("steps must be positive");
  if (radius < 1 || radius > 4096) throw InvalidParameter("bad --radius");
  const double h = p.has("spacing") ? io::parse_number(p.get("spacing"))
                                    : schmudgen::kDefaultSpacing;
  if (!(h > 0.0)) throw InvalidParameter("--spacing must be > 0");
  const double s = ms * h;
  const double t = mt * h;
  const auto field = parse_field(p.get_or("field", ""),
                                 static_cast<int>(radius), h, s, t);
  const auto defect = schmudgen::weyl_defect(s, t, z, field);
  const auto check = schmudgen::verify_defect_identity(
      static_cast<int>(ms), static_cast<int>(mt), z, field, defect);

  if (cfg.output_format == OutputFormat::json) {
    Json j{{"z", format_complex(z.value())},
           {"s", s},
           {"t", t},
           {"max_deviation_in_region", check.max_inside_deviation},
           {"max_defect_outside_region", check.max_outside},
           {"identity_holds", check.holds}};
    os << j.dump(2) << '\n';
  } else {
    require_format(cfg.output_format, {OutputFormat::csv}, "schmudgen");
    io::CsvTable t_out;
    t_out.comments = {std::string("supersep schmudgen ") + kCsvVersion +
                          " weyl defect (I - e^{-its} V(-s)U(-t)V(s)U(t)) f",
                      "z=" + format_complex(z.value()) +
                          " s=" + io::format_double(s) +
                          " t=" + io::format_double(t) +
                          " h=" + io::format_double(h)};
    t_out.columns = {"i", "j", "x", "y", "re", "im"};
    const int n = defect.points_per_axis();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto v = defect(i, j);
        t_out.rows.push_back({static_cast<double>(i), static_cast<double>(j),
                              defect.x(i), defect.y(j), v.real(), v.imag()});
      }
    io::write_csv(os, t_out);
  }
  if (!check.holds)
    throw ContractViolation("defect differs from (1 - z) chi_R f");
}

// ---------------------------------------------------------------- sector

sector::Matrix random_hermitian(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  sector::Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = {g(rng), g(rng)};
  return 0.5 * (m + m.adjoint());
}

sector::Vector random_vector(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  sector::Vector v(d);
  for (Eigen::Index r = 0; r < d; ++r) v(r) = {g(rng), g(rng)};
  return v;
}

void run_sector(const RunConfig& cfg, std::ostream& os) {
  const Params p(cfg.parameters, {"task", "dim", "seed", "pairs", "coupling",
                                  "l1", "l2", "l", "n-max"});
  require_format(cfg.output_format, {OutputFormat::json}, "sector");
  const std::string task = p.get("task");
  const long dim = p.integer_or("dim", 4);
  if (dim < 1 || dim > 64) throw InvalidParameter("--dim must be in 1..64");
  std::mt19937_64 rng(static_cast<std::uint64_t>(p.integer_or("seed", 1)));
  Json j{{"task", task}};
  if (task == "orthogonality") {
    const long pairs = p.integer_or("pairs", 1000);
    if (pairs < 1) throw InvalidParameter("--pairs must be >= 1");
    double worst = 0.0;
    for (long k = 0; k < pairs; ++k) {
      const auto u = sector::SectorState::first(random_vector(dim, rng), dim);
      const auto v = sector::SectorState::second(dim, random_vector(dim, rng));
      worst = std::max(worst, std::abs(sector::inner(u, v)));
    }
    j["dim"] = dim;
    j["pairs"] = pairs;
    j["max_abs_cross_inner"] = worst;
  } else if (task == "classify") {
    const double coupling =
        p.has("coupling") ? io::parse_number(p.get("coupling")) : 0.0;
    auto op = sector::SectorOperator::block_diagonal(random_hermitian(dim, rng),
                                                     random_hermitian(dim, rng));
    if (coupling != 0.0) {
      sector::Matrix c(dim, dim);
      std::normal_distribution<double> g;
      for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index q = 0; q < dim; ++q) c(r, q) = coupling * g(rng);
      op.b12 = c;
      op.b21 = c.adjoint();
    }
    // Largest |<(e_a, 0), O (0, e_b)>| over basis vectors.
    j["sector_preserving"] = sector::is_sector_preserving(op);
    j["self_adjoint"] = op.is_self_adjoint();
    j["max_cross_matrix_element"] = op.b12.cwiseAbs().maxCoeff();
  } else if (task == "boxes") {
    const auto l1 = sector::BoxLength::parse(p.get("l1"));
    const auto l2 = sector::BoxLength::parse(p.get("l2"));
    j["l1"] = l1.to_string();
    j["l2"] = l2.to_string();
    j["equivalent"] = sector::boxes_equivalent(l1, l2);
  } else if (task == "spectrum") {
    const auto l = sector::BoxLength::parse(p.get("l"));
    const long n_max = p.integer_or("n-max", 5);
    if (n_max < 1 || n_max > 100000) throw InvalidParameter("bad --n-max");
    j["l"] = l.to_string();
    j["eigenvalues"] = sector::box_spectrum(l, static_cast<int>(n_max));
  } else {
    throw InvalidInput(
        "--task must be orthogonality, classify, boxes or spectrum");
  }
  os << j.dump(2) << '\n';
}

// ---------------------------------------------------------------- plan

double particle_mass(const std::string& name) {
  if (name == "rb85") return planner::constants::kRb85Mass;
  if (name == "electron") return planner::constants::kElectronMass;
  if (name == "c12") return planner::constants::kC12Mass;
  throw InvalidInput("--particle must be rb85, electron or c12");
}

void run_plan(const RunConfig& cfg, std::ostream& os) {
  const Params p(cfg.parameters, {"b", "s", "lambda", "mass", "particle",
                                  "velocity", "rescale"});
  planner::ExperimentParams params{p.length("b"), p.length("s"),
                                   p.length("lambda"), {}, {}};
  if (p.has("mass") && p.has("particle"))
    throw InvalidInput("give --mass or --particle, not both");
  if (p.has("mass")) params.mass = io::parse_mass(p.get("mass"));
  if (p.has("particle")) params.mass = particle_mass(p.get("particle"));
  if (p.has("velocity")) params.velocity = io::parse_velocity(p.get("velocity"));

  Json j;
  const auto add_geometry = [&](const std::string& prefix,
                                const planner::GeometryReport& g) {
    j[prefix + "theta0_rad"] = g.theta0;
    j[prefix + "x_detector_m"] = g.x_detector;
    j[prefix + "delta_m"] = g.delta;
    j[prefix + "gamma_beta_ratio"] = g.gamma_beta_ratio;
  };
  add_geometry("", planner::geometry(params));
  if (p.has("rescale")) {
    const double f = io::parse_number(p.get("rescale"));
    j["rescale_factor"] = f;
    add_geometry("rescaled_", planner::rescale_resolution(params, f));
  }
  if (params.mass && params.velocity)
    j["de_broglie_m"] = planner::de_broglie(*params.mass, *params.velocity);
  else if (params.mass)
    j["velocity_for_lambda_m_per_s"] =
        planner::velocity_for_wavelength(*params.mass, params.lambda);

  if (cfg.output_format == OutputFormat::text) {
    for (const auto& [k, v] : j.items())
      os << k << '=' << io::format_double(v.get<double>()) << '\n';
    for (const auto& c : planner::quoted_figure_checks())
      os << "check." << c.quantity << " quoted=" << io::format_double(c.quoted)
         << " computed=" << io::format_double(c.computed)
         << (c.agrees() ? " agrees" : " DISAGREES") << '\n';
    return;
  }
  require_format(cfg.output_format, {OutputFormat::json}, "plan");
  Json checks = Json::array();
  for (const auto& c : planner::quoted_figure_checks())
    checks.push_back({{"quantity", c.quantity},
                      {"quoted", c.quoted},
                      {"computed", c.computed},
                      {"ratio", c.ratio()},
                      {"agrees", c.agrees()}});
  j["quoted_figure_checks"] = checks;
  os << j.dump(2) << '\n';
}

using Handler = std::function<void(const RunConfig&, std::ostream&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"pattern", run_pattern}, {"combine", run_combine},
      {"reeh", run_reeh},       {"schmudgen", run_schmudgen},
      {"sector", run_sector},   {"plan", run_plan}};
  return table;
}

// Flags accepted per subcommand, in addition to --out and --format.
const std::map<std::string, std::vector<std::string>>& flag_table() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"pattern",
       {"n", "b", "s", "lambda", "x", "window", "samples", "center",
        "amplitude-scale", "kind", "extrema"}},
      {"combine",
       {"mode", "b", "s", "lambda", "x", "window", "samples", "coherent-model",
        "count-match"}},
      {"reeh",
       {"flux-quanta", "alpha", "charge", "flux", "probe", "confines",
        "superseparable"}},
      {"schmudgen",
       {"z", "z-angle", "s-steps", "t-steps", "radius", "spacing", "field"}},
      {"sector",
       {"task", "dim", "seed", "pairs", "coupling", "l1", "l2", "l", "n-max"}},
      {"plan", {"b", "s", "lambda", "mass", "particle", "velocity", "rescale"}},
  };
  return table;
}

const char* describe(const std::string& sub) {
  static const std::map<std::string, const char*> text{
      {"pattern", "sample an N-slit far-field pattern on the screen"},
      {"combine", "superpose the 2+1 arms incoherently or coherently"},
      {"reeh", "flux phases and Weyl-pair checks for an AB configuration"},
      {"schmudgen", "grid Weyl defect of the U/V pair on a test field"},
      {"sector", "finite-dimensional sector algebra checks"},
      {"plan", "experiment geometry and matter-wave wavelengths"},
  };
  return text.at(sub);
}

OutputFormat default_format(const std::string& sub) {
  if (sub == "pattern" || sub == "combine" || sub == "schmudgen")
    return OutputFormat::csv;
  if (sub == "plan") return OutputFormat::text;
  return OutputFormat::json;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto it = handlers().find(config.subcommand);
  if (it == handlers().end()) {
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return kExitValidation;
  }
  std::ostringstream buffer;
  int status = kExitOk;
  try {
    it->second(config, buffer);
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    status = kExitContract;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  if (config.output_path.empty() || config.output_path == "-") {
    out << buffer.str();
    out.flush();
    return status;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << config.output_path << "' for writing\n";
    return kExitValidation;
  }
  file << buffer.str();
  file.close();
  if (!file) {
    err << "error: failed writing '" << config.output_path << "'\n";
    return kExitValidation;
  }
  return status;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"supersep: interference and CCR representation laboratory"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format;
  for (const auto& [name, flags] : flag_table()) {
    auto* sub = app.add_subcommand(name, describe(name));
    for (const auto& flag : flags)
      sub->add_option_function<std::string>(
          "--" + flag,
          [&cfg, flag](const std::string& v) { cfg.parameters[flag] = v; });
    sub->add_option("-o,--out", cfg.output_path, "output file (default stdout)");
    sub->add_option("--format", format, "csv, json or text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    sub->callback([&cfg, name = name] { cfg.subcommand = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  if (format.empty())
    cfg.output_format = default_format(cfg.subcommand);
  else
    cfg.output_format = format == "csv"    ? OutputFormat::csv
                        : format == "json" ? OutputFormat::json
                                           : OutputFormat::text;
  return run(cfg, out, err);
}

}  // namespace supersep::cli
