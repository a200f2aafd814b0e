#include "lamlab/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lamlab/alliance.hpp"
#include "lamlab/errors.hpp"
#include "lamlab/io.hpp"
#include "lamlab/lamination.hpp"
#include "lamlab/portrait.hpp"
#include "lamlab/pullback.hpp"
#include "lamlab/quad_gap.hpp"
#include "lamlab/render.hpp"

namespace lamlab {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PortraitFlags {
  std::string t;
  std::string s;
  std::string portrait;

  void attach(CLI::App* cmd) {
    cmd->add_option("--t", t, "parameter of the first critical chord {t, t+1/3}");
    cmd->add_option("--s", s, "parameter of the second critical chord");
    cmd->add_option("--portrait", portrait, "explicit chords p/q-r/s,p/q-r/s");
  }

  CriticalPortrait resolve() const {
    if (!portrait.empty()) {
      if (!t.empty() || !s.empty()) throw UsageError("use either --t/--s or --portrait, not both");
      return CriticalPortrait::parse(portrait);
    }
    if (t.empty() || s.empty()) throw UsageError("a portrait needs --t and --s, or --portrait");
    return CriticalPortrait::from_params(Angle::parse(t), Angle::parse(s));
  }
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class T>
std::vector<std::string> strs(const std::vector<T>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

FiniteLamination load_lam(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return read_lam(in);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw Error("cannot write " + path);
}

Json opt_index(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json verdict_json(const CriticalPortrait& k, const WeakStrongVerdict& v) {
  Json j;
  j["portrait"] = k.str();
  j["verdict"] = to_string(v.kind);
  j["weak_side"] = v.weak_side ? Json(to_string(*v.weak_side)) : Json(nullptr);
  j["witness_m"] = opt_index(v.witness_first);
  j["witness_n"] = opt_index(v.witness_second);
  return j;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of cubic critical portraits and invariant laminations", "lamlab"};
  app.require_subcommand(1);
  bool json = false;

  auto* orbit_cmd = app.add_subcommand("orbit", "exact orbit of an angle under tripling");
  std::string angle_text;
  orbit_cmd->add_option("--angle", angle_text, "angle p/q")->required();

  auto* classify_cmd = app.add_subcommand("classify", "weak/strong classification of a portrait");
  PortraitFlags classify_flags;
  classify_flags.attach(classify_cmd);

  auto* gap_cmd = app.add_subcommand("gap", "approximate invariant quadratic gap of a critical chord");
  std::string chord_text;
  unsigned period = 1;
  unsigned preperiod = 0;
  gap_cmd->add_option("--chord", chord_text, "critical chord p/q-r/s")->required();
  gap_cmd->add_option("--period", period, "period bound")->required();
  gap_cmd->add_option("--preperiod", preperiod, "preperiod bound")->required();

  auto* pullback_cmd = app.add_subcommand("pullback", "depth-bounded pullback lamination of a portrait");
  PortraitFlags pullback_flags;
  pullback_flags.attach(pullback_cmd);
  unsigned depth = 0;
  std::string out_path;
  pullback_cmd->add_option("--depth", depth, "number of pullback generations")->required();
  pullback_cmd->add_option("--out", out_path, ".lam output path (stdout if omitted)");

  auto* render_cmd = app.add_subcommand("render", "SVG picture of a lamination");
  std::string lam_path;
  std::string svg_path;
  bool hyperbolic = false;
  render_cmd->add_option("lam", lam_path, ".lam input")->required();
  render_cmd->add_option("--svg", svg_path, "SVG output path")->required();
  render_cmd->add_flag("--hyperbolic", hyperbolic, "draw leaves as hyperbolic geodesics");

  auto* compat_cmd = app.add_subcommand("compat", "is a portrait compatible with a lamination");
  PortraitFlags compat_flags;
  compat_flags.attach(compat_cmd);
  compat_cmd->add_option("lam", lam_path, ".lam input")->required();

  auto* intervals_cmd = app.add_subcommand("intervals", "parameters of critical chords crossing no leaf");
  intervals_cmd->add_option("lam", lam_path, ".lam input")->required();

  auto* friends_cmd = app.add_subcommand("friends", "pullback obstruction probe for friendship");
  std::string k1_text;
  std::string k2_text;
  friends_cmd->add_option("--k1", k1_text, "first portrait p/q-r/s,p/q-r/s")->required();
  friends_cmd->add_option("--k2", k2_text, "second portrait p/q-r/s,p/q-r/s")->required();
  friends_cmd->add_option("--depth", depth, "pullback depth")->required();

  auto* prime_cmd = app.add_subcommand("prime", "search for a weak-friend certificate");
  PortraitFlags prime_flags;
  prime_flags.attach(prime_cmd);
  prime_cmd->add_option("--depth", depth, "pullback depth")->required();

  auto* survey_cmd = app.add_subcommand("survey", "classify every portrait of a (t, s) grid");
  unsigned grid = 0;
  std::string raster_path;
  survey_cmd->add_option("--grid", grid, "grid size Q")->required();
  survey_cmd->add_option("--out", out_path, "CSV output path")->required();
  survey_cmd->add_option("--raster", raster_path, "optional SVG raster path");

  for (auto* cmd : app.get_subcommands({})) cmd->add_flag("--json", json, "line-delimited JSON output");

  if (args.size() > 1 && !args[1].empty() && args[1].front() != '-' &&
      app.get_subcommand_no_throw(args[1]) == nullptr) {
    err << "lamlab: unknown command '" << args[1] << "'\n" << app.help();
    return 1;
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lamlab: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (orbit_cmd->parsed()) {
      const Angle a = Angle::parse(angle_text);
      const OrbitSummary o = orbit(a);
      if (json) {
        Json j;
        j["angle"] = a.str();
        j["preperiod"] = o.preperiod;
        j["period"] = o.period;
        j["points"] = strs(o.points);
        out << j.dump() << "\n";
      } else {
        out << "preperiod=" << o.preperiod << " period=" << o.period << " points=" << join(strs(o.points), ",")
            << "\n";
      }
    } else if (classify_cmd->parsed()) {
      const CriticalPortrait k = classify_flags.resolve();
      const WeakStrongVerdict v = classify(k);
      if (json) {
        out << verdict_json(k, v).dump() << "\n";
      } else {
        out << to_string(v.kind) << "\n";
      }
    } else if (gap_cmd->parsed()) {
      const Chord c = Chord::parse(chord_text);
      const PiApproximation pi = pi_points(c, period, preperiod);
      const Gap g = gap_from_pi(pi);
      const auto majors = invariant_gap_majors(g);
      std::vector<std::string> major_edges;
      for (const auto& m : majors) major_edges.push_back(m.edge.str());
      std::string rotational = "n/a";
      try {
        rotational = is_rotational(g) ? "true" : "false";
      } catch (const InvalidArgument&) {
      }
      if (json) {
        Json j;
        j["chord"] = c.str();
        j["period_bound"] = period;
        j["preperiod_bound"] = preperiod;
        j["vertices"] = strs(g.vertices());
        j["edges"] = strs(g.edges());
        j["majors"] = major_edges;
        j["rotational"] = rotational;
        out << j.dump() << "\n";
      } else {
        out << "chord " << c << "\n";
        out << "bounds period=" << period << " preperiod=" << preperiod << "\n";
        out << "vertices " << join(strs(g.vertices()), " ") << "\n";
        out << "edges " << join(strs(g.edges()), " ") << "\n";
        out << "majors " << join(major_edges, " ") << "\n";
        out << "rotational " << rotational << "\n";
      }
    } else if (pullback_cmd->parsed()) {
      const CriticalPortrait k = pullback_flags.resolve();
      const FiniteLamination lam = build_pullback(k, depth);
      if (out_path.empty()) {
        write_lam(lam, out);
      } else {
        save_text(out_path, lam_to_string(lam));
        if (json) {
          Json j;
          j["portrait"] = k.str();
          j["depth"] = depth;
          j["leaves"] = lam.size();
          j["out"] = out_path;
          out << j.dump() << "\n";
        } else {
          out << "leaves " << lam.size() << "\n";
        }
      }
    } else if (render_cmd->parsed()) {
      const FiniteLamination lam = load_lam(lam_path);
      RenderOptions opts;
      if (hyperbolic) opts.geometry = RenderOptions::Geometry::Hyperbolic;
      const std::string svg = to_svg(lam, opts);
      save_text(svg_path, svg);
      if (json) {
        Json j;
        j["leaves"] = lam.size();
        j["bytes"] = svg.size();
        j["svg"] = svg_path;
        out << j.dump() << "\n";
      } else {
        out << "wrote " << svg.size() << " bytes\n";
      }
    } else if (compat_cmd->parsed()) {
      const CriticalPortrait k = compat_flags.resolve();
      const FiniteLamination lam = load_lam(lam_path);
      const auto hit = first_crossing(k, lam);
      if (json) {
        Json j;
        j["portrait"] = k.str();
        j["compatible"] = !hit;
        j["chord"] = hit ? Json(hit->first.str()) : Json(nullptr);
        j["leaf"] = hit ? Json(hit->second.str()) : Json(nullptr);
        out << j.dump() << "\n";
      } else if (hit) {
        out << "incompatible " << hit->first << " crosses " << hit->second << "\n";
      } else {
        out << "compatible\n";
      }
    } else if (intervals_cmd->parsed()) {
      const ParameterSet set = compatible_intervals(load_lam(lam_path));
      if (json) {
        Json j;
        j["full_circle"] = set.full_circle;
        Json arcs = Json::array();
        for (const Arc& a : set.arcs) arcs.push_back({a.start.str(), a.end.str()});
        j["intervals"] = arcs;
        out << j.dump() << "\n";
      } else if (set.full_circle) {
        out << "full\n";
      } else {
        for (const Arc& a : set.arcs) out << a.str() << "\n";
      }
    } else if (friends_cmd->parsed()) {
      const CriticalPortrait k1 = CriticalPortrait::parse(k1_text);
      const CriticalPortrait k2 = CriticalPortrait::parse(k2_text);
      const FriendVerdict v = friends_probe(k1, k2, depth);
      if (json) {
        Json j;
        j["verdict"] = v.obstructed() ? "obstruction" : "no-obstruction";
        j["depth"] = v.depth;
        j["chord"] = v.witness ? Json(v.witness->first.str()) : Json(nullptr);
        j["leaf"] = v.witness ? Json(v.witness->second.str()) : Json(nullptr);
        out << j.dump() << "\n";
      } else if (v.obstructed()) {
        out << "obstruction depth=" << v.depth << " chord=" << v.witness->first << " leaf=" << v.witness->second
            << "\n";
      } else {
        out << "no-obstruction depth=" << v.depth << "\n";
      }
    } else if (prime_cmd->parsed()) {
      const CriticalPortrait k = prime_flags.resolve();
      const PrimeVerdict v = prime_probe(k, depth);
      const char* word = v.certified() ? "prime-certified" : "candidate-regular";
      if (json) {
        Json j;
        j["portrait"] = k.str();
        j["verdict"] = word;
        j["depth"] = v.depth;
        j["certificate"] = v.certificate ? Json(v.certificate->str()) : Json(nullptr);
        j["frontier"] = v.frontier_size;
        out << j.dump() << "\n";
      } else {
        out << word << " depth=" << v.depth;
        if (v.certificate) out << " certificate=" << v.certificate->str();
        out << "\n";
      }
    } else if (survey_cmd->parsed()) {
      std::ostringstream csv;
      const SurveySummary sum = weak_survey(grid, csv);
      save_text(out_path, csv.str());
      if (!raster_path.empty()) {
        std::istringstream back(csv.str());
        save_text(raster_path, survey_raster(read_survey_csv(back), grid));
      }
      const Rational frac = sum.weak_fraction();
      const std::string frac_text = numerator(frac).str() + "/" + denominator(frac).str();
      if (json) {
        Json j;
        j["grid"] = sum.grid_q;
        j["valid"] = sum.valid;
        j["weak"] = sum.weak;
        j["strong"] = sum.strong;
        j["weak_fraction"] = frac_text;
        out << j.dump() << "\n";
      } else {
        out << "valid=" << sum.valid << " weak=" << sum.weak << " strong=" << sum.strong
            << " weak_fraction=" << frac_text << "\n";
      }
    }
  } catch (const UsageError& e) {
    err << "lamlab: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "lamlab: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace lamlab
