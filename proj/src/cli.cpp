#include "wfs/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "wfs/curve.hpp"
#include "wfs/papercheck.hpp"

namespace wfs::cli {

using json = nlohmann::ordered_json;

namespace {

struct Config {
  std::uint32_t p = 13;
  int precision = 8;
  int depth = 0;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::vector<std::uint32_t> primes;
  std::string from, to;
  std::string order = "zariski";
  bool sabotage_hilbert = false;
};

json config_json(const Config& c) {
  return {{"p", c.p}, {"precision", c.precision}, {"depth", c.depth}, {"seed", c.seed}};
}

HilbertFn hilbert_of(const Config& c) {
  return c.sabotage_hilbert ? &sabotaged_hilbert_symbol : static_cast<HilbertFn>(&hilbert_symbol);
}

json labels(const std::vector<NilpotentOrbit>& v) {
  json out = json::array();
  for (const auto& o : v) out.push_back(o.label());
  return out;
}

json run_wavefront(const FieldConfig& f, const Config& c, json& caveats) {
  const auto germs = germ_support(f, hilbert_of(c));
  const WavefrontResult w = wavefront(f, germs, c.depth);
  json germ_rows = json::array();
  for (const auto& g : germs) {
    germ_rows.push_back({{"orbit", scale_by_depth(f, g.orbit, c.depth).label()}, {"status", to_string(g.status)}});
  }
  for (const auto& s : w.caveats) caveats.push_back(s);
  return {{"wf_zar", labels(w.wf_zar)}, {"wf_rat_contains", labels(w.wf_rat_contains)}, {"germ_support", germ_rows}};
}

json run_closure(const FieldConfig& f, const Config& c) {
  const NilpotentOrbit from = parse_orbit(c.from), to = parse_orbit(c.to);
  return {{"from", from.label()},
          {"to", to.label()},
          {"rational", to_string(strictly_below_rational(f, from, to, hilbert_of(c)))},
          {"zariski", strictly_below_zariski(from, to)}};
}

json run_hasse(const FieldConfig& f, const Config& c) {
  const ClosureOrder order = c.order == "rational" ? ClosureOrder::Rational : ClosureOrder::Zariski;
  json edges = json::array();
  for (const HasseEdge& e : hasse_diagram(f, order, hilbert_of(c))) {
    edges.push_back({{"from", e.from.label()}, {"to", e.to.label()}, {"value", to_string(e.value)}});
  }
  return {{"order", c.order}, {"edge_count", edges.size()}, {"edges", edges}};
}

json run_curve(const FieldConfig& f) {
  const CurveReport r = curve_report(f.p, f.epsilon % f.p);
  json first = nullptr;
  if (r.first_point) first = json::array({r.first_point->first, r.first_point->second});
  return {{"p", r.p},
          {"eps_bar", r.eps_bar},
          {"affine_count", r.affine_count},
          {"boundary_rational", r.boundary_rational},
          {"hasse_ok", r.hasse_ok},
          {"predicted_dim", r.predicted_dim.to_string()},
          {"first_point", first}};
}

json run_orbits(const FieldConfig& f) {
  json rows = json::array();
  for (const NilpotentOrbit& o : all_orbits()) {
    json row = {{"label", o.label()}, {"partition", to_string(o.kind)}};
    if (o.kind == Partition::Minimal || o.kind == Partition::Regular) row["class"] = to_string(o.cls);
    if (o.kind == Partition::Subregular) {
      row["disc"] = to_string(o.form.disc);
      row["hasse"] = o.form.hasse;
    }
    row["form"] = orbit_form(f, o).to_string();
    row["representative"] = orbit_representative(f, o).to_string();
    rows.push_back(row);
  }
  return {{"count", rows.size()}, {"orbits", rows}};
}

json run_verify(const Config& c, json& caveats, bool& all_passed) {
  const std::vector<std::uint32_t> primes = c.primes.empty() ? std::vector<std::uint32_t>{c.p} : c.primes;
  CheckOptions opts;
  opts.seed = c.seed;
  opts.precision = c.precision;
  opts.hilbert = hilbert_of(c);
  json checks = json::array();
  all_passed = true;
  for (const CheckReport& r : run_all(primes, opts)) {
    all_passed = all_passed && r.passed;
    checks.push_back(
        {{"check_id", r.check_id}, {"p", r.p}, {"passed", r.passed}, {"witness", r.witness}, {"notes", r.notes}});
    for (const auto& n : r.notes) caveats.push_back(r.check_id + "@" + std::to_string(r.p) + ": " + n);
  }
  return {{"primes", primes}, {"all_passed", all_passed}, {"checks", checks}};
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render(std::ostringstream& out, const json& v, const std::string& indent) {
  for (const auto& [key, value] : v.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render(out, value, indent + "  ");
    } else if (value.is_array() && std::any_of(value.begin(), value.end(), [](const json& x) { return x.is_object(); })) {
      out << indent << key << ":\n";
      for (const json& item : value) {
        std::string line;
        for (const auto& [k, x] : item.items()) {
          if (x.is_array()) {
            if (x.empty()) continue;
            line += "\n" + indent + "      " + k + ":";
            for (const json& s : x) line += "\n" + indent + "        " + scalar(s);
          } else {
            line += (line.empty() ? "" : " ") + k + "=" + scalar(x);
          }
        }
        out << indent << "  - " << line << "\n";
      }
    } else if (value.is_array()) {
      std::string joined;
      for (const json& x : value) joined += (joined.empty() ? "" : ", ") + scalar(x);
      out << indent << key << ": " << (value.empty() ? "(none)" : joined) << "\n";
    } else {
      out << indent << key << ": " << scalar(value) << "\n";
    }
  }
}

std::string emit(const json& doc, const std::string& format) {
  return format == "json" ? doc.dump(2) + "\n" : render_text(doc);
}

std::string error_output(const std::string& command, const std::string& type, const std::string& message,
                         const std::string& format) {
  if (format == "json") {
    return json{{"command", command}, {"error", {{"type", type}, {"message", message}}}}.dump() + "\n";
  }
  return "error: " + message + "\n";
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream out;
  if (doc.contains("error")) return "error: " + doc["error"]["message"].get<std::string>() + "\n";
  out << "command: " << scalar(doc["command"]) << "\n";
  std::string cfg;
  for (const auto& [k, v] : doc["config"].items()) cfg += (cfg.empty() ? "" : " ") + k + "=" + scalar(v);
  out << "config: " << cfg << "\n";
  render(out, doc["result"], "");
  if (!doc["caveats"].empty()) {
    out << "caveats:\n";
    for (const json& c : doc["caveats"]) out << "  - " << scalar(c) << "\n";
  }
  return out.str();
}

DispatchResult dispatch(const std::vector<std::string>& args) {
  Config c;
  CLI::App app{"Wave-front sets of a depth-1/2 regular semisimple element of sp4 over Q_p", "wfset"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--p", c.p, "prime, 1 mod 4 and at least 13")->capture_default_str();
  app.add_option("--precision", c.precision, "relative p-adic precision")
      ->check(CLI::Range(4, 64))
      ->capture_default_str();
  app.add_option("--depth", c.depth, "depth shift applied to reported orbits")->capture_default_str();
  app.add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", c.seed, "seed for randomized checks")->capture_default_str();
  app.add_flag("--sabotage-hilbert", c.sabotage_hilbert, "use a deliberately wrong Hilbert symbol (negative control)");

  app.add_subcommand("wavefront", "wave-front sets under both closure orders");
  auto* closure = app.add_subcommand("closure", "strict closure relation between two orbits");
  closure->add_option("--from", c.from, "orbit spec")->required();
  closure->add_option("--to", c.to, "orbit spec")->required();
  auto* hasse = app.add_subcommand("hasse", "closure diagram edges");
  hasse->add_option("--order", c.order, "closure order")
      ->check(CLI::IsMember({"rational", "zariski"}))
      ->capture_default_str();
  app.add_subcommand("curve", "point counts of the residue curve");
  auto* verify = app.add_subcommand("verify", "replay every checked identity");
  verify->add_option("--primes", c.primes, "primes to verify (default: --p)")->delimiter(',');
  app.add_subcommand("orbits", "the 16 nilpotent orbits");

  const bool wants_json = std::find(args.begin(), args.end(), "json") != args.end();
  std::string command = "?";
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    command = app.get_subcommands().front()->get_name();
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    for (const std::string& a : args) {
      if (app.got_subcommand(a)) command = a;
    }
    return {2, error_output(command, "BadFlags", e.what(), wants_json ? "json" : "text")};
  }

  json caveats = json::array();
  json result;
  int code = 0;
  try {
    const FieldConfig f = FieldConfig::make(c.p, c.precision);
    for (std::uint32_t q : c.primes) FieldConfig::make(q, c.precision);
    if (command == "wavefront") result = run_wavefront(f, c, caveats);
    if (command == "closure") result = run_closure(f, c);
    if (command == "hasse") result = run_hasse(f, c);
    if (command == "curve") result = run_curve(f);
    if (command == "orbits") result = run_orbits(f);
    if (command == "verify") {
      bool all_passed = false;
      result = run_verify(c, caveats, all_passed);
      code = all_passed ? 0 : 1;
    }
  } catch (const BadConfig& e) {
    return {2, error_output(command, "BadConfig", e.what(), c.format)};
  } catch (const Error& e) {
    return {1, error_output(command, "Error", e.what(), c.format)};
  }

  const json doc = {{"command", command}, {"config", config_json(c)}, {"result", result}, {"caveats", caveats}};
  return {code, emit(doc, c.format)};
}

}  // namespace wfs::cli
