#include "hexatlas/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hexatlas/cell_complex.hpp"
#include "hexatlas/serialize.hpp"

namespace hexatlas {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact transition checks behind `atlas check`: for small integer foliations
// on every face, coordinates in any two containing charts are related by
// pl_transition, and composing through a third chart changes nothing.
std::vector<std::string> cocycle_failures() {
  std::vector<std::string> failures;
  std::size_t checked = 0;
  for (const ArcTriple& face : compatible_triples()) {
    for (int w0 = 0; w0 <= 2; ++w0)
      for (int w1 = 0; w1 <= 2; ++w1)
        for (int w2 = 0; w2 <= 2; ++w2) {
          if (w0 + w1 + w2 == 0) continue;
          const FoliationClass f{{face[0], w0}, {face[1], w1}, {face[2], w2}};
          const auto charts = charts_containing(f);
          for (const ArcTriple& s : charts)
            for (const ArcTriple& t : charts) {
              const ChartCoords direct = to_chart(f, t);
              const ChartCoords moved = pl_transition(to_chart(f, s), t);
              if (moved.coords != direct.coords)
                failures.push_back("transition " + s.to_string() + " -> " + t.to_string() + " disagrees");
              for (const ArcTriple& u : charts) {
                const ChartCoords via = pl_transition(pl_transition(to_chart(f, s), u), t);
                if (via.coords != direct.coords)
                  failures.push_back("cocycle " + s.to_string() + " -> " + u.to_string() + " -> " +
                                     t.to_string() + " fails");
                ++checked;
              }
            }
        }
  }
  if (checked == 0) failures.push_back("no transitions were checked");
  return failures;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

void print_json(std::ostream& out, const Json& j, const Config& cfg) {
  out << (cfg.format == OutputFormat::Pretty ? j.dump(2) : j.dump()) << '\n';
}

std::string joined(const std::array<double, 6>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + format_double(v[i]);
  return s;
}

// Pulls "--tol-<name> <value>" out of argv; CLI11 cannot declare a flag family.
std::vector<std::string> extract_tolerances(const std::vector<std::string>& args, Config& cfg) {
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--tol-", 0) != 0) {
      rest.push_back(a);
      continue;
    }
    std::string name = a.substr(6);
    std::string value;
    if (const auto eq = name.find('='); eq != std::string::npos) {
      value = name.substr(eq + 1);
      name = name.substr(0, eq);
    } else {
      if (i + 1 >= args.size()) throw UsageError(a + " needs a value");
      value = args[++i];
    }
    if (std::find_if(std::begin(kToleranceNames), std::end(kToleranceNames),
                     [&](const char* n) { return name == n; }) == std::end(kToleranceNames))
      throw UsageError("unknown tolerance '" + name + "'");
    double v = 0;
    try {
      std::size_t used = 0;
      v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw UsageError("bad value for --tol-" + name + ": " + value);
    }
    if (!(v > 0)) throw UsageError("tolerances must be positive");
    cfg.tolerances[name] = v;
  }
  return rest;
}

}  // namespace

double Config::tolerance(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidTriple:
      return exit_code::kUsage;
    case ErrorKind::NotConverged:
      return exit_code::kNotConverged;
    case ErrorKind::InternalConsistency:
      return exit_code::kInternal;
    default:
      return exit_code::kDomain;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Right-angled hexagons, measured foliations and their compactification", "hexatlas"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "pretty";
  app.add_option("--format", format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--nmax", cfg.n_max, "largest n for boundary limits")->check(CLI::Range(2, 1000000));
  app.add_flag("--trace", cfg.trace, "per-step output for boundary limits");

  std::string triple_text, pants_triple, lengths_text, coords_text, to_text, weights_text, seq_text, file;

  auto* hexagon = app.add_subcommand("hexagon", "right hexagon trigonometry");
  hexagon->require_subcommand(1);
  auto* solve = hexagon->add_subcommand("solve", "solve a hexagon from the lengths of an arc triple");
  solve->add_option("--triple", triple_text)->required();
  solve->add_option("--lengths", lengths_text)->required();

  auto* foliation = app.add_subcommand("foliation", "measured foliations and charts");
  foliation->require_subcommand(1);
  auto* chart = foliation->add_subcommand("chart", "foliation with given chart coordinates");
  chart->add_option("--triple", triple_text)->required();
  chart->add_option("--coords", coords_text)->required();
  auto* transition = foliation->add_subcommand("transition", "change of chart coordinates");
  transition->add_option("--triple", triple_text)->required();
  transition->add_option("--coords", coords_text)->required();
  transition->add_option("--to", to_text)->required();
  auto* classify = foliation->add_subcommand("classify", "charts containing a foliation");
  classify->add_option("--weights", weights_text)->required();

  auto* atlas = app.add_subcommand("atlas", "the triangulated sphere of foliations");
  atlas->require_subcommand(1);
  auto* atlas_export = atlas->add_subcommand("export", "write the cell complex");
  atlas_export->add_option("--output", file, "file to write instead of stdout");
  auto* atlas_check = atlas->add_subcommand("check", "check the complex and the chart transitions");
  atlas_check->add_option("--input", file, "complex to check instead of the built-in one");

  auto* teich = app.add_subcommand("teich", "Teichmueller space and its boundary");
  teich->require_subcommand(1);
  auto* limit = teich->add_subcommand("limit", "boundary limit of a family of hexagons");
  limit->add_option("--seq", seq_text, "e.g. \"a=exp(n); b=n; c=1/n\"")->required();
  auto* embed = teich->add_subcommand("embed", "projective side vector of a hexagon or foliation");
  embed->add_option("--triple", triple_text);
  embed->add_option("--lengths", lengths_text);
  embed->add_option("--weights", weights_text);

  auto* pants = app.add_subcommand("pants", "pairs of pants");
  pants->require_subcommand(1);
  auto* pants_dbl = pants->add_subcommand("double", "cuff lengths of the doubled hexagon");
  pants_dbl->add_option("--triple", pants_triple)->default_val("a,b,c");
  pants_dbl->add_option("--lengths", lengths_text)->required();

  try {
    std::vector<std::string> rest = extract_tolerances(args, cfg);
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  cfg.format = format == "json" ? OutputFormat::Json
               : format == "csv" ? OutputFormat::Csv
                                 : OutputFormat::Pretty;
  const bool json = cfg.format == OutputFormat::Json;
  const bool csv = cfg.format == OutputFormat::Csv;

  std::string context;
  try {
    if (*solve) {
      SolveOptions opts;
      opts.split_tolerance = cfg.tolerance("split", opts.split_tolerance);
      const HexagonLengths h =
          solve_from_triple(ArcTriple::parse(triple_text), parse_length_triple(lengths_text), opts);
      if (json) print_json(out, to_json(h), cfg);
      else if (csv) out << hexagon_csv(h);
      else out << pretty(h);
    } else if (*chart) {
      const FoliationClass f =
          from_chart(make_chart(ArcTriple::parse(triple_text), parse_rational_triple(coords_text)));
      if (json) {
        print_json(out, to_json(f), cfg);
      } else if (csv) {
        out << "arc,weight\n";
        for (Arc x : f.support()) out << arc_name(x) << ',' << format_rational(f.weight(x)) << '\n';
      } else {
        out << pretty(f);
      }
    } else if (*transition) {
      const ChartCoords cc = pl_transition(
          make_chart(ArcTriple::parse(triple_text), parse_rational_triple(coords_text)),
          ArcTriple::parse(to_text));
      if (json) {
        print_json(out, to_json(cc), cfg);
      } else if (csv) {
        out << "arc,coord\n";
        for (std::size_t i = 0; i < 3; ++i)
          out << arc_name(cc.triple[i]) << ',' << format_rational(cc.coords[i]) << '\n';
      } else {
        out << pretty(cc);
      }
    } else if (*classify) {
      const auto charts = charts_containing(parse_weights(weights_text));
      if (json) {
        Json list = Json::array();
        for (const ArcTriple& t : charts) list.push_back(to_json(t));
        print_json(out, Json{{"charts", list}}, cfg);
      } else {
        if (csv) out << "x,y,z\n";
        for (const ArcTriple& t : charts) out << t.to_string() << '\n';
      }
    } else if (*atlas_export) {
      const PMFCellComplex complex = pmf_cell_complex();
      std::ostringstream text;
      if (csv) {
        for (Arc x : complex.vertices) text << "vertex," << arc_name(x) << '\n';
        for (const auto& e : complex.edges) text << "edge," << arc_name(e[0]) << ',' << arc_name(e[1]) << '\n';
        for (const auto& f : complex.faces)
          text << "face," << arc_name(f[0]) << ',' << arc_name(f[1]) << ',' << arc_name(f[2]) << '\n';
      } else {
        print_json(text, to_json(complex), cfg);
      }
      if (file.empty()) {
        out << text.str();
      } else {
        std::ofstream f(file);
        if (!f || !(f << text.str())) throw UsageError("cannot write " + file);
      }
    } else if (*atlas_check) {
      const PMFCellComplex complex =
          file.empty() ? pmf_cell_complex() : complex_from_json(parse_json_text(read_file(file)));
      const ComplexReport r = check_complex(complex);
      std::vector<std::string> failures = r.failures;
      for (const std::string& f : cocycle_failures()) failures.push_back(f);
      const bool pass = failures.empty();
      if (json) {
        print_json(out,
                   Json{{"pass", pass},
                        {"vertices", r.vertex_count},
                        {"edges", r.edge_count},
                        {"faces", r.face_count},
                        {"euler_characteristic", r.euler_characteristic},
                        {"edges_in_two_faces", r.edges_in_two_faces},
                        {"vertex_links_are_cycles", r.vertex_links_are_cycles},
                        {"connected", r.connected},
                        {"cells_are_disjoint_arcs", r.cells_are_disjoint_arcs},
                        {"face_boundaries_listed", r.face_boundaries_listed},
                        {"failures", failures}},
                   cfg);
      } else if (csv) {
        out << "pass,vertices,edges,faces,euler_characteristic,failures\n"
            << (pass ? "true" : "false") << ',' << r.vertex_count << ',' << r.edge_count << ','
            << r.face_count << ',' << r.euler_characteristic << ',' << failures.size() << '\n';
      } else {
        out << (pass ? "pass" : "FAIL") << ": (V,E,F) = (" << r.vertex_count << ',' << r.edge_count
            << ',' << r.face_count << "), chi = " << r.euler_characteristic << '\n';
        for (const std::string& f : failures) out << "  " << f << '\n';
      }
      return pass ? exit_code::kOk : exit_code::kCheckFailed;
    } else if (*limit) {
      const SequenceSpec spec = SequenceSpec::parse(seq_text);
      const Divergence d = diverges(spec);
      if (!d.diverges) {
        if (json) print_json(out, to_json(d), cfg);
        else if (csv) out << "diverges\nfalse\n";
        else out << "bounded: does not tend to infinity\n";
        return exit_code::kOk;
      }
      context = "witness " + d.witness->to_string();
      LimitOptions opts;
      opts.n_max = cfg.n_max;
      opts.tol = cfg.tolerance("limit", opts.tol);
      opts.keep_trace = cfg.trace;
      const BoundaryLimit lim = boundary_limit(spec, opts);
      if (json) {
        print_json(out, to_json(d, lim), cfg);
      } else if (csv) {
        if (cfg.trace) {
          out << trace_csv(lim.trace);
        } else {
          out << "witness,a,b,c,A,B,C,chart,collar_at_nmax\n"
              << '"' << d.witness->to_string() << "\"," << joined(lim.limit.v, ",") << ",\""
              << lim.chart.to_string() << "\"," << format_double(lim.collar_at_nmax) << '\n';
        }
      } else {
        out << "diverges: true\n"
            << "witness: " << d.witness->to_string() << '\n'
            << "limit (a,b,c,A,B,C): " << joined(lim.limit.v, " ") << '\n'
            << "chart: " << lim.chart.to_string() << '\n'
            << "collar_at_nmax: " << format_double(lim.collar_at_nmax) << '\n'
            << "error_estimate: " << format_double(lim.error_estimate) << '\n';
        if (cfg.trace) out << trace_csv(lim.trace);
      }
    } else if (*embed) {
      const bool from_weights = !weights_text.empty();
      if (from_weights == (!triple_text.empty() || !lengths_text.empty()))
        throw UsageError("give either --weights or both --triple and --lengths");
      ProjectivePoint6 p;
      if (from_weights) {
        p = projective_embed_f(parse_weights(weights_text));
      } else {
        if (triple_text.empty() || lengths_text.empty())
          throw UsageError("--triple and --lengths go together");
        p = projective_embed(teich_from_triple(ArcTriple::parse(triple_text), parse_length_triple(lengths_text)));
      }
      if (json) print_json(out, Json{{"embedding", to_json(p)}}, cfg);
      else if (csv) out << "a,b,c,A,B,C\n" << joined(p.v, ",") << '\n';
      else out << "(a,b,c,A,B,C): " << joined(p.v, " ") << '\n';
    } else if (*pants_dbl) {
      const auto cuffs =
          pants_double(teich_from_triple(ArcTriple::parse(pants_triple), parse_length_triple(lengths_text)));
      if (json) {
        print_json(out, Json{{"cuffs", cuffs}}, cfg);
      } else if (csv) {
        out << "a,b,c\n" << format_double(cuffs[0]) << ',' << format_double(cuffs[1]) << ',' << format_double(cuffs[2]) << '\n';
      } else {
        out << "cuffs: " << format_double(cuffs[0]) << ' ' << format_double(cuffs[1]) << ' '
            << format_double(cuffs[2]) << '\n';
      }
    }
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (!context.empty()) err << " (" << context << ")";
    err << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return exit_code::kInternal;
  }
  return exit_code::kOk;
}

}  // namespace hexatlas
