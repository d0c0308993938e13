#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wallnorm/birkhoff.hpp"
#include "wallnorm/coorient.hpp"
#include "wallnorm/eikonal.hpp"
#include "wallnorm/error.hpp"
#include "wallnorm/homology.hpp"
#include "wallnorm/normball.hpp"
#include "wallnorm/oracle.hpp"
#include "wallnorm/surface_map.hpp"

namespace wallnorm::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  WallSystemMap map;
  HomologyBasis basis;
};

Loaded load(const std::string& file, const std::string& basis_file) {
  WallSystemMap map = load_wall_system(file);
  HomologyBasis basis = homology_basis(map);
  if (!basis_file.empty()) basis = set_user_basis(map, load_basis_walks(basis_file), basis, "user");
  return {std::move(map), std::move(basis)};
}

EnumerationLimits limits_from_env() {
  EnumerationLimits limits;
  if (const char* raw = std::getenv("WALLNORM_MAX_ENUM"); raw && *raw) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(raw, &used);
      if (used != std::string(raw).size() || v <= 0) throw std::invalid_argument(raw);
      limits.max_count = static_cast<std::uint64_t>(v);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("WALLNORM_MAX_ENUM must be a positive integer, got '") + raw + "'");
    }
  }
  return limits;
}

// Key-value lines for --format structured.
struct Fields {
  std::vector<std::pair<std::string, std::string>> items;

  template <class T>
  void put(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    items.emplace_back(key, s.str());
  }
};

void header(std::ostream& out, Fields& kv, const Loaded& l) {
  out << "# map: " << l.map.hash() << '\n';
  out << "# basis: " << l.basis.name;
  for (std::size_t i = 0; i < l.basis.cycles.size(); ++i) out << (i ? " | " : " ") << format_walk(l.basis.cycles[i]);
  out << '\n';
  kv.put("map", l.map.hash());
  kv.put("basis", l.basis.name);
  for (std::size_t i = 0; i < l.basis.cycles.size(); ++i)
    kv.put("basis.cycle." + std::to_string(i), format_walk(l.basis.cycles[i]));
}

Coords coords_arg(const std::vector<std::int64_t>& values, const HomologyBasis& basis) {
  if (static_cast<int>(values.size()) != basis.rank()) {
    throw UsageError("expected " + std::to_string(basis.rank()) + " coordinates, got " +
                     std::to_string(values.size()));
  }
  return values;
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

nlohmann::json classification_json(const ClassificationReport& r, const Loaded& l) {
  nlohmann::json j;
  j["map_hash"] = r.map_hash;
  j["basis"] = {{"name", r.basis_name}, {"cycles", nlohmann::json::array()}};
  for (const auto& w : l.basis.cycles) j["basis"]["cycles"].push_back(format_walk(w));
  j["parity"] = r.parity;
  j["invariants"] = {{"chi", r.invariants.euler_characteristic},
                     {"boundary", r.invariants.boundary_circles},
                     {"genus", r.invariants.genus}};
  j["extreme"] = r.ball.extreme;
  j["points"] = nlohmann::json::array();
  for (const auto& p : r.points) j["points"].push_back({{"point", p.point}, {"status", membership_name(p.status)}});
  j["counts"] = {{"interior", r.interior}, {"boundary", r.boundary}, {"outside", r.outside}};
  j["sections"] = r.interior;
  j["section_exists"] = r.section_exists();
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& stdout_stream, std::ostream& err) {
  CLI::App app{"Intersection norms of wall systems on surfaces", "wallnorm"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");
  std::string format = "text";
  app.add_option("--format", format, "report style: text, or structured key=value lines")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string file, basis_file, out_path, list_dir, method = "auto";
  std::vector<std::int64_t> coords;
  int radius = 0, box = 0, grid_m = 0, grid_n = 0;
  bool count = false, classes_flag = false, extreme = false, all_classes = false, area = false,
       certificate = false;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "wall system file")->required();
    sub->add_option("--basis", basis_file, "basis file (cycle <i>: <link+|-> ...)");
  };

  auto* info = app.add_subcommand("info", "print V, E, F, genus, curve count and [gamma]_2");
  add_file(info);

  auto* coors = app.add_subcommand("coorientations", "enumerate Eulerian coorientations");
  add_file(coors);
  auto* g_count = coors->add_flag("--count", count, "print the number (default)");
  auto* g_list = coors->add_option("--list", list_dir, "write one coorientation file per item into this directory");
  auto* g_classes = coors->add_flag("--classes", classes_flag, "print classes with multiplicities");
  g_count->excludes(g_list, g_classes);
  g_list->excludes(g_classes);

  auto* classes = app.add_subcommand("classes", "distinct Eulerian classes, one per line");
  add_file(classes);

  auto* ball = app.add_subcommand("ball", "the dual unit ball");
  add_file(ball);
  auto* b_ext = ball->add_flag("--extreme", extreme, "extreme points and facet count (default)");
  auto* b_all = ball->add_flag("--all-classes", all_classes, "every Eulerian class");
  auto* b_area = ball->add_flag("--area", area, "area (genus 1)");
  b_ext->excludes(b_all, b_area);
  b_all->excludes(b_area);

  auto* norm_cmd = app.add_subcommand("norm", "x(a) by the max formula");
  add_file(norm_cmd);
  norm_cmd->add_option("coords", coords, "a_1 ... a_2g")->required();

  auto* oracle = app.add_subcommand("oracle", "x(a) by shortest cycles in the abelian cover");
  add_file(oracle);
  oracle->add_option("coords", coords, "a_1 ... a_2g")->required();
  oracle->add_option("--radius", radius, "initial truncation radius")->check(CLI::PositiveNumber);
  oracle->add_flag("--certificate", certificate, "print the minimizing cycles");

  auto* verify = app.add_subcommand("verify", "compare the oracle with the max formula on a box");
  add_file(verify);
  verify->add_option("--box", box, "coordinate box radius")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--radius", radius, "initial truncation radius")->check(CLI::PositiveNumber);

  auto* realize_cmd = app.add_subcommand("realize", "an Eulerian coorientation of a given class");
  add_file(realize_cmd);
  realize_cmd->add_option("coords", coords, "n_1 ... n_2g")->required();
  realize_cmd->add_option("--out", out_path, "coorientation file to write");
  realize_cmd->add_option("--method", method, "eikonal, lookup or auto")
      ->check(CLI::IsMember({"eikonal", "lookup", "auto"}));

  auto* birkhoff = app.add_subcommand("birkhoff", "classify congruent lattice points of the ball");
  add_file(birkhoff);
  birkhoff->add_option("--json-report", out_path, "also write a JSON report here");

  auto* svg = app.add_subcommand("svg", "plot the ball of a genus-one system");
  add_file(svg);
  svg->add_option("--out", out_path, "SVG file to write (default: standard output)");

  auto* fixture = app.add_subcommand("fixture", "emit the torus grid G(m,n)");
  fixture->add_option("m", grid_m, "horizontal circles")->required()->check(CLI::PositiveNumber);
  fixture->add_option("n", grid_n, "vertical circles")->required()->check(CLI::PositiveNumber);
  fixture->add_option("--out", out_path, "wall file to write (default: standard output)");

  std::vector<std::string> argv_storage{"wallnorm"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    stdout_stream << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    stdout_stream << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "wallnorm: " << e.what() << '\n';
    return 2;
  }

  // Reports are buffered so a failing command prints nothing to stdout.
  std::ostringstream out;
  Fields kv;
  bool keyed = format == "structured";
  try {
    const auto limits = limits_from_env();
    if (*fixture) {
      keyed = false;
      const auto text = grid_wall_system(grid_m, grid_n).serialize();
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
      }
      stdout_stream << out.str();
      return 0;
    }
    const Loaded l = load(file, basis_file);
    if (!*svg) header(out, kv, l);
    if (*info) {
      out << "V=" << l.map.vertex_count() << " E=" << l.map.edge_count() << " F=" << l.map.face_count()
          << " genus=" << l.map.genus() << " curves=" << l.map.curves().size()
          << " parity=" << format_tuple(gamma_parity(l.basis)) << '\n';
      kv.put("V", l.map.vertex_count());
      kv.put("E", l.map.edge_count());
      kv.put("F", l.map.face_count());
      kv.put("genus", l.map.genus());
      kv.put("curves", l.map.curves().size());
      kv.put("parity", format_spaced(gamma_parity(l.basis)));
    } else if (*coors) {
      EnumerationOptions options;
      options.limits = limits;
      std::uint64_t written = 0;
      if (!list_dir.empty()) {
        std::filesystem::create_directories(list_dir);
        options.visit = [&](const Coorientation& c) {
          write_file((std::filesystem::path(list_dir) / ("coorientation_" + std::to_string(written++) + ".txt")).string(),
                     serialize_coorientation(c));
        };
      }
      const auto set = enumerate_eulerian(l.map, l.basis, options);
      set.require_complete();
      if (classes_flag) {
        std::size_t i = 0;
        for (const auto& [cls, n] : set.classes) {
          out << format_spaced(cls) << " count=" << n << '\n';
          kv.put("class." + std::to_string(i), format_spaced(cls));
          kv.put("class." + std::to_string(i++) + ".count", n);
        }
      }
      out << "count: " << set.count << '\n';
      kv.put("count", set.count);
    } else if (*classes) {
      std::size_t i = 0;
      for (const auto& [cls, n] : eulerian_classes(l.map, l.basis, limits)->classes) {
        out << format_spaced(cls) << '\n';
        kv.put("class." + std::to_string(i++), format_spaced(cls));
      }
    } else if (*ball) {
      const auto b = dual_ball(l.map, l.basis, limits);
      if (area) {
        if (!b.area) throw Error(ErrorKind::WrongGenus, "area is reported for genus 1 only");
        out << "area = " << format_rational(*b.area) << '\n';
        kv.put("area", format_rational(*b.area));
      } else if (all_classes) {
        for (std::size_t i = 0; i < b.points.size(); ++i) {
          out << format_spaced(b.points[i]) << '\n';
          kv.put("point." + std::to_string(i), format_spaced(b.points[i]));
        }
      } else {
        out << "# dim: " << b.dim << '\n';
        kv.put("dim", b.dim);
        const auto& pts = b.polygon.empty() ? b.extreme : b.polygon;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          out << format_spaced(pts[i]) << '\n';
          kv.put("extreme." + std::to_string(i), format_spaced(pts[i]));
        }
        const auto facets = facet_count(b);
        out << "facets: " << facets << '\n';
        kv.put("facets", facets);
      }
    } else if (*norm_cmd) {
      const auto v = norm(l.map, l.basis, coords_arg(coords, l.basis), limits);
      out << "# witness: " << format_spaced(v.witness) << '\n';
      out << "x = " << v.value << '\n';
      kv.put("witness", format_spaced(v.witness));
      kv.put("x", v.value);
    } else if (*oracle) {
      OracleOptions options;
      options.radius = radius;
      const auto r = min_multicurve(l.map, l.basis, coords_arg(coords, l.basis), options);
      out << "# radius: " << r.radius << '\n';
      kv.put("radius", r.radius);
      if (certificate) {
        for (std::size_t i = 0; i < r.certificate.cycles.size(); ++i) {
          const auto& c = r.certificate.cycles[i];
          out << "cycle " << i << ": length=" << c.length << " class=" << format_tuple(c.cls)
              << " walk=" << format_walk(c.walk) << '\n';
          const auto key = "cycle." + std::to_string(i);
          kv.put(key + ".length", c.length);
          kv.put(key + ".class", format_spaced(c.cls));
          kv.put(key + ".walk", format_walk(c.walk));
        }
      }
      out << "x = " << r.value << '\n';
      kv.put("x", r.value);
    } else if (*verify) {
      OracleOptions options;
      options.radius = radius;
      // Enumerate up front so the cap applies.
      eulerian_classes(l.map, l.basis, limits);
      const auto r = verify_min_max(l.map, l.basis, box, options);
      out << "box: " << r.box_radius << '\n';
      out << "radius: " << r.truncation_radius << '\n';
      out << "checked: " << r.checked << '\n';
      kv.put("box", r.box_radius);
      kv.put("radius", r.truncation_radius);
      kv.put("checked", r.checked);
      for (std::size_t i = 0; i < r.discrepancies.size(); ++i) {
        const auto& d = r.discrepancies[i];
        out << "discrepancy a=" << format_tuple(d.a) << " oracle=" << d.oracle << " formula=" << d.formula << '\n';
        const auto key = "discrepancy." + std::to_string(i);
        kv.put(key + ".a", format_spaced(d.a));
        kv.put(key + ".oracle", d.oracle);
        kv.put(key + ".formula", d.formula);
      }
      out << "discrepancies: " << r.discrepancies.size() << '\n';
      kv.put("discrepancies", r.discrepancies.size());
    } else if (*realize_cmd) {
      RealizeOptions options;
      options.limits = limits;
      options.method = method == "eikonal" ? RealizeMethod::Eikonal
                       : method == "lookup" ? RealizeMethod::Lookup
                                            : RealizeMethod::Auto;
      const auto r = realize(l.map, l.basis, coords_arg(coords, l.basis), options);
      const auto text = serialize_coorientation(r.coorientation);
      out << "# class: " << format_tuple(r.target) << '\n';
      out << "# method: " << realized_by_name(r.method) << '\n';
      kv.put("class", format_spaced(r.target));
      kv.put("method", realized_by_name(r.method));
      std::string signs;
      for (const auto s : r.coorientation.signs) signs += (signs.empty() ? "" : " ") + std::string(s > 0 ? "+" : "-");
      kv.put("signs", signs);
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
      }
    } else if (*birkhoff) {
      const auto r = classify(l.map, l.basis, limits);
      out << format_classification(r);
      for (std::size_t i = 0; i < r.points.size(); ++i) {
        const auto& p = r.points[i];
        const auto key = "point." + std::to_string(i);
        kv.put(key, format_spaced(p.point));
        kv.put(key + ".status", membership_name(p.status));
      }
      kv.put("chi", r.invariants.euler_characteristic);
      kv.put("boundary_circles", r.invariants.boundary_circles);
      kv.put("genus", r.invariants.genus);
      kv.put("interior", r.interior);
      kv.put("boundary", r.boundary);
      kv.put("outside", r.outside);
      kv.put("sections", r.interior);
      if (!out_path.empty()) write_file(out_path, classification_json(r, l).dump(2) + "\n");
    } else if (*svg) {
      keyed = false;
      if (l.basis.rank() != 2) throw Error(ErrorKind::WrongGenus, "plots need genus 1");
      const auto r = classify(l.map, l.basis, limits);
      const auto text = render_svg(r.ball, r.points);
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
      }
    }
  } catch (const UsageError& e) {
    err << "wallnorm: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "wallnorm: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "wallnorm: " << e.what() << '\n';
    return 2;
  }
  if (keyed) {
    for (const auto& [k, v] : kv.items) stdout_stream << k << '=' << v << '\n';
    return 0;
  }
  stdout_stream << out.str();
  return 0;
}

}  // namespace wallnorm::cli
