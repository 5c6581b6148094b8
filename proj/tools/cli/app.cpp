#include "app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

#include "commands.hpp"
#include "heatmap.hpp"
#include "input.hpp"
#include "spinelab/errors.hpp"

namespace spinelab::cli {

namespace {

struct Options {
  std::string point;
  bool unoriented = false;
  bool csv = false;
  bool svg = false;
  std::string output;
  GridSpec grid;
  std::string quantity = "count";
  std::optional<std::size_t> random;
  std::uint64_t seed = 1;
  int genus = 2;
};

void add_point(CLI::App* sub, Options& o) {
  sub->add_option("z", o.point, "complex torus parameter, e.g. 0.35+2i, i, hex, square")->required();
}

void add_orientation(CLI::App* sub, Options& o) {
  auto* grp = sub->add_option_group("orientation");
  grp->add_flag("--oriented", [&o](std::int64_t) { o.unoriented = false; }, "orientation-preserving isometries (default)");
  grp->add_flag("--unoriented", o.unoriented, "all isometries");
  grp->require_option(0, 1);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_output(const std::string& path, const std::string& body, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << body;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"spinelab: minimal spines on flat tori and extremal hyperbolic surfaces", "spinelab"};
  app.require_subcommand(1);
  Options o;

  auto* reduce = app.add_subcommand("reduce", "reduce to the fundamental domain");
  add_point(reduce, o);
  auto* classify = app.add_subcommand("classify", "classify the torus");
  add_point(classify, o);

  auto* spines = app.add_subcommand("spines", "all minimal spines on the torus");
  add_point(spines, o);
  add_orientation(spines, o);
  auto* fmt = spines->add_option_group("format");
  fmt->add_flag("--json", [&o](std::int64_t) { o.csv = false; }, "JSON output (default)");
  fmt->add_flag("--csv", o.csv, "CSV output");
  fmt->require_option(0, 1);

  auto* count = app.add_subcommand("count", "number of minimal spines");
  add_point(count, o);
  add_orientation(count, o);
  auto* systole = app.add_subcommand("systole", "length of the shortest spines");
  add_point(systole, o);
  auto* spectrum = app.add_subcommand("spectrum", "length spectrum of minimal spines");
  add_point(spectrum, o);
  add_orientation(spectrum, o);
  auto* disc = app.add_subcommand("disc-model", "Moebius map of the spine image to the disc");
  add_point(disc, o);

  auto* heatmap = app.add_subcommand("heatmap", "evaluate a quantity on a grid");
  heatmap->add_option("--re-min", o.grid.re_min)->capture_default_str();
  heatmap->add_option("--re-max", o.grid.re_max)->capture_default_str();
  heatmap->add_option("--im-min", o.grid.im_min)->capture_default_str();
  heatmap->add_option("--im-max", o.grid.im_max)->capture_default_str();
  heatmap->add_option("--cols", o.grid.cols)->capture_default_str();
  heatmap->add_option("--rows", o.grid.rows)->capture_default_str();
  heatmap->add_option("--quantity", o.quantity, "count | count-no | systole")->capture_default_str();
  auto* hfmt = heatmap->add_option_group("format");
  hfmt->add_flag("--svg", o.svg, "SVG chart (default)");
  hfmt->add_flag("--csv", o.csv, "CSV table");
  hfmt->require_option(0, 1);
  heatmap->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle-verify", "cross-check fibers against brute-force relaxation");
  oracle->add_option("z", o.point, "torus parameter");
  auto* random_opt = oracle->add_option("--random,--trials", o.random, "number of seeded random reduced tori");
  oracle->add_option("--seed", o.seed, "seed for --random")->capture_default_str();
  oracle->add_flag("--unoriented", o.unoriented, "identify spines under all isometries");
  (void)random_opt;

  auto* extremal = app.add_subcommand("extremal", "extremal hyperbolic surface of a genus");
  extremal->add_option("--genus,-g", o.genus, "genus >= 2")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "spinelab: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (reduce->parsed()) {
      emit(out, cmd_reduce(parse_point(o.point)));
    } else if (classify->parsed()) {
      emit(out, cmd_classify(parse_point(o.point)));
    } else if (spines->parsed()) {
      const UHPoint z = parse_point(o.point);
      if (o.csv) {
        out << cmd_spines_csv(z, !o.unoriented);
      } else {
        emit(out, cmd_spines(z, !o.unoriented));
      }
    } else if (count->parsed()) {
      emit(out, cmd_count(parse_point(o.point), !o.unoriented));
    } else if (systole->parsed()) {
      emit(out, cmd_systole(parse_point(o.point)));
    } else if (spectrum->parsed()) {
      emit(out, cmd_spectrum(parse_point(o.point), !o.unoriented));
    } else if (disc->parsed()) {
      emit(out, cmd_disc_model(parse_point(o.point)));
    } else if (heatmap->parsed()) {
      const Heatmap map = evaluate_heatmap(o.grid, parse_quantity(o.quantity));
      write_output(o.output, o.csv ? heatmap_csv(map) : heatmap_svg(map), out);
    } else if (oracle->parsed()) {
      std::vector<UHPoint> tori;
      if (!o.point.empty()) tori.push_back(parse_point(o.point));
      if (o.random) {
        const auto drawn = random_reduced_tori(*o.random, o.seed);
        tori.insert(tori.end(), drawn.begin(), drawn.end());
      }
      if (tori.empty()) throw UsageError("oracle-verify needs a torus or --random N");
      const OracleRun run = cmd_oracle_verify(tori, o.unoriented);
      emit(out, run.report);
      return run.all_matched ? kExitOk : kExitMismatch;
    } else if (extremal->parsed()) {
      if (o.genus < 2) throw UsageError("genus must be >= 2");
      emit(out, cmd_extremal(o.genus));
    }
  } catch (const UsageError& e) {
    err << "spinelab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "spinelab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace spinelab::cli
