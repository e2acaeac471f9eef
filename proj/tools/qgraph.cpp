#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qgraph/bracketing.hpp"
#include "qgraph/discrete_spectra.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/graph_io.hpp"
#include "qgraph/homology.hpp"
#include "qgraph/metric_spectra.hpp"
#include "qgraph/periodic.hpp"
#include "qgraph/report.hpp"

using namespace qgraph;

namespace {

enum Exit { kOk = 0, kFailure = 1, kValidation = 2, kViolation = 3 };

int default_grid() {
  if (const char* env = std::getenv("QGRAPH_GRID")) {
    try {
      const int g = std::stoi(env);
      if (g >= 2) return g;
    } catch (const std::exception&) {
    }
    throw ValidationError("QGRAPH_GRID must be an integer >= 2, got '" + std::string(env) + "'");
  }
  return kDefaultGrid;
}

struct Options {
  std::string file;
  bool json = false;
  bool dirichlet = false;
  bool unoriented = false;
  bool relative = false;
  bool metric = false;
  int n_max = kDefaultNMax;
  std::optional<int> grid;
  std::string svg;
  bool no_bands = false;
};

struct Input {
  GraphSpec spec;
  std::optional<PeriodicGraph> periodic;
  WeightedGraph domain;
};

Input load(const Options& o) {
  GraphSpec spec = load_graph(o.file);
  if (has_nonzero_label(spec)) {
    PeriodicGraph pg = build_periodic(spec);
    WeightedGraph h = derive_fundamental_domain(pg).graph;
    return {std::move(spec), std::move(pg), std::move(h)};
  }
  WeightedGraph g = build_graph(spec);
  return {std::move(spec), std::nullopt, std::move(g)};
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string domain_note(const Input& in) {
  return in.periodic ? "fundamental domain derived from the labels (" + std::to_string(in.domain.vertex_count()) +
                           " vertices, " + std::to_string(in.domain.boundary().size()) + " boundary)\n"
                     : "";
}

Json header(const Options& o, const Input& in, const std::string& command) {
  return {{"command", command}, {"file", o.file}, {"periodic", in.periodic.has_value()}};
}

void write_svg(const Options& o, const GapReport& rep) {
  if (o.svg.empty()) return;
  std::ofstream out(o.svg);
  if (!out) throw ValidationError("cannot write '" + o.svg + "'");
  out << render_svg(rep);
}

Spectrum discrete_spectrum(const WeightedGraph& g, const Options& o) {
  if (!o.unoriented) return spectrum_of(g, o.dirichlet);
  if (!is_connected(g)) throw PreconditionError("spectrum requires a connected graph");
  return group_multiplicities(jacobi_eigenvalues(unoriented_laplacian_matrix(g)));
}

void cmd_spectrum(const Options& o) {
  const Input in = load(o);
  Json j = header(o, in, "spectrum");
  std::string text = domain_note(in);
  if (o.metric) {
    const MetricSpectrum s = equilateral_spectrum(in.domain, o.dirichlet, o.n_max);
    j["spectrum"] = to_json(s);
    text += render_text(s);
  } else {
    const Spectrum s = discrete_spectrum(in.domain, o);
    j["mode"] = o.unoriented ? "unoriented" : (o.dirichlet ? "dirichlet" : "kirchhoff");
    j["spectrum"] = to_json(s);
    text += render_text(s);
  }
  emit(o, j, text);
}

void cmd_betti(const Options& o) {
  const Input in = load(o);
  const BettiReport b = betti_numbers(in.domain, o.relative);
  Json j = header(o, in, "betti");
  j["betti"] = to_json(b);
  emit(o, j, domain_note(in) + render_text(b, o.unoriented));
}

void cmd_kd(const Options& o) {
  const Input in = load(o);
  const KDTable t = o.metric ? classify_kd_intervals_metric(in.domain, o.n_max) : classify_kd_intervals(in.domain);
  Json j = header(o, in, "kd");
  j["kd"] = to_json(t);
  emit(o, j, domain_note(in) + render_text(t));
}

GapOptions gap_options(const Options& o) {
  GapOptions g;
  g.metric = o.metric;
  g.n_max = o.n_max;
  g.grid = o.grid.value_or(default_grid());
  g.bands = !o.no_bands;
  return g;
}

void cmd_bands(const Options& o) {
  const Input in = load(o);
  if (!in.periodic) throw ValidationError("bands need at least one edge with a nonzero label");
  const GapReport rep = gap_report(*in.periodic, gap_options(o));
  Json j = header(o, in, "bands");
  j["grid"] = gap_options(o).grid;
  j["bands"] = to_json(rep.bands);
  std::string text = render_text(rep.bands);
  if (o.metric) {
    j["metric_bands"] = to_json(rep.metric_bands);
    text = render_text(rep.metric_bands);
  }
  j["band_gaps"] = to_json(rep)["band_gaps"];
  write_svg(o, rep);
  emit(o, j, text);
}

void cmd_gaps(const Options& o) {
  const Input in = load(o);
  const GapOptions g = gap_options(o);
  const GapReport rep = in.periodic ? gap_report(*in.periodic, g) : gap_report(in.domain, g);
  Json j = header(o, in, "gaps");
  j["gaps"] = to_json(rep);
  write_svg(o, rep);
  emit(o, j, domain_note(in) + render_text(rep));
}

void cmd_report(const Options& o) {
  const Input in = load(o);
  Json j = header(o, in, "report");
  std::string text = domain_note(in);
  j["graph"] = {{"vertices", in.domain.vertex_count()},
                {"edges", in.domain.edge_count()},
                {"boundary", in.domain.boundary().size()}};

  const Spectrum kir = spectrum_of(in.domain, false);
  j["kirchhoff"] = to_json(kir);
  text += "Kirchhoff spectrum\n" + render_text(kir);
  const BettiReport betti = betti_numbers(in.domain, false);
  j["betti"] = to_json(betti);
  text += "\n" + render_text(betti, false) + render_text(betti, true);
  if (!in.domain.boundary().empty()) {
    const Spectrum dir = spectrum_of(in.domain, true);
    j["dirichlet"] = to_json(dir);
    text += "\nDirichlet spectrum\n" + render_text(dir);
    const BettiReport rel = betti_numbers(in.domain, true);
    j["betti_relative"] = to_json(rel);
    text += "\n" + render_text(rel, false) + render_text(rel, true);
    const GapOptions g = gap_options(o);
    const GapReport rep = in.periodic ? gap_report(*in.periodic, g) : gap_report(in.domain, g);
    j["gaps"] = to_json(rep);
    text += "\n" + render_text(rep);
    write_svg(o, rep);
  } else {
    text += "\nno boundary: KD intervals and gaps skipped\n";
  }
  emit(o, j, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral bracketing for discrete and equilateral metric graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");

  auto file = [&](CLI::App* c) { c->add_option("file", o.file, "Graph description (YAML)")->required()->check(CLI::ExistingFile); };
  auto grid = [&](CLI::App* c) {
    c->add_option("--grid", o.grid, "Grid points per torus axis (default: QGRAPH_GRID or 64)")->check(CLI::Range(2, 4096));
  };
  auto metric = [&](CLI::App* c) {
    c->add_flag("--metric", o.metric, "Equilateral metric graph");
    c->add_option("--nmax", o.n_max, "Highest band index n of K_n")->check(CLI::Range(0, 64));
  };
  auto svg = [&](CLI::App* c) { c->add_option("--svg", o.svg, "Write an SVG plot"); };

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum with multiplicities");
  file(spectrum);
  auto* dflag = spectrum->add_flag("--dirichlet", o.dirichlet, "Dirichlet conditions on the boundary");
  spectrum->add_flag("--unoriented", o.unoriented, "Unoriented Laplacian 2rho - L")->excludes(dflag);
  metric(spectrum);

  auto* betti = app.add_subcommand("betti", "Betti numbers");
  file(betti);
  betti->add_flag("--relative", o.relative, "Relative to the boundary");
  betti->add_flag("--unoriented", o.unoriented, "Unoriented Betti numbers");

  auto* kd = app.add_subcommand("kd", "Kirchhoff-Dirichlet intervals");
  file(kd);
  metric(kd);

  auto* bands = app.add_subcommand("bands", "Floquet bands of a labelled graph");
  file(bands);
  grid(bands);
  metric(bands);
  svg(bands);

  auto* gaps = app.add_subcommand("gaps", "Certified spectral gaps");
  file(gaps);
  grid(gaps);
  metric(gaps);
  svg(gaps);
  gaps->add_flag("--no-bands", o.no_bands, "Skip the Floquet band computation");

  auto* report = app.add_subcommand("report", "Spectra, Betti numbers, KD intervals and gaps");
  file(report);
  grid(report);
  svg(report);

  app.fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*spectrum) cmd_spectrum(o);
    else if (*betti) cmd_betti(o);
    else if (*kd) cmd_kd(o);
    else if (*bands) cmd_bands(o);
    else if (*gaps) cmd_gaps(o);
    else if (*report) cmd_report(o);
  } catch (const ValidationError& e) {
    std::cerr << "qgraph: " << o.file << ": " << e.what() << "\n";
    return kValidation;
  } catch (const PreconditionError& e) {
    std::cerr << "qgraph: " << e.what() << "\n";
    return kValidation;
  } catch (const TheoremViolation& e) {
    std::cerr << "qgraph: theorem check failed: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "qgraph: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
