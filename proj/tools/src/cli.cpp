#include "specpair_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "csv.hpp"
#include "specpair/analytics.hpp"
#include "specpair/constructor.hpp"
#include "specpair/error.hpp"
#include "specpair/json.hpp"
#include "specpair/sampling.hpp"
#include "specpair/search.hpp"

namespace specpair::cli {

namespace {

struct Config {
  std::string n_text;
  std::string a_text;
  std::string j_text;
  std::size_t dimension = 0;
  std::string finite_path;
  std::string base_path;
  std::string pair_path;
  std::string kind = "orthogonal";
  std::optional<double> tol;
  double radius = 4.0;
  std::vector<double> radii;
  std::string csv_path;
  std::string out_path;
  std::string report_path;
  std::int64_t truncation = 32;
  std::size_t grid = 256;
  std::int64_t kmax = 6;
  std::string signal = "indicator";
  std::size_t k = 2;
  std::size_t limit = 1000;
  std::uint64_t seed = 0;
  std::size_t samples = 20000;
  std::int64_t budget_ms = 10000;
  bool no_dedupe = false;
  std::size_t threads = 0;
  std::string figure;
  std::int64_t window = 5;
};

Tolerances tolerances(const Config& c) {
  Tolerances t;
  if (c.tol) {
    t.unitarity = *c.tol;
    t.frame_floor = *c.tol;
    t.orthogonality = *c.tol;
  }
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return parse_json(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void emit(const Json& report, const Config& c, std::ostream& out) {
  if (c.out_path.empty()) {
    out << report.dump(2) << '\n';
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw Error(ErrorCode::invalid_argument, "cannot open " + c.out_path + " for writing");
  f << report.dump(2) << '\n';
}

std::int64_t parse_modulus(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::invalid_argument, "--N is required");
  std::int64_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::invalid_argument, "--N must be an integer, got '" + text + "'");
  }
  return n;
}

std::pair<FiniteSet, FiniteSet> finite_input(const Config& c) {
  if (!c.finite_path.empty()) {
    const Json v = read_json(c.finite_path);
    if (!v.contains("A") || !v.contains("J")) {
      throw Error(ErrorCode::parse_error, c.finite_path + ": expected fields \"A\" and \"J\"");
    }
    return {finite_set_from_json(v["A"]), finite_set_from_json(v["J"])};
  }
  if (c.a_text.empty() || c.j_text.empty()) {
    throw Error(ErrorCode::invalid_argument, "give --finite or all of --N, --A, --J");
  }
  const auto n = parse_modulus(c.n_text);
  const auto a = parse_point_list(c.a_text, c.dimension);
  const auto j = parse_point_list(c.j_text, c.dimension);
  const std::size_t d = a.empty() ? 1 : a.front().size();
  return {FiniteSet(n, d, a), FiniteSet(n, d, j)};
}

PairKind target_kind(const std::string& text) {
  const PairKind k = parse_pair_kind(text);
  if (k < PairKind::frame) throw Error(ErrorCode::invalid_argument, "--kind must be frame, riesz or orthogonal");
  return k;
}

ContinuousPair base_input(const Config& c) {
  if (c.base_path.empty()) throw Error(ErrorCode::invalid_argument, "--base is required");
  return continuous_pair_from_json(read_json(c.base_path));
}

/// Pair from --pair, or base + finite combined. The combined pair is used
/// even when some hypothesis fails, as long as it can be formed.
struct PairSource {
  std::optional<ContinuousPair> pair;
  std::optional<CombinedPairResult> combined;
};

PairSource pair_input(const Config& c) {
  PairSource src;
  if (!c.pair_path.empty()) {
    src.pair = continuous_pair_from_json(read_json(c.pair_path));
    return src;
  }
  const auto base = base_input(c);
  const auto [a, j] = finite_input(c);
  src.combined = combine(base, a, j, target_kind(c.kind), tolerances(c));
  src.pair = src.combined->pair;
  return src;
}

void check_radius(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw Error(ErrorCode::invalid_argument, "radius must be nonnegative");
}

// classify ------------------------------------------------------------------

int cmd_classify(const Config& c, std::ostream& out) {
  const auto [a, j] = finite_input(c);
  const auto report = make_classification_report(a, j, tolerances(c));
  Json doc = to_json(report);
  if (report.classification.kind >= PairKind::riesz_basis) {
    const auto [ta, tj] = transpose_pair(a, j, tolerances(c));
    doc["transpose_kind"] = std::string(to_string(classify_finite_pair(ta, tj, tolerances(c)).kind));
  }
  emit(doc, c, out);
  return success;
}

// construct -----------------------------------------------------------------

int cmd_construct(const Config& c, std::ostream& out, std::ostream& err) {
  const auto base = base_input(c);
  const auto [a, j] = finite_input(c);
  const auto result = combine(base, a, j, target_kind(c.kind), tolerances(c));
  emit(to_json(result), c, out);
  if (const auto* f = result.first_failure()) {
    err << f->name << " failed: " << f->detail << '\n';
    return hypothesis_failure;
  }
  return success;
}

// gram / bounds -------------------------------------------------------------

Json failure_json(const CombinedPairResult& r) {
  Json h = Json::array();
  for (const auto& x : r.hypotheses) h.push_back(to_json(x));
  return h;
}

int report_unformed(const PairSource& src, std::ostream& out, std::ostream& err, const Config& c) {
  Json doc{{"error", "combined pair cannot be formed"}, {"hypotheses", failure_json(*src.combined)}};
  emit(doc, c, out);
  const auto* f = src.combined->first_failure();
  err << (f ? f->name + " failed: " + f->detail : std::string("pair cannot be formed")) << '\n';
  return hypothesis_failure;
}

int hypothesis_exit(const PairSource& src, std::ostream& err) {
  if (!src.combined) return success;
  if (const auto* f = src.combined->first_failure()) {
    err << f->name << " failed: " << f->detail << '\n';
    return hypothesis_failure;
  }
  return success;
}

int cmd_gram(const Config& c, std::ostream& out, std::ostream& err) {
  check_radius(c.radius);
  const auto src = pair_input(c);
  if (!src.pair) return report_unformed(src, out, err, c);
  const auto gram = build_gram(src.pair->domain, src.pair->spectrum, c.radius);
  const auto eig = gram_eigenvalues(gram);
  const auto n = gram.entries.rows();
  double off = 0.0;
  double diag_dev = 0.0;
  const double measure = to_double(src.pair->domain.measure());
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index s = 0; s < n; ++s) {
      if (r == s) {
        diag_dev = std::max(diag_dev, std::abs(gram.entries(r, s) - measure));
      } else {
        off = std::max(off, std::abs(gram.entries(r, s)));
      }
    }
  }
  Json doc{{"radius", c.radius},
           {"count", n},
           {"measure", measure},
           {"max_off_diagonal", off},
           {"max_diagonal_deviation", diag_dev},
           {"min_eigenvalue", eig.empty() ? 0.0 : eig.front()},
           {"max_eigenvalue", eig.empty() ? 0.0 : eig.back()}};
  if (src.combined) doc["construction"] = to_json(*src.combined);
  emit(doc, c, out);
  if (!c.csv_path.empty()) {
    CsvWriter csv(c.csv_path);
    csv.header({"index", "eigenvalue"});
    for (std::size_t i = 0; i < eig.size(); ++i) {
      csv.field(static_cast<long long>(i)).field(eig[i]).end_row();
    }
  }
  return hypothesis_exit(src, err);
}

int cmd_bounds(const Config& c, std::ostream& out, std::ostream& err) {
  std::vector<double> radii = c.radii;
  if (radii.empty()) radii = {c.radius};
  for (double r : radii) check_radius(r);
  const auto src = pair_input(c);
  if (!src.pair) return report_unformed(src, out, err, c);
  const auto est = estimate_frame_bounds(src.pair->domain, src.pair->spectrum, radii);
  Json rows = Json::array();
  for (const auto& e : est) {
    rows.push_back(Json{{"radius", e.radius}, {"count", e.count}, {"lower", e.lower}, {"upper", e.upper}});
  }
  Json doc{{"estimates", std::move(rows)}};
  if (src.combined) {
    doc["predicted_lower"] = src.combined->predicted_lower;
    doc["predicted_upper"] = src.combined->predicted_upper;
  } else {
    doc["predicted_lower"] = src.pair->lower;
    doc["predicted_upper"] = src.pair->upper;
  }
  emit(doc, c, out);
  if (!c.csv_path.empty()) {
    CsvWriter csv(c.csv_path);
    csv.header({"radius", "count", "lower", "upper"});
    for (const auto& e : est) {
      csv.field(e.radius).field(static_cast<long long>(e.count)).field(e.lower).field(e.upper).end_row();
    }
  }
  return hypothesis_exit(src, err);
}

// dual / biorth -------------------------------------------------------------

Json complex_matrix_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index s = 0; s < m.cols(); ++s) row.push_back({m(r, s).real(), m(r, s).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_dual(const Config& c, std::ostream& out) {
  const auto base = base_input(c);
  const auto [a, j] = finite_input(c);
  const auto t = tolerances(c);
  const DualSystem system(base.domain, base.spectrum, a, j, t);
  const auto& dual = system.dual();
  Json doc{{"finite_dual", complex_matrix_json(dual.finite_dual)},
           {"piece_coefficients", complex_matrix_json(dual.piece_coefficients)},
           {"self_dual", is_self_dual(dual.piece_coefficients, t.unitarity)},
           {"hadamard", hadamard_report(a, j, t).hadamard},
           {"A", to_json(a)},
           {"J", to_json(j)}};
  emit(doc, c, out);
  if (!c.csv_path.empty()) {
    CsvWriter csv(c.csv_path);
    csv.header({"r", "s", "a_r", "j_s", "re", "im"});
    const auto& m = dual.piece_coefficients;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index s = 0; s < m.cols(); ++s) {
        csv.field(static_cast<long long>(r)).field(static_cast<long long>(s));
        std::ostringstream ar;
        std::ostringstream js;
        ar << format_vector(to_rational(a[static_cast<std::size_t>(r)]));
        js << format_vector(to_rational(j[static_cast<std::size_t>(s)]));
        csv.field(ar.str()).field(js.str()).field(m(r, s)).end_row();
      }
    }
  }
  return success;
}

int cmd_biorth(const Config& c, std::ostream& out, std::ostream& err) {
  check_radius(c.radius);
  const auto base = base_input(c);
  const auto [a, j] = finite_input(c);
  const double threshold = c.tol.value_or(1e-8);
  const bool rou = root_of_unity_condition(base.spectrum, a);
  const DualSystem system(base.domain, base.spectrum, a, j, tolerances(c));
  const double defect = verify_biorthogonality(system, c.radius);
  Json doc{{"radius", c.radius},
           {"count", system.truncate(c.radius).size()},
           {"measure", system.measure()},
           {"defect", defect},
           {"threshold", threshold},
           {"root_of_unity_condition", rou},
           {"passed", rou && defect < threshold}};
  emit(doc, c, out);
  if (!rou) {
    err << "root-of-unity condition failed\n";
    return hypothesis_failure;
  }
  if (!(defect < threshold)) {
    err << "biorthogonality defect " << defect << " exceeds " << threshold << '\n';
    return hypothesis_failure;
  }
  return success;
}

// sample-recon --------------------------------------------------------------

int cmd_sample_recon(const Config& c, std::ostream& out, std::ostream& err) {
  const auto [a, j] = finite_input(c);
  if (a.dimension() != 1) throw Error(ErrorCode::unsupported, "sample-recon works in dimension 1");
  if (c.grid == 0) throw Error(ErrorCode::invalid_argument, "--grid must be positive");
  if (c.kmax < 0) throw Error(ErrorCode::invalid_argument, "--kmax must be nonnegative");

  const auto alias = verify_alias_cancellation(a, j, -c.kmax, c.kmax, tolerances(c).orthogonality);
  const BoxDomain omega = sampling_domain(a);

  BandlimitedSignal signal = BandlimitedSignal::indicator(omega);
  if (c.signal == "linear") {
    std::vector<SpectralPiece> pieces;
    for (std::size_t b = 0; b < omega.boxes().size(); ++b) {
      pieces.push_back(SpectralPiece{b, {SpectralTerm{{1.0, 0.0}, 1, 0}}});
    }
    signal = BandlimitedSignal(omega, std::move(pieces));
  } else if (c.signal != "indicator") {
    throw Error(ErrorCode::invalid_argument, "--signal must be indicator or linear");
  }

  const auto pattern = SamplePattern::from_finite_set(j, c.truncation);
  const auto samples = sample_signal(signal, pattern);
  const auto per_box = std::max<std::size_t>(1, c.grid / omega.boxes().size());
  const auto xi = midpoint_grid(omega, per_box);
  const auto estimate = reconstruct_spectrum(samples, pattern, j, xi);
  std::vector<std::complex<double>> truth(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) truth[i] = signal.spectrum_at(xi[i]);
  const double error = relative_l2_error(estimate, truth);

  if (!c.out_path.empty()) {
    CsvWriter csv(c.out_path);
    csv.header({"xi", "re", "im", "error"});
    for (std::size_t i = 0; i < xi.size(); ++i) {
      csv.field(xi[i]).field(estimate[i]).field(std::abs(estimate[i] - truth[i])).end_row();
    }
  }

  Json terms = Json::array();
  for (const auto& t : alias.terms) {
    terms.push_back(Json{{"k", t.k}, {"symbol", {t.symbol.real(), t.symbol.imag()}},
                         {"in_difference_set", t.in_difference_set}});
  }
  Json doc{{"finite_kind", std::string(to_string(alias.finite_kind))},
           {"zero_coefficient", {alias.zero_coefficient.real(), alias.zero_coefficient.imag()}},
           {"zero_term_ok", alias.zero_term_ok},
           {"max_difference_symbol", alias.max_difference_symbol},
           {"difference_violations", alias.difference_violations},
           {"overlap_violations", alias.overlap_violations},
           {"passed", alias.passed()},
           {"terms", std::move(terms)},
           {"reconstruction",
            {{"signal", c.signal}, {"M", c.truncation}, {"grid", xi.size()}, {"samples", samples.size()},
             {"relative_error", error}}}};
  Config report = c;
  report.out_path = c.report_path;
  emit(doc, report, out);
  if (!alias.passed()) {
    err << "alias cancellation failed\n";
    return hypothesis_failure;
  }
  return success;
}

// search --------------------------------------------------------------------

int cmd_search(const Config& c, std::ostream& out, std::ostream& err) {
  SearchQuery q;
  q.modulus = parse_modulus(c.n_text);
  q.dimension = c.dimension == 0 ? 1 : c.dimension;
  q.cardinality = c.k;
  q.target = target_kind(c.kind);
  q.max_results = c.limit;
  q.time_budget = std::chrono::milliseconds(c.budget_ms);
  q.seed = c.seed;
  q.deduplicate = !c.no_dedupe;
  q.max_samples = c.samples;
  q.threads = c.threads;
  q.tolerances = tolerances(c);
  const auto result = enumerate_pairs(q);
  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::invalid_argument, "cannot open " + c.out_path + " for writing");
    sink = &file;
  }
  for (const auto& p : result.pairs) {
    Json line = to_json(p.classification);
    line["A"] = to_json(p.a);
    line["J"] = to_json(p.j);
    line["seed"] = result.seed;
    *sink << line.dump() << '\n';
  }
  err << Json{{"found", result.pairs.size()},
              {"examined", result.examined},
              {"exhaustive", result.exhaustive},
              {"partial", result.partial},
              {"seed", result.seed}}
             .dump()
      << '\n';
  return success;
}

// figure --------------------------------------------------------------------

void write_domain_csv(const std::filesystem::path& path, const BoxDomain& domain) {
  CsvWriter csv(path.string());
  std::vector<std::string> head{"box"};
  for (std::size_t k = 1; k <= domain.dimension(); ++k) {
    head.push_back("lo_" + std::to_string(k));
    head.push_back("hi_" + std::to_string(k));
  }
  csv.header(head);
  for (std::size_t b = 0; b < domain.boxes().size(); ++b) {
    csv.field(static_cast<long long>(b));
    for (std::size_t k = 0; k < domain.dimension(); ++k) {
      csv.field(to_double(domain.boxes()[b].lower[k])).field(to_double(domain.boxes()[b].upper[k]));
    }
    csv.end_row();
  }
}

void write_points_csv(const std::filesystem::path& path, const std::vector<SpectrumPoint>& points,
                      std::size_t dimension) {
  CsvWriter csv(path.string());
  std::vector<std::string> head;
  for (std::size_t k = 1; k <= dimension; ++k) head.push_back("x_" + std::to_string(k));
  head.push_back("shift");
  csv.header(head);
  for (const auto& p : points) {
    for (const auto& x : p.value) csv.field(to_double(x));
    csv.field(static_cast<long long>(p.shift_index)).end_row();
  }
}

ContinuousPair example_d1() {
  const auto base = ContinuousPair::orthogonal(BoxDomain::interval(0, 1), Spectrum::scaled_lattice(1));
  const auto r = combine_orthogonal(base, FiniteSet::line(4, {0, 2}), FiniteSet::line(4, {0, 1}));
  return *r.pair;
}

int cmd_figure(const Config& c, std::ostream& out) {
  namespace fs = std::filesystem;
  const fs::path dir = c.out_path.empty() ? fs::path(".") : fs::path(c.out_path);
  fs::create_directories(dir);
  if (c.window < 0) throw Error(ErrorCode::invalid_argument, "--window must be nonnegative");
  std::vector<std::string> written;
  const auto record = [&](const fs::path& p) { written.push_back(p.string()); };

  if (c.figure == "fig1") {
    // level-2 multi-tiling of the plane: two unit squares, spectrum Z² ∪ Z² + (1/4, 0)
    const auto base = ContinuousPair::orthogonal(BoxDomain::unit_cube(2), Spectrum::scaled_lattice(2));
    const FiniteSet a(4, 2, {{0, 0}, {2, 0}});
    const FiniteSet j(4, 2, {{0, 0}, {1, 0}});
    const auto r = combine_riesz(base, a, j);
    write_domain_csv(dir / "fig1_domain.csv", r.pair->domain);
    record(dir / "fig1_domain.csv");
    write_points_csv(dir / "fig1_spectrum.csv", enumerate_lattice_window(r.pair->spectrum, c.window), 2);
    record(dir / "fig1_spectrum.csv");
  } else if (c.figure == "fig2") {
    const auto pair = example_d1();
    write_domain_csv(dir / "fig2_domain.csv", pair.domain);
    record(dir / "fig2_domain.csv");
    write_points_csv(dir / "fig2_spectrum.csv", enumerate_lattice_window(pair.spectrum, c.window), 1);
    record(dir / "fig2_spectrum.csv");
  } else if (c.figure == "fig3") {
    const auto d1 = example_d1();
    const auto pair = cartesian_product(d1, d1);
    write_domain_csv(dir / "fig3_domain.csv", pair.domain);
    record(dir / "fig3_domain.csv");
    write_points_csv(dir / "fig3_spectrum.csv", enumerate_lattice_window(pair.spectrum, c.window), 2);
    record(dir / "fig3_spectrum.csv");
  } else if (c.figure == "fig4") {
    const auto pattern = SamplePattern::from_finite_set(FiniteSet::line(4, {0, 1}), c.window);
    CsvWriter csv((dir / "fig4_pattern.csv").string());
    csv.header({"t", "shift"});
    for (const auto& t : pattern.points()) {
      csv.field(to_double(t)).field(format_rational(fractional_part(t))).end_row();
    }
    record(dir / "fig4_pattern.csv");
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown figure '" + c.figure + "' (fig1, fig2, fig3, fig4)");
  }
  out << Json{{"figure", c.figure}, {"files", written}}.dump(2) << '\n';
  return success;
}

// option wiring -------------------------------------------------------------

void finite_options(CLI::App* app, Config& c) {
  app->add_option("--N", c.n_text, "modulus N");
  app->add_option("--A", c.a_text, "points of A: 0,2 or 0,0;2,0");
  app->add_option("--J", c.j_text, "points of J");
  app->add_option("--d", c.dimension, "dimension when a single vector is given");
  app->add_option("--finite", c.finite_path, "JSON file {\"A\": ..., \"J\": ...}");
}

void common_options(CLI::App* app, Config& c) {
  app->add_option("--tol", c.tol, "tolerance override in (0, 1e-3)")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            double v = 0.0;
            try {
              v = std::stod(s);
            } catch (const std::exception&) {
              return "not a number";
            }
            if (!(v > 0.0 && v < 1e-3)) return "must lie in (0, 1e-3)";
            return {};
          },
          "(0, 1e-3)"));
  app->add_option("--out", c.out_path, "output path");
}

}  // namespace

std::vector<std::vector<std::int64_t>> parse_point_list(const std::string& text, std::size_t dimension) {
  const auto parse_ints = [](const std::string& s) {
    std::vector<std::int64_t> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto b = item.find_first_not_of(" \t");
      const auto e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw Error(ErrorCode::invalid_argument, "empty entry in '" + s + "'");
      const std::string t = item.substr(b, e - b + 1);
      std::size_t used = 0;
      std::int64_t x = 0;
      try {
        x = std::stoll(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size() || used == 0) throw Error(ErrorCode::invalid_argument, "not an integer: '" + t + "'");
      v.push_back(x);
    }
    return v;
  };
  std::vector<std::vector<std::int64_t>> points;
  if (text.find(';') == std::string::npos && dimension <= 1) {
    for (auto x : parse_ints(text)) points.push_back({x});
    return points;
  }
  std::stringstream ss(text);
  std::string vec;
  while (std::getline(ss, vec, ';')) {
    if (vec.find_first_not_of(" \t") == std::string::npos) continue;
    points.push_back(parse_ints(vec));
  }
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "no points in '" + text + "'");
  const std::size_t d = dimension > 0 ? dimension : points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) {
      throw Error(ErrorCode::dimension_mismatch, "point list '" + text + "' mixes dimensions");
    }
  }
  return points;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral, frame and Riesz pairs built from finite pairs in Z_N^d", "specpair"};
  app.require_subcommand(1);
  Config c;

  auto* classify = app.add_subcommand("classify", "classify a finite pair (A, J) in Z_N^d");
  finite_options(classify, c);
  common_options(classify, c);

  auto* construct = app.add_subcommand("construct", "combine a continuous pair with a finite pair");
  finite_options(construct, c);
  common_options(construct, c);
  construct->add_option("--base", c.base_path, "base pair JSON")->required();
  construct->add_option("--kind", c.kind, "frame, riesz or orthogonal");

  auto* gram = app.add_subcommand("gram", "Gram matrix of a truncated exponential system");
  auto* bounds = app.add_subcommand("bounds", "truncated frame bound estimates");
  for (auto* sub : {gram, bounds}) {
    finite_options(sub, c);
    common_options(sub, c);
    sub->add_option("--pair", c.pair_path, "pair JSON");
    sub->add_option("--base", c.base_path, "base pair JSON, combined with the finite pair");
    sub->add_option("--kind", c.kind, "frame, riesz or orthogonal");
    sub->add_option("--radius", c.radius, "truncation radius (sup norm)");
    sub->add_option("--csv", c.csv_path, "CSV output path");
  }
  bounds->add_option("--radii", c.radii, "radii, increasing")->delimiter(',');

  auto* dual = app.add_subcommand("dual", "biorthogonal dual coefficients");
  auto* biorth = app.add_subcommand("biorth", "biorthogonality defect of the dual system");
  for (auto* sub : {dual, biorth}) {
    finite_options(sub, c);
    common_options(sub, c);
    sub->add_option("--base", c.base_path, "base pair JSON")->required();
  }
  dual->add_option("--csv", c.csv_path, "CSV output path");
  biorth->add_option("--radius", c.radius, "truncation radius (sup norm)");

  auto* recon = app.add_subcommand("sample-recon", "sample on Z + J/N and reconstruct the spectrum");
  finite_options(recon, c);
  common_options(recon, c);
  recon->add_option("--M", c.truncation, "truncation |n| <= M");
  recon->add_option("--grid", c.grid, "grid points over the domain");
  recon->add_option("--kmax", c.kmax, "alias terms checked for |k| <= kmax");
  recon->add_option("--signal", c.signal, "indicator or linear");
  recon->add_option("--report", c.report_path, "JSON report path (default stdout)");

  auto* search = app.add_subcommand("search", "enumerate finite Riesz or orthogonal pairs");
  common_options(search, c);
  search->add_option("--N", c.n_text, "modulus N")->required();
  search->add_option("--d", c.dimension, "dimension");
  search->add_option("--k", c.k, "cardinality")->required();
  search->add_option("--kind", c.kind, "riesz or orthogonal");
  search->add_option("--limit", c.limit, "maximum number of results");
  search->add_option("--seed", c.seed, "seed for random sampling");
  search->add_option("--samples", c.samples, "random draws when N^d > 16");
  search->add_option("--budget-ms", c.budget_ms, "time budget in milliseconds");
  search->add_option("--threads", c.threads, "worker threads (0: all)");
  search->add_flag("--no-dedupe", c.no_dedupe, "keep every translate");

  auto* figure = app.add_subcommand("figure", "write CSV data for fig1..fig4");
  figure->add_option("name", c.figure, "fig1, fig2, fig3 or fig4")->required();
  figure->add_option("--out", c.out_path, "output directory");
  figure->add_option("--window", c.window, "lattice index window |n| <= window");

  if (args.empty()) {
    err << app.help();
    return input_error;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return input_error;
  }

  try {
    if (*classify) return cmd_classify(c, out);
    if (*construct) return cmd_construct(c, out, err);
    if (*gram) return cmd_gram(c, out, err);
    if (*bounds) return cmd_bounds(c, out, err);
    if (*dual) return cmd_dual(c, out);
    if (*biorth) return cmd_biorth(c, out, err);
    if (*recon) return cmd_sample_recon(c, out, err);
    if (*search) return cmd_search(c, out, err);
    if (*figure) return cmd_figure(c, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return input_error;
  } catch (const nlohmann::json::exception& e) {
    err << "error (parse-error): " << e.what() << '\n';
    return input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  err << app.help();
  return input_error;
}

}  // namespace specpair::cli
