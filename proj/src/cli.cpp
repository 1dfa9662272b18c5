#include "ehrhart/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ehrhart/acceptance.hpp"
#include "ehrhart/io.hpp"

namespace ehrhart::cli {

namespace {

using io::json;

// Left-aligned text table with a header row.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      if (widths.size() < row.size()) widths.resize(row.size(), 0);
      for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
      }
      os << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join(const json& array) {
  std::string out;
  for (const json& x : array) {
    if (!out.empty()) out += " ";
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return "(" + out + ")";
}

struct Options {
  std::string format = "json";
  bool parallel = false;
  std::string simplex_path;
  std::string generators_path;
  std::string complex_path;
  std::string hypergraph_path;
  long dilate = 0;
  int ambient_degree = -1;
  std::string method = "atomic";
  int max_level = 0;
  long period = 0;
  long height = 0;
  std::vector<long> weights;
  long target = 0;
  long check_disjoint = 0;

  Parallelism parallelism() const {
    if (!parallel) return {};
    return {std::max(2u, std::thread::hardware_concurrency())};
  }
  bool table() const { return format == "table"; }
};

Simplex load_simplex(const Options& o) { return io::simplex_from_json(io::read_json_file(o.simplex_path)); }

void emit_vector_table(std::ostream& out, const std::string& label, const json& entries) {
  Table t({"i", label});
  for (std::size_t i = 0; i < entries.size(); ++i) t.add({std::to_string(i), entries[i].get<std::string>()});
  t.print(out);
}

FStarVector fstar_for(const Simplex& simplex, int degree, const Options& o) {
  if (o.method == "interpolate") return fstar_interpolate(simplex, degree);
  if (simplex.is_open()) return fstar_simplex(simplex, degree, o.parallelism());
  return fstar_complex(open_faces(simplex), degree, o.parallelism());
}

int cmd_count(const Options& o, std::ostream& out) {
  const Integer count = count_points(load_simplex(o), o.dilate);
  if (o.table()) {
    Table t({"dilate", "count"});
    t.add({std::to_string(o.dilate), to_string(count)});
    t.print(out);
  } else {
    out << io::dump({{"dilate", std::to_string(o.dilate)}, {"count", io::to_json(count)}});
  }
  return 0;
}

int cmd_fstar(const Options& o, std::ostream& out) {
  const Simplex simplex = load_simplex(o);
  const int degree = o.ambient_degree < 0 ? simplex.dimension() : o.ambient_degree;
  const FStarVector f = fstar_for(simplex, degree, o);
  json j = io::to_json(f);
  j["method"] = o.method;
  if (o.table()) emit_vector_table(out, "f*_i", j["fstar"]);
  else out << io::dump(j);
  return 0;
}

int cmd_hstar(const Options& o, std::ostream& out) {
  const Simplex simplex = load_simplex(o);
  const int degree = o.ambient_degree < 0 ? simplex.dimension() : o.ambient_degree;
  HStarVector h = HStarVector::zero(0);
  if (!simplex.is_open() && degree == simplex.dimension() && o.method == "atomic") {
    h = hstar_simplex(simplex, o.parallelism());
  } else {
    h = hstar_from_poly(poly_from_fstar(fstar_for(simplex, degree, o)), degree);
  }
  const json j = io::to_json(h);
  if (o.table()) emit_vector_table(out, "h*_i", j["hstar"]);
  else out << io::dump(j);
  return 0;
}

int cmd_atomic(const Options& o, std::ostream& out) {
  const ConeBasis basis = io::generators_from_json(io::read_json_file(o.generators_path));
  const auto atomic = enumerate_atomic(basis, o.parallelism());
  if (o.table()) {
    Table t({"point", "lambda", "level", "height"});
    for (const AtomicPoint& a : atomic)
      t.add({join(io::to_json(a.point)), join(io::to_json(a.coefficients.lambda)), std::to_string(a.level),
             to_string(a.height)});
    t.print(out);
  } else {
    out << io::dump(io::to_json(atomic));
  }
  return 0;
}

int cmd_verify_partition(const Options& o, std::ostream& out) {
  const ConeBasis basis = io::generators_from_json(io::read_json_file(o.generators_path));
  const PartitionReport report = verify_partition(basis, o.max_level, o.parallelism());
  if (o.table()) {
    Table t({"level", "points"});
    for (std::size_t i = 0; i < report.points_per_level.size(); ++i)
      t.add({std::to_string(i + 1), std::to_string(report.points_per_level[i])});
    t.print(out);
    out << (report.passed ? "PASS" : "FAIL") << ": " << report.points_checked << " points, "
        << report.atomic_points << " atomic, " << report.violations.size() << " violations\n";
  } else {
    out << io::dump(io::to_json(report));
  }
  return report.passed ? 0 : 2;
}

int cmd_complex_fstar(const Options& o, std::ostream& out, std::ostream& err) {
  const OpenComplex complex = io::complex_from_json(io::read_json_file(o.complex_path));
  const int degree = o.ambient_degree < 0 ? std::max(0, complex.dimension()) : o.ambient_degree;
  if (o.check_disjoint > 0 && !check_disjoint_union(complex, o.check_disjoint)) {
    err << "error: complex cells are not pairwise disjoint\n";
    return 2;
  }
  const FStarVector f = fstar_complex(complex, degree, o.parallelism());
  const json j = io::to_json(f);
  if (o.table()) emit_vector_table(out, "f*_i", j["fstar"]);
  else out << io::dump(j);
  return 0;
}

int cmd_rational_fstar(const Options& o, std::ostream& out) {
  EhrhartQuasiPolynomial q = [&] {
    if (!o.complex_path.empty()) {
      const OpenComplex complex = io::complex_from_json(io::read_json_file(o.complex_path));
      const int degree = o.ambient_degree < 0 ? std::max(0, complex.dimension()) : o.ambient_degree;
      return residue_fstar(complex, o.period, degree, o.parallelism());
    }
    return residue_fstar(load_simplex(o), o.period, o.ambient_degree, o.parallelism());
  }();
  const json j = io::to_json(q);
  if (o.table()) {
    std::vector<std::string> header{"heights_mod"};
    for (int i = 0; i <= q.ambient_degree(); ++i) header.push_back("f*_" + std::to_string(i));
    Table t(header);
    for (const json& r : j["residues"]) {
      std::vector<std::string> row{std::to_string(r["heights_mod"].get<long>())};
      for (const json& x : r["fstar"]) row.push_back(x.get<std::string>());
      t.add(row);
    }
    t.print(out);
  } else {
    out << io::dump(j);
  }
  return 0;
}

int cmd_quasi_eval(const Options& o, std::ostream& out) {
  const auto q = residue_fstar(load_simplex(o), o.period, -1, o.parallelism());
  const Integer count = quasi_eval(q, o.height);
  if (o.table()) {
    Table t({"height", "count"});
    t.add({std::to_string(o.height), to_string(count)});
    t.print(out);
  } else {
    out << io::dump({{"height", std::to_string(o.height)}, {"count", io::to_json(count)}});
  }
  return 0;
}

int cmd_partition_count(const Options& o, std::ostream& out) {
  std::vector<Integer> weights;
  for (long w : o.weights) weights.emplace_back(w);
  const Integer count = restricted_partition(weights, Integer(o.target));
  if (o.table()) {
    out << to_string(count) << "\n";
  } else {
    json w = json::array();
    for (const Integer& x : weights) w.push_back(io::to_json(x));
    out << io::dump({{"weights", w}, {"target", std::to_string(o.target)}, {"count", io::to_json(count)}});
  }
  return 0;
}

int cmd_mixed_heights(const Options& o, std::ostream& out) {
  const AtomicHeightProfile profile = mixed_profile(load_simplex(o), o.parallelism());
  const Integer count = count_via_partition_functions(profile, o.dilate);
  if (o.table()) {
    Table t({"level_index", "height", "count"});
    for (const auto& [key, c] : profile.counts) t.add({std::to_string(key.first), to_string(key.second), to_string(c)});
    t.print(out);
    out << "L(" << o.dilate << ") = " << to_string(count) << "\n";
  } else {
    out << io::dump({{"dilate", std::to_string(o.dilate)}, {"count", io::to_json(count)}, {"profile", io::to_json(profile)}});
  }
  return 0;
}

int cmd_coloring(const Options& o, std::ostream& out) {
  const Hypergraph h = io::hypergraph_from_json(io::read_json_file(o.hypergraph_path));
  const ColoringInvariants c = coloring_complex_hstar(h);
  const json j = io::to_json(c);
  if (o.table()) {
    Table t({"i", "f_i", "f*_i", "h*_i"});
    for (std::size_t i = 0; i < j["fstar"].size(); ++i)
      t.add({std::to_string(i), i < j["f"].size() ? j["f"][i].get<std::string>() : "0",
             j["fstar"][i].get<std::string>(), j["hstar"][i].get<std::string>()});
    t.print(out);
  } else {
    out << io::dump(j);
  }
  return 0;
}

int cmd_selftest(std::ostream& out) {
  const auto results = acceptance::run_all(&out);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  out << (ok ? "all acceptance criteria passed" : "acceptance criteria FAILED") << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ehrhart counting functions via atomic lattice points", "ehrhart"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--parallel", o.parallel, "Enumerate lattice points on several threads");

  auto simplex_opt = [&](CLI::App* sub) { sub->add_option("--simplex", o.simplex_path, "Simplex JSON file")->required(); };
  auto generators_opt = [&](CLI::App* sub) {
    sub->add_option("--generators", o.generators_path, "Cone generators JSON file")->required();
  };

  std::function<int()> action;

  auto* count = app.add_subcommand("count", "Brute-force lattice count of a dilate");
  simplex_opt(count);
  count->add_option("--dilate", o.dilate, "Dilation factor k >= 1")->required()->check(CLI::PositiveNumber);
  count->callback([&] { action = [&] { return cmd_count(o, out); }; });

  auto* fstar = app.add_subcommand("fstar", "f*-vector of an integral simplex");
  simplex_opt(fstar);
  fstar->add_option("--ambient-degree", o.ambient_degree, "Ambient degree d >= dim");
  fstar->add_option("--method", o.method, "atomic or interpolate")->check(CLI::IsMember({"atomic", "interpolate"}));
  fstar->callback([&] { action = [&] { return cmd_fstar(o, out); }; });

  auto* hstar = app.add_subcommand("hstar", "h*-vector of an integral simplex");
  simplex_opt(hstar);
  hstar->add_option("--ambient-degree", o.ambient_degree, "Ambient degree d >= dim");
  hstar->callback([&] { action = [&] { return cmd_hstar(o, out); }; });

  auto* atomic = app.add_subcommand("atomic", "Atomic lattice points of a simplicial cone");
  generators_opt(atomic);
  atomic->callback([&] { action = [&] { return cmd_atomic(o, out); }; });

  auto* verify = app.add_subcommand("verify-partition", "Check the discrete-cone partition of the open cone");
  generators_opt(verify);
  verify->add_option("--max-level", o.max_level, "Highest level to check")->required()->check(CLI::PositiveNumber);
  verify->callback([&] { action = [&] { return cmd_verify_partition(o, out); }; });

  auto* complex = app.add_subcommand("complex-fstar", "Summed f*-vector of an open complex");
  complex->add_option("--complex", o.complex_path, "Complex JSON file")->required();
  complex->add_option("--ambient-degree", o.ambient_degree, "Ambient degree d >= dim");
  complex->add_option("--check-disjoint", o.check_disjoint, "Spot-check disjointness on dilates 1..K");
  complex->callback([&] { action = [&] { return cmd_complex_fstar(o, out, err); }; });

  auto* rational = app.add_subcommand("rational-fstar", "Residue f*-vectors of a rational open simplex");
  auto* rs = rational->add_option("--simplex", o.simplex_path, "Simplex JSON file");
  auto* rc = rational->add_option("--complex", o.complex_path, "Open complex JSON file");
  rs->excludes(rc);
  rational->add_option("--period", o.period, "Period m with m * simplex integral")->required()->check(CLI::PositiveNumber);
  rational->add_option("--ambient-degree", o.ambient_degree, "Ambient degree d >= dim");
  rational->callback([&] {
    if (o.simplex_path.empty() && o.complex_path.empty()) throw CLI::RequiredError("--simplex or --complex");
    action = [&] { return cmd_rational_fstar(o, out); };
  });

  auto* qeval = app.add_subcommand("quasi-eval", "Evaluate the Ehrhart quasipolynomial at a height");
  simplex_opt(qeval);
  qeval->add_option("--period", o.period, "Period m")->required()->check(CLI::PositiveNumber);
  qeval->add_option("--height", o.height, "Height h >= 1")->required()->check(CLI::PositiveNumber);
  qeval->callback([&] { action = [&] { return cmd_quasi_eval(o, out); }; });

  auto* partition = app.add_subcommand("partition-count", "Restricted partition function");
  partition->add_option("--weights", o.weights, "Comma-separated positive weights")->required()->delimiter(',');
  partition->add_option("--target", o.target, "Target value k")->required();
  partition->callback([&] { action = [&] { return cmd_partition_count(o, out); }; });

  auto* mixed = app.add_subcommand("theorem7", "Count via per-vertex heights and restricted partitions");
  simplex_opt(mixed);
  mixed->add_option("--dilate", o.dilate, "Dilation factor k >= 1")->required()->check(CLI::PositiveNumber);
  mixed->callback([&] { action = [&] { return cmd_mixed_heights(o, out); }; });

  auto* coloring = app.add_subcommand("coloring-complex", "f, f*, h* of a hypergraph coloring complex");
  coloring->add_option("--hypergraph", o.hypergraph_path, "Hypergraph JSON file")->required();
  coloring->callback([&] { action = [&] { return cmd_coloring(o, out); }; });

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->callback([&] { action = [&] { return cmd_selftest(out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ehrhart::cli
