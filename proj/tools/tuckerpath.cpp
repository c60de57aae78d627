// tuckerpath: generate symmetric triangulations, label them, and follow the
// Fan/Tucker paths.  Artifacts go to files, summaries to stdout.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tucker/io.hpp"
#include "tucker/tucker.hpp"

namespace {

using namespace tucker;
using tucker::io::json;

enum Exit { kOk = 0, kValidation = 2, kHypothesis = 3, kStructural = 4 };

struct Options {
  std::string input;
  std::string output;
  std::string labels;
  std::string format = "json";
  std::uint64_t seed = 0;
  int random = 0;
  std::string kind = "octahedral";
  int dim = 2;
  int refine = 0;
  bool forbid = false;
  bool axis = false;
  std::string mode = "fan";
  bool full = false;
  unsigned jobs = 1;
  std::string matrix;
  std::string samples;
};

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

io::ComplexDocument load_complex(const Options& o, bool need_flag) {
  auto doc = io::parse_complex(io::read_file(o.input));
  if (need_flag && !doc.flag) throw ValidationError(o.input + " has no flag of hemispheres");
  return doc;
}

// Labels from --labels, or a seeded random labeling when --random is set.
Labeling load_labels(const Options& o, const SymmetricComplex& k, Mode mode) {
  if (!o.labels.empty()) return io::parse_labeling(io::read_file(o.labels), k);
  if (o.random <= 0) throw ValidationError("need --labels FILE or --random M");
  if (mode == Mode::Fan && o.random <= k.dim())
    throw HypothesisError("Fan mode needs m >= n+1",
                          {"requested m=" + std::to_string(o.random) + " on S^" + std::to_string(k.dim())});
  return random_labeling(k, o.random, o.seed, mode == Mode::Fan);
}

void print_node(const char* tag, const Simplex& s, const std::vector<int>& labels) {
  std::cout << tag << ' ' << s << " labels [" << join(labels) << "]";
}

int cmd_gen(const Options& o) {
  GeneratorSpec spec;
  if (o.kind == "octahedral")
    spec.kind = GeneratorKind::Octahedral;
  else if (o.kind == "paper-tetra")
    spec.kind = GeneratorKind::PaperTetra;
  else
    throw ValidationError("unknown --kind '" + o.kind + "'");
  spec.n = o.kind == "paper-tetra" ? 2 : o.dim;
  spec.refinements = o.refine;
  Triangulation t = generate(spec);
  io::write_file(o.output, io::to_json(t));

  std::cout << "wrote " << o.output << ": S^" << t.complex.dim() << ", "
            << t.complex.vertex_count() << " vertices, " << t.complex.maximal_simplices().size()
            << " maximal simplices\n";
  auto sym = validate_symmetry(t.complex);
  auto fr = validate_flag(t.complex, t.flag);
  for (const auto& v : sym.violations) std::cerr << "symmetry: " << v << '\n';
  for (const auto& v : fr.violations) std::cerr << "flag d=" << v.dim << ": " << v.what << '\n';
  if (!sym.ok || !fr.ok) {
    std::cerr << "error: generated complex failed validation\n";
    return kValidation;
  }
  return kOk;
}

int cmd_label(const Options& o) {
  auto doc = load_complex(o, false);
  const SymmetricComplex& k = doc.complex;
  Labeling l = [&] {
    if (o.axis) {
      if (!k.has_coords()) throw ValidationError("--axis needs vertex coordinates");
      std::map<VertexId, std::vector<double>> samples;
      for (VertexId v = 0; v < k.vertex_count(); ++v)
        if (v < k.antipode(v)) samples.emplace(v, k.coords(v));
      return induced_labeling(k, samples);
    }
    if (o.random <= 0) throw ValidationError("need --random M or --axis");
    return random_labeling(k, o.random, o.seed, o.forbid);
  }();
  io::write_file(o.output, io::to_json(l));
  std::cout << "wrote " << o.output << ": " << l.size() << " labels, m=" << l.bound() << '\n';
  return kOk;
}

int cmd_fan(const Options& o) {
  auto doc = load_complex(o, true);
  const Labeling l = load_labels(o, doc.complex, Mode::Fan);
  PathTrace t = run(doc.complex, *doc.flag, l, Mode::Fan);
  if (!o.output.empty()) io::write_file(o.output, io::to_json(t));
  if (t.termination == Termination::AntipodalStart) {
    std::cerr << "error: walk reached -H_0 at " << t.witness.simplex << '\n';
    return kStructural;
  }
  const Node& end = t.nodes.back();
  const Node opp = antipodal_node(doc.complex, end);
  std::cout << "path length " << t.nodes.size() << '\n';
  print_node("terminal", end.simplex, end.labels);
  std::cout << " sign " << (end.sign() > 0 ? '+' : '-') << '\n';
  print_node("antipodal", opp.simplex, opp.labels);
  std::cout << " sign " << (opp.sign() > 0 ? '+' : '-') << '\n';
  return kOk;
}

int cmd_tucker(const Options& o) {
  auto doc = load_complex(o, true);
  const Labeling l = load_labels(o, doc.complex, Mode::Tucker);
  PathTrace t = run(doc.complex, *doc.flag, l, Mode::Tucker);
  if (!o.output.empty()) io::write_file(o.output, io::to_json(t));
  switch (t.termination) {
    case Termination::ComplementaryEdge: {
      auto [a, b] = *t.witness.complementary_edge;
      std::cout << "complementary edge {" << a << "," << b << "} labels [" << l[a] << " " << l[b] << "]"
                << (t.short_circuit ? " (antipodal pair)" : "") << '\n';
      std::cout << "path length " << t.nodes.size() << '\n';
      return kOk;
    }
    case Termination::AlternatingN:
      print_node("alternating n-simplex", t.witness.simplex, t.witness.labels);
      std::cout << " (no complementary edge on this path; m > n)\n";
      return kOk;
    case Termination::AntipodalStart:
      std::cerr << "error: walk reached -H_0 at " << t.witness.simplex << '\n';
      return kStructural;
  }
  return kStructural;
}

int cmd_verify(const Options& o) {
  auto doc = load_complex(o, true);
  Mode mode;
  if (o.mode == "fan")
    mode = Mode::Fan;
  else if (o.mode == "tucker")
    mode = Mode::Tucker;
  else
    throw ValidationError("unknown --mode '" + o.mode + "'");
  const Labeling l = load_labels(o, doc.complex, mode);
  check_instance(doc.complex, *doc.flag, l, mode);

  OracleReport r = build_graph(doc.complex, *doc.flag, l, mode, o.jobs);
  PathTrace t = run(doc.complex, *doc.flag, l, mode);
  const bool on_path = verify_path(r, t);

  json j = io::to_json(r, o.full);
  j["verify_path"] = on_path;
  j["trace"] = io::to_json(t);
  if (!o.output.empty()) io::write_file(o.output, j);

  std::cout << "mode " << to_string(mode) << ": " << r.nodes.size() << " nodes, " << r.edges.size()
            << " edges, " << r.endpoint_count << " endpoints\n";
  std::cout << "alternating n-simplices: +" << r.alternating.positive << " -" << r.alternating.negative
            << '\n';
  for (const auto& c : r.claims)
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
              << '\n';
  std::cout << (on_path ? "PASS " : "FAIL ") << "trace_is_oracle_path\n";
  return r.all_claims_hold() && on_path ? kOk : kStructural;
}

std::vector<double> parse_floats(std::string s) {
  for (char& c : s)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(s);
  std::vector<double> out;
  double x;
  while (in >> x) out.push_back(x);
  if (!in.eof()) throw ValidationError("--matrix: could not parse '" + s + "'");
  return out;
}

int cmd_borsuk(const Options& o) {
  Triangulation base = [&] {
    if (o.input.empty()) return octahedral(o.dim);
    auto doc = load_complex(o, true);
    return Triangulation{std::move(doc.complex), std::move(*doc.flag)};
  }();
  const int n = base.complex.dim();
  OddMapSpec map;
  if (!o.samples.empty()) {
    map = SampleTable{io::parse_samples(io::read_file(o.samples))};
  } else {
    const auto a = parse_floats(o.matrix);
    const std::size_t cols = static_cast<std::size_t>(n) + 1;
    if (a.size() != static_cast<std::size_t>(n) * cols)
      throw ValidationError("--matrix needs n*(n+1) = " + std::to_string(n * (n + 1)) + " entries, got " +
                            std::to_string(a.size()));
    LinearMap lin;
    for (int i = 0; i < n; ++i) lin.rows.emplace_back(a.begin() + i * cols, a.begin() + (i + 1) * cols);
    map = std::move(lin);
  }
  BorsukWitness w;
  try {
    w = solve(base, map, o.refine);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  if (!o.output.empty()) io::write_file(o.output, io::to_json(w));
  std::cout << "edge {" << w.u << "," << w.w << "} labels [" << w.label_u << " " << w.label_w << "]\n";
  std::cout << "residual " << w.residual;
  if (w.bound) std::cout << " <= bound " << *w.bound << " <= mesh bound " << *w.mesh_bound;
  std::cout << "\nmax edge length " << w.max_edge_length << " after " << w.refinements
            << " refinement(s)\n";
  return kOk;
}

void report(const char* kind, const std::string& what, const std::vector<std::string>& details) {
  std::cerr << kind << ": " << what << '\n';
  for (const auto& d : details) std::cerr << "  " << d << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-following solver for Fan's and Tucker's lemmas on symmetric triangulations"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c, bool output_required) {
    auto* out = c->add_option("--output,--out", o.output, "output file");
    if (output_required) out->required();
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json"}));
  };

  auto* gen = app.add_subcommand("gen", "write a symmetric triangulation with its flag");
  common(gen, true);
  gen->add_option("--kind", o.kind, "octahedral | paper-tetra")
      ->check(CLI::IsMember({"octahedral", "paper-tetra"}));
  gen->add_option("--dim", o.dim, "sphere dimension n")->check(CLI::Range(1, 16));
  gen->add_option("--refine", o.refine, "barycentric refinements")->check(CLI::NonNegativeNumber);

  auto* label = app.add_subcommand("label", "write an anti-symmetric labeling");
  common(label, true);
  label->add_option("--input", o.input, "complex file")->required();
  auto* lrand = label->add_option("--random", o.random, "label bound m");
  label->add_flag("--forbid-complementary", o.forbid, "no edge may carry labels summing to zero");
  label->add_flag("--axis", o.axis, "label by the signed largest coordinate")->excludes(lrand);

  auto add_solver = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    common(c, false);
    c->add_option("--input", o.input, "complex file")->required();
    auto* lab = c->add_option("--labels", o.labels, "labeling file");
    c->add_option("--random", o.random, "random labeling with bound m")->excludes(lab);
    return c;
  };
  auto* fan = add_solver("fan", "locate an alternating n-simplex");
  auto* tuck = add_solver("tucker", "locate a complementary edge");
  auto* verify = add_solver("verify", "enumerate the graph and check it against the path");
  verify->add_option("--mode", o.mode, "fan | tucker")->check(CLI::IsMember({"fan", "tucker"}));
  verify->add_flag("--full", o.full, "include nodes, edges and components in the report");
  verify->add_option("--jobs", o.jobs, "classification threads")->check(CLI::PositiveNumber);

  auto* borsuk = app.add_subcommand("borsuk", "approximate zero of an odd map S^n -> R^n");
  common(borsuk, false);
  borsuk->add_option("--input", o.input, "complex file (default: octahedral S^n)");
  borsuk->add_option("--dim", o.dim, "sphere dimension n")->check(CLI::Range(1, 16));
  borsuk->add_option("--refine", o.refine, "barycentric refinements")->check(CLI::NonNegativeNumber);
  auto* mat = borsuk->add_option("--matrix", o.matrix, "n x (n+1) matrix, row-major");
  borsuk->add_option("--samples", o.samples, "sample table file")->excludes(mat);
  borsuk->callback([&] {
    if (o.matrix.empty() && o.samples.empty()) throw CLI::ValidationError("need --matrix or --samples");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*label) return cmd_label(o);
    if (*fan) return cmd_fan(o);
    if (*tuck) return cmd_tucker(o);
    if (*verify) return cmd_verify(o);
    if (*borsuk) return cmd_borsuk(o);
  } catch (const ValidationError& e) {
    report("validation error", e.what(), e.details());
    return kValidation;
  } catch (const HypothesisError& e) {
    report("hypothesis violated", e.what(), e.details());
    return kHypothesis;
  } catch (const SamplingError& e) {
    report("hypothesis violated", e.what(), {});
    return kHypothesis;
  } catch (const DegenerateSampleError& e) {
    report("hypothesis violated", e.what(), {"the map vanishes at vertex " + std::to_string(e.vertex())});
    return kHypothesis;
  } catch (const StructuralError& e) {
    report("structural anomaly", e.what(), {});
    return kStructural;
  } catch (const std::invalid_argument& e) {
    report("validation error", e.what(), {});
    return kValidation;
  } catch (const std::exception& e) {
    report("error", e.what(), {});
    return 1;
  }
  return kOk;
}
