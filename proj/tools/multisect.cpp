// multisect: command-line driver for building and checking multisections.
//
// Documents flow through stdin/stdout so stages compose with pipes:
//   multisect gen --double-simplex 5 | multisect partition --scheme pairs --blocks 0,1/2,3/4,5 | multisect report

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "multisect/canonical.hpp"
#include "multisect/cells.hpp"
#include "multisect/complex.hpp"
#include "multisect/error.hpp"
#include "multisect/invariants.hpp"
#include "multisect/io.hpp"
#include "multisect/partition.hpp"
#include "multisect/subdivide.hpp"
#include "multisect/zoo.hpp"

namespace {

using namespace multisect;
using Json = nlohmann::ordered_json;

constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;

struct VerdictFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Document load(const std::string& path) {
  if (path == "-") return read_document(std::cin);
  return read_document_file(path);
}

void emit(const Document& doc) { write_document(std::cout, doc); }

void header(std::ostream& out) { out << "# multisect " << kFormatVersion << "\n"; }

const char* yes(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string join_numbers(const std::vector<T>& xs, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

std::string class_set(std::uint32_t mask) {
  std::vector<int> xs;
  for (int i = 0; i < 32; ++i) {
    if (mask >> i & 1U) xs.push_back(i);
  }
  return "{" + join_numbers(xs, ",") + "}";
}

Limits limits_from_env() {
  Limits limits;
  if (const char* env = std::getenv("MULTISECT_CEILING")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw InputError("MULTISECT_CEILING must be a positive integer");
    limits.max_facets = v;
  }
  return limits;
}

const VertexPartition& need_partition(const Document& doc) {
  if (!doc.partition) throw PreconditionError("document has no partition; run 'multisect partition' first");
  return *doc.partition;
}

std::uint32_t parse_subset(const std::string& text, int k) {
  if (text.empty() || text == "all") return (1U << (k + 1)) - 1;
  std::uint32_t mask = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0 || v > k) throw InputError("subset entry '" + item + "' out of range 0.." + std::to_string(k));
    mask |= 1U << v;
  }
  return mask;
}

Json summary_json(const TriSummary& s, const Triangulation& t) {
  return Json{{"dimension", t.dimension()},
              {"facets", t.size()},
              {"counts", s.counts},
              {"euler", s.euler},
              {"connected", s.connected},
              {"pseudo_manifold", s.pseudo_manifold},
              {"orientable", s.orientable},
              {"even", s.even},
              {"betti", s.betti}};
}

Json complex_json(const CellComplex& c, bool with_cells) {
  const CellSummary s = cell_summary(c);
  std::vector<int> classes;
  for (int i = 0; i < 32; ++i) {
    if (c.subset() >> i & 1U) classes.push_back(i);
  }
  Json j{{"subset", classes},
         {"dimension", s.dimension},
         {"counts", s.counts},
         {"euler", s.euler},
         {"connected", s.connected},
         {"closed", s.closed},
         {"betti", s.betti},
         {"orientable", s.orientable ? Json(*s.orientable) : Json(nullptr)},
         {"all_cubes", c.all_cubes()},
         {"collapsed_dimension", collapse(c).dimension}};
  if (with_cells) {
    Json cells = Json::array();
    for (int d = 0; d <= c.dimension(); ++d) {
      Json level = Json::array();
      for (std::uint32_t i = 0; i < c.count(d); ++i) level.push_back(format_key(c.key(d, i)));
      cells.push_back(std::move(level));
    }
    j["cells"] = std::move(cells);
  }
  return j;
}

Json report_json(const MultisectionReport& r) {
  Json genera = Json::array();
  for (const auto& g : r.genera) genera.push_back(g ? Json(*g) : Json(nullptr));
  Json subsets = Json::array();
  for (const auto& s : r.subsets) {
    subsets.push_back(Json{{"classes", s.classes},
                           {"nonempty", s.nonempty},
                           {"connected", s.connected},
                           {"dimension", s.dimension},
                           {"collapsed_dimension", s.collapsed_dimension},
                           {"counts", s.counts}});
  }
  Json central{{"dimension", r.central.dimension},
               {"counts", r.central.counts},
               {"euler", r.central.euler},
               {"connected", r.central.connected},
               {"closed", r.central.closed},
               {"betti", r.central.betti},
               {"orientable", r.central.orientable ? Json(*r.central.orientable) : Json(nullptr)},
               {"npc", r.npc ? Json(*r.npc) : Json(nullptr)}};
  return Json{{"n", r.n},
              {"k", r.k},
              {"euler", r.euler},
              {"supports_multisection", r.supports_multisection},
              {"supports_generalized", r.supports_generalized},
              {"generalized_mode", r.generalized_mode},
              {"genera", genera},
              {"subsets", subsets},
              {"central", central},
              {"surface_genus", r.surface_genus ? Json(*r.surface_genus) : Json(nullptr)},
              {"surface_orientable", r.surface_genus ? Json(r.surface_orientable) : Json(nullptr)},
              {"inclusion_exclusion", r.inclusion_exclusion_ok},
              {"trisection_identity", r.trisection_identity ? Json(*r.trisection_identity) : Json(nullptr)},
              {"diagnostics", r.diagnostics}};
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

Json json_envelope() { return Json{{"format", "multisect"}, {"version", kFormatVersion}}; }

// --- commands -------------------------------------------------------------

struct GenArgs {
  int double_simplex = 0;
  int cross_sphere = 0;
  int cross_projective = 0;
  int simplex_boundary = 0;
};

void run_gen(const GenArgs& a) {
  const int chosen = (a.double_simplex > 0) + (a.cross_sphere > 0) + (a.cross_projective > 0) + (a.simplex_boundary > 0);
  if (chosen != 1) throw InputError("gen needs exactly one generator option");
  Triangulation t = a.double_simplex    ? double_simplex(a.double_simplex)
                    : a.cross_sphere    ? cross_sphere(a.cross_sphere)
                    : a.cross_projective ? cross_projective(a.cross_projective)
                                         : simplex_boundary(a.simplex_boundary);
  emit(Document{std::move(t), std::nullopt, std::nullopt, std::nullopt});
}

void run_info(const std::string& input) {
  const Document doc = load(input);
  const Triangulation& t = doc.triangulation;
  const FacePoset poset(t);
  const TriSummary s = summarize(t, poset);
  const DualGraph g = dual_graph(t);
  header(std::cout);
  std::cout << "dimension " << t.dimension() << "\n"
            << "facets " << t.size() << "\n"
            << "format " << (t.has_vertex_ids() ? "vertex" : "gluing") << "\n"
            << "counts " << join_numbers(s.counts) << "\n"
            << "euler " << s.euler << "\n"
            << "connected " << yes(s.connected) << "\n"
            << "pseudo_manifold " << yes(s.pseudo_manifold) << "\n"
            << "orientable " << yes(s.orientable) << "\n"
            << "even " << yes(s.even) << "\n"
            << "simplicial " << yes(is_simplicial(poset)) << "\n"
            << "dual_bipartite " << yes(g.coloring.has_value()) << "\n"
            << "betti_gf2 " << join_numbers(s.betti) << "\n"
            << "components " << dual_components(t) << "\n";
  if (doc.partition) {
    std::cout << "partition " << doc.partition->scheme << " k " << doc.partition->k << " sizes "
              << join_numbers(doc.partition->class_sizes()) << "\n";
  }
}

void run_subdivide(const std::string& input, bool bary, int times) {
  if (!bary) throw InputError("subdivide needs --barycentric");
  if (times < 1) throw InputError("--times must be at least 1");
  const Limits limits = limits_from_env();
  Document doc = load(input);
  Triangulation t = std::move(doc.triangulation);
  std::optional<CarrierLabels> carriers;
  std::optional<std::vector<int>> coloring;
  for (int i = 0; i < times; ++i) {
    coloring = dual_graph(t).coloring;
    Subdivision s = barycentric(t, limits);
    t = std::move(s.triangulation);
    carriers = std::move(s.carriers);
  }
  emit(Document{std::move(t), std::move(carriers), std::move(coloring), std::nullopt});
}

void run_pachner(const std::string& input) {
  const Document doc = load(input);
  PachnerResult r = pachner_2n_pass(doc.triangulation, need_partition(doc));
  emit(Document{std::move(r.triangulation), std::nullopt, std::nullopt, std::move(r.partition)});
}

void run_stellar(const std::string& input, long long facet) {
  if (facet < 0) throw InputError("--facet must be non-negative");
  const Document doc = load(input);
  emit(Document{stellar_facet(doc.triangulation, static_cast<FacetId>(facet)), std::nullopt, std::nullopt,
                std::nullopt});
}

void run_join(const std::string& a_path, const std::string& b_path) {
  if (a_path == "-" && b_path == "-") throw InputError("join reads at most one input from stdin");
  const Document a = load(a_path);
  const Document b = load(b_path);
  Triangulation joined = join(a.triangulation, b.triangulation);
  std::optional<VertexPartition> p;
  if (a.partition && b.partition) {
    p = join_partition(a.triangulation, *a.partition, b.triangulation, *b.partition, joined);
  }
  emit(Document{std::move(joined), std::nullopt, std::nullopt, std::move(p)});
}

void run_partition(const std::string& input, const std::string& scheme_text, const std::string& blocks,
                   const std::string& labels_path) {
  Document doc = load(input);
  const Scheme scheme = parse_scheme(scheme_text);
  SchemeAux aux;
  aux.carriers = doc.carriers;
  aux.coloring = doc.coloring;
  if (!blocks.empty()) aux.blocks = parse_blocks(blocks);
  if (scheme == Scheme::Explicit) {
    if (!labels_path.empty()) {
      std::ifstream in(labels_path);
      if (!in) throw InputError("cannot open " + labels_path);
      aux.labels = read_partition(in, doc.triangulation);
    } else {
      aux.labels = doc.partition;
    }
  }
  doc.partition = scheme_partition(doc.triangulation, scheme, aux);
  emit(doc);
}

void print_validation(const ValidationReport& v) {
  std::cout << "n " << v.n << "\n"
            << "k " << v.k << "\n"
            << "profile_ok " << yes(v.profile_ok) << "\n";
  for (std::size_t i = 0; i < v.class_graphs.size(); ++i) {
    const auto& g = v.class_graphs[i];
    std::cout << "class_graph " << i << " vertices " << g.vertices << " edges " << g.edges << " connected "
              << yes(g.connected) << "\n";
  }
  for (const auto& s : v.subsets) {
    std::cout << "subset " << class_set(s.mask) << " nonempty " << yes(s.nonempty) << " connected "
              << yes(s.connected) << " dimension " << s.dimension << " collapsed " << s.collapsed_dimension
              << " counts " << join_numbers(s.counts) << "\n";
  }
  std::cout << "central_closed " << yes(v.central_closed) << "\n"
            << "central_connected " << yes(v.central_connected) << "\n"
            << "supports_multisection " << yes(v.supports_multisection) << "\n"
            << "supports_generalized " << yes(v.supports_generalized) << "\n";
  for (const auto& d : v.diagnostics) std::cout << "diagnostic " << d << "\n";
}

void run_verify(const std::string& input, bool expect_multisection, bool expect_generalized) {
  const Document doc = load(input);
  const ValidationReport v = validate(doc.triangulation, need_partition(doc));
  header(std::cout);
  print_validation(v);
  if (expect_multisection && !v.supports_multisection) throw VerdictFailure("partition does not support a multisection");
  if (expect_generalized && !v.supports_generalized) {
    throw VerdictFailure("partition does not support a generalized multisection");
  }
}

void print_complex(const CellComplex& c) {
  const CellSummary s = cell_summary(c);
  std::cout << "subset " << class_set(c.subset()) << "\n"
            << "dimension " << s.dimension << "\n"
            << "counts " << join_numbers(s.counts) << "\n"
            << "euler " << s.euler << "\n"
            << "connected " << yes(s.connected) << "\n"
            << "closed " << yes(s.closed) << "\n"
            << "orientable " << (s.orientable ? yes(*s.orientable) : "undefined") << "\n"
            << "all_cubes " << yes(c.all_cubes()) << "\n"
            << "betti_gf2 " << join_numbers(s.betti) << "\n";
  if (s.dimension <= 1 && s.connected) std::cout << "graph_genus " << graph_genus(c) << "\n";
}

void run_build(const std::string& input, const std::string& subset) {
  const Document doc = load(input);
  const auto ambient = make_ambient(doc.triangulation, need_partition(doc));
  const CellComplex c = extract(ambient, parse_subset(subset, ambient->partition.k));
  header(std::cout);
  print_complex(c);
}

void run_npc(const std::string& input, const std::string& subset) {
  const Document doc = load(input);
  const auto ambient = make_ambient(doc.triangulation, need_partition(doc));
  const CellComplex c = extract(ambient, parse_subset(subset, ambient->partition.k));
  const NpcReport r = npc_check(c);
  header(std::cout);
  std::cout << "subset " << class_set(c.subset()) << "\n";
  std::cout << "npc " << (r.pass ? "pass" : "fail") << "\n";
  if (!r.pass) {
    std::cout << "vertex " << format_key(c.key(0, *r.vertex)) << "\n";
    std::cout << "reason " << r.reason << "\n";
    if (!r.clique.empty()) std::cout << "clique " << join_numbers(r.clique) << "\n";
    throw VerdictFailure("cube complex is not non-positively curved");
  }
}

void run_collapse(const std::string& input, const std::string& subset) {
  const Document doc = load(input);
  const auto ambient = make_ambient(doc.triangulation, need_partition(doc));
  const CellComplex c = extract(ambient, parse_subset(subset, ambient->partition.k));
  const Collapse r = collapse(c);
  header(std::cout);
  std::cout << "subset " << class_set(c.subset()) << "\n"
            << "dimension_before " << c.dimension() << "\n"
            << "counts_before " << join_numbers(c.counts()) << "\n"
            << "dimension_after " << r.dimension << "\n"
            << "counts_after " << join_numbers(r.complex.counts()) << "\n";
}

void run_report(const std::string& input, bool expect, bool generalized, const std::string& out_path, int cls) {
  const Document doc = load(input);
  const auto ambient = make_ambient(doc.triangulation, need_partition(doc));
  const MultisectionReport r = multisection_report(ambient, generalized);
  Json j = json_envelope();
  Json rj = report_json(r);
  header(std::cout);
  std::cout << "n " << r.n << "\n"
            << "k " << r.k << "\n"
            << "euler " << r.euler << "\n"
            << "supports_multisection " << yes(r.supports_multisection) << "\n"
            << "supports_generalized " << yes(r.supports_generalized) << "\n";
  if (!generalized) {
    std::cout << "genera";
    for (const auto& g : r.genera) std::cout << ' ' << (g ? std::to_string(*g) : "-");
    std::cout << "\n";
  }
  for (const auto& s : r.subsets) {
    std::cout << "subset " << class_set(s.mask) << " dimension " << s.dimension << " collapsed "
              << s.collapsed_dimension << " connected " << yes(s.connected) << "\n";
  }
  std::cout << "central dimension " << r.central.dimension << " counts " << join_numbers(r.central.counts)
            << " euler " << r.central.euler << " closed " << yes(r.central.closed) << " connected "
            << yes(r.central.connected) << " orientable "
            << (r.central.orientable ? yes(*r.central.orientable) : "undefined") << "\n";
  std::cout << "central_betti_gf2 " << join_numbers(r.central.betti) << "\n";
  if (r.npc) std::cout << "npc " << (*r.npc ? "pass" : "fail") << (*r.npc ? "" : " (" + r.npc_reason + ")") << "\n";
  if (r.surface_genus) {
    std::cout << "surface " << (r.surface_orientable ? "orientable genus " : "non-orientable crosscaps ")
              << *r.surface_genus << "\n";
  }
  std::cout << "inclusion_exclusion " << yes(r.inclusion_exclusion_ok) << "\n";
  if (r.trisection_identity) std::cout << "trisection_identity " << yes(*r.trisection_identity) << "\n";
  if (r.supports_multisection && !generalized) {
    const bool onto = h1_onto_check(ambient, cls);
    std::cout << "h1_onto " << yes(onto) << "\n";
    rj["h1_onto"] = onto;
    Json epis = Json::array();
    for (int i = 0; i <= r.k; ++i) {
      const EpimorphismReport e = inclusion_epimorphism(ambient, i);
      std::cout << "epimorphism " << i << " target_rank " << e.target_rank << " relators_die "
                << yes(e.relators_die) << " abelian_surjective " << yes(e.abelian_surjective) << "\n";
      epis.push_back(Json{{"class", i},
                          {"target_rank", e.target_rank},
                          {"relators_die", e.relators_die},
                          {"abelian_surjective", e.abelian_surjective}});
    }
    rj["epimorphisms"] = std::move(epis);
  }
  for (const auto& d : r.diagnostics) std::cout << "diagnostic " << d << "\n";
  if (!out_path.empty()) {
    j["report"] = std::move(rj);
    write_json(out_path, j);
  }
  if (expect && !r.supports_multisection) {
    std::string why = r.diagnostics.empty() ? "partition does not support a multisection" : r.diagnostics.front();
    throw VerdictFailure(why);
  }
}

void run_cover(const std::string& input, bool orientation, bool labeling) {
  if (orientation == labeling) throw InputError("cover needs exactly one of --orientation, --labeling");
  const Document doc = load(input);
  Triangulation t = orientation ? orientation_double_cover(doc.triangulation).triangulation
                                : labeling_cover(doc.triangulation).triangulation;
  emit(Document{std::move(t), std::nullopt, std::nullopt, std::nullopt});
}

void run_symrep(const std::string& input, const std::string& blocks) {
  const Document doc = load(input);
  const SymRep r = symmetric_representation(doc.triangulation);
  header(std::cout);
  std::cout << "base " << r.base << "\n" << "trivial " << yes(r.trivial) << "\n";
  for (const auto& g : r.generators) {
    std::vector<int> xs(g.begin(), g.end());
    std::cout << "generator " << join_numbers(xs) << "\n";
  }
  for (const auto& o : r.orbits) std::cout << "orbit " << join_numbers(o) << "\n";
  if (!blocks.empty()) {
    std::vector<int> block_of(static_cast<std::size_t>(doc.triangulation.corners()), -1);
    const auto parsed = parse_blocks(blocks);
    for (std::size_t b = 0; b < parsed.size(); ++b) {
      for (int x : parsed[b]) {
        if (x < 0 || x >= doc.triangulation.corners()) throw InputError("block label out of range");
        block_of[static_cast<std::size_t>(x)] = static_cast<int>(b);
      }
    }
    if (std::count(block_of.begin(), block_of.end(), -1) != 0) throw InputError("blocks must cover every label");
    const Admissibility a = twisted_admissible(doc.triangulation, block_of, r);
    std::cout << "admissible " << yes(a.admissible) << "\n";
    for (const auto& act : a.block_action) std::cout << "block_action " << join_numbers(act) << "\n";
    std::cout << "union_graph_connected " << yes(a.union_graph_connected) << "\n";
    if (!a.admissible) throw VerdictFailure(a.reason);
  }
}

void run_export(const std::string& input, const std::string& path, const std::string& subset, bool cells) {
  const Document doc = load(input);
  Json j = json_envelope();
  j["triangulation"] = summary_json(summarize(doc.triangulation), doc.triangulation);
  j["components"] = dual_components(doc.triangulation);
  if (doc.partition) {
    const auto ambient = make_ambient(doc.triangulation, *doc.partition);
    j["partition"] = Json{{"k", doc.partition->k},
                          {"scheme", doc.partition->scheme},
                          {"class_sizes", doc.partition->class_sizes()}};
    Json complexes = Json::array();
    const int k = doc.partition->k;
    if (!subset.empty()) {
      complexes.push_back(complex_json(extract(ambient, parse_subset(subset, k)), cells));
    } else if (k <= kMaxClassesForSubsets) {
      for (std::uint32_t s = 1; s < (1U << (k + 1)); ++s) complexes.push_back(complex_json(extract(ambient, s), cells));
    }
    j["complexes"] = std::move(complexes);
  }
  write_json(path, j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify multisections of closed PL manifolds from triangulations."};
  app.set_version_flag("--version", std::string("multisect ") + kFormatVersion);
  app.require_subcommand(1);
  std::string input = "-";

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an example triangulation");
  gen_cmd->add_option("--double-simplex", gen.double_simplex, "Two n-simplices glued along their boundary");
  gen_cmd->add_option("--cross-sphere", gen.cross_sphere, "Crosspolytope boundary S^n");
  gen_cmd->add_option("--cross-projective", gen.cross_projective, "Crosspolytope quotient RP^n");
  gen_cmd->add_option("--simplex-boundary", gen.simplex_boundary, "Boundary of the (n+1)-simplex");

  auto* info_cmd = app.add_subcommand("info", "Summarize a triangulation");
  info_cmd->add_option("input", input, "Document path, - for stdin");

  bool bary = false;
  int times = 1;
  auto* sub_cmd = app.add_subcommand("subdivide", "Barycentric subdivision");
  sub_cmd->add_flag("--barycentric", bary, "First barycentric subdivision");
  sub_cmd->add_option("--times", times, "Number of subdivisions");
  sub_cmd->add_option("input", input, "Document path, - for stdin");

  auto* pachner_cmd = app.add_subcommand("pachner-pass", "Replace every double simplex by n facets");
  pachner_cmd->add_option("input", input, "Document path, - for stdin");

  long long facet = -1;
  auto* stellar_cmd = app.add_subcommand("stellar", "Stellar subdivision of one facet");
  stellar_cmd->add_option("--facet", facet, "Facet index")->required();
  stellar_cmd->add_option("input", input, "Document path, - for stdin");

  std::string join_a;
  std::string join_b;
  auto* join_cmd = app.add_subcommand("join", "Join of two vertex-format triangulations");
  join_cmd->add_option("first", join_a, "First document, - for stdin")->required();
  join_cmd->add_option("second", join_b, "Second document, - for stdin")->required();

  std::string scheme;
  std::string blocks;
  std::string labels;
  auto* part_cmd = app.add_subcommand("partition", "Attach a vertex partition");
  part_cmd->add_option("--scheme", scheme, "odd-bary, even-bary, even-npc, pairs or explicit")->required();
  part_cmd->add_option("--blocks", blocks, "Label blocks for pairs, e.g. 0,1/2,3");
  part_cmd->add_option("--labels", labels, "Partition file for explicit");
  part_cmd->add_option("input", input, "Document path, - for stdin");

  bool expect = false;
  bool expect_generalized = false;
  auto* verify_cmd = app.add_subcommand("verify", "Validate the partition");
  verify_cmd->add_flag("--expect-multisection", expect, "Exit 1 unless a multisection is supported");
  verify_cmd->add_flag("--expect-generalized", expect_generalized, "Exit 1 unless a generalized multisection is supported");
  verify_cmd->add_option("input", input, "Document path, - for stdin");

  std::string subset;
  auto* build_cmd = app.add_subcommand("build", "Extract the cell complex of a class subset");
  build_cmd->add_option("--subset", subset, "Classes, e.g. 0,1 (default all)");
  build_cmd->add_option("input", input, "Document path, - for stdin");

  auto* npc_cmd = app.add_subcommand("npc-check", "Link condition of a cube complex (default central)");
  npc_cmd->add_option("--subset", subset, "Classes, e.g. 0,1 (default all)");
  npc_cmd->add_option("input", input, "Document path, - for stdin");

  auto* collapse_cmd = app.add_subcommand("collapse", "Greedy collapse of a subset complex");
  collapse_cmd->add_option("--subset", subset, "Classes, e.g. 0,1 (default all)");
  collapse_cmd->add_option("input", input, "Document path, - for stdin");

  bool generalized = false;
  std::string out_path;
  int cls = 0;
  auto* report_cmd = app.add_subcommand("report", "Full multisection report");
  report_cmd->add_flag("--expect-multisection", expect, "Exit 1 unless a multisection is supported");
  report_cmd->add_flag("--generalized", generalized, "Generalized multisection mode");
  report_cmd->add_option("--out", out_path, "Also write the report as JSON");
  report_cmd->add_option("--class", cls, "Class used for the homology check");
  report_cmd->add_option("input", input, "Document path, - for stdin");

  bool orientation = false;
  bool labeling = false;
  auto* cover_cmd = app.add_subcommand("cover", "Build a covering triangulation");
  cover_cmd->add_flag("--orientation", orientation, "Orientation double cover");
  cover_cmd->add_flag("--labeling", labeling, "Cover trivializing the symmetric representation");
  cover_cmd->add_option("input", input, "Document path, - for stdin");

  auto* symrep_cmd = app.add_subcommand("symrep", "Symmetric representation of an even triangulation");
  symrep_cmd->add_option("--blocks", blocks, "Check twisted admissibility of these label blocks");
  symrep_cmd->add_option("input", input, "Document path, - for stdin");

  std::string json_path;
  bool with_cells = false;
  auto* export_cmd = app.add_subcommand("export", "Write summaries and cell complexes as JSON");
  export_cmd->add_option("--json", json_path, "Output path")->required();
  export_cmd->add_option("--subset", subset, "Only this class subset");
  export_cmd->add_flag("--cells", with_cells, "Include cell keys");
  export_cmd->add_option("input", input, "Document path, - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (gen_cmd->parsed()) run_gen(gen);
    else if (info_cmd->parsed()) run_info(input);
    else if (sub_cmd->parsed()) run_subdivide(input, bary, times);
    else if (pachner_cmd->parsed()) run_pachner(input);
    else if (stellar_cmd->parsed()) run_stellar(input, facet);
    else if (join_cmd->parsed()) run_join(join_a, join_b);
    else if (part_cmd->parsed()) run_partition(input, scheme, blocks, labels);
    else if (verify_cmd->parsed()) run_verify(input, expect, expect_generalized);
    else if (build_cmd->parsed()) run_build(input, subset);
    else if (npc_cmd->parsed()) run_npc(input, subset);
    else if (collapse_cmd->parsed()) run_collapse(input, subset);
    else if (report_cmd->parsed()) run_report(input, expect, generalized, out_path, cls);
    else if (cover_cmd->parsed()) run_cover(input, orientation, labeling);
    else if (symrep_cmd->parsed()) run_symrep(input, blocks);
    else if (export_cmd->parsed()) run_export(input, json_path, subset, with_cells);
  } catch (const VerdictFailure& e) {
    std::cout.flush();
    std::cerr << "multisect: " << e.what() << "\n";
    return kExitVerdict;
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "multisect: error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
