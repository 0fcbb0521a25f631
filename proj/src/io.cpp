#include "multisect/io.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "multisect/error.hpp"
#include "multisect/face_poset.hpp"

namespace multisect {

namespace {

class Lines {
 public:
  explicit Lines(std::istream& in) : in_(in) {}

  // Next non-blank line split into tokens, comments stripped.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  void expect(std::vector<std::string>& tokens, const std::string& what) {
    if (!next(tokens)) fail("unexpected end of input, expected " + what);
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw InputError("line " + std::to_string(number_) + ": " + message);
  }

  template <typename T>
  T number(const std::string& tok) const {
    T value{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail("expected a number, got '" + tok + "'");
    return value;
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::uint32_t vertex_class(const Lines& lines, const std::string& tok, const Triangulation& t,
                           const VertexClasses& vc) {
  if (tok.find(':') == std::string::npos) {
    if (!t.has_vertex_ids()) lines.fail("plain vertex ids need a vertex-format triangulation");
    const auto id = lines.number<std::int64_t>(tok);
    for (FacetId f = 0; f < t.size(); ++f) {
      const auto vs = t.facet_vertices(f);
      for (std::size_t c = 0; c < vs.size(); ++c) {
        if (vs[c] == id) return vc.of(f, static_cast<int>(c));
      }
    }
    lines.fail("unknown vertex id " + tok);
  }
  FaceKey key;
  try {
    key = parse_key(tok);
  } catch (const InputError& e) {
    lines.fail(e.what());
  }
  if (key.facet >= t.size() || std::popcount(key.mask) != 1 || std::countr_zero(key.mask) > t.dimension()) {
    lines.fail("unknown vertex key " + tok);
  }
  return vc.of(key.facet, std::countr_zero(key.mask));
}

// Parses partition lines starting at the `k` line already in tokens.
VertexPartition parse_partition(Lines& lines, std::vector<std::string>& tokens, bool& more,
                                const Triangulation& t, const VertexClasses& vc, std::string scheme) {
  VertexPartition p;
  p.k = lines.number<int>(tokens.at(1));
  if (p.k < 0) lines.fail("k must be non-negative");
  p.scheme = std::move(scheme);
  p.labels.assign(vc.count(), -1);
  while ((more = lines.next(tokens))) {
    if (tokens[0] != "v") break;
    if (tokens.size() != 3) lines.fail("expected 'v <vertex> <label>'");
    const std::uint32_t v = vertex_class(lines, tokens[1], t, vc);
    const int label = lines.number<int>(tokens[2]);
    if (label < 0 || label > p.k) lines.fail("label out of range: " + tokens[2]);
    if (p.labels[v] != -1 && p.labels[v] != label) lines.fail("conflicting labels for vertex " + tokens[1]);
    p.labels[v] = label;
  }
  for (std::size_t v = 0; v < p.labels.size(); ++v) {
    if (p.labels[v] == -1) {
      throw InputError("unlabeled vertex class " + format_key(vc.key(static_cast<std::uint32_t>(v))));
    }
  }
  return p;
}

Triangulation parse_triangulation(Lines& lines, std::vector<std::string>& tokens) {
  lines.expect(tokens, "'dim <n>'");
  if (tokens.size() != 2 || tokens[0] != "dim") lines.fail("expected 'dim <n>'");
  const int n = lines.number<int>(tokens[1]);
  if (n < 1 || n > 30) lines.fail("dimension must lie in 1..30");
  const auto c = static_cast<std::size_t>(n + 1);
  lines.expect(tokens, "'facets <m>' or 'vertexfacets <m>'");
  if (tokens.size() != 2 || (tokens[0] != "facets" && tokens[0] != "vertexfacets")) {
    lines.fail("expected 'facets <m>' or 'vertexfacets <m>'");
  }
  const auto m = lines.number<std::size_t>(tokens[1]);
  if (m == 0) lines.fail("facet count must be positive");
  if (tokens[0] == "vertexfacets") {
    std::vector<std::int64_t> ids;
    ids.reserve(m * c);
    for (std::size_t f = 0; f < m; ++f) {
      lines.expect(tokens, "vertex facet line");
      if (tokens.size() != c) lines.fail("dimension mismatch: expected " + std::to_string(c) + " vertices");
      for (const auto& tok : tokens) ids.push_back(lines.number<std::int64_t>(tok));
    }
    return from_vertex_facets(n, std::move(ids));
  }
  std::vector<FacetId> targets(m * c, kUnglued);
  std::vector<Corner> perms(m * c * c, 0);
  for (std::size_t f = 0; f < m; ++f) {
    std::vector<char> seen(c, 0);
    for (std::size_t line = 0; line < c; ++line) {
      lines.expect(tokens, "gluing line");
      if (tokens.size() != c + 2) lines.fail("dimension mismatch: expected " + std::to_string(c + 2) + " fields");
      const auto slot = lines.number<std::size_t>(tokens[0]);
      if (slot >= c) lines.fail("face index out of range");
      if (seen[slot]) lines.fail("face index repeated");
      seen[slot] = 1;
      const auto target = lines.number<std::size_t>(tokens[1]);
      if (target >= m) lines.fail("gluing target out of range");
      targets[f * c + slot] = static_cast<FacetId>(target);
      for (std::size_t j = 0; j < c; ++j) {
        const auto v = lines.number<unsigned>(tokens[2 + j]);
        if (v >= c) lines.fail("gluing is not a corner bijection");
        perms[(f * c + slot) * c + j] = static_cast<Corner>(v);
      }
    }
  }
  return Triangulation(n, std::move(targets), std::move(perms));
}

}  // namespace

Document read_document(std::istream& in) {
  Lines lines(in);
  std::vector<std::string> tokens;
  Document doc{parse_triangulation(lines, tokens), std::nullopt, std::nullopt, std::nullopt};
  const Triangulation& t = doc.triangulation;
  const VertexClasses vc(t);
  const auto c = static_cast<std::size_t>(t.corners());
  std::string scheme = "explicit";
  bool more = lines.next(tokens);
  while (more) {
    const std::string& head = tokens[0];
    if (head == "labels") {
      std::vector<Corner> labels;
      labels.reserve(t.size() * c);
      for (std::size_t f = 0; f < t.size(); ++f) {
        lines.expect(tokens, "corner label line");
        if (tokens.size() != c) lines.fail("dimension mismatch in corner labels");
        for (const auto& tok : tokens) {
          const auto v = lines.number<unsigned>(tok);
          if (v >= c) lines.fail("corner label out of range");
          labels.push_back(static_cast<Corner>(v));
        }
      }
      doc.triangulation = doc.triangulation.with_corner_labels(std::move(labels));
      more = lines.next(tokens);
    } else if (head == "carriers") {
      if (tokens.size() != 2) lines.fail("expected 'carriers <count>'");
      const auto count = lines.number<std::size_t>(tokens[1]);
      if (count != vc.count()) lines.fail("carrier count does not match the vertex classes");
      CarrierLabels carriers{std::vector<int>(count, -1), std::vector<std::int64_t>(count, -1)};
      for (std::size_t i = 0; i < count; ++i) {
        lines.expect(tokens, "carrier line");
        if (tokens.size() != 4 || tokens[0] != "c") lines.fail("expected 'c <vertex> <dim> <top>'");
        const std::uint32_t v = vertex_class(lines, tokens[1], t, vc);
        const int d = lines.number<int>(tokens[2]);
        if (d < 0 || d > t.dimension()) lines.fail("carrier dimension out of range");
        carriers.dim[v] = d;
        carriers.top_facet[v] = lines.number<std::int64_t>(tokens[3]);
      }
      for (int d : carriers.dim) {
        if (d == -1) lines.fail("carrier section misses a vertex class");
      }
      doc.carriers = std::move(carriers);
      more = lines.next(tokens);
    } else if (head == "coloring") {
      if (tokens.size() != 2) lines.fail("expected 'coloring <count>'");
      const auto count = lines.number<std::size_t>(tokens[1]);
      std::vector<int> colors;
      colors.reserve(count);
      while (colors.size() < count) {
        lines.expect(tokens, "coloring values");
        for (const auto& tok : tokens) {
          const int v = lines.number<int>(tok);
          if (v != 0 && v != 1) lines.fail("coloring values must be 0 or 1");
          colors.push_back(v);
        }
      }
      if (colors.size() != count) lines.fail("too many coloring values");
      doc.coloring = std::move(colors);
      more = lines.next(tokens);
    } else if (head == "scheme") {
      if (tokens.size() != 2) lines.fail("expected 'scheme <name>'");
      scheme = tokens[1];
      more = lines.next(tokens);
    } else if (head == "k") {
      if (tokens.size() != 2) lines.fail("expected 'k <k>'");
      doc.partition = parse_partition(lines, tokens, more, t, vc, scheme);
    } else {
      lines.fail("unknown section '" + head + "'");
    }
  }
  return doc;
}

Document read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_document(in);
}

VertexPartition read_partition(std::istream& in, const Triangulation& t) {
  Lines lines(in);
  std::vector<std::string> tokens;
  std::string scheme = "explicit";
  if (!lines.next(tokens)) lines.fail("empty partition");
  if (tokens[0] == "scheme") {
    if (tokens.size() != 2) lines.fail("expected 'scheme <name>'");
    scheme = tokens[1];
    lines.expect(tokens, "'k <k>'");
  }
  if (tokens.size() != 2 || tokens[0] != "k") lines.fail("expected 'k <k>'");
  const VertexClasses vc(t);
  bool more = false;
  VertexPartition p = parse_partition(lines, tokens, more, t, vc, scheme);
  if (more) lines.fail("unexpected '" + tokens[0] + "' in partition");
  return p;
}

void write_partition(std::ostream& out, const Triangulation& t, const VertexPartition& p) {
  const VertexClasses vc(t);
  out << "scheme " << p.scheme << "\n";
  out << "k " << p.k << "\n";
  for (std::uint32_t v = 0; v < p.labels.size(); ++v) {
    out << "v " << format_key(vc.key(v)) << ' ' << p.labels[v] << "\n";
  }
}

void write_document(std::ostream& out, const Document& doc) {
  const Triangulation& t = doc.triangulation;
  const auto c = static_cast<std::size_t>(t.corners());
  out << "# multisect " << kFormatVersion << "\n";
  out << "dim " << t.dimension() << "\n";
  if (t.has_vertex_ids()) {
    out << "vertexfacets " << t.size() << "\n";
    for (FacetId f = 0; f < t.size(); ++f) {
      const auto vs = t.facet_vertices(f);
      for (std::size_t j = 0; j < c; ++j) out << (j ? " " : "") << vs[j];
      out << "\n";
    }
  } else {
    out << "facets " << t.size() << "\n";
    for (FacetId f = 0; f < t.size(); ++f) {
      for (int i = 0; i < t.corners(); ++i) {
        out << i << ' ' << t.target(f, i);
        for (Corner x : t.gluing(f, i)) out << ' ' << static_cast<int>(x);
        out << "\n";
      }
    }
  }
  if (!t.corner_labels().empty()) {
    out << "labels\n";
    for (std::size_t f = 0; f < t.size(); ++f) {
      for (std::size_t j = 0; j < c; ++j) out << (j ? " " : "") << static_cast<int>(t.corner_labels()[f * c + j]);
      out << "\n";
    }
  }
  if (doc.carriers || doc.partition) {
    const VertexClasses vc(t);
    if (doc.carriers) {
      out << "carriers " << doc.carriers->dim.size() << "\n";
      for (std::uint32_t v = 0; v < doc.carriers->dim.size(); ++v) {
        out << "c " << format_key(vc.key(v)) << ' ' << doc.carriers->dim[v] << ' ' << doc.carriers->top_facet[v]
            << "\n";
      }
    }
  }
  if (doc.coloring) {
    out << "coloring " << doc.coloring->size() << "\n";
    for (std::size_t i = 0; i < doc.coloring->size(); ++i) {
      out << (*doc.coloring)[i] << ((i + 1) % 32 == 0 || i + 1 == doc.coloring->size() ? "\n" : " ");
    }
  }
  if (doc.partition) write_partition(out, t, *doc.partition);
}

}  // namespace multisect
