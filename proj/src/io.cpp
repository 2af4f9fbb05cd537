#include "tgg/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tgg::io {

namespace {

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  append_size(out, n);
  int filled = 0;
  unsigned current = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      current = (current << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + current));
        filled = 0;
        current = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (current << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  auto take = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw std::invalid_argument("graph6 input truncated");
    const auto c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6 byte out of range");
    return c - 63u;
  };
  std::uint64_t n = take();
  if (n == 63) {
    int digits = 3;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      digits = 6;
    }
    n = 0;
    for (int i = 0; i < digits; ++i) n = (n << 6) | take();
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  int left = 0;
  std::uint64_t current = 0;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      if (left == 0) {
        current = take();
        left = 6;
      }
      --left;
      if ((current >> left) & 1u) edges.emplace_back(i, j);
    }
  }
  if (pos != text.size()) throw std::invalid_argument("trailing bytes after graph6 data");
  return Graph::from_edges(n, edges);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json labels = json::array();
  for (const auto& l : g.labels()) labels.push_back(to_string(l));
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}, {"labels", std::move(labels)}};
}

Graph graph_from_json(const json& j) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
  return Graph::from_edges(j.at("n").get<std::size_t>(), edges);
}

json design_to_json(const Design& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks()) blocks.push_back(b);
  return {{"v", d.point_count()}, {"b", d.block_count()}, {"blocks", std::move(blocks)}};
}

Design design_from_json(const json& j) {
  std::vector<Block> blocks;
  for (const auto& b : j.at("blocks")) blocks.push_back(b.get<Block>());
  return Design(j.at("v").get<std::size_t>(), std::move(blocks));
}

std::string incidence_csv(const Design& d) {
  std::string out;
  for (const auto& b : d.blocks()) {
    std::string row(2 * d.point_count(), ',');
    for (std::size_t x = 0; x < d.point_count(); ++x) row[2 * x] = '0';
    for (auto x : b) row[2 * x] = '1';
    row.back() = '\n';
    out += row;
  }
  return out;
}

json field_to_json(const Field& f) {
  return {{"p", f.characteristic()}, {"f", f.degree()}, {"modulus", f.modulus()}};
}

json subspace_to_json(const Subspace& s) { return s.basis().to_rows(); }

json point_to_json(const ProjectivePoint& p) {
  json out = json::array();
  for (auto x : p.rep) out.push_back(x.value);
  return out;
}

json semilinear_to_json(const SemilinearMap& m) { return {{"matrix", m.matrix().to_rows()}, {"frob", m.frob()}}; }

SemilinearMap semilinear_from_json(const FieldPtr& field, const json& j) {
  return SemilinearMap(matrix_from_json(field, j.at("matrix")), j.at("frob").get<std::uint32_t>());
}

json intersection_array_to_json(const IntersectionArray& a) {
  return {{"b", a.b}, {"c", a.c}, {"diameter", a.diameter}};
}

json not_drg_to_json(const NotDRG& w) {
  return {{"base", w.base},           {"vertex", w.vertex},      {"distance", w.distance},
          {"base_label", w.base_label}, {"vertex_label", w.vertex_label}, {"reason", w.reason}};
}

json certificate_to_json(const IsoCertificate& c) {
  return {{"source", c.source}, {"target", c.target}, {"mapping", c.mapping}};
}

json parameters_to_json(const DesignParameters& p) {
  return {{"v", p.v}, {"b", p.b}, {"r", p.r}, {"k", p.k}, {"lambda", p.lambda}};
}

Matrix matrix_from_json(const FieldPtr& field, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON list of rows");
  return Matrix::from_rows(field, j.get<std::vector<std::vector<std::uint32_t>>>());
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace tgg::io
