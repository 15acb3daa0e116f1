#include "blowup/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "blowup/error.hpp"

namespace blowup {

Partition Partition::from_part_of(std::vector<PartId> part_of, PartId part_count) {
  PartId max_id = -1;
  for (PartId p : part_of) {
    if (p < kNoPart) throw InvalidInput("negative part id");
    max_id = std::max(max_id, p);
  }
  if (part_count < 0) part_count = max_id + 1;
  if (max_id >= part_count) throw InvalidInput("part id exceeds part count");
  return Partition{std::move(part_of), part_count};
}

std::vector<std::vector<Vertex>> Partition::parts() const {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(part_count));
  for (std::size_t v = 0; v < part_of.size(); ++v) {
    if (part_of[v] != kNoPart) out[static_cast<std::size_t>(part_of[v])].push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::size_t Partition::width() const {
  std::vector<std::size_t> size(static_cast<std::size_t>(part_count), 0);
  for (PartId p : part_of)
    if (p != kNoPart) ++size[static_cast<std::size_t>(p)];
  return size.empty() ? 0 : *std::max_element(size.begin(), size.end());
}

std::size_t Partition::assigned_count() const {
  return static_cast<std::size_t>(std::count_if(part_of.begin(), part_of.end(), [](PartId p) { return p != kNoPart; }));
}

Graph quotient(const Graph& g, const Partition& p, bool allow_unassigned) {
  if (p.part_of.size() != g.vertex_count()) throw InvalidInput("partition size differs from vertex count");
  for (std::size_t v = 0; v < p.part_of.size(); ++v) {
    const PartId id = p.part_of[v];
    if (id == kNoPart && !allow_unassigned) throw InvalidInput("vertex " + std::to_string(v) + " is in no part");
    if (id >= p.part_count) throw InvalidInput("vertex " + std::to_string(v) + " has an out-of-range part");
  }
  GraphBuilder b(static_cast<std::size_t>(p.part_count));
  for (const Edge& e : g.edges()) {
    const PartId a = p.part_of[static_cast<std::size_t>(e.u)];
    const PartId c = p.part_of[static_cast<std::size_t>(e.v)];
    if (a != kNoPart && c != kNoPart && a != c) b.add_edge(a, c);
  }
  return b.build();
}

TreeDecomposition restrict_decomposition(const TreeDecomposition& td, std::span<const Vertex> keep) {
  TreeDecomposition out = td;
  for (auto& bag : out.bags) {
    std::vector<Vertex> kept;
    for (Vertex v : bag) {
      auto it = std::lower_bound(keep.begin(), keep.end(), v);
      if (it != keep.end() && *it == v) kept.push_back(static_cast<Vertex>(it - keep.begin()));
    }
    bag = std::move(kept);
  }
  return out;
}

ValidationReport validate_h_partition(const Graph& g, const HPartitionCertificate& cert) {
  ValidationReport report;
  const auto& part_of = cert.partition.part_of;
  const std::size_t h_size = cert.h.vertex_count();
  if (part_of.size() != g.vertex_count()) {
    report.add("partition.size", std::to_string(part_of.size()) + " != " + std::to_string(g.vertex_count()));
    return report;
  }
  bool partition_ok = true;
  for (std::size_t v = 0; v < part_of.size(); ++v) {
    if (part_of[v] < 0 || static_cast<std::size_t>(part_of[v]) >= h_size) {
      report.add("partition.assignment", "vertex " + std::to_string(v));
      partition_ok = false;
    }
  }
  if (partition_ok) {
    std::set<std::pair<PartId, PartId>> reported;
    for (const Edge& e : g.edges()) {
      PartId a = part_of[static_cast<std::size_t>(e.u)];
      PartId b = part_of[static_cast<std::size_t>(e.v)];
      if (a == b || cert.h.has_edge(a, b)) continue;
      if (reported.emplace(std::min(a, b), std::max(a, b)).second) {
        report.add("quotient.containment", "parts " + std::to_string(std::min(a, b)) + "-" +
                                               std::to_string(std::max(a, b)) + " via edge " + std::to_string(e.u) +
                                               "-" + std::to_string(e.v));
      }
    }
    Partition sized{part_of, static_cast<PartId>(h_size)};
    const auto parts = sized.parts();
    for (std::size_t id = 0; id < parts.size(); ++id) {
      if (parts[id].size() > static_cast<std::size_t>(std::max(cert.claimed_width, 0))) {
        report.add("partition.width", "part " + std::to_string(id) + " has " + std::to_string(parts[id].size()) +
                                          " vertices > claimed " + std::to_string(cert.claimed_width));
      }
    }
    if (!cert.vertical_paths.empty()) {
      if (!cert.tree) {
        report.add("vertical_paths.tree", "vertical paths given without a tree");
      } else if (cert.tree->size() != g.vertex_count()) {
        report.add("vertical_paths.tree", "tree does not span the graph");
      } else {
        for (std::size_t id = 0; id < parts.size(); ++id) {
          if (parts[id].empty()) continue;
          auto it = cert.vertical_paths.find(static_cast<PartId>(id));
          static const std::vector<std::vector<Vertex>> kNone;
          const auto& paths = it == cert.vertical_paths.end() ? kNone : it->second;
          if (!check_vertical_path_cover(*cert.tree, parts[id], paths, cert.vertical_path_limit)) {
            report.add("vertical_paths.cover", "part " + std::to_string(id));
          }
        }
      }
    }
  }

  ValidationReport td_report = validate_tree_decomposition(cert.h, cert.h_td);
  for (const auto& v : td_report.violations) report.add("h_td." + v.rule, v.witness);
  report.width = td_report.width;
  report.adhesion = td_report.adhesion;

  if (cert.apex_part) {
    const PartId alpha = *cert.apex_part;
    if (alpha < 0 || static_cast<std::size_t>(alpha) >= h_size) {
      report.add("apex.range", std::to_string(alpha));
    } else if (td_report.valid) {
      std::vector<Vertex> keep;
      for (std::size_t v = 0; v < h_size; ++v)
        if (static_cast<PartId>(v) != alpha) keep.push_back(static_cast<Vertex>(v));
      const Graph h_minus = induced_subgraph(cert.h, keep);
      const TreeDecomposition td_minus = restrict_decomposition(cert.h_td, keep);
      ValidationReport apex_report = validate_tree_decomposition(h_minus, td_minus);
      for (const auto& v : apex_report.violations) report.add("apex.td." + v.rule, v.witness);
      if (apex_report.valid && td_minus.width() > cert.h_td.width() - 1) {
        report.add("apex.width", "tw(H - alpha) certificate width " + std::to_string(td_minus.width()) +
                                     " not below " + std::to_string(cert.h_td.width()));
      }
    }
  }
  return report;
}

ProductEmbedding embed_into_product(const Graph& g, const HPartitionCertificate& cert) {
  const ValidationReport report = validate_h_partition(g, cert);
  if (!report.valid) {
    throw InvalidInput("certificate invalid: " + report.violations.front().rule + " " + report.violations.front().witness);
  }
  ProductEmbedding out;
  out.blowup = std::max(cert.claimed_width, 1);
  out.coordinates.resize(g.vertex_count());
  std::vector<int> next(cert.h.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const PartId p = cert.partition.part_of[v];
    out.coordinates[v] = {p, next[static_cast<std::size_t>(p)]++};
  }
  // Every G-edge must map onto an edge of H ⊠ K_p.
  for (const Edge& e : g.edges()) {
    const auto& [pu, iu] = out.coordinates[static_cast<std::size_t>(e.u)];
    const auto& [pv, iv] = out.coordinates[static_cast<std::size_t>(e.v)];
    const bool adjacent = (pu == pv && iu != iv) || cert.h.has_edge(pu, pv);
    if (!adjacent) throw InvariantViolation("embedding lost edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  return out;
}

ValidationReport validate_layering(const Graph& g, const Layering& layering) {
  ValidationReport report;
  if (layering.layer_of.size() != g.vertex_count()) {
    report.add("layering.size", "layer count differs from vertex count");
    return report;
  }
  for (const Edge& e : g.edges()) {
    const int a = layering.layer_of[static_cast<std::size_t>(e.u)];
    const int b = layering.layer_of[static_cast<std::size_t>(e.v)];
    if (a < 0 || b < 0) {
      report.add("layering.assignment", std::to_string(a < 0 ? e.u : e.v));
    } else if (std::abs(a - b) > 1) {
      report.add("layering.edge_span", std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  return report;
}

bool check_vertical_path_cover(const RootedTree& tree, std::span<const Vertex> part,
                               const std::vector<std::vector<Vertex>>& paths, int limit) {
  if (static_cast<int>(paths.size()) > limit) return false;
  std::set<Vertex> covered;
  for (const auto& path : paths) {
    if (!is_vertical_path(tree, path)) return false;
    covered.insert(path.begin(), path.end());
  }
  return std::all_of(part.begin(), part.end(), [&](Vertex v) { return covered.contains(v); });
}

}  // namespace blowup
