#include "blowup/planar_partition.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "blowup/error.hpp"

namespace blowup {

using Dart = DartStructure::Dart;

HPartitionCertificate TripodPartitionResult::certificate() const {
  HPartitionCertificate cert;
  cert.partition = partition;
  cert.h = h;
  cert.h_td = h_td;
  cert.claimed_width = static_cast<int>(partition.width());
  cert.vertical_paths = path_cover;
  cert.tree = tree;
  cert.vertical_path_limit = 3;
  return cert;
}

namespace {

// Closed walk of darts with the region's faces on the face side of each dart.
struct Region {
  std::vector<Dart> boundary;
  NodeId node = 0;
};

class TripodBuilder {
 public:
  TripodBuilder(const PlanarEmbedding& tri, const RootedTree& tree)
      : tri_(tri), darts_(tri), tree_(tree), n_(tri.graph.vertex_count()) {
    face_darts_.assign(static_cast<std::size_t>(darts_.face_count()), {});
    std::vector<int> filled(face_darts_.size(), 0);
    for (std::size_t d = 0; d < darts_.dart_count(); ++d) {
      const auto f = static_cast<std::size_t>(darts_.face_of(static_cast<Dart>(d)));
      if (filled[f] >= 3) throw InvariantViolation("non-triangular face in triangulation");
      face_darts_[f][static_cast<std::size_t>(filled[f]++)] = static_cast<Dart>(d);
    }
    // Store each face's darts in walk order.
    for (auto& fd : face_darts_) {
      const Dart second = darts_.next_in_face(fd[0]);
      fd = {fd[0], second, darts_.next_in_face(second)};
    }
    dart_mark_.assign(darts_.dart_count(), 0);
    on_boundary_.assign(n_, 0);
    position_.assign(n_, 0);
    seen_vertex_.assign(n_, 0);
    face_seen_.assign(face_darts_.size(), 0);
    fb_stamp_.assign(n_, 0);
    fb_.assign(n_, kNoVertex);
    part_of_.assign(n_, kNoPart);
  }

  void run() {
    const Vertex r = tree_.root;
    const Dart d0 = darts_.first_dart(r);
    const Dart d1 = darts_.next_in_face(d0);
    const Dart d2 = darts_.next_in_face(d1);
    const std::array<Vertex, 3> outer{darts_.tail(d0), darts_.tail(d1), darts_.tail(d2)};
    new_part({{outer[0]}, {outer[1]}, {outer[2]}});
    bags_.push_back({0});
    parents_.push_back(kNoVertex);

    std::vector<Region> work;
    work.push_back(Region{{darts_.twin(d2), darts_.twin(d1), darts_.twin(d0)}, 0});
    while (!work.empty()) {
      Region region = std::move(work.back());
      work.pop_back();
      process(region, work);
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (part_of_[v] == kNoPart) throw InvariantViolation("vertex " + std::to_string(v) + " left unassigned");
    }
  }

  TripodPartitionResult result() {
    TripodPartitionResult out;
    out.partition = Partition{part_of_, static_cast<PartId>(cover_.size())};
    out.h = quotient(tri_.graph, out.partition);
    out.h_td.tree = RootedTree{0, parents_};
    for (auto& bag : bags_) std::sort(bag.begin(), bag.end());
    out.h_td.bags = bags_;
    for (std::size_t i = 0; i < cover_.size(); ++i) out.path_cover[static_cast<PartId>(i)] = cover_[i];
    out.tree = tree_;
    const ValidationReport report = validate_tree_decomposition(out.h, out.h_td);
    if (!report.valid) throw InvariantViolation("tripod decomposition invalid: " + report.violations.front().rule);
    if (out.h_td.width() > 3) throw InvariantViolation("tripod decomposition wider than 3");
    return out;
  }

 private:
  PartId new_part(std::vector<std::vector<Vertex>> paths) {
    const auto id = static_cast<PartId>(cover_.size());
    for (const auto& path : paths)
      for (Vertex v : path) part_of_[static_cast<std::size_t>(v)] = id;
    cover_.push_back(std::move(paths));
    return id;
  }

  bool boundary(Vertex v) const { return on_boundary_[static_cast<std::size_t>(v)] == stamp_; }

  // First boundary vertex on the tree path from an interior vertex.
  Vertex first_boundary(Vertex v) {
    std::vector<Vertex> trail;
    Vertex w = v;
    while (!boundary(w) && fb_stamp_[static_cast<std::size_t>(w)] != stamp_) {
      trail.push_back(w);
      w = tree_.parent[static_cast<std::size_t>(w)];
      if (w == kNoVertex) throw InvariantViolation("tree path escapes the region");
    }
    const Vertex hit = boundary(w) ? w : fb_[static_cast<std::size_t>(w)];
    for (Vertex t : trail) {
      fb_stamp_[static_cast<std::size_t>(t)] = stamp_;
      fb_[static_cast<std::size_t>(t)] = hit;
    }
    return hit;
  }

  void process(const Region& region, std::vector<Region>& work) {
    ++stamp_;
    const std::size_t len = region.boundary.size();
    for (std::size_t i = 0; i < len; ++i) {
      const Dart d = region.boundary[i];
      dart_mark_[static_cast<std::size_t>(d)] = stamp_;
      on_boundary_[static_cast<std::size_t>(darts_.tail(d))] = stamp_;
      position_[static_cast<std::size_t>(darts_.tail(d))] = i;
    }

    std::vector<int> faces;
    bool has_interior = false;
    for (Dart d : region.boundary) {
      const int f = darts_.face_of(d);
      if (face_seen_[static_cast<std::size_t>(f)] == stamp_) continue;
      face_seen_[static_cast<std::size_t>(f)] = stamp_;
      faces.push_back(f);
    }
    for (std::size_t head = 0; head < faces.size(); ++head) {
      for (Dart d : face_darts_[static_cast<std::size_t>(faces[head])]) {
        const Vertex v = darts_.tail(d);
        if (!boundary(v) && seen_vertex_[static_cast<std::size_t>(v)] != stamp_) {
          seen_vertex_[static_cast<std::size_t>(v)] = stamp_;
          has_interior = true;
        }
        if (dart_mark_[static_cast<std::size_t>(d)] == stamp_) continue;
        const int g = darts_.face_of(darts_.twin(d));
        if (face_seen_[static_cast<std::size_t>(g)] == stamp_) continue;
        face_seen_[static_cast<std::size_t>(g)] = stamp_;
        faces.push_back(g);
      }
    }
    if (!has_interior) return;

    // Split the boundary into three coloured arcs, each inside one part.
    std::vector<PartId> bpart(len);
    for (std::size_t i = 0; i < len; ++i) bpart[i] = part_of_[static_cast<std::size_t>(darts_.tail(region.boundary[i]))];
    std::size_t start = 0;
    for (std::size_t i = 0; i < len; ++i) {
      if (bpart[i] != bpart[(i + len - 1) % len]) {
        start = i;
        break;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> runs;  // (start, length)
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t i = (start + k) % len;
      if (runs.empty() || bpart[i] != bpart[(i + len - 1) % len]) runs.emplace_back(i, 0);
      ++runs.back().second;
    }
    if (runs.size() > 3) throw InvariantViolation("region boundary meets more than three parts");
    if (runs.size() == 1) {
      runs = {{0, len / 3}, {len / 3, len / 3}, {2 * (len / 3), len - 2 * (len / 3)}};
    } else if (runs.size() == 2) {
      const std::size_t big = runs[0].second >= runs[1].second ? 0 : 1;
      const auto [s, l] = runs[big];
      runs[big] = {s, l / 2};
      runs.insert(runs.begin() + static_cast<std::ptrdiff_t>(big) + 1, {(s + l / 2) % len, l - l / 2});
    }
    std::vector<int> arc(len);
    for (std::size_t a = 0; a < runs.size(); ++a)
      for (std::size_t k = 0; k < runs[a].second; ++k) arc[(runs[a].first + k) % len] = static_cast<int>(a);
    auto colour = [&](Vertex v) {
      const Vertex b = boundary(v) ? v : first_boundary(v);
      return arc[position_[static_cast<std::size_t>(b)]];
    };

    // Sperner: some inner face sees all three colours.
    const std::array<Dart, 3>* tau = nullptr;
    for (int f : faces) {
      const auto& fd = face_darts_[static_cast<std::size_t>(f)];
      const int c0 = colour(darts_.tail(fd[0]));
      const int c1 = colour(darts_.tail(fd[1]));
      const int c2 = colour(darts_.tail(fd[2]));
      if (c0 != c1 && c1 != c2 && c0 != c2) {
        tau = &fd;
        break;
      }
    }
    if (tau == nullptr) throw InvariantViolation("no trichromatic face in region");

    std::array<std::vector<Vertex>, 3> legs;
    std::array<Vertex, 3> foot{};
    for (std::size_t i = 0; i < 3; ++i) {
      Vertex w = darts_.tail((*tau)[i]);
      while (!boundary(w)) {
        legs[i].push_back(w);
        w = tree_.parent[static_cast<std::size_t>(w)];
      }
      foot[i] = w;
    }

    NodeId child = region.node;
    std::vector<std::vector<Vertex>> paths;
    for (const auto& leg : legs)
      if (!leg.empty()) paths.push_back(leg);
    if (!paths.empty()) {
      const PartId y = new_part(std::move(paths));
      std::vector<Vertex> bag;
      for (const auto& run : runs) bag.push_back(bpart[run.first]);
      bag.push_back(y);
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      child = static_cast<NodeId>(bags_.size());
      bags_.push_back(std::move(bag));
      parents_.push_back(region.node);
    }

    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t j = (i + 1) % 3;
      std::vector<Vertex> cycle = legs[i];
      std::size_t p = position_[static_cast<std::size_t>(foot[i])];
      cycle.push_back(foot[i]);
      while (darts_.tail(region.boundary[p]) != foot[j]) {
        cycle.push_back(darts_.head(region.boundary[p]));
        p = (p + 1) % len;
      }
      cycle.insert(cycle.end(), legs[j].rbegin(), legs[j].rend());
      if (cycle.size() <= 2) continue;
      Region sub{{}, child};
      sub.boundary.reserve(cycle.size());
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        sub.boundary.push_back(darts_.dart(cycle[k], cycle[(k + 1) % cycle.size()]));
      }
      work.push_back(std::move(sub));
    }
  }

  const PlanarEmbedding& tri_;
  DartStructure darts_;
  const RootedTree& tree_;
  std::size_t n_;
  std::vector<std::array<Dart, 3>> face_darts_;
  int stamp_ = 0;
  std::vector<int> dart_mark_;
  std::vector<int> on_boundary_;
  std::vector<std::size_t> position_;
  std::vector<int> seen_vertex_;
  std::vector<int> face_seen_;
  std::vector<int> fb_stamp_;
  std::vector<Vertex> fb_;
  std::vector<PartId> part_of_;
  std::vector<std::vector<std::vector<Vertex>>> cover_;
  std::vector<std::vector<Vertex>> bags_;
  std::vector<Vertex> parents_;
};

}  // namespace

TripodPartitionResult planar_partition(const PlanarEmbedding& embedding, const RootedTree& tree) {
  const Graph& g = embedding.graph;
  if (g.vertex_count() == 0) throw InvalidInput("planar partition of the empty graph");
  if (!is_connected(g)) throw InvalidInput("planar partition needs a connected graph");
  if (!is_bfs_spanning_tree(g, tree)) throw InvalidInput("tree is not a BFS spanning tree of the graph");

  if (g.vertex_count() <= 2) {
    TripodPartitionResult out;
    std::vector<Vertex> path{tree.root};
    if (g.vertex_count() == 2) path.push_back(1 - tree.root);
    out.partition = Partition{std::vector<PartId>(g.vertex_count(), 0), 1};
    out.h = Graph::from_edges(1, {});
    out.h_td = TreeDecomposition::single_bag({0});
    out.path_cover[0] = {path};
    out.tree = tree;
    return out;
  }

  const PlanarEmbedding tri = triangulate_planar(embedding);
  TripodBuilder builder(tri, tree);
  builder.run();
  return builder.result();
}

}  // namespace blowup
