// Exit gate: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blowup/almost_embeddable.hpp"
#include "blowup/assembly.hpp"
#include "blowup/exact.hpp"
#include "blowup/generators.hpp"
#include "blowup/json_io.hpp"
#include "blowup/planar_partition.hpp"
#include "blowup/tree_separator.hpp"
#include "cli.hpp"

using namespace blowup;
using io::Json;

namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
  int failures = 0;

  void fail(const std::string& why) {
    if (failures++ < 3) detail += (detail.empty() ? "" : "; ") + why;
    pass = false;
  }
};

fs::path workdir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("blowup_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

Json load(const fs::path& p) { return io::read_file(p.string()); }

std::int64_t sqrt_ceil(std::int64_t x) {
  std::int64_t r = 0;
  while (r * r < x) ++r;
  return r;
}

// ---- independent checkers ----

// Tree-decomposition check straight from the definition.
bool td_ok(const Graph& g, const TreeDecomposition& td) {
  const std::size_t nodes = td.bags.size();
  if (nodes == 0 || td.tree.parent.size() != nodes) return false;
  std::vector<std::vector<std::size_t>> where(g.vertex_count());
  for (std::size_t x = 0; x < nodes; ++x)
    for (Vertex v : td.bags[x]) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) return false;
      where[static_cast<std::size_t>(v)].push_back(x);
    }
  for (const auto& w : where)
    if (w.empty()) return false;
  for (const Edge& e : g.edges()) {
    std::set<std::size_t> a(where[static_cast<std::size_t>(e.u)].begin(), where[static_cast<std::size_t>(e.u)].end());
    bool shared = false;
    for (std::size_t x : where[static_cast<std::size_t>(e.v)]) shared = shared || a.count(x);
    if (!shared) return false;
  }
  // Nodes holding v are connected: exactly one of them has its parent outside.
  for (const auto& w : where) {
    std::set<std::size_t> s(w.begin(), w.end());
    int tops = 0;
    for (std::size_t x : w) {
      const Vertex p = td.tree.parent[x];
      if (p < 0 || !s.count(static_cast<std::size_t>(p))) ++tops;
    }
    if (tops != 1) return false;
  }
  return true;
}

int td_width(const TreeDecomposition& td) {
  int w = -1;
  for (const auto& b : td.bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

Graph minus_vertex(const Graph& h, Vertex alpha, std::vector<Vertex>& keep) {
  keep.clear();
  for (std::size_t v = 0; v < h.vertex_count(); ++v)
    if (static_cast<Vertex>(v) != alpha) keep.push_back(static_cast<Vertex>(v));
  return induced_subgraph(h, keep);
}

// ---- criterion 1 ----

struct Corpus {
  std::vector<std::pair<fs::path, fs::path>> runs;  // (input, certificate)
};

Outcome criterion1(Corpus& corpus) {
  Outcome o;
  for (int side : {10, 20, 32}) {
    const fs::path in = workdir() / ("grid" + std::to_string(side) + ".json");
    const fs::path cert = workdir() / ("grid" + std::to_string(side) + ".cert.json");
    const fs::path stats = workdir() / ("grid" + std::to_string(side) + ".stats.json");
    const auto n = static_cast<std::int64_t>(side) * side;
    const std::int64_t d = sqrt_ceil(n) + 3;
    if (cli({"generate", "grid", std::to_string(side), std::to_string(side), "--out", in.string()}) != 0) {
      o.fail("generate failed");
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    const int rc = cli({"decompose", in.string(), "--d", std::to_string(d), "--out", cert.string(), "--stats", stats.string()});
    const int vrc = rc == 0 ? cli({"validate", in.string(), cert.string()}) : -1;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (rc != 0 || vrc != 0) {
      o.fail("grid " + std::to_string(side) + " decompose/validate exit " + std::to_string(rc) + "/" + std::to_string(vrc));
      continue;
    }
    corpus.runs.emplace_back(in, cert);
    const Json s = load(stats);
    const std::int64_t achieved = s["torsos"]["0"]["width"].get<std::int64_t>();
    const std::int64_t global = s["width"].get<std::int64_t>();
    const std::int64_t local_bound = 3 * (2 * sqrt_ceil(n) + d + 2);
    const std::int64_t global_bound = 81 * sqrt_ceil(n);
    if (achieved > local_bound) o.fail("grid " + std::to_string(side) + " achieved width " + std::to_string(achieved));
    if (global > global_bound) o.fail("grid " + std::to_string(side) + " global width " + std::to_string(global));
    if (secs >= 10.0) o.fail("grid " + std::to_string(side) + " took " + std::to_string(secs) + " s");
    o.detail += (o.detail.empty() ? "" : ", ") + std::to_string(side) + "x" + std::to_string(side) + ": width " +
                std::to_string(achieved) + "/" + std::to_string(local_bound) + " global " + std::to_string(global) + "/" +
                std::to_string(global_bound);
  }
  return o;
}

// ---- criterion 2 ----

Outcome criterion2(Corpus& corpus) {
  // Extra small instances so that the exact oracle sees plenty of H.
  const std::vector<std::vector<std::string>> gens = {
      {"grid", "2", "2"},           {"grid", "3", "3"},           {"grid", "4", "5"},
      {"stacked-triangulation", "8"}, {"stacked-triangulation", "30"}, {"apexed-planar", "12", "1"},
      {"apexed-planar", "40", "2"}, {"planar-with-vortex", "5", "4", "1", "0"}, {"planar-with-vortex", "8", "10", "2", "1"},
      {"clique-sum", "5", "6", "1", "1"}, {"clique-sum", "12", "8", "2", "2"}};
  int id = 0;
  for (const auto& g : gens) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const fs::path in = workdir() / ("c2_" + std::to_string(id) + ".json");
      const fs::path cert = workdir() / ("c2_" + std::to_string(id++) + ".cert.json");
      std::vector<std::string> args{"generate"};
      args.insert(args.end(), g.begin(), g.end());
      args.insert(args.end(), {"--seed", std::to_string(seed), "--out", in.string()});
      if (cli(args) == 0 && cli({"decompose", in.string(), "--out", cert.string()}) == 0) corpus.runs.emplace_back(in, cert);
    }
  }
  Outcome o;
  std::size_t small = 0, large = 0;
  for (const auto& [in, certp] : corpus.runs) {
    const Json doc = load(certp);
    const Graph h = io::graph_from_json(doc["H"]);
    const TreeDecomposition td = io::td_from_json(doc["H_td"]);
    if (doc["alpha"].is_null()) {
      o.fail(certp.filename().string() + " lacks alpha");
      continue;
    }
    const auto alpha = doc["alpha"].get<Vertex>();
    std::vector<Vertex> keep;
    const Graph h_minus = minus_vertex(h, alpha, keep);
    if (h.vertex_count() <= 15) {
      ++small;
      const int tw = exact_treewidth(h).treewidth;
      const int tw_minus = exact_treewidth(h_minus).treewidth;
      if (tw > 4 || tw_minus > 3) o.fail(certp.filename().string() + " tw " + std::to_string(tw) + "/" + std::to_string(tw_minus));
    } else {
      ++large;
      const TreeDecomposition td_minus = restrict_decomposition(td, keep);
      if (!td_ok(h, td) || td_width(td) > 4) o.fail(certp.filename().string() + " H certificate");
      if (!td_ok(h_minus, td_minus) || td_width(td_minus) > 3) o.fail(certp.filename().string() + " H-alpha certificate");
    }
  }
  if (corpus.runs.size() < 20) o.fail("too few certificates: " + std::to_string(corpus.runs.size()));
  if (o.pass) o.detail = std::to_string(small) + " small H by oracle, " + std::to_string(large) + " larger H by certificate";
  return o;
}

// ---- criterion 3 ----

std::vector<Rational> components_of(const Graph& t, const std::vector<Rational>& w, const std::set<Vertex>& z) {
  std::vector<Rational> out;
  std::vector<char> seen(t.vertex_count(), 0);
  for (std::size_t s = 0; s < t.vertex_count(); ++s) {
    if (seen[s] || z.count(static_cast<Vertex>(s))) continue;
    Rational sum = 0;
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      sum += w[static_cast<std::size_t>(v)];
      for (Vertex u : t.neighbors(v))
        if (!seen[static_cast<std::size_t>(u)] && !z.count(u)) {
          seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
    }
    out.push_back(sum);
  }
  return out;
}

bool separates(const Graph& t, const std::vector<Rational>& w, const std::set<Vertex>& z, const Rational& limit) {
  for (const Rational& c : components_of(t, w, z))
    if (c > limit) return false;
  return true;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(2024);
  int brute = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const bool tiny = trial % 4 == 0;
    const std::size_t n = tiny ? 1 + rng() % 12 : 1 + rng() % 200;
    const int q = tiny ? 1 + static_cast<int>(rng() % 3) : 1 + static_cast<int>(rng() % 10);
    GraphBuilder b(n);
    for (std::size_t v = 1; v < n; ++v) b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(rng() % v));
    const Graph t = b.build();
    std::vector<Rational> w(n);
    Rational total = 0;
    for (auto& x : w) {
      x = Rational(static_cast<std::int64_t>(rng() % 50), static_cast<std::int64_t>(1 + rng() % 7));
      total += x;
    }
    const WeightedTree wt(t, w);
    const std::vector<Vertex> z = tree_separator(wt, q);
    const std::set<Vertex> zs(z.begin(), z.end());
    const Rational limit = total / (q + 1);
    if (static_cast<int>(z.size()) > q) o.fail("trial " + std::to_string(trial) + ": |Z| > q");
    if (!separates(t, w, zs, limit)) o.fail("trial " + std::to_string(trial) + ": heavy component");
    if (n <= 12 && q <= 3) {
      ++brute;
      // Some subset of the returned size separates.
      bool found = false;
      const std::size_t size = z.size();
      for (std::uint32_t mask = 0; mask < (1u << n) && !found; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
        std::set<Vertex> cand;
        for (std::size_t v = 0; v < n; ++v)
          if (mask >> v & 1u) cand.insert(static_cast<Vertex>(v));
        found = separates(t, w, cand, limit);
      }
      if (!found) o.fail("trial " + std::to_string(trial) + ": brute force found no separator");
    }
  }
  if (o.pass) o.detail = "1000 trees, " + std::to_string(brute) + " brute-forced";
  return o;
}

// ---- criterion 4 ----

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(77);
  int beyond_one = 0;  // violations not explained by the extra boundary vertex per bag
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t b = 1 + rng() % 200;
    const int k = 1 + static_cast<int>(rng() % 5);
    // Bags: boundary vertex m plus at most k live interior vertices.
    Vortex v;
    Vertex next = static_cast<Vertex>(b);
    std::vector<Vertex> live;
    for (std::size_t m = 0; m < b; ++m) {
      std::erase_if(live, [&](Vertex) { return rng() % 3 == 0; });
      while (static_cast<int>(live.size()) < k && rng() % 4 != 0) live.push_back(next++);
      std::vector<Vertex> bag = live;
      bag.push_back(static_cast<Vertex>(m));
      std::sort(bag.begin(), bag.end());
      v.boundary.push_back(static_cast<Vertex>(m));
      v.bags.push_back(std::move(bag));
    }
    v.graph = Graph(static_cast<std::size_t>(next));
    const auto size = static_cast<std::int64_t>(next);
    const std::int64_t n = size + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(10001 - size));
    const std::int64_t kn = k * n;
    const VortexSplit s = split_vortex(v, k, n);

    auto report = [&](const std::string& why) {
      o.fail("trial " + std::to_string(trial) + " (b=" + std::to_string(b) + ",k=" + std::to_string(k) +
             ",n=" + std::to_string(n) + "): " + why);
    };
    auto upper_ok = [&](std::int64_t x) { return x <= k || (x - k) * (x - k) <= kn; };
    if (s.a.empty() || s.a[0] != 0) report("a_1 is not the first bag");
    std::set<Vertex> z(s.z.begin(), s.z.end());
    std::set<Vertex> expect_z;
    for (int i : s.a) expect_z.insert(v.bags[static_cast<std::size_t>(i)].begin(), v.bags[static_cast<std::size_t>(i)].end());
    if (z != expect_z) report("Z is not the union of the split bags");
    if (!upper_ok(static_cast<std::int64_t>(z.size()))) report("|Z| = " + std::to_string(z.size()) + " > sqrt(kn)+k");
    std::map<Vertex, int> count;
    for (Vertex x : z) ++count[x];
    for (std::size_t j = 0; j < s.y.size(); ++j) {
      const auto y = static_cast<std::int64_t>(s.y[j].size());
      if (j + 1 < s.y.size() && y * y < kn) report("|Y_" + std::to_string(j + 1) + "| < sqrt(kn)");
      if (!upper_ok(y)) {
        report("|Y_" + std::to_string(j + 1) + "| = " + std::to_string(y) + " > sqrt(kn)+k");
        if (y > k + 1 && (y - k - 1) * (y - k - 1) > kn) ++beyond_one;
      }
      for (Vertex x : s.y[j]) ++count[x];
    }
    for (Vertex x = 0; x < next; ++x)
      if (count[x] != 1) report("vertex " + std::to_string(x) + " not covered once");
    for (std::size_t m = 0; m < b; ++m) {
      std::size_t j = 0;
      while (j + 1 < s.a.size() && static_cast<std::size_t>(s.a[j + 1]) <= m) ++j;
      std::set<Vertex> yz(s.y[j].begin(), s.y[j].end());
      yz.insert(z.begin(), z.end());
      for (Vertex x : v.bags[m])
        if (!yz.count(x)) report("bag " + std::to_string(m) + " escapes Y_j ∪ Z");
    }
  }
  if (o.pass) o.detail = "500 vortices";
  else
    o.detail = std::to_string(o.failures) + " violations, " + std::to_string(beyond_one) +
               " beyond sqrt(kn)+k+1; " + o.detail;
  return o;
}

// ---- criterion 5 ----

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 1998;
    const PlanarEmbedding e = stacked_triangulation(n, rng());
    const RootedTree t = bfs_spanning_tree(e.graph, static_cast<Vertex>(rng() % n));
    const TripodPartitionResult r = planar_partition(e, t);
    const std::string tag = "trial " + std::to_string(trial) + " (n=" + std::to_string(n) + ")";
    // Each part is the disjoint union of at most 3 vertical paths of T.
    const auto parts = r.partition.parts();
    for (std::size_t p = 0; p < parts.size(); ++p) {
      auto it = r.path_cover.find(static_cast<PartId>(p));
      if (it == r.path_cover.end() || it->second.size() > 3) {
        o.fail(tag + ": part " + std::to_string(p) + " lacks a <=3 path cover");
        continue;
      }
      std::vector<Vertex> covered;
      for (const auto& path : it->second) {
        // Either top-down or bottom-up, never both.
        bool down = true, up = true;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          const Vertex a = path[i], c = path[i + 1];
          down = down && t.parent[static_cast<std::size_t>(c)] == a;
          up = up && t.parent[static_cast<std::size_t>(a)] == c;
        }
        if (!down && !up) o.fail(tag + ": path not vertical");
        covered.insert(covered.end(), path.begin(), path.end());
      }
      std::sort(covered.begin(), covered.end());
      if (covered != parts[p]) o.fail(tag + ": paths do not cover part " + std::to_string(p));
    }
    // Quotient inside H, planar edge count, width-3 decomposition.
    for (const Edge& ed : e.graph.edges()) {
      const PartId a = r.partition.part_of[static_cast<std::size_t>(ed.u)];
      const PartId c = r.partition.part_of[static_cast<std::size_t>(ed.v)];
      if (a != c && !r.h.has_edge(a, c)) o.fail(tag + ": quotient edge missing from H");
    }
    const std::size_t hv = r.h.vertex_count();
    if (hv >= 3 && r.h.edge_count() > 3 * hv - 6) o.fail(tag + ": |E(H)| > 3|V(H)|-6");
    if (!td_ok(r.h, r.h_td) || td_width(r.h_td) > 3) o.fail(tag + ": H decomposition");
  }
  if (o.pass) o.detail = "100 triangulations";
  return o;
}

// ---- criterion 6 ----

Outcome criterion6(Corpus& corpus) {
  Outcome o;
  std::mt19937_64 rng(6);
  int runs = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const std::size_t torsos = 5 + static_cast<std::size_t>(rng() % 46);
    const std::size_t size = 6 + rng() % 10;
    const int k = 1 + static_cast<int>(rng() % 3);
    const fs::path in = workdir() / ("cs_" + std::to_string(trial) + ".json");
    const fs::path cert = workdir() / ("cs_" + std::to_string(trial) + ".cert.json");
    const fs::path stats = workdir() / ("cs_" + std::to_string(trial) + ".stats.json");
    const std::string tag = "instance " + std::to_string(trial);
    if (cli({"generate", "clique-sum", std::to_string(torsos), std::to_string(size), "2", std::to_string(k), "--seed",
             std::to_string(rng() % 100000), "--out", in.string()}) != 0) {
      o.fail(tag + ": generate");
      continue;
    }
    const int rc = cli({"decompose", in.string(), "--out", cert.string(), "--stats", stats.string()});
    if (rc != 0) {
      o.fail(tag + ": decompose exit " + std::to_string(rc));
      continue;
    }
    if (cli({"validate", in.string(), cert.string()}) != 0) o.fail(tag + ": validate");
    corpus.runs.emplace_back(in, cert);
    ++runs;
    const Json input = load(in);
    const Json s = load(stats);
    const Json c = load(cert);
    const std::int64_t n = input["graph"]["n"].get<std::int64_t>();
    const Json& p = input["params"];
    const std::int64_t a = p["a"].get<std::int64_t>(), b = p["b"].get<std::int64_t>(), kk = p["k"].get<std::int64_t>();
    // Adhesion of the supplied decomposition.
    const TreeDecomposition td = io::td_from_json(input["td"]);
    if (td.adhesion() > kk) o.fail(tag + ": adhesion above k");
    // Width and α bounds recomputed from the certificate itself.
    std::map<std::int64_t, std::int64_t> sizes;
    for (const auto& [v, part] : c["partition"].items()) ++sizes[part.get<std::int64_t>()];
    std::int64_t width = 0;
    for (const auto& [part, sz] : sizes) width = std::max(width, sz);
    const std::int64_t alpha = sizes[c["alpha"].get<std::int64_t>()];
    if (width > std::max(b, (a + 2 * kk + 1) * sqrt_ceil(n))) o.fail(tag + ": width bound");
    if (alpha * alpha > (a + 2 * kk + 1) * (a + 2 * kk + 1) * n) o.fail(tag + ": alpha bound");
    const std::int64_t q = s["q"].get<std::int64_t>();
    const std::int64_t sep = s["separator_sum"].get<std::int64_t>();
    if (s["bag_sum"].get<std::int64_t>() > n + kk * q) o.fail(tag + ": sum of |B_z|");
    if (sep * sep > (a + kk + 1) * (a + kk + 1) * n) o.fail(tag + ": sum of |S_z|");
    if (s["q_size"].get<std::int64_t>() > kk * (q + 1)) o.fail(tag + ": |Q|");
  }
  if (o.pass) o.detail = std::to_string(runs) + " clique-sums";
  return o;
}

// ---- criterion 7 ----

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(7);
  int tw_checks = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    GraphBuilder b(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    const Graph g = b.build();
    const PartId parts = 1 + static_cast<PartId>(rng() % n);
    std::vector<PartId> part_of(n);
    for (std::size_t v = 0; v < n; ++v) part_of[v] = v < static_cast<std::size_t>(parts) ? static_cast<PartId>(v) : static_cast<PartId>(rng() % static_cast<std::uint64_t>(parts));
    HPartitionCertificate c;
    c.partition = Partition::from_part_of(part_of, parts);
    c.h = quotient(g, c.partition);
    c.h_td = decomposition_from_elimination(c.h, exact_treewidth(c.h).elimination_order);
    c.claimed_width = static_cast<int>(c.partition.width());
    const ProductEmbedding pe = embed_into_product(g, c);
    const int p = pe.blowup;
    // H ⊠ K_p by definition: distinct pairs equal-or-adjacent in both coordinates.
    const std::size_t hn = c.h.vertex_count();
    auto adjacent = [&](Vertex x, Vertex y) {
      if (x == y) return false;
      const Vertex hx = x / p, hy = y / p;
      return hx == hy || c.h.has_edge(hx, hy);
    };
    std::set<Vertex> images;
    for (std::size_t v = 0; v < n; ++v) {
      const Vertex x = pe.encoded(static_cast<Vertex>(v));
      if (x < 0 || static_cast<std::size_t>(x) >= hn * static_cast<std::size_t>(p)) o.fail("image out of range");
      if (x / p != part_of[v]) o.fail("image leaves its part");
      images.insert(x);
    }
    if (images.size() != n) o.fail("embedding not injective");
    for (const Edge& e : g.edges())
      if (!adjacent(pe.encoded(e.u), pe.encoded(e.v))) o.fail("trial " + std::to_string(trial) + ": edge not in H ⊠ K_p");
    for (int m = 1; hn * static_cast<std::size_t>(m) <= 12; ++m) {
      ++tw_checks;
      if (!check_blowup_tw_bound(c.h, m)) o.fail("tw bound fails");
      const Graph prod = strong_product(c.h, complete_graph(static_cast<std::size_t>(m)));
      if (exact_treewidth(prod).treewidth > (exact_treewidth(c.h).treewidth + 1) * m - 1) o.fail("product tw above bound");
    }
  }
  if (o.pass) o.detail = "200 instances, " + std::to_string(tw_checks) + " blowup bounds";
  return o;
}

// ---- criterion 8 ----

Outcome criterion8() {
  Outcome o;
  const int tw2 = exact_treewidth(grid_graph(2, 2)).treewidth;
  const int tw3 = exact_treewidth(grid_graph(3, 3)).treewidth;
  if (tw2 != 2) o.fail("tw(2x2) = " + std::to_string(tw2));
  if (tw3 != 3) o.fail("tw(3x3) = " + std::to_string(tw3));
  if (o.pass) o.detail = "tw(2x2) = 2, tw(3x3) = 3";
  return o;
}

}  // namespace

int main() {
  Corpus corpus;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"grid theorem bounds", [&] { return criterion1(corpus); }},
      {"quotient treewidth", [&] { return criterion2(corpus); }},
      {"tree separator suite", [] { return criterion3(); }},
      {"vortex split suite", [] { return criterion4(); }},
      {"planar structure suite", [] { return criterion5(); }},
      {"clique-sum end-to-end", [&] { return criterion6(corpus); }},
      {"product correspondence", [] { return criterion7(); }},
      {"grid treewidth", [] { return criterion8(); }},
  };
  // Criterion 2 inspects certificates from 1 and 6 as well.
  const std::vector<int> order = {0, 2, 3, 4, 5, 6, 7, 1};
  std::vector<Outcome> results(criteria.size());
  for (int i : order) {
    try {
      results[static_cast<std::size_t>(i)] = criteria[static_cast<std::size_t>(i)].second();
    } catch (const std::exception& e) {
      results[static_cast<std::size_t>(i)].fail(std::string("exception: ") + e.what());
    }
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome& r = results[i];
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (r.pass ? "PASS" : "FAIL");
    if (!r.detail.empty()) std::cout << " - " << r.detail;
    std::cout << "\n";
    failed += r.pass ? 0 : 1;
  }
  std::error_code ec;
  fs::remove_all(workdir(), ec);
  return failed == 0 ? 0 : 1;
}
