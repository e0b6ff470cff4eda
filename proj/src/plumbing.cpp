#include "pinchlink/plumbing.hpp"

#include "pinchlink/error.hpp"
#include "pinchlink/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace pinchlink {

PlumbingGraph::PlumbingGraph(std::vector<PlumbingVertex> vertices, std::vector<PlumbingEdge> edges,
                             std::vector<PlumbingArrow> arrows)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), arrows_(std::move(arrows)) {
  const auto n = vertices_.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (vertices_[v].genus < 0) throw InputError("vertex " + std::to_string(v) + " has negative genus");
  }
  for (auto& [a, b] : edges_) {
    if (a >= n || b >= n) {
      throw InputError("edge (" + std::to_string(a) + ", " + std::to_string(b) + ") references a missing vertex");
    }
    if (a == b) throw InputError("loop at vertex " + std::to_string(a) + ": plumbing graphs must be forests");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("repeated edge: plumbing graphs must be forests");
  }

  // Union-find cycle check.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : edges_) {
    const auto ra = root(a);
    const auto rb = root(b);
    if (ra == rb) throw InputError("plumbing graph contains a cycle: only forests are supported");
    parent[ra] = rb;
  }

  std::unordered_set<std::string> labels;
  for (const auto& arrow : arrows_) {
    if (arrow.vertex >= n) throw InputError("arrow '" + arrow.label + "' references a missing vertex");
    if (arrow.label.empty()) throw InputError("arrow with an empty label");
    if (!labels.insert(arrow.label).second) throw InputError("repeated arrow label '" + arrow.label + "'");
  }
}

std::vector<std::vector<std::size_t>> PlumbingGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices_.size());
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::size_t PlumbingGraph::valence(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const PlumbingEdge& e) { return e.first == v || e.second == v; }));
}

std::optional<std::size_t> PlumbingGraph::find_arrow(const std::string& label) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].label == label) return a;
  }
  return std::nullopt;
}

int PlumbingGraph::total_genus() const {
  int total = 0;
  for (const auto& v : vertices_) total += v.genus;
  return total;
}

std::vector<std::vector<std::size_t>> PlumbingGraph::components() const {
  const auto adj = adjacency();
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < vertices_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component{start};
    seen[start] = true;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (auto w : adj[component[i]]) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

std::size_t PlumbingGraph::component_of(std::size_t v) const {
  const auto comps = components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (std::binary_search(comps[c].begin(), comps[c].end(), v)) return c;
  }
  throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
}

PlumbingGraph PlumbingGraph::induced(const std::vector<std::size_t>& keep) const {
  auto sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  constexpr auto absent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(vertices_.size(), absent);
  std::vector<PlumbingVertex> vertices;
  for (auto v : sorted) {
    index.at(v) = vertices.size();
    vertices.push_back(vertices_[v]);
  }
  std::vector<PlumbingEdge> edges;
  for (const auto& [a, b] : edges_) {
    if (index[a] != absent && index[b] != absent) edges.emplace_back(index[a], index[b]);
  }
  std::vector<PlumbingArrow> arrows;
  for (const auto& arrow : arrows_) {
    if (index[arrow.vertex] != absent) arrows.push_back({index[arrow.vertex], arrow.label});
  }
  return {std::move(vertices), std::move(edges), std::move(arrows)};
}

Slope::Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (std::gcd(p, q) != 1) {
    throw InputError("slope (" + std::to_string(p) + ", " + std::to_string(q) + ") is not primitive");
  }
  if (p_ < 0 || (p_ == 0 && q_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  IntMatrix a = IntMatrix::Zero(n, n);
  for (Eigen::Index v = 0; v < n; ++v) {
    a(v, v) = static_cast<long>(g.vertices()[static_cast<std::size_t>(v)].euler);
  }
  for (const auto& [x, y] : g.edges()) {
    const auto i = static_cast<Eigen::Index>(x);
    const auto j = static_cast<Eigen::Index>(y);
    a(i, j) += 1;
    a(j, i) += 1;
  }
  return a;
}

IntVector H1Presentation::slope_class(std::size_t a, std::int64_t p, std::int64_t q) const {
  IntVector out = boundary.at(a).meridian * Integer(static_cast<long>(p));
  out += boundary.at(a).fiber * Integer(static_cast<long>(q));
  return out;
}

H1Presentation H1Presentation::filled(std::size_t a, const Slope& s) const {
  H1Presentation out = *this;
  const auto cols = relations.cols();
  out.relations.conservativeResize(Eigen::NoChange, cols + 1);
  out.relations.col(cols) = slope_class(a, s.p(), s.q());
  return out;
}

AbelianGroup H1Presentation::group() const { return lattice::cokernel(relations); }

H1Presentation h1_presentation(const PlumbingGraph& g) {
  H1Presentation out;
  out.vertex_count = g.vertex_count();
  out.arrow_count = g.arrows().size();
  out.genus_symbols = 2 * static_cast<std::size_t>(g.total_genus());
  const auto generators = static_cast<Eigen::Index>(out.generator_count());
  const auto n = static_cast<Eigen::Index>(out.vertex_count);

  out.relations = IntMatrix::Zero(generators, n);
  out.relations.topLeftCorner(n, n) = intersection_matrix(g);
  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    const auto row = static_cast<Eigen::Index>(out.meridian_index(a));
    const auto col = static_cast<Eigen::Index>(g.arrows()[a].vertex);
    out.relations(row, col) += 1;
  }

  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    H1Presentation::BoundaryClasses classes{g.arrows()[a].label, IntVector::Zero(generators),
                                            IntVector::Zero(generators)};
    classes.meridian(static_cast<Eigen::Index>(out.meridian_index(a))) = 1;
    classes.fiber(static_cast<Eigen::Index>(out.fiber_index(g.arrows()[a].vertex))) = 1;
    out.boundary.push_back(std::move(classes));
  }
  return out;
}

AbelianGroup first_homology(const PlumbingGraph& g) { return h1_presentation(g).group(); }

std::vector<std::int64_t> negative_continued_fraction(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InputError("continued fraction needs a positive denominator");
  std::vector<std::int64_t> out;
  while (true) {
    // b = ceil(num/den), bumped by one when exact division is impossible so
    // the remainder b - num/den lies in (0, 1).
    std::int64_t floor_div = num / den;
    if (num % den != 0 && num < 0) floor_div -= 1;
    if (num % den == 0) {
      out.push_back(num / den);
      return out;
    }
    const std::int64_t b = floor_div + 1;
    out.push_back(b);
    const std::int64_t next_num = den;
    const std::int64_t next_den = b * den - num;
    num = next_num;
    den = next_den;
  }
}

PlumbingGraph dehn_fill(const PlumbingGraph& g, const std::string& arrow, const Slope& s) {
  const auto index = g.find_arrow(arrow);
  if (!index) throw InputError("unknown arrow label '" + arrow + "'");
  if (s.is_degenerate()) {
    throw InputError("degenerate filling: slope (1, 0) on arrow '" + arrow + "' produces an S^1 x S^2 summand");
  }
  // -p/q with a positive denominator.
  std::int64_t num = -s.p();
  std::int64_t den = s.q();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto coefficients = negative_continued_fraction(num, den);

  auto vertices = g.vertices();
  auto edges = g.edges();
  auto arrows = g.arrows();
  std::size_t attach = arrows[*index].vertex;
  arrows.erase(arrows.begin() + static_cast<std::ptrdiff_t>(*index));
  for (auto b : coefficients) {
    vertices.push_back({-b, 0});
    edges.emplace_back(attach, vertices.size() - 1);
    attach = vertices.size() - 1;
  }
  return {std::move(vertices), std::move(edges), std::move(arrows)};
}

std::string to_string(ReductionMove::Kind kind) {
  switch (kind) {
    case ReductionMove::Kind::blow_down:
      return "blow-down";
    case ReductionMove::Kind::isolated_sphere:
      return "isolated-sphere";
    case ReductionMove::Kind::zero_chain_sphere:
      return "zero-chain-sphere";
  }
  return "unknown";
}

namespace {

// Mutable forest used while reducing; vertices are tombstoned, not erased.
struct WorkGraph {
  std::vector<PlumbingVertex> vertices;
  std::vector<bool> alive;
  std::vector<std::set<std::size_t>> adj;

  explicit WorkGraph(const PlumbingGraph& g)
      : vertices(g.vertices()), alive(g.vertex_count(), true), adj(g.vertex_count()) {
    for (const auto& [a, b] : g.edges()) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
  }

  void remove(std::size_t v) {
    for (auto w : adj[v]) adj[w].erase(v);
    adj[v].clear();
    alive[v] = false;
  }

  [[nodiscard]] std::size_t live_count() const {
    return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
  }

  [[nodiscard]] std::int64_t weight_mass() const {
    std::int64_t total = 0;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (alive[v]) total += vertices[v].euler < 0 ? -vertices[v].euler : vertices[v].euler;
    }
    return total;
  }

  [[nodiscard]] bool is_sphere_vertex(std::size_t v) const {
    return alive[v] && vertices[v].genus == 0 && (vertices[v].euler == 1 || vertices[v].euler == -1);
  }

  [[nodiscard]] bool is_zero_leaf(std::size_t v) const {
    return alive[v] && vertices[v].genus == 0 && vertices[v].euler == 0 && adj[v].size() == 1;
  }

  [[nodiscard]] PlumbingGraph freeze() const {
    std::vector<std::size_t> index(vertices.size(), 0);
    std::vector<PlumbingVertex> out_vertices;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (!alive[v]) continue;
      index[v] = out_vertices.size();
      out_vertices.push_back(vertices[v]);
    }
    std::vector<PlumbingEdge> out_edges;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      for (auto w : adj[v]) {
        if (v < w) out_edges.emplace_back(index[v], index[w]);
      }
    }
    return {std::move(out_vertices), std::move(out_edges)};
  }
};

bool apply_one_move(WorkGraph& work, std::vector<ReductionMove>& moves, std::size_t& spheres) {
  const auto record = [&](ReductionMove::Kind kind, const PlumbingVertex& removed, std::size_t valence) {
    moves.push_back({kind, removed, valence, work.live_count(), work.weight_mass()});
  };

  for (std::size_t v = 0; v < work.vertices.size(); ++v) {
    if (!work.is_sphere_vertex(v) || work.adj[v].size() > 2) continue;
    const auto removed = work.vertices[v];
    const std::vector<std::size_t> neighbors(work.adj[v].begin(), work.adj[v].end());
    work.remove(v);
    for (auto w : neighbors) work.vertices[w].euler -= removed.euler;
    if (neighbors.size() == 2) {
      work.adj[neighbors[0]].insert(neighbors[1]);
      work.adj[neighbors[1]].insert(neighbors[0]);
    }
    if (neighbors.empty()) {
      ++spheres;
      record(ReductionMove::Kind::isolated_sphere, removed, 0);
    } else {
      record(ReductionMove::Kind::blow_down, removed, neighbors.size());
    }
    return true;
  }

  for (std::size_t v = 0; v < work.vertices.size(); ++v) {
    if (!work.is_zero_leaf(v)) continue;
    const auto w = *work.adj[v].begin();
    if (!work.is_zero_leaf(w)) continue;
    const auto removed = work.vertices[v];
    work.remove(v);
    work.remove(w);
    ++spheres;
    record(ReductionMove::Kind::zero_chain_sphere, removed, 1);
    return true;
  }
  return false;
}

}  // namespace

ReductionResult reduce(const PlumbingGraph& g) {
  if (g.has_arrows()) throw InputError("reduce needs a closed plumbing graph (arrows present)");
  WorkGraph work(g);
  ReductionResult out;
  while (apply_one_move(work, out.moves, out.sphere_components)) {
  }
  out.graph = work.freeze();
#ifndef NDEBUG
  if (first_homology(out.graph) != first_homology(g)) {
    throw InvariantViolation("reduction changed H_1");
  }
#endif
  return out;
}

PlumbingGraph blow_up_leaf(const PlumbingGraph& g, std::size_t v, int sign) {
  if (v >= g.vertex_count()) throw InputError("blow-up at a missing vertex");
  if (sign != 1 && sign != -1) throw InputError("blow-up sign must be +1 or -1");
  auto vertices = g.vertices();
  auto edges = g.edges();
  vertices[v].euler += sign;
  vertices.push_back({sign, 0});
  edges.emplace_back(v, vertices.size() - 1);
  return {std::move(vertices), std::move(edges), g.arrows()};
}

PlumbingGraph blow_up_edge(const PlumbingGraph& g, std::size_t v, std::size_t w, int sign) {
  if (sign != 1 && sign != -1) throw InputError("blow-up sign must be +1 or -1");
  auto edges = g.edges();
  const PlumbingEdge key{std::min(v, w), std::max(v, w)};
  const auto it = std::find(edges.begin(), edges.end(), key);
  if (it == edges.end()) throw InputError("blow-up on a missing edge");
  edges.erase(it);
  auto vertices = g.vertices();
  vertices[v].euler += sign;
  vertices[w].euler += sign;
  vertices.push_back({sign, 0});
  const auto u = vertices.size() - 1;
  edges.emplace_back(v, u);
  edges.emplace_back(u, w);
  return {std::move(vertices), std::move(edges), g.arrows()};
}

std::string to_string(S3Certificate c) {
  switch (c) {
    case S3Certificate::yes:
      return "yes";
    case S3Certificate::no:
      return "no";
    case S3Certificate::undetermined:
      return "undetermined";
  }
  return "unknown";
}

S3Certificate is_s3_certificate(const PlumbingGraph& g) {
  if (g.has_arrows()) throw InputError("S^3 certificate needs a closed plumbing graph (arrows present)");
  if (!first_homology(g).is_trivial()) return S3Certificate::no;
  const auto reduced = reduce(g);
  if (reduced.graph.empty() && reduced.sphere_components == 1) return S3Certificate::yes;
  return S3Certificate::undetermined;
}

}  // namespace pinchlink
