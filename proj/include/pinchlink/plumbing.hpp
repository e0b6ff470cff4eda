#pragma once

#include "pinchlink/abelian_group.hpp"
#include "pinchlink/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pinchlink {

struct PlumbingVertex {
  std::int64_t euler = 0;
  int genus = 0;
  friend bool operator==(const PlumbingVertex&, const PlumbingVertex&) = default;
};

/// A boundary torus hanging off `vertex`. Its framing is (mu, lambda): mu is
/// the boundary of a section over the vertex's base, lambda is a fiber.
struct PlumbingArrow {
  std::size_t vertex = 0;
  std::string label;
  friend bool operator==(const PlumbingArrow&, const PlumbingArrow&) = default;
};

using PlumbingEdge = std::pair<std::size_t, std::size_t>;

/// Plumbing forest of a graph manifold, possibly with boundary tori.
///
/// Edges are stored canonically: each as (min, max), sorted, so two graphs
/// that differ only in edge listing compare equal. Vertex and arrow order is
/// preserved.
class PlumbingGraph {
 public:
  PlumbingGraph() = default;

  /// Throws InputError on a negative genus, an edge with a bad endpoint, a
  /// loop, a repeated edge, a cycle, a bad arrow vertex or a repeated label.
  PlumbingGraph(std::vector<PlumbingVertex> vertices, std::vector<PlumbingEdge> edges,
                std::vector<PlumbingArrow> arrows = {});

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] bool empty() const { return vertices_.empty(); }
  [[nodiscard]] const std::vector<PlumbingVertex>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<PlumbingEdge>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<PlumbingArrow>& arrows() const { return arrows_; }
  [[nodiscard]] bool has_arrows() const { return !arrows_.empty(); }

  [[nodiscard]] std::vector<std::vector<std::size_t>> adjacency() const;
  [[nodiscard]] std::size_t valence(std::size_t v) const;
  [[nodiscard]] std::optional<std::size_t> find_arrow(const std::string& label) const;
  [[nodiscard]] int total_genus() const;

  /// Connected components as sorted vertex lists, ordered by smallest vertex.
  [[nodiscard]] std::vector<std::vector<std::size_t>> components() const;
  [[nodiscard]] std::size_t component_of(std::size_t v) const;

  /// Subgraph on `keep` (any order), reindexed in ascending vertex order.
  [[nodiscard]] PlumbingGraph induced(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;

 private:
  std::vector<PlumbingVertex> vertices_;
  std::vector<PlumbingEdge> edges_;
  std::vector<PlumbingArrow> arrows_;
};

/// The curve p*mu + q*lambda on a framed boundary torus.
class Slope {
 public:
  /// Throws InputError unless gcd(p, q) = 1. Normalized so p >= 0, and
  /// q >= 0 when p = 0.
  Slope(std::int64_t p, std::int64_t q);

  [[nodiscard]] std::int64_t p() const { return p_; }
  [[nodiscard]] std::int64_t q() const { return q_; }
  [[nodiscard]] bool is_fiber() const { return p_ == 0; }
  [[nodiscard]] bool is_degenerate() const { return q_ == 0; }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

IntMatrix intersection_matrix(const PlumbingGraph& g);

/// Generators of H_1 of a plumbed manifold: one fiber class t_v per vertex,
/// one boundary meridian mu_a per arrow, then 2 g_v free symbols per vertex.
/// Relations are columns, one per vertex:
///   e_v t_v + sum_{w ~ v} t_w + sum_{a at v} mu_a = 0.
struct H1Presentation {
  IntMatrix relations;
  std::size_t vertex_count = 0;
  std::size_t arrow_count = 0;
  std::size_t genus_symbols = 0;

  struct BoundaryClasses {
    std::string label;
    IntVector meridian;  // [mu_a]
    IntVector fiber;     // [lambda_a] = t_{vertex(a)}
  };
  std::vector<BoundaryClasses> boundary;

  [[nodiscard]] std::size_t generator_count() const { return vertex_count + arrow_count + genus_symbols; }
  [[nodiscard]] std::size_t fiber_index(std::size_t v) const { return v; }
  [[nodiscard]] std::size_t meridian_index(std::size_t a) const { return vertex_count + a; }

  /// Class of p*mu_a + q*lambda_a for the arrow at position `a`.
  [[nodiscard]] IntVector slope_class(std::size_t a, std::int64_t p, std::int64_t q) const;

  /// Presentation with the extra relation p*mu_a + q*lambda_a = 0.
  [[nodiscard]] H1Presentation filled(std::size_t a, const Slope& s) const;

  [[nodiscard]] AbelianGroup group() const;
};

H1Presentation h1_presentation(const PlumbingGraph& g);

/// H_1 of the plumbed manifold (with boundary when arrows are present).
AbelianGroup first_homology(const PlumbingGraph& g);

/// Negative continued fraction num/den = b_1 - 1/(b_2 - 1/(... - 1/b_k)),
/// den > 0, with b_1 any integer and b_i >= 2 for i >= 2.
std::vector<std::int64_t> negative_continued_fraction(std::int64_t num, std::int64_t den);

/// Fills the boundary torus of `arrow` so that the slope bounds a disc. The
/// arrow becomes a chain of genus-0 vertices with weights -b_1..-b_k from
/// the expansion of -p/q. Fiber slopes therefore attach one 0-weighted
/// vertex. Throws InputError on an unknown label or the degenerate slope
/// (1, 0).
PlumbingGraph dehn_fill(const PlumbingGraph& g, const std::string& arrow, const Slope& s);

struct ReductionMove {
  enum class Kind { blow_down, isolated_sphere, zero_chain_sphere };
  Kind kind;
  PlumbingVertex removed;
  std::size_t valence;
  std::size_t vertices_after;
  std::int64_t weight_mass_after;  // sum of |e_v| over the remaining vertices
};

std::string to_string(ReductionMove::Kind kind);

struct ReductionResult {
  PlumbingGraph graph;
  std::size_t sphere_components = 0;
  std::vector<ReductionMove> moves;
};

/// Repeatedly blows down genus-0 (+-1)-vertices of valence <= 2, deletes
/// isolated genus-0 (+-1)-vertices, and removes (0,0) chains; the last two
/// each record an S^3 component. Throws InputError when arrows are present.
ReductionResult reduce(const PlumbingGraph& g);

/// Inverse of a valence-1 blow-down: new leaf of weight `sign` at `v`.
PlumbingGraph blow_up_leaf(const PlumbingGraph& g, std::size_t v, int sign);

/// Inverse of a valence-2 blow-down on the edge (v, w).
PlumbingGraph blow_up_edge(const PlumbingGraph& g, std::size_t v, std::size_t w, int sign);

enum class S3Certificate { yes, no, undetermined };

std::string to_string(S3Certificate c);

/// "yes" when the move subset reduces g to a single S^3; "no" when H_1 is
/// nontrivial; otherwise "undetermined". Throws InputError on arrows.
S3Certificate is_s3_certificate(const PlumbingGraph& g);

}  // namespace pinchlink
