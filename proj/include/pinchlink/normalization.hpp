#pragma once

#include "pinchlink/abelian_group.hpp"
#include "pinchlink/pinched_model.hpp"
#include "pinchlink/plumbing.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pinchlink {

using AttachmentMatrix = Eigen::Matrix2<std::int64_t>;

/// Gluing of sheet `sheet` of curve `curve` to the exterior boundary torus
/// `arrow`. Column j of `matrix` is the j-th curling basis curve (m, then l)
/// written in the arrow framing (mu, lambda).
struct Attachment {
  std::string curve;
  std::size_t sheet = 0;
  std::string arrow;
  AttachmentMatrix matrix = AttachmentMatrix::Identity();

  [[nodiscard]] Slope meridian() const { return Slope(matrix(0, 0), matrix(1, 0)); }
};

/// Combinatorial model of a singular link: an exterior plumbing graph whose
/// boundary tori are glued to the sheets of one pinched solid torus per
/// singular curve.
class SingularLinkDescription {
 public:
  /// Throws InputError unless every curve is valid with a unique name, every
  /// attachment matrix is unimodular, and attachments match exterior arrows
  /// and (curve, sheet) pairs one to one.
  SingularLinkDescription(PlumbingGraph exterior, std::vector<SingularCurveData> curves,
                          std::vector<Attachment> attachments);

  [[nodiscard]] const PlumbingGraph& exterior() const { return exterior_; }
  [[nodiscard]] const std::vector<SingularCurveData>& curves() const { return curves_; }
  [[nodiscard]] const std::vector<Attachment>& attachments() const { return attachments_; }

  [[nodiscard]] std::size_t curve_index(const std::string& name) const;
  [[nodiscard]] bool exterior_connected() const { return exterior_.components().size() <= 1; }

 private:
  PlumbingGraph exterior_;
  std::vector<SingularCurveData> curves_;
  std::vector<Attachment> attachments_;
};

/// True iff no curve has total degree above one.
bool is_topological_manifold(const SingularLinkDescription& s);

/// The exterior with every arrow Dehn filled along its curling meridian.
PlumbingGraph closed_exterior(const SingularLinkDescription& s);

struct NormalizedComponent {
  PlumbingGraph closed;
  ReductionResult reduction;

  [[nodiscard]] bool is_s3() const { return reduction.graph.empty() && reduction.sphere_components == 1; }
};

struct NormalizationResult {
  std::vector<NormalizedComponent> components;
};

/// Rebuilds the link of the normalization: fills every boundary torus along
/// its curling meridian, splits into connected components (ordered by their
/// smallest exterior vertex) and reduces each.
NormalizationResult normalize(const SingularLinkDescription& s);

/// Both halves of the Mayer-Vietoris computation of H_1.
///
/// `boundary_relations` presents coker(Delta_1) on the exterior generators
/// followed by one core class per curve. `component_incidence` is Delta_0:
/// rows are exterior components then curves, columns are boundary tori.
struct MayerVietorisData {
  IntMatrix boundary_relations;
  IntMatrix component_incidence;

  [[nodiscard]] AbelianGroup cokernel_part() const;
  [[nodiscard]] std::size_t kernel_part() const;
};

MayerVietorisData mayer_vietoris(const SingularLinkDescription& s);

/// H_1(L_X) = coker(Delta_1) + Z^{rank ker Delta_0}; the extension splits
/// because ker Delta_0 is free.
AbelianGroup h1_singular_link(const SingularLinkDescription& s);

struct ObstructionReport {
  enum class Kind { manifold, rank_bound, order_bound };
  Kind kind = Kind::manifold;
  std::int64_t bound = 0;
  std::string curve;  // curve providing the bound
  AbelianGroup h1;
};

std::string to_string(const ObstructionReport& r);

/// Lower bounds on H_1 forced by singular curves of an irreducible germ.
/// Throws HypothesisViolation for a disconnected exterior, and
/// InvariantViolation if the computed H_1 breaks the reported bound.
ObstructionReport obstruction_report(const SingularLinkDescription& s);

struct SmoothnessVerdict {
  enum class Kind { smooth, not_simply_connected, undetermined };
  Kind kind = Kind::undetermined;
  std::optional<ObstructionReport> witness;
};

std::string to_string(const SmoothnessVerdict& v);

/// Smoothness of the normalization of an irreducible germ, certified by
/// recognizing S^3. Same errors as obstruction_report.
SmoothnessVerdict check_smooth(const SingularLinkDescription& s);

}  // namespace pinchlink
