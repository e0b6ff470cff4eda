#include "pinchlink/normalization.hpp"

#include "pinchlink/error.hpp"
#include "pinchlink/lattice.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace pinchlink {

SingularLinkDescription::SingularLinkDescription(PlumbingGraph exterior, std::vector<SingularCurveData> curves,
                                                 std::vector<Attachment> attachments)
    : exterior_(std::move(exterior)), curves_(std::move(curves)), attachments_(std::move(attachments)) {
  std::set<std::string> names;
  std::size_t sheet_total = 0;
  for (const auto& curve : curves_) {
    curve.validate();
    if (!names.insert(curve.name).second) throw InputError("repeated curve name '" + curve.name + "'");
    sheet_total += curve.branch_count();
  }
  if (sheet_total != exterior_.arrows().size()) {
    throw InputError("curves have " + std::to_string(sheet_total) + " sheets but the exterior has " +
                     std::to_string(exterior_.arrows().size()) + " boundary tori");
  }

  std::set<std::string> used_arrows;
  std::set<std::pair<std::string, std::size_t>> used_sheets;
  for (const auto& a : attachments_) {
    const auto& curve = curves_[curve_index(a.curve)];
    if (a.sheet >= curve.branch_count()) {
      throw InputError("attachment refers to sheet " + std::to_string(a.sheet) + " of curve '" + a.curve +
                       "', which has " + std::to_string(curve.branch_count()) + " sheets");
    }
    if (!exterior_.find_arrow(a.arrow)) throw InputError("attachment refers to unknown arrow '" + a.arrow + "'");
    const auto det = a.matrix(0, 0) * a.matrix(1, 1) - a.matrix(0, 1) * a.matrix(1, 0);
    if (det != 1 && det != -1) {
      throw InputError("attachment matrix for arrow '" + a.arrow + "' has determinant " + std::to_string(det) +
                       ", expected +-1");
    }
    if (!used_arrows.insert(a.arrow).second) throw InputError("arrow '" + a.arrow + "' is attached twice");
    if (!used_sheets.emplace(a.curve, a.sheet).second) {
      throw InputError("sheet " + std::to_string(a.sheet) + " of curve '" + a.curve + "' is attached twice");
    }
  }
  if (attachments_.size() != sheet_total) {
    throw InputError("every sheet needs exactly one attachment (" + std::to_string(attachments_.size()) + " of " +
                     std::to_string(sheet_total) + " given)");
  }
}

std::size_t SingularLinkDescription::curve_index(const std::string& name) const {
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].name == name) return i;
  }
  throw InputError("unknown curve '" + name + "'");
}

bool is_topological_manifold(const SingularLinkDescription& s) {
  return std::none_of(s.curves().begin(), s.curves().end(),
                      [](const SingularCurveData& c) { return c.is_topologically_singular(); });
}

PlumbingGraph closed_exterior(const SingularLinkDescription& s) {
  PlumbingGraph closed = s.exterior();
  for (const auto& a : s.attachments()) closed = dehn_fill(closed, a.arrow, a.meridian());
  return closed;
}

NormalizationResult normalize(const SingularLinkDescription& s) {
  const auto closed = closed_exterior(s);
  const auto parts = closed.components();
  if (parts.size() != s.exterior().components().size()) {
    throw InvariantViolation("Dehn filling changed the number of connected components");
  }
  NormalizationResult out;
  for (const auto& part : parts) {
    auto component = closed.induced(part);
    auto reduction = reduce(component);
    out.components.push_back({std::move(component), std::move(reduction)});
  }
  return out;
}

AbelianGroup MayerVietorisData::cokernel_part() const { return lattice::cokernel(boundary_relations); }

std::size_t MayerVietorisData::kernel_part() const { return lattice::kernel_rank(component_incidence); }

MayerVietorisData mayer_vietoris(const SingularLinkDescription& s) {
  const auto& exterior = s.exterior();
  const auto presentation = h1_presentation(exterior);
  const auto exterior_generators = static_cast<Eigen::Index>(presentation.generator_count());
  const auto curve_count = static_cast<Eigen::Index>(s.curves().size());
  const auto vertex_relations = presentation.relations.cols();
  const auto tori = static_cast<Eigen::Index>(s.attachments().size());

  MayerVietorisData out;
  out.boundary_relations = IntMatrix::Zero(exterior_generators + curve_count, vertex_relations + 2 * tori);
  out.boundary_relations.topLeftCorner(exterior_generators, vertex_relations) = presentation.relations;

  const auto exterior_components = exterior.components();
  const auto component_rows = static_cast<Eigen::Index>(exterior_components.size());
  out.component_incidence = IntMatrix::Zero(component_rows + curve_count, tori);

  for (Eigen::Index i = 0; i < tori; ++i) {
    const auto& a = s.attachments()[static_cast<std::size_t>(i)];
    const auto arrow = *exterior.find_arrow(a.arrow);
    const auto curve = static_cast<Eigen::Index>(s.curve_index(a.curve));
    const auto classes = boundary_class_map(s.curves()[static_cast<std::size_t>(curve)].pinched_torus(), a.sheet);
    const auto core_row = exterior_generators + curve;

    // Delta_1 on the meridian and the parallel of this torus.
    auto meridian_col = out.boundary_relations.col(vertex_relations + 2 * i);
    meridian_col.head(exterior_generators) = presentation.slope_class(arrow, a.matrix(0, 0), a.matrix(1, 0));
    meridian_col(core_row) = -static_cast<long>(classes.meridian);

    auto parallel_col = out.boundary_relations.col(vertex_relations + 2 * i + 1);
    parallel_col.head(exterior_generators) = presentation.slope_class(arrow, a.matrix(0, 1), a.matrix(1, 1));
    parallel_col(core_row) = -static_cast<long>(classes.parallel);

    const auto component = static_cast<Eigen::Index>(exterior.component_of(exterior.arrows()[arrow].vertex));
    out.component_incidence(component, i) = 1;
    out.component_incidence(component_rows + curve, i) = -1;
  }
  return out;
}

AbelianGroup h1_singular_link(const SingularLinkDescription& s) {
  const auto data = mayer_vietoris(s);
  return direct_sum(data.cokernel_part(), AbelianGroup::free(data.kernel_part()));
}

std::string to_string(const ObstructionReport& r) {
  switch (r.kind) {
    case ObstructionReport::Kind::manifold:
      return "manifold";
    case ObstructionReport::Kind::rank_bound:
      return "rank_bound(" + std::to_string(r.bound) + ")";
    case ObstructionReport::Kind::order_bound:
      return "order_bound(" + std::to_string(r.bound) + ")";
  }
  return "unknown";
}

ObstructionReport obstruction_report(const SingularLinkDescription& s) {
  const auto components = s.exterior().components().size();
  if (components > 1) {
    throw HypothesisViolation("hypothesis violated: germ reducible (exterior has " + std::to_string(components) +
                              " connected components)");
  }
  ObstructionReport report;
  report.h1 = h1_singular_link(s);

  const SingularCurveData* rank_witness = nullptr;
  const SingularCurveData* order_witness = nullptr;
  for (const auto& curve : s.curves()) {
    if (!curve.is_topologically_singular()) continue;
    if (curve.branch_count() > 1) {
      if (!rank_witness || curve.branch_count() > rank_witness->branch_count()) rank_witness = &curve;
    } else if (!order_witness || curve.total_degree() > order_witness->total_degree()) {
      order_witness = &curve;
    }
  }

  if (rank_witness) {
    report.kind = ObstructionReport::Kind::rank_bound;
    report.bound = static_cast<std::int64_t>(rank_witness->branch_count()) - 1;
    report.curve = rank_witness->name;
    if (report.h1.rank() < static_cast<std::size_t>(report.bound)) {
      throw InvariantViolation("H_1 = " + report.h1.to_string() + " violates " + to_string(report));
    }
  } else if (order_witness) {
    report.kind = ObstructionReport::Kind::order_bound;
    report.bound = order_witness->total_degree();
    report.curve = order_witness->name;
    const auto order = report.h1.order();
    if (order && *order < report.bound) {
      throw InvariantViolation("H_1 = " + report.h1.to_string() + " violates " + to_string(report));
    }
  }
  return report;
}

std::string to_string(const SmoothnessVerdict& v) {
  switch (v.kind) {
    case SmoothnessVerdict::Kind::smooth:
      return "smooth";
    case SmoothnessVerdict::Kind::not_simply_connected:
      return "not_simply_connected(" + (v.witness ? to_string(*v.witness) : std::string("?")) + ")";
    case SmoothnessVerdict::Kind::undetermined:
      return "undetermined";
  }
  return "unknown";
}

SmoothnessVerdict check_smooth(const SingularLinkDescription& s) {
  auto report = obstruction_report(s);
  if (report.kind != ObstructionReport::Kind::manifold) {
    if (report.h1.is_trivial()) {
      throw InvariantViolation("singular curve on an irreducible germ but H_1 is trivial");
    }
    return {SmoothnessVerdict::Kind::not_simply_connected, std::move(report)};
  }
  switch (is_s3_certificate(closed_exterior(s))) {
    case S3Certificate::yes:
      return {SmoothnessVerdict::Kind::smooth, std::nullopt};
    case S3Certificate::no:
      return {SmoothnessVerdict::Kind::not_simply_connected, std::move(report)};
    case S3Certificate::undetermined:
      break;
  }
  return {SmoothnessVerdict::Kind::undetermined, std::nullopt};
}

}  // namespace pinchlink
