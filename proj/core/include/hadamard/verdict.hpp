#pragma once

#include <optional>
#include <string_view>

namespace hadamard {

enum class PcxStatus { Polyconvex, NotPolyconvex, Indeterminate };

constexpr std::string_view to_string(PcxStatus s) {
  switch (s) {
    case PcxStatus::Polyconvex: return "Polyconvex";
    case PcxStatus::NotPolyconvex: return "NotPolyconvex";
    case PcxStatus::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

/**
 * Outcome of a polyconvexity test.
 *
 * `m_star` is the certifying (or only candidate) multiplier of det H.
 * `witness` is the determinant value at which the test exhibits failure, and is
 * always present for NotPolyconvex. `gap` is test specific: the signed margin
 * of the deciding inequality (negative means violated).
 */
struct PcxVerdict {
  PcxStatus status = PcxStatus::Indeterminate;
  double m_star = 0.0;
  std::optional<double> witness;
  double gap = 0.0;

  [[nodiscard]] bool polyconvex() const { return status == PcxStatus::Polyconvex; }
};

} // namespace hadamard
