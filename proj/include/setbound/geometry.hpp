#pragma once

#include <setbound/interval.hpp>

#include <optional>
#include <vector>

namespace setbound {

enum class Side { Low, High };

// A box with exactly one dimension pinned to an endpoint of its parent.
struct Face {
  Boxd box;
  int fixed_dim = 0;
  Side side = Side::Low;
};

// The 2n degenerate faces whose union is the topological boundary of the
// parent box (n = number of non-degenerate dimensions).
struct FaceSet {
  Boxd parent;
  std::vector<Face> faces;
};

FaceSet faces(const Boxd& x);

// Uniform k-grid over the non-degenerate dimensions of a box. Cells are
// materialized on demand so large grids never need to live in memory.
class BoxGrid {
 public:
  BoxGrid(Boxd parent, int k);

  long cell_count() const { return cell_count_; }
  int k() const { return k_; }
  const Boxd& parent() const { return parent_; }

  Boxd cell(long flat) const;
  // True when the closed cell intersects the topological boundary of the
  // parent (any index at 0 or k-1 in a non-degenerate dimension; every cell
  // if the parent has a degenerate dimension).
  bool touches_boundary(long flat) const;

 private:
  double edge(Eigen::Index dim, int idx) const;

  Boxd parent_;
  int k_;
  std::vector<Eigen::Index> split_dims_;
  long cell_count_;
};

// k^n equal cells (degenerate dimensions are not split): an exact cover of
// the box, overlapping only on shared faces.
std::vector<Boxd> partition_box(const Boxd& x, int k);

// Every face split into k^(n-1) equal sub-faces; 2n * k^(n-1) boxes total.
std::vector<Boxd> partition_faces(const FaceSet& fs, int k);

// Box-shaped safe set; unconstrained dimensions are represented by nullopt
// and never fail containment.
struct SafeSet {
  std::vector<std::optional<Intervald>> bounds;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(bounds.size()); }
  int constrained_count() const;
};

SafeSet safe_box(const Boxd& box);

// Closed containment of the hull in every constrained dimension.
bool contained_in_safe(const Boxd& hull, const SafeSet& s);

}  // namespace setbound
