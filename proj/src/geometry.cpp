#include <setbound/geometry.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace setbound {

FaceSet faces(const Boxd& x) {
  if (count_nondegenerate(x) == 0)
    throw std::invalid_argument("faces: the boundary of a point box is empty");
  FaceSet fs;
  fs.parent = x;
  for (Eigen::Index d = 0; d < x.size(); ++d) {
    if (x(d).is_point()) continue;
    for (Side side : {Side::Low, Side::High}) {
      Face f;
      f.box = x;
      f.fixed_dim = static_cast<int>(d);
      f.side = side;
      const double v = side == Side::Low ? x(d).lo() : x(d).hi();
      f.box(d) = Intervald(v, v);
      fs.faces.push_back(std::move(f));
    }
  }
  return fs;
}

BoxGrid::BoxGrid(Boxd parent, int k) : parent_(std::move(parent)), k_(k) {
  if (k_ < 1) throw std::invalid_argument("grid resolution must be >= 1");
  if (parent_.size() == 0) throw std::invalid_argument("grid over an empty box");
  cell_count_ = 1;
  for (Eigen::Index d = 0; d < parent_.size(); ++d) {
    if (parent_(d).is_point()) continue;
    split_dims_.push_back(d);
    cell_count_ *= k_;
  }
}

double BoxGrid::edge(Eigen::Index dim, int idx) const {
  if (idx == 0) return parent_(dim).lo();
  if (idx == k_) return parent_(dim).hi();
  return parent_(dim).lo() + parent_(dim).width() * idx / k_;
}

Boxd BoxGrid::cell(long flat) const {
  if (flat < 0 || flat >= cell_count_) throw std::out_of_range("grid cell index out of range");
  Boxd c = parent_;
  for (Eigen::Index d : split_dims_) {
    const int idx = static_cast<int>(flat % k_);
    flat /= k_;
    c(d) = Intervald(edge(d, idx), edge(d, idx + 1));
  }
  return c;
}

bool BoxGrid::touches_boundary(long flat) const {
  if (flat < 0 || flat >= cell_count_) throw std::out_of_range("grid cell index out of range");
  // A degenerate parent dimension makes the whole box its own boundary.
  if (static_cast<Eigen::Index>(split_dims_.size()) < parent_.size()) return true;
  for (size_t i = 0; i < split_dims_.size(); ++i) {
    const int idx = static_cast<int>(flat % k_);
    flat /= k_;
    if (idx == 0 || idx == k_ - 1) return true;
  }
  return false;
}

std::vector<Boxd> partition_box(const Boxd& x, int k) {
  const BoxGrid grid(x, k);
  std::vector<Boxd> cells;
  cells.reserve(static_cast<size_t>(grid.cell_count()));
  for (long i = 0; i < grid.cell_count(); ++i) cells.push_back(grid.cell(i));
  return cells;
}

std::vector<Boxd> partition_faces(const FaceSet& fs, int k) {
  std::vector<Boxd> cells;
  for (const Face& f : fs.faces) {
    const BoxGrid grid(f.box, k);
    for (long i = 0; i < grid.cell_count(); ++i) cells.push_back(grid.cell(i));
  }
  return cells;
}

int SafeSet::constrained_count() const {
  int n = 0;
  for (const auto& b : bounds)
    if (b) ++n;
  return n;
}

SafeSet safe_box(const Boxd& box) {
  SafeSet s;
  for (Eigen::Index i = 0; i < box.size(); ++i) s.bounds.emplace_back(box(i));
  return s;
}

bool contained_in_safe(const Boxd& hull, const SafeSet& s) {
  if (hull.size() != s.dim())
    throw std::invalid_argument("contained_in_safe: hull dimension " +
                                std::to_string(hull.size()) + " vs safe set dimension " +
                                std::to_string(s.dim()));
  for (Eigen::Index i = 0; i < hull.size(); ++i)
    if (s.bounds[static_cast<size_t>(i)] && !s.bounds[static_cast<size_t>(i)]->contains(hull(i)))
      return false;
  return true;
}

}  // namespace setbound
