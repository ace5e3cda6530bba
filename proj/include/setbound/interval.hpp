#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace setbound {

namespace detail {

template <typename S>
inline S next_up(S x) {
  return std::nextafter(x, std::numeric_limits<S>::infinity());
}

template <typename S>
inline S next_down(S x) {
  return std::nextafter(x, -std::numeric_limits<S>::infinity());
}

}  // namespace detail

// Closed interval [lo, hi] with finite endpoints. Arithmetic widens every
// computed bound outward by one ulp, which keeps enclosures sound under
// round-to-nearest evaluation without touching the FPU rounding mode.
template <typename Scalar = double>
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(Scalar point) : Interval(point, point) {}
  Interval(Scalar lo, Scalar hi) : lo_(lo), hi_(hi) {
    if (!(lo_ <= hi_) || !std::isfinite(lo_) || !std::isfinite(hi_))
      throw std::invalid_argument("interval bounds must be finite with lo <= hi");
  }

  Scalar lo() const { return lo_; }
  Scalar hi() const { return hi_; }
  Scalar width() const { return hi_ - lo_; }
  Scalar mid() const { return lo_ + (hi_ - lo_) / Scalar(2); }
  Scalar rad() const { return (hi_ - lo_) / Scalar(2); }
  // Largest and smallest absolute value over the interval.
  Scalar mag() const { return std::max(std::abs(lo_), std::abs(hi_)); }
  Scalar mig() const {
    return contains(Scalar(0)) ? Scalar(0) : std::min(std::abs(lo_), std::abs(hi_));
  }

  bool is_point() const { return lo_ == hi_; }
  bool contains(Scalar x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(detail::next_down(a.lo_ + b.lo_), detail::next_up(a.hi_ + b.hi_));
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return Interval(detail::next_down(a.lo_ - b.hi_), detail::next_up(a.hi_ - b.lo_));
  }
  friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const Scalar p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
    const Scalar p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return Interval(detail::next_down(std::min(std::min(p1, p2), std::min(p3, p4))),
                    detail::next_up(std::max(std::max(p1, p2), std::max(p3, p4))));
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains(Scalar(0)))
      throw std::domain_error("interval division by zero-containing interval");
    const Scalar q1 = a.lo_ / b.lo_, q2 = a.lo_ / b.hi_;
    const Scalar q3 = a.hi_ / b.lo_, q4 = a.hi_ / b.hi_;
    return Interval(detail::next_down(std::min(std::min(q1, q2), std::min(q3, q4))),
                    detail::next_up(std::max(std::max(q1, q2), std::max(q3, q4))));
  }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

 private:
  Scalar lo_, hi_;
};

template <typename S>
std::ostream& operator<<(std::ostream& os, const Interval<S>& iv) {
  return os << '[' << iv.lo() << ", " << iv.hi() << ']';
}

// Smallest interval containing both arguments.
template <typename S>
Interval<S> hull(const Interval<S>& a, const Interval<S>& b) {
  return Interval<S>(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

// Intersection; throws when the arguments are disjoint.
template <typename S>
Interval<S> meet(const Interval<S>& a, const Interval<S>& b) {
  if (!a.intersects(b)) throw std::domain_error("intersection of disjoint intervals");
  return Interval<S>(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

// Widens both bounds outward by |bound| * rel plus one ulp. Used after
// transcendental evaluations whose libm error is a few ulp at most.
template <typename S>
Interval<S> widen_relative(const Interval<S>& x, S rel) {
  return Interval<S>(detail::next_down(x.lo() - std::abs(x.lo()) * rel),
                     detail::next_up(x.hi() + std::abs(x.hi()) * rel));
}

using Intervald = Interval<double>;

}  // namespace setbound

namespace Eigen {

template <typename S>
struct NumTraits<setbound::Interval<S>> : GenericNumTraits<setbound::Interval<S>> {
  typedef setbound::Interval<S> Real;
  typedef setbound::Interval<S> NonInteger;
  typedef setbound::Interval<S> Nested;
  typedef S Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(NumTraits<S>::epsilon()); }
  static inline Real dummy_precision() { return Real(NumTraits<S>::dummy_precision()); }
  static inline Real highest() { return Real((std::numeric_limits<S>::max)()); }
  static inline Real lowest() { return Real(-(std::numeric_limits<S>::max)()); }
  static inline int digits10() { return NumTraits<S>::digits10(); }
};

}  // namespace Eigen

namespace setbound {

template <typename S>
using BoxOf = Eigen::Matrix<Interval<S>, Eigen::Dynamic, 1>;
template <typename S>
using IntervalMatrixOf = Eigen::Matrix<Interval<S>, Eigen::Dynamic, Eigen::Dynamic>;

// Axis-aligned box = vector of intervals; the set representation for input
// sets, per-layer bounds, and reach hulls.
using Boxd = BoxOf<double>;
using IntervalMatrixd = IntervalMatrixOf<double>;

inline Boxd make_box(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
  if (lo.size() != hi.size())
    throw std::invalid_argument("box bounds must have equal dimension");
  Boxd box(lo.size());
  for (Eigen::Index i = 0; i < lo.size(); ++i) box(i) = Intervald(lo(i), hi(i));
  return box;
}

inline Boxd make_box(const Eigen::VectorXd& point) { return make_box(point, point); }

inline Eigen::VectorXd lower(const Boxd& box) {
  Eigen::VectorXd v(box.size());
  for (Eigen::Index i = 0; i < box.size(); ++i) v(i) = box(i).lo();
  return v;
}

inline Eigen::VectorXd upper(const Boxd& box) {
  Eigen::VectorXd v(box.size());
  for (Eigen::Index i = 0; i < box.size(); ++i) v(i) = box(i).hi();
  return v;
}

inline Eigen::VectorXd midpoint(const Boxd& box) {
  Eigen::VectorXd v(box.size());
  for (Eigen::Index i = 0; i < box.size(); ++i) v(i) = box(i).mid();
  return v;
}

inline Eigen::VectorXd radii(const Boxd& box) {
  Eigen::VectorXd v(box.size());
  for (Eigen::Index i = 0; i < box.size(); ++i) v(i) = box(i).rad();
  return v;
}

inline bool box_contains(const Boxd& box, const Eigen::VectorXd& p) {
  if (box.size() != p.size()) return false;
  for (Eigen::Index i = 0; i < box.size(); ++i)
    if (!box(i).contains(p(i))) return false;
  return true;
}

inline bool box_contains(const Boxd& outer, const Boxd& inner) {
  if (outer.size() != inner.size()) return false;
  for (Eigen::Index i = 0; i < outer.size(); ++i)
    if (!outer(i).contains(inner(i))) return false;
  return true;
}

inline Boxd box_hull(const Boxd& a, const Boxd& b) {
  if (a.size() != b.size()) throw std::invalid_argument("box hull: dimension mismatch");
  Boxd out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out(i) = hull(a(i), b(i));
  return out;
}

inline Boxd box_meet(const Boxd& a, const Boxd& b) {
  if (a.size() != b.size()) throw std::invalid_argument("box meet: dimension mismatch");
  Boxd out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out(i) = meet(a(i), b(i));
  return out;
}

inline int count_nondegenerate(const Boxd& box) {
  int n = 0;
  for (Eigen::Index i = 0; i < box.size(); ++i)
    if (!box(i).is_point()) ++n;
  return n;
}

inline double box_volume(const Boxd& box) {
  double v = 1.0;
  for (Eigen::Index i = 0; i < box.size(); ++i) v *= box(i).width();
  return v;
}

}  // namespace setbound
