#pragma once

// The projective plane PG(2,q). Points and lines are both homogeneous
// triples normalized so the first nonzero coordinate is 1, with dense ids:
//   (1,a,b) -> a*q + b,  (0,1,b) -> q*q + b,  (0,0,1) -> q*q + q.
// A point x lies on a line l iff l . x == 0.

#include "mobius3/gf.hpp"

#include <array>
#include <vector>

namespace mobius3 {

using Vec3 = std::array<Fq, 3>;

class Plane {
 public:
  explicit Plane(const FieldSpec& field);

  const FieldSpec& field() const noexcept { return *field_; }
  int q() const noexcept { return q_; }
  int size() const noexcept { return n_; }  // points == lines == q^2+q+1

  const Vec3& coords(int id) const { return coords_[id]; }
  /// Id of the projective point spanned by v; v must be nonzero.
  int id_of(const Vec3& v) const;
  /// Normalizes v in place; returns false for the zero vector.
  bool normalize(Vec3& v) const;

  bool incident(int point, int line) const;
  /// Points on a line, ascending.
  const std::vector<int>& points_on(int line) const { return points_on_[line]; }
  /// Lines through a point, ascending.
  const std::vector<int>& lines_through(int point) const { return lines_through_[point]; }
  int join(int p1, int p2) const;
  int meet(int l1, int l2) const;

  Fq dot(const Vec3& a, const Vec3& b) const;
  Vec3 cross(const Vec3& a, const Vec3& b) const;

 private:
  const FieldSpec* field_;
  int q_;
  int n_;
  std::vector<Vec3> coords_;
  std::vector<std::vector<int>> points_on_;
  std::vector<std::vector<int>> lines_through_;
};

}  // namespace mobius3
