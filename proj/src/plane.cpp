#include "mobius3/plane.hpp"

#include "mobius3/error.hpp"

#include <algorithm>

namespace mobius3 {

Plane::Plane(const FieldSpec& field) : field_(&field), q_(field.q()), n_(q_ * q_ + q_ + 1) {
  coords_.resize(n_);
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) coords_[a * q_ + b] = {1, static_cast<Fq>(a), static_cast<Fq>(b)};
  for (int b = 0; b < q_; ++b) coords_[q_ * q_ + b] = {0, 1, static_cast<Fq>(b)};
  coords_[q_ * q_ + q_] = {0, 0, 1};

  // Each line is spanned by two kernel vectors u, w; its points are u and w + t u.
  const FieldSpec& f = field;
  points_on_.assign(n_, {});
  lines_through_.assign(n_, {});
  for (int l = 0; l < n_; ++l) {
    const Vec3& c = coords_[l];
    const int i = c[0] ? 0 : (c[1] ? 1 : 2);
    Vec3 basis[2];
    int m = 0;
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      Vec3 v{0, 0, 0};
      v[j] = 1;
      v[i] = f.neg(c[j]);
      basis[m++] = v;
    }
    auto& pts = points_on_[l];
    pts.push_back(id_of(basis[0]));
    for (int t = 0; t < q_; ++t) {
      Vec3 v;
      for (int j = 0; j < 3; ++j) v[j] = f.add(basis[1][j], f.mul(static_cast<Fq>(t), basis[0][j]));
      pts.push_back(id_of(v));
    }
    std::sort(pts.begin(), pts.end());
    for (int x : pts) lines_through_[x].push_back(l);
  }
}

bool Plane::normalize(Vec3& v) const {
  int i = 0;
  while (i < 3 && v[i] == 0) ++i;
  if (i == 3) return false;
  if (v[i] != 1) {
    const Fq s = field_->inv(v[i]);
    for (int j = i; j < 3; ++j) v[j] = field_->mul(v[j], s);
  }
  return true;
}

int Plane::id_of(const Vec3& v) const {
  Vec3 w = v;
  if (!normalize(w)) throw Error(ErrorKind::InvalidInput, "zero vector has no projective point");
  if (w[0] == 1) return w[1] * q_ + w[2];
  if (w[1] == 1) return q_ * q_ + w[2];
  return q_ * q_ + q_;
}

bool Plane::incident(int point, int line) const { return dot(coords_[line], coords_[point]) == 0; }

Fq Plane::dot(const Vec3& a, const Vec3& b) const {
  const FieldSpec& f = *field_;
  return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
}

Vec3 Plane::cross(const Vec3& a, const Vec3& b) const {
  const FieldSpec& f = *field_;
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

int Plane::join(int p1, int p2) const {
  if (p1 == p2) throw Error(ErrorKind::InvalidInput, "join of equal points");
  return id_of(cross(coords_[p1], coords_[p2]));
}

int Plane::meet(int l1, int l2) const {
  if (l1 == l2) throw Error(ErrorKind::InvalidInput, "meet of equal lines");
  return id_of(cross(coords_[l1], coords_[l2]));
}

}  // namespace mobius3
