#pragma once

// PGL(3,q) and PSL(3,q) as concrete matrix groups acting on PG(2,q).
//
// A Mat3 is row-major and acts on column vectors (points); lines are row
// vectors and transform by l -> l * adj(M). Projective elements are kept in
// canonical form: scaled so the first nonzero entry in row-major order is 1.
// The ElemKey packs the nine canonical entries at 7 bits each.

#include "mobius3/bigint.hpp"
#include "mobius3/gf.hpp"
#include "mobius3/plane.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mobius3 {

using Mat3 = std::array<Fq, 9>;
using ElemKey = std::uint64_t;

enum class GroupKind { PGL, PSL };

GroupKind parse_group_kind(const std::string& s);
std::string to_string(GroupKind kind);

struct GElem {
  Mat3 mat;
  ElemKey key;
  std::vector<std::uint16_t> perm;  // images of point ids
};

enum class ElementTag {
  Identity,
  Elation,
  OrderFourUnipotent,
  Homology,
  MixedOrder,
  TriangleDiagonal,
  QuadraticSemisimple,
  SingerType,
};

std::string to_string(ElementTag tag);

struct ElementClass {
  ElementTag tag;
  int order;
  int fixed_points;
  int fixed_lines;
  std::optional<int> center;
  std::optional<int> axis;
};

struct SubgroupRec {
  std::vector<Mat3> generators;
  std::vector<ElemKey> elements;  // sorted ascending
  std::optional<int> tag;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(ElemKey k) const;
};

class Pgl3 {
 public:
  explicit Pgl3(int q);

  const FieldSpec& field() const noexcept { return *field_; }
  const Plane& plane() const noexcept { return *plane_; }
  int q() const noexcept { return field_->q(); }

  BigInt pgl_order() const;
  BigInt psl_order() const;
  BigInt group_order(GroupKind kind) const { return kind == GroupKind::PGL ? pgl_order() : psl_order(); }

  Mat3 identity() const noexcept { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }
  /// Plain matrix product, no rescaling.
  Mat3 mul_raw(const Mat3& a, const Mat3& b) const noexcept;
  /// Canonical product.
  Mat3 mul(const Mat3& a, const Mat3& b) const noexcept { return canonical(mul_raw(a, b)); }
  Mat3 adjugate(const Mat3& a) const noexcept;
  /// Canonical inverse (adjugate rescaled).
  Mat3 inverse(const Mat3& a) const noexcept { return canonical(adjugate(a)); }
  /// g^-1 h g, canonical.
  Mat3 conjugate(const Mat3& h, const Mat3& g) const noexcept;
  Fq det(const Mat3& a) const noexcept;
  Mat3 canonical(Mat3 a) const noexcept;
  Mat3 power(const Mat3& a, long long e) const;

  static ElemKey key(const Mat3& canonical_mat) noexcept;
  static Mat3 unkey(ElemKey k) noexcept;

  /// Canonicalizes and packs; throws Singular.
  GElem elem(const Mat3& m) const;
  /// Nine field indices, row-major; validated.
  Mat3 from_entries(const std::vector<int>& entries) const;

  int apply_point(const Mat3& m, int point) const;
  int apply_line(const Mat3& m, int line) const;
  std::vector<std::uint16_t> perm(const Mat3& m) const;

  /// Order in PGL(3,q).
  int order(const Mat3& m) const;
  /// det is a cube, so the class mod scalars meets SL(3,q).
  bool in_psl(const Mat3& m) const { return field_->is_cube(det(m)); }

  ElementClass classify(const Mat3& m) const;

  /// A generating set of the full group.
  std::vector<Mat3> full_generators(GroupKind kind) const;

 private:
  std::unique_ptr<FieldSpec> field_;
  std::unique_ptr<Plane> plane_;
};

/// I + t * e_ij.
Mat3 elementary(int i, int j, Fq t);
Mat3 diagonal(Fq a, Fq b, Fq c);
/// Permutation matrix sending e_j to e_{img[j]}.
Mat3 permutation_matrix(const std::array<int, 3>& img);

/// Incremental closure by Dimino's coset method.
class Closure {
 public:
  Closure(const Pgl3& ctx, std::size_t cap);

  /// Returns false when g was already an element.
  bool add_generator(const Mat3& g);
  bool contains(ElemKey k) const;
  std::size_t size() const noexcept { return elems_.size(); }
  const std::vector<Mat3>& elements() const noexcept { return elems_; }
  const std::vector<Mat3>& generators() const noexcept { return gens_; }
  SubgroupRec finish(std::optional<int> tag = std::nullopt) const;

 private:
  void push(const Mat3& m);

  const Pgl3* ctx_;
  std::size_t cap_;
  std::vector<Mat3> elems_;
  std::vector<Mat3> gens_;
  std::vector<ElemKey> slots_;  // open addressing, 0 = empty
  std::size_t mask_ = 0;
};

/// Throws CapExceeded when the generated group exceeds cap.
SubgroupRec closure(const Pgl3& ctx, const std::vector<Mat3>& gens, std::size_t cap);

enum class MaximalKind { PointStab, LineStab, TriangleStab, SingerNorm, SubplaneStab };

MaximalKind parse_maximal_kind(const std::string& s);

/// Monic cubic x^3 + a x^2 + b x + c (returned as {c, b, a}) whose companion
/// matrix has projective order q^2+q+1; least in lexicographic (a, b, c).
std::array<Fq, 3> singer_cubic(const Pgl3& ctx);
Mat3 companion(const Pgl3& ctx, const std::array<Fq, 3>& cubic);
/// The q-power Frobenius of GF(q)[x]/(cubic) in the basis 1, x, x^2.
Mat3 frobenius_matrix(const Pgl3& ctx, const Mat3& companion);

SubgroupRec maximal_subgroup(const Pgl3& ctx, MaximalKind kind);

inline constexpr std::size_t kLineRepBudget = 2'000'000;

/// Representative of one line of the classification for q = 2^p inside
/// ctx (which must have q = 2^p). Throws InvalidP, UnsupportedLine, TooLarge.
SubgroupRec line_rep(const Pgl3& ctx, int line_id);

/// A point or line of the plane, used as an orbit seed component.
struct PlaneItem {
  bool is_line;
  int id;
  bool operator==(const PlaneItem&) const = default;
};

struct OrbitStabilizer {
  std::vector<std::vector<PlaneItem>> orbit;  // in discovery order
  SubgroupRec stabilizer;
};

OrbitStabilizer orbit_stabilizer(const Pgl3& ctx, const std::vector<Mat3>& gens, const std::vector<PlaneItem>& seed,
                                 std::size_t cap);

/// Normalizer of h inside an explicitly materialized ambient group.
SubgroupRec normalizer_in(const Pgl3& ctx, const SubgroupRec& ambient, const SubgroupRec& h);

}  // namespace mobius3
