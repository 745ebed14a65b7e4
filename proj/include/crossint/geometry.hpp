#ifndef CROSSINT_GEOMETRY_HPP
#define CROSSINT_GEOMETRY_HPP

// Affine flats of GF(q)^n and projective subspaces of PG(n, q).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossint/linalg.hpp"

namespace crossint {

/// The coset rep + dir. `rep` is reduced modulo dir (zero at every pivot
/// column of dir's RREF basis), so equal cosets compare equal.
class AffineFlat {
 public:
  AffineFlat() = default;

  AffineFlat(const Vec& point, Subspace dir) : dir_(std::move(dir)) { rep_ = dir_.reduce(point); }

  const Vec& rep() const { return rep_; }
  const Subspace& dir() const { return dir_; }
  const Space& space() const { return dir_.space(); }
  std::size_t dim() const { return dir_.dim(); }

  bool contains(const Vec& v) const { return dir_.contains(sub(space().field, v, rep_)); }

  std::vector<Vec> points() const {
    std::vector<Vec> out;
    for (const auto& d : dir_.elements()) out.push_back(add(space().field, rep_, d));
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const AffineFlat& a, const AffineFlat& b) { return a.dir_ == b.dir_ && a.rep_ == b.rep_; }
  friend bool operator<(const AffineFlat& a, const AffineFlat& b) {
    if (!(a.dir_ == b.dir_)) return a.dir_ < b.dir_;
    return a.rep_ < b.rep_;
  }

 private:
  Vec rep_;
  Subspace dir_;
};

inline AffineFlat make_flat(const Vec& point, const Subspace& dir) { return AffineFlat(point, dir); }

/// Empty iff rep(A) - rep(B) lies outside dir(A) + dir(B).
inline std::optional<AffineFlat> affine_intersect(const AffineFlat& a, const AffineFlat& b) {
  require_same(a.space(), b.space());
  const Space& space = a.space();
  const Field& f = space.field;
  // rep_a + x = rep_b + y with x in dir(a), y in dir(b): solve diff = x - y.
  std::vector<Vec> rows = a.dir().basis();
  rows.insert(rows.end(), b.dir().basis().begin(), b.dir().basis().end());
  const auto coeffs = solve_in_span(space, rows, sub(f, b.rep(), a.rep()));
  if (!coeffs) return std::nullopt;
  Vec point = a.rep();
  for (std::size_t i = 0; i < a.dir().dim(); ++i) point = add(f, point, scale(f, (*coeffs)[i], rows[i]));
  return AffineFlat(point, subspace_intersection(a.dir(), b.dir()));
}

inline bool intersects(const AffineFlat& a, const AffineFlat& b) { return affine_intersect(a, b).has_value(); }

/// Every flat of the space: by direction (Subspace order), then representative.
inline std::vector<AffineFlat> enumerate_flats(const Space& space) {
  std::vector<AffineFlat> out;
  for (const auto& dir : enumerate_subspaces(space)) {
    std::vector<AffineFlat> cosets;
    for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
      AffineFlat c(space.vector_at(idx), dir);
      if (std::find(cosets.begin(), cosets.end(), c) == cosets.end()) cosets.push_back(std::move(c));
    }
    std::sort(cosets.begin(), cosets.end());
    out.insert(out.end(), cosets.begin(), cosets.end());
  }
  return out;
}

/// The distinct cosets of `dir`, ordered by representative.
inline std::vector<AffineFlat> enumerate_cosets(const Subspace& dir) {
  const Space& space = dir.space();
  std::vector<AffineFlat> out;
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
    AffineFlat c(space.vector_at(idx), dir);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Projective geometry. PG(n, q) lives in the vector space GF(q)^(n+1).

/// Identifier stored in family files for the point order below.
inline constexpr const char* kPointOrder = "lex-first-nonzero-1";

/// Canonical points of PG(n, q): nonzero vectors of GF(q)^(n+1) whose first
/// nonzero coordinate is 1. They are ordered by the integer sum c_i q^i,
/// coordinate 0 least significant, which gives (1,0), (0,1), (1,1) in PG(1, 2).
/// Position in this list is the index of a characteristic-vector coordinate.
inline std::vector<Vec> enumerate_projective_points(std::size_t n, const Field& field) {
  const Space space{field, n + 1};
  std::vector<Vec> out;
  for (std::uint64_t idx = 1; idx < space.size(); ++idx) {
    Vec v(n + 1, 0);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i <= n; ++i) {
      v[i] = static_cast<Element>(rest % field.q());
      rest /= field.q();
    }
    auto lead = std::find_if(v.begin(), v.end(), [](Element c) { return c != 0; });
    if (*lead == 1) out.push_back(std::move(v));
  }
  return out;
}

/// Number of projective points in a linear subspace of dimension lin_dim:
/// (q^lin_dim - 1)/(q - 1), and 0 for the zero subspace.
inline std::uint64_t gaussian_point_count(std::size_t lin_dim, const Field& field) {
  std::uint64_t count = 0, power = 1;
  for (std::size_t i = 0; i < lin_dim; ++i) {
    count += power;
    power *= field.q();
  }
  return count;
}

inline std::uint64_t projective_point_total(std::size_t n, const Field& field) {
  return gaussian_point_count(n + 1, field);
}

/// A projective subspace, held as its underlying linear subspace.
/// proj_dim() == -1 is the empty subspace.
class ProjectiveSubspace {
 public:
  ProjectiveSubspace() = default;
  explicit ProjectiveSubspace(Subspace lin) : lin_(std::move(lin)) {}

  const Subspace& lin() const { return lin_; }
  const Space& space() const { return lin_.space(); }
  /// n of the ambient PG(n, q).
  std::size_t ambient_dim() const { return space().n - 1; }
  int proj_dim() const { return static_cast<int>(lin_.dim()) - 1; }
  bool empty() const { return lin_.dim() == 0; }
  std::uint64_t point_count() const { return gaussian_point_count(lin_.dim(), space().field); }

  friend bool operator==(const ProjectiveSubspace&, const ProjectiveSubspace&) = default;
  friend bool operator<(const ProjectiveSubspace& a, const ProjectiveSubspace& b) { return a.lin_ < b.lin_; }

 private:
  Subspace lin_;
};

/// The projective subspace spanned by the given representatives.
inline ProjectiveSubspace projective_span(std::size_t n, const Field& field, std::vector<Vec> reps) {
  return ProjectiveSubspace(Subspace::span(Space{field, n + 1}, std::move(reps)));
}

inline ProjectiveSubspace whole_projective_space(std::size_t n, const Field& field) {
  return ProjectiveSubspace(Subspace::whole(Space{field, n + 1}));
}

inline ProjectiveSubspace proj_intersect(const ProjectiveSubspace& a, const ProjectiveSubspace& b) {
  return ProjectiveSubspace(subspace_intersection(a.lin(), b.lin()));
}

inline bool intersects(const ProjectiveSubspace& a, const ProjectiveSubspace& b) {
  return !proj_intersect(a, b).empty();
}

using CharVector = std::vector<std::uint8_t>;

/// 0/1 incidence vector of F against `points`.
inline CharVector char_vector(const ProjectiveSubspace& f, const std::vector<Vec>& points) {
  CharVector out;
  out.reserve(points.size());
  for (const auto& pt : points) out.push_back(f.lin().contains(pt) ? 1 : 0);
  return out;
}

/// All nonempty projective subspaces of PG(n, q), in Subspace order.
inline std::vector<ProjectiveSubspace> enumerate_projective_subspaces(std::size_t n, const Field& field) {
  std::vector<ProjectiveSubspace> out;
  for (auto& s : enumerate_subspaces(Space{field, n + 1}))
    if (s.dim() > 0) out.emplace_back(std::move(s));
  return out;
}

}  // namespace crossint

#endif  // CROSSINT_GEOMETRY_HPP
