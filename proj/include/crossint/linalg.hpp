#ifndef CROSSINT_LINALG_HPP
#define CROSSINT_LINALG_HPP

// Vectors and canonical (RREF) linear subspaces of GF(q)^n.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossint/field.hpp"

namespace crossint {

/// Coordinate encodings; ordered lexicographically by std::vector.
using Vec = std::vector<Element>;

/// The ambient vector space GF(q)^n.
struct Space {
  Field field;
  std::size_t n = 0;

  Element q() const { return field.q(); }

  void check(const Vec& v) const {
    if (v.size() != n)
      throw std::invalid_argument("vector of length " + std::to_string(v.size()) +
                                  " in space of dimension " + std::to_string(n));
    for (Element c : v)
      if (!field.contains(c)) throw std::invalid_argument("coordinate " + std::to_string(c) + " not a field element");
  }

  /// Total number of vectors q^n.
  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < n; ++i) s *= q();
    return s;
  }

  /// The vector whose coordinate 0 is the most significant base-q digit of
  /// `index`, so ascending indices give lexicographic order.
  Vec vector_at(std::uint64_t index) const {
    Vec v(n, 0);
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<Element>(index % q());
      index /= q();
    }
    return v;
  }

  Vec zero() const { return Vec(n, 0); }

  friend bool operator==(const Space&, const Space&) = default;
};

inline void require_same(const Space& a, const Space& b) {
  if (!(a == b)) throw std::invalid_argument("operands live in different ambient spaces");
}

inline Vec add(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

inline Vec sub(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

inline Vec scale(const Field& f, Element c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

inline Element dot(const Field& f, const Vec& a, const Vec& b) {
  Element s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Element c) { return c == 0; });
}

/// Scales v so its first nonzero coordinate is 1. Zero vectors are unchanged.
inline Vec normalize_leading(const Field& f, Vec v) {
  for (Element c : v)
    if (c != 0) return scale(f, f.inv(c), v);
  return v;
}

namespace detail {

// In-place reduced row echelon form; drops zero rows, returns pivot columns.
inline std::vector<std::size_t> rref_in_place(const Field& f, std::vector<Vec>& rows, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    rows[r] = scale(f, f.inv(rows[r][col]), rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      rows[i] = sub(f, rows[i], scale(f, rows[i][col], rows[r]));
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace detail

/// A linear subspace held as its unique RREF row basis. Equality of
/// subspaces is equality of these bases.
class Subspace {
 public:
  Subspace() = default;

  /// The span of `rows`.
  static Subspace span(const Space& space, std::vector<Vec> rows) {
    for (const auto& r : rows) space.check(r);
    Subspace s;
    s.space_ = space;
    s.pivots_ = detail::rref_in_place(space.field, rows, space.n);
    s.basis_ = std::move(rows);
    return s;
  }

  static Subspace zero(const Space& space) { return span(space, {}); }

  static Subspace whole(const Space& space) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < space.n; ++i) {
      Vec e(space.n, 0);
      e[i] = 1;
      rows.push_back(std::move(e));
    }
    return span(space, std::move(rows));
  }

  const Space& space() const { return space_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dim() const { return basis_.size(); }

  /// v minus its components along the basis pivots; zero at every pivot column.
  Vec reduce(Vec v) const {
    space_.check(v);
    const Field& f = space_.field;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element c = v[pivots_[i]];
      if (c != 0) v = sub(f, v, scale(f, c, basis_[i]));
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  /// Every vector of the subspace, q^dim of them (small instances only).
  std::vector<Vec> elements() const {
    const Field& f = space_.field;
    Space coeffs{f, dim()};
    std::vector<Vec> out;
    for (std::uint64_t idx = 0; idx < coeffs.size(); ++idx) {
      const Vec c = coeffs.vector_at(idx);
      Vec v = space_.zero();
      for (std::size_t i = 0; i < dim(); ++i) v = add(f, v, scale(f, c[i], basis_[i]));
      out.push_back(std::move(v));
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.space_ == b.space_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis_ < b.basis_;
  }

 private:
  Space space_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical RREF basis of the span of `rows`.
inline Subspace rref(const Space& space, std::vector<Vec> rows) { return Subspace::span(space, std::move(rows)); }

inline Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same(u.space(), v.space());
  std::vector<Vec> rows = u.basis();
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.space(), std::move(rows));
}

/// Basis of {x : r . x = 0 for every row r}.
inline std::vector<Vec> null_space(const Space& space, std::vector<Vec> rows) {
  const Field& f = space.field;
  const auto pivots = detail::rref_in_place(f, rows, space.n);
  std::vector<bool> is_pivot(space.n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < space.n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(space.n, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) x[pivots[i]] = f.neg(rows[i][free]);
    out.push_back(std::move(x));
  }
  return out;
}

/// U ∩ V as the annihilator of ann(U) + ann(V).
inline Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
  require_same(u.space(), v.space());
  std::vector<Vec> constraints = null_space(u.space(), u.basis());
  const auto more = null_space(v.space(), v.basis());
  constraints.insert(constraints.end(), more.begin(), more.end());
  return Subspace::span(u.space(), null_space(u.space(), std::move(constraints)));
}

inline bool contains(const Subspace& u, const Vec& v) { return u.contains(v); }

/// Coefficients c with sum c_i rows[i] == target, if target is in the span.
inline std::optional<std::vector<Element>> solve_in_span(const Space& space, const std::vector<Vec>& rows,
                                                         const Vec& target) {
  // Eliminate on the augmented system [rows^T | target] column by column.
  const Field& f = space.field;
  const std::size_t m = rows.size();
  std::vector<Vec> eq(space.n, Vec(m + 1, 0));
  for (std::size_t i = 0; i < space.n; ++i) {
    for (std::size_t j = 0; j < m; ++j) eq[i][j] = rows[j][i];
    eq[i][m] = target[i];
  }
  const auto pivots = detail::rref_in_place(f, eq, m + 1);
  if (!pivots.empty() && pivots.back() == m) return std::nullopt;
  std::vector<Element> c(m, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = eq[i][m];
  return c;
}

/// {x : normal . x = 0} with the normal's first nonzero coordinate equal to 1.
struct Hyperplane {
  Vec normal;
  Subspace kernel;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.kernel == b.kernel; }
};

inline Hyperplane make_hyperplane(const Space& space, const Vec& normal) {
  space.check(normal);
  if (is_zero(normal)) throw std::invalid_argument("hyperplane normal must be nonzero");
  Vec canon = normalize_leading(space.field, normal);
  Subspace kernel = Subspace::span(space, null_space(space, {canon}));
  return Hyperplane{std::move(canon), std::move(kernel)};
}

/// All (q^n - 1)/(q - 1) hyperplanes, sorted lexicographically by normal.
inline std::vector<Hyperplane> enumerate_hyperplanes(const Space& space) {
  if (space.n == 0) throw std::invalid_argument("GF(q)^0 has no hyperplanes");
  std::vector<Hyperplane> out;
  for (std::uint64_t idx = 1; idx < space.size(); ++idx) {
    Vec v = space.vector_at(idx);
    auto lead = std::find_if(v.begin(), v.end(), [](Element c) { return c != 0; });
    if (*lead != 1) continue;
    out.push_back(make_hyperplane(space, v));
  }
  return out;
}

/// Every linear subspace of the space, in Subspace order (small instances only).
inline std::vector<Subspace> enumerate_subspaces(const Space& space) {
  std::vector<Subspace> all{Subspace::zero(space)};
  for (std::size_t frontier = 0; frontier < all.size(); ++frontier) {
    const Subspace base = all[frontier];
    for (std::uint64_t idx = 1; idx < space.size(); ++idx) {
      Vec v = space.vector_at(idx);
      if (base.contains(v)) continue;
      auto rows = base.basis();
      rows.push_back(std::move(v));
      Subspace s = Subspace::span(space, std::move(rows));
      if (std::find(all.begin(), all.end(), s) == all.end()) all.push_back(std::move(s));
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace crossint

#endif  // CROSSINT_LINALG_HPP
