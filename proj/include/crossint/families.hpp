#ifndef CROSSINT_FAMILIES_HPP
#define CROSSINT_FAMILIES_HPP

// Cross-intersecting pair families: A_i ∩ B_i empty for every i and
// A_i ∩ B_j nonempty whenever i < j. Pairs with i > j are unconstrained.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crossint/geometry.hpp"

namespace crossint {

enum class Kind { affine, projective };

inline std::string to_string(Kind k) { return k == Kind::affine ? "affine" : "projective"; }

template <class Member>
struct MemberTraits;

template <>
struct MemberTraits<AffineFlat> {
  static constexpr Kind kind = Kind::affine;
};

template <>
struct MemberTraits<ProjectiveSubspace> {
  static constexpr Kind kind = Kind::projective;
};

template <class Member>
struct MemberPair {
  Member a;
  Member b;

  friend bool operator==(const MemberPair&, const MemberPair&) = default;
};

/// An ordered list of (A_i, B_i) pairs in a common ambient vector space.
/// For projective families `space` is GF(q)^(n+1).
template <class Member>
class Family {
 public:
  static constexpr Kind kind = MemberTraits<Member>::kind;
  using Pair = MemberPair<Member>;

  Family() = default;

  explicit Family(Space space, std::vector<Pair> pairs = {}) : space_(std::move(space)) {
    for (auto& p : pairs) push_back(std::move(p));
  }

  const Space& space() const { return space_; }
  const Field& field() const { return space_.field; }
  /// Dimension of the affine space, or of the projective space PG(n, q).
  std::size_t n() const { return kind == Kind::affine ? space_.n : space_.n - 1; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const Pair& operator[](std::size_t i) const { return pairs_[i]; }

  /// Throws if a member is outside the ambient space or is empty.
  void push_back(Pair p) {
    check_member(p.a);
    check_member(p.b);
    pairs_.push_back(std::move(p));
  }

  void push_back(Member a, Member b) { push_back(Pair{std::move(a), std::move(b)}); }

  /// Replaces pair i after validation.
  void set(std::size_t i, Pair p) {
    check_member(p.a);
    check_member(p.b);
    pairs_.at(i) = std::move(p);
  }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  void check_member(const Member& m) const {
    if (!(m.space() == space_)) throw std::invalid_argument("family member from a different ambient space");
    if constexpr (kind == Kind::projective) {
      if (m.empty()) throw std::invalid_argument("projective family members must be nonempty");
    }
  }

  Space space_;
  std::vector<Pair> pairs_;
};

using AffineFamily = Family<AffineFlat>;
using ProjectiveFamily = Family<ProjectiveSubspace>;

enum class ViolationReason { diagonal_nonempty, offdiagonal_empty };

inline std::string to_string(ViolationReason r) {
  return r == ViolationReason::diagonal_nonempty ? "diagonal_nonempty" : "offdiagonal_empty";
}

struct Violation {
  std::size_t i = 0;  // 1-based
  std::size_t j = 0;  // 1-based
  ViolationReason reason = ViolationReason::diagonal_nonempty;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
  std::optional<Violation> violation;

  bool ok() const { return !violation.has_value(); }
};

/// Diagonal pairs are scanned first (i ascending), then A_i ∩ B_j for i < j
/// row-major. The first violation found is reported.
template <class Member>
VerifyReport verify_cross_intersecting(const Family<Member>& fam) {
  const auto& pairs = fam.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (intersects(pairs[i].a, pairs[i].b)) return {Violation{i + 1, i + 1, ViolationReason::diagonal_nonempty}};
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (!intersects(pairs[i].a, pairs[j].b)) return {Violation{i + 1, j + 1, ViolationReason::offdiagonal_empty}};
  return {};
}

/// The smallest vector (lexicographically) outside the hyperplane.
inline Vec first_vector_outside(const Hyperplane& h) {
  const Space& space = h.kernel.space();
  for (std::uint64_t idx = 1; idx < space.size(); ++idx) {
    Vec v = space.vector_at(idx);
    if (!h.kernel.contains(v)) return v;
  }
  throw std::logic_error("hyperplane equals the whole space");
}

/// 2t pairs, t = (q^n - 1)/(q - 1): (H_i, H_i + b_i) for every hyperplane in
/// canonical order, followed by (H_i + b_i, H_i). b_i is the smallest vector
/// outside H_i.
inline AffineFamily construct_extremal_affine(std::size_t n, const Field& field) {
  if (n < 1) throw std::invalid_argument("affine construction needs n >= 1");
  const Space space{field, n};
  const auto hyperplanes = enumerate_hyperplanes(space);
  std::vector<AffineFlat> base, shifted;
  for (const auto& h : hyperplanes) {
    base.emplace_back(space.zero(), h.kernel);
    shifted.emplace_back(first_vector_outside(h), h.kernel);
  }
  AffineFamily fam(space);
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) fam.push_back(base[i], shifted[i]);
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) fam.push_back(shifted[i], base[i]);
  return fam;
}

/// The first half of the extremal construction: t = (q^n - 1)/(q - 1) pairs.
inline AffineFamily construct_lower_bound_affine(std::size_t n, const Field& field) {
  const AffineFamily full = construct_extremal_affine(n, field);
  AffineFamily fam(full.space());
  for (std::size_t i = 0; i < full.size() / 2; ++i) fam.push_back(full[i]);
  return fam;
}

/// 2 (q^n - 1)/(q - 1).
inline std::uint64_t affine_bound(std::size_t n, const Field& field) { return 2 * gaussian_point_count(n, field); }

/// m <= 2 (q^n - 1)/(q - 1). Throws std::invalid_argument on an unverified
/// family. A false result on a verified family means the library is broken.
inline bool check_affine_bound(const AffineFamily& fam) {
  const auto report = verify_cross_intersecting(fam);
  if (!report.ok()) throw std::invalid_argument("affine bound check requires a cross-intersecting family");
  return fam.size() <= affine_bound(fam.n(), fam.field());
}

}  // namespace crossint

#endif  // CROSSINT_FAMILIES_HPP
