#ifndef CROSSINT_SEARCH_HPP
#define CROSSINT_SEARCH_HPP

/// Exact maximum cross-intersecting families by branch and bound.
///
/// A candidate is a disjoint pair (A, B). Candidate p may precede p' when
/// A_p ∩ B_p' is nonempty. The search finds the longest sequence of distinct
/// candidates in which every earlier member may precede every later one. The
/// first maximum in lexicographic candidate-id order is the witness.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossint/families.hpp"

namespace crossint {

template <class Member>
struct CandidatePair {
  Member a;
  Member b;
  std::size_t id = 0;
};

/// Raised when a search exceeds its node budget or an instance exceeds the
/// candidate cap.
class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCandidateCap = 4096;

template <class Member>
bool compatible(const CandidatePair<Member>& p, const CandidatePair<Member>& next) {
  return intersects(p.a, next.b);
}

namespace detail {

template <class Member>
void check_cap(const std::vector<CandidatePair<Member>>& out, std::size_t cap) {
  if (out.size() > cap)
    throw SearchLimitExceeded("candidate count exceeds cap of " + std::to_string(cap));
}

}  // namespace detail

/// Restricted: ordered pairs of distinct cosets of one hyperplane, hyperplanes
/// in canonical order (t q (q - 1) candidates). Unrestricted: every ordered
/// pair of disjoint flats.
inline std::vector<CandidatePair<AffineFlat>> candidates_affine(std::size_t n, const Field& field, bool restricted,
                                                                std::size_t cap = kDefaultCandidateCap) {
  if (n < 1) throw std::invalid_argument("affine search needs n >= 1");
  const Space space{field, n};
  std::vector<CandidatePair<AffineFlat>> out;
  auto emit = [&](const AffineFlat& a, const AffineFlat& b) {
    out.push_back({a, b, out.size()});
    detail::check_cap(out, cap);
  };
  if (restricted) {
    for (const auto& h : enumerate_hyperplanes(space)) {
      const auto cosets = enumerate_cosets(h.kernel);
      for (const auto& a : cosets)
        for (const auto& b : cosets)
          if (!(a == b)) emit(a, b);
    }
  } else {
    const auto flats = enumerate_flats(space);
    for (const auto& a : flats)
      for (const auto& b : flats)
        if (!intersects(a, b)) emit(a, b);
  }
  return out;
}

/// Every ordered pair of disjoint nonempty projective subspaces of PG(n, q).
inline std::vector<CandidatePair<ProjectiveSubspace>> candidates_projective(std::size_t n, const Field& field,
                                                                            std::size_t cap = kDefaultCandidateCap) {
  const auto subs = enumerate_projective_subspaces(n, field);
  std::vector<CandidatePair<ProjectiveSubspace>> out;
  for (const auto& a : subs)
    for (const auto& b : subs)
      if (!intersects(a, b)) {
        out.push_back({a, b, out.size()});
        detail::check_cap(out, cap);
      }
  return out;
}

struct SearchReport {
  std::size_t max_size = 0;
  /// Positions in the candidate list, in sequence order.
  std::vector<std::size_t> witness;
  std::uint64_t nodes_explored = 0;
  bool restricted = false;
};

namespace detail {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  /// Index of the first set bit at or after `from`, or npos.
  std::size_t next(std::size_t from) const {
    for (std::size_t w = from / 64; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      if (w == from / 64) bits &= ~std::uint64_t{0} << (from % 64);
      if (bits) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    }
    return npos;
  }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
};

class OrderedSubsetSearch {
 public:
  OrderedSubsetSearch(std::vector<Bitset> successors, std::optional<std::uint64_t> budget)
      : succ_(std::move(successors)), budget_(budget) {}

  SearchReport run() {
    Bitset all(succ_.size());
    for (std::size_t i = 0; i < succ_.size(); ++i) all.set(i);
    // Adjacent members compatible both ways can be swapped without breaking
    // the sequence, so only the order with the smaller id first is explored.
    // The lexicographically first maximum already has that form.
    mutual_.assign(succ_.size(), Bitset(succ_.size()));
    for (std::size_t i = 0; i < succ_.size(); ++i)
      for (std::size_t j = succ_[i].next(0); j != Bitset::npos; j = succ_[i].next(j + 1))
        if (succ_[j].test(i)) mutual_[i].set(j);
    std::vector<std::size_t> current;
    extend(current, all);
    SearchReport rep;
    rep.max_size = best_.size();
    rep.witness = best_;
    rep.nodes_explored = nodes_;
    return rep;
  }

 private:
  // `feasible` holds candidates every member of `current` may precede.
  void extend(std::vector<std::size_t>& current, const Bitset& feasible) {
    ++nodes_;
    if (budget_ && nodes_ > *budget_)
      throw SearchLimitExceeded("node budget of " + std::to_string(*budget_) + " exceeded");
    if (current.size() > best_.size()) best_ = current;
    const std::size_t last = current.empty() ? Bitset::npos : current.back();
    for (std::size_t c = feasible.next(0); c != Bitset::npos; c = feasible.next(c + 1)) {
      if (last != Bitset::npos && c < last && mutual_[last].test(c)) continue;
      const Bitset rest = feasible & succ_[c];
      if (current.size() + 1 + rest.count() <= best_.size()) continue;
      current.push_back(c);
      extend(current, rest);
      current.pop_back();
    }
  }

  std::vector<Bitset> succ_;
  std::vector<Bitset> mutual_;
  std::optional<std::uint64_t> budget_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exact maximum; throws SearchLimitExceeded when more than `budget` nodes
/// are visited.
template <class Member>
SearchReport max_family(const std::vector<CandidatePair<Member>>& candidates,
                        std::optional<std::uint64_t> budget = std::nullopt) {
  const std::size_t n = candidates.size();
  std::vector<detail::Bitset> succ(n, detail::Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && compatible(candidates[i], candidates[j])) succ[i].set(j);
  return detail::OrderedSubsetSearch(std::move(succ), budget).run();
}

/// The witness as a family, in sequence order.
template <class Member>
Family<Member> witness_family(const std::vector<CandidatePair<Member>>& candidates, const SearchReport& rep,
                              const Space& space) {
  Family<Member> fam(space);
  for (auto id : rep.witness) fam.push_back(candidates.at(id).a, candidates.at(id).b);
  return fam;
}

}  // namespace crossint

#endif  // CROSSINT_SEARCH_HPP
