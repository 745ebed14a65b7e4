#ifndef CROSSINT_TESTS_ORACLES_HPP
#define CROSSINT_TESTS_ORACLES_HPP

// Brute-force oracles. They share only Field arithmetic with the library and
// never call RREF, intersection, or search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "crossint/field.hpp"

namespace crossint::oracle {

using Point = std::vector<Element>;
using PointSet = std::set<Point>;

inline std::vector<Point> all_vectors(const Field& f, std::size_t n) {
  std::vector<Point> out{Point{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Point> next;
    for (const auto& v : out)
      for (Element c = 0; c < f.q(); ++c) {
        Point w = v;
        w.push_back(c);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

/// All linear combinations of `rows` (q^|rows| of them, with repeats collapsed).
inline PointSet span(const Field& f, std::size_t n, const std::vector<Point>& rows) {
  PointSet out;
  for (const auto& coeffs : all_vectors(f, rows.size())) {
    Point v(n, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t c = 0; c < n; ++c) v[c] = f.add(v[c], f.mul(coeffs[i], rows[i][c]));
    out.insert(std::move(v));
  }
  return out;
}

inline PointSet coset(const Field& f, std::size_t n, const Point& rep, const std::vector<Point>& dir) {
  PointSet out;
  for (const auto& d : span(f, n, dir)) {
    Point v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = f.add(rep[c], d[c]);
    out.insert(std::move(v));
  }
  return out;
}

inline PointSet intersect(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

/// log_q of a set size (exact for subspace and coset sizes).
inline std::size_t log_q(std::size_t size, Element q) {
  std::size_t d = 0;
  while (size > 1) {
    size /= q;
    ++d;
  }
  return d;
}

/// Every distinct subspace of GF(q)^n as a point set, generated by spanning
/// all subsets of up to n vectors.
inline std::vector<PointSet> all_subspaces(const Field& f, std::size_t n) {
  std::set<PointSet> found;
  const auto vecs = all_vectors(f, n);
  std::function<void(std::size_t, std::vector<Point>&)> rec = [&](std::size_t start, std::vector<Point>& chosen) {
    found.insert(span(f, n, chosen));
    if (chosen.size() == n) return;
    for (std::size_t i = start; i < vecs.size(); ++i) {
      chosen.push_back(vecs[i]);
      rec(i + 1, chosen);
      chosen.pop_back();
    }
  };
  std::vector<Point> chosen;
  rec(0, chosen);
  return {found.begin(), found.end()};
}

/// Irreducibility by exhausting all products of two monic factors of
/// positive degree (coefficients low-to-high).
inline bool irreducible_by_products(const std::vector<int>& f, int p) {
  const std::size_t k = f.size() - 1;
  auto monics = [&](std::size_t deg) {
    std::vector<std::vector<int>> out{{}};
    for (std::size_t i = 0; i < deg; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& v : out)
        for (int c = 0; c < p; ++c) {
          auto w = v;
          w.push_back(c);
          next.push_back(std::move(w));
        }
      out = std::move(next);
    }
    for (auto& v : out) v.push_back(1);
    return out;
  };
  for (std::size_t d = 1; d < k; ++d)
    for (const auto& g : monics(d))
      for (const auto& h : monics(k - d)) {
        std::vector<int> prod(k + 1, 0);
        for (std::size_t i = 0; i < g.size(); ++i)
          for (std::size_t j = 0; j < h.size(); ++j) prod[i + j] = (prod[i + j] + g[i] * h[j]) % p;
        if (prod == f) return false;
      }
  return true;
}

/// Longest sequence of distinct indices with edge(s_i, s_j) for all i < j,
/// by enumerating every injective sequence.
// Longest sequence with edge(earlier, later) for every pair; the first one
// found in lexicographic order is kept.
inline std::vector<std::size_t> naive_max_witness(std::size_t n,
                                                  const std::function<bool(std::size_t, std::size_t)>& edge) {
  std::vector<std::size_t> best;
  std::vector<std::size_t> seq;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&] {
    if (seq.size() > best.size()) best = seq;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (auto s : seq) ok = ok && edge(s, c);
      if (!ok) continue;
      used[c] = true;
      seq.push_back(c);
      rec();
      seq.pop_back();
      used[c] = false;
    }
  };
  rec();
  return best;
}

inline std::size_t naive_max_sequence(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& edge) {
  return naive_max_witness(n, edge).size();
}

}  // namespace crossint::oracle

#endif  // CROSSINT_TESTS_ORACLES_HPP
