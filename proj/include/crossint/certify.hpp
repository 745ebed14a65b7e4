#ifndef CROSSINT_CERTIFY_HPP
#define CROSSINT_CERTIFY_HPP

/// Rank certificate for cross-intersecting projective families.
///
/// Each pair contributes the affine-linear polynomial P_i = 1 - sum_k v_i(k) x_k,
/// where v_i is the characteristic vector of A_i over the t points of PG(n, q).
/// Two more rows encode sum_k x_k and sum_k (1 - x_k). Evaluated at the
/// characteristic vectors w_j of the B_j (plus all-ones and all-zeros) these
/// polynomials form a triangular system with unit diagonal modulo q, so they
/// are linearly independent; they live in the (t + 1)-dimensional span of
/// 1, x_1, ..., x_t, giving m + 2 <= t + 1.
///
/// Rank is computed over the prime subfield GF(p). Matrix entries are integers
/// and congruence mod q implies congruence mod p, so full rank over GF(p) is
/// enough.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "crossint/families.hpp"

namespace crossint {

/// Row i holds the coefficients of P_i in the basis 1, x_1, ..., x_t, reduced mod p.
struct CertificateMatrix {
  int p = 2;
  std::size_t m = 0;
  std::size_t t = 0;
  std::vector<std::vector<Element>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return t + 1; }

  friend bool operator==(const CertificateMatrix&, const CertificateMatrix&) = default;
};

struct CertificateReport {
  std::size_t m = 0;
  std::size_t t = 0;
  std::size_t rank = 0;
  bool independent = false;
  bool bound_confirmed = false;
  bool evaluation_table_ok = false;
  /// t - 1.
  std::uint64_t bound = 0;
  /// 2^(n+1) - 2, only for q = 2.
  std::optional<std::uint64_t> conjecture_bound;
};

namespace detail {

inline std::vector<CharVector> char_vectors(const ProjectiveFamily& fam, bool a_side) {
  const auto points = enumerate_projective_points(fam.n(), fam.field());
  std::vector<CharVector> out;
  for (const auto& pr : fam.pairs()) out.push_back(char_vector(a_side ? pr.a : pr.b, points));
  return out;
}

// Rows as integer coefficients before reduction.
inline std::vector<std::vector<std::int64_t>> integer_rows(const std::vector<CharVector>& a_vectors, std::size_t t) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& v : a_vectors) {
    std::vector<std::int64_t> r(t + 1, 0);
    r[0] = 1;
    for (std::size_t k = 0; k < t; ++k) r[k + 1] = -static_cast<std::int64_t>(v[k]);
    rows.push_back(std::move(r));
  }
  std::vector<std::int64_t> all_x(t + 1, 1);
  all_x[0] = 0;
  rows.push_back(std::move(all_x));
  std::vector<std::int64_t> complement(t + 1, -1);
  complement[0] = static_cast<std::int64_t>(t);
  rows.push_back(std::move(complement));
  return rows;
}

inline std::int64_t evaluate(const std::vector<std::int64_t>& row, const CharVector& w) {
  std::int64_t s = row[0];
  for (std::size_t k = 0; k < w.size(); ++k) s += row[k + 1] * w[k];
  return s;
}

inline std::int64_t mod(std::int64_t v, std::int64_t q) { return ((v % q) + q) % q; }

}  // namespace detail

/// Coefficient matrix without the cross-intersecting precondition.
inline CertificateMatrix certificate_matrix(const ProjectiveFamily& fam) {
  const Field prime(fam.field().p(), 1);
  CertificateMatrix mat;
  mat.p = prime.p();
  mat.m = fam.size();
  mat.t = projective_point_total(fam.n(), fam.field());
  for (const auto& r : detail::integer_rows(detail::char_vectors(fam, true), mat.t)) {
    std::vector<Element> row;
    for (auto c : r) row.push_back(prime.from_int(c));
    mat.rows.push_back(std::move(row));
  }
  return mat;
}

/// Throws std::invalid_argument unless `fam` is cross-intersecting.
inline CertificateMatrix build_certificate(const ProjectiveFamily& fam) {
  if (!verify_cross_intersecting(fam).ok())
    throw std::invalid_argument("certificate requires a cross-intersecting family");
  return certificate_matrix(fam);
}

/// Checks, in integers reduced mod q:
///   P_i(w_i) = 1,  P_i(w_j) = 0 (i < j),  P_i(1) = 0,  P_{m+2}(w_j) = 0,
///   P_{m+1}(1) = t = 1,  P_{m+2}(0) = t = 1.
/// Throws std::invalid_argument when the matrix was not built from `fam`.
inline bool evaluate_identities(const ProjectiveFamily& fam, const CertificateMatrix& mat) {
  if (!(certificate_matrix(fam) == mat)) throw std::invalid_argument("certificate matrix does not match the family");
  const std::size_t m = fam.size(), t = mat.t;
  const auto q = static_cast<std::int64_t>(fam.field().q());
  const auto rows = detail::integer_rows(detail::char_vectors(fam, true), t);
  const auto w = detail::char_vectors(fam, false);
  const CharVector ones(t, 1), zeros(t, 0);
  using detail::evaluate;
  using detail::mod;

  for (std::size_t i = 0; i < m; ++i) {
    if (evaluate(rows[i], w[i]) != 1) return false;
    for (std::size_t j = i + 1; j < m; ++j)
      if (mod(evaluate(rows[i], w[j]), q) != 0) return false;
    if (mod(evaluate(rows[i], ones), q) != 0) return false;
  }
  for (std::size_t j = 0; j < m; ++j)
    if (mod(evaluate(rows[m + 1], w[j]), q) != 0) return false;
  if (mod(evaluate(rows[m], ones), q) != 1) return false;
  if (mod(evaluate(rows[m + 1], zeros), q) != 1) return false;
  return true;
}

/// Rank of a matrix over the prime field GF(p).
inline std::size_t rank_mod_p(int p, std::vector<std::vector<Element>> rows) {
  if (rows.empty()) return 0;
  const Field prime(p, 1);
  return detail::rref_in_place(prime, rows, rows.front().size()).size();
}

/// Throws std::invalid_argument unless `fam` is cross-intersecting.
inline CertificateReport certify_projective_bound(const ProjectiveFamily& fam) {
  const CertificateMatrix mat = build_certificate(fam);
  CertificateReport rep;
  rep.m = mat.m;
  rep.t = mat.t;
  rep.rank = rank_mod_p(mat.p, mat.rows);
  rep.independent = rep.rank == rep.m + 2;
  rep.evaluation_table_ok = evaluate_identities(fam, mat);
  rep.bound = rep.t - 1;
  rep.bound_confirmed = rep.independent && rep.m + 2 <= rep.t + 1 && rep.m <= rep.bound;
  if (fam.field().q() == 2) rep.conjecture_bound = (std::uint64_t{1} << (fam.n() + 1)) - 2;
  return rep;
}

}  // namespace crossint

#endif  // CROSSINT_CERTIFY_HPP
