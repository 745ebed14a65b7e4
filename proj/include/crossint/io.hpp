#ifndef CROSSINT_IO_HPP
#define CROSSINT_IO_HPP

// Canonical JSON for family files and reports.
//
// Family file:
//   {"version": 1, "kind": "affine"|"projective",
//    "field": {"p": P, "k": K, "modulus": [c0, ..., cK]},   // [] when K == 1
//    "n": N, "point_order": "lex-first-nonzero-1",
//    "pairs": [{"A": MEMBER, "B": MEMBER}, ...]}
// Affine members are {"rep": [...], "dir": [[...], ...]}, projective members
// {"lin": [[...], ...]}. Rows are always written in RREF.

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "crossint/certify.hpp"
#include "crossint/search.hpp"
#include "json.hpp"

namespace crossint {

using Json = nlohmann::ordered_json;

inline constexpr int kFamilyFormatVersion = 1;

/// Malformed or unsupported family file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyFamily = std::variant<AffineFamily, ProjectiveFamily>;

inline Json field_to_json(const Field& f) {
  Json j;
  j["p"] = f.p();
  j["k"] = f.k();
  j["modulus"] = f.modulus();
  return j;
}

inline Json rows_to_json(const std::vector<Vec>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

inline Json member_to_json(const AffineFlat& f) {
  Json j;
  j["rep"] = f.rep();
  j["dir"] = rows_to_json(f.dir().basis());
  return j;
}

inline Json member_to_json(const ProjectiveSubspace& s) {
  Json j;
  j["lin"] = rows_to_json(s.lin().basis());
  return j;
}

template <class Member>
Json family_to_json(const Family<Member>& fam) {
  Json j;
  j["version"] = kFamilyFormatVersion;
  j["kind"] = to_string(Family<Member>::kind);
  j["field"] = field_to_json(fam.field());
  j["n"] = fam.n();
  j["point_order"] = kPointOrder;
  Json pairs = Json::array();
  for (const auto& p : fam.pairs()) {
    Json pj;
    pj["A"] = member_to_json(p.a);
    pj["B"] = member_to_json(p.b);
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

inline Json family_to_json(const AnyFamily& fam) {
  return std::visit([](const auto& f) { return family_to_json(f); }, fam);
}

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline Vec vec_from_json(const Json& j, const Space& space) {
  if (!j.is_array()) throw FormatError("vector must be an array");
  Vec v;
  for (const auto& c : j) {
    if (!c.is_number_unsigned()) throw FormatError("coordinates must be non-negative integers");
    v.push_back(c.get<Element>());
  }
  try {
    space.check(v);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return v;
}

inline std::vector<Vec> rows_from_json(const Json& j, const Space& space) {
  if (!j.is_array()) throw FormatError("row list must be an array");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r, space));
  return rows;
}

inline AffineFlat affine_member(const Json& j, const Space& space) {
  return AffineFlat(vec_from_json(require(j, "rep"), space),
                    Subspace::span(space, rows_from_json(require(j, "dir"), space)));
}

inline ProjectiveSubspace projective_member(const Json& j, const Space& space) {
  return ProjectiveSubspace(Subspace::span(space, rows_from_json(require(j, "lin"), space)));
}

template <class Member, class Parse>
Family<Member> parse_pairs(const Json& pairs, const Space& space, Parse parse) {
  if (!pairs.is_array()) throw FormatError("\"pairs\" must be an array");
  Family<Member> fam(space);
  for (const auto& pj : pairs) {
    try {
      fam.push_back(parse(require(pj, "A"), space), parse(require(pj, "B"), space));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  return fam;
}

}  // namespace detail

/// Throws FormatError on unknown versions, field mismatches, or bad members.
inline AnyFamily family_from_json(const Json& j) {
  using detail::require;
  const Json& version = require(j, "version");
  if (!version.is_number_integer() || version.get<int>() != kFamilyFormatVersion)
    throw FormatError("unsupported family file version " + version.dump());
  const Json& fj = require(j, "field");
  Field field;
  try {
    field = Field(require(fj, "p").get<int>(), require(fj, "k").get<int>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  } catch (const Json::exception& e) {
    throw FormatError(e.what());
  }
  if (require(fj, "modulus") != Json(field.modulus()))
    throw FormatError("field modulus does not match the canonical modulus " + Json(field.modulus()).dump());
  if (require(j, "point_order") != kPointOrder)
    throw FormatError("unknown point order " + require(j, "point_order").dump());
  const Json& nj = require(j, "n");
  if (!nj.is_number_unsigned()) throw FormatError("\"n\" must be a non-negative integer");
  const auto n = nj.get<std::size_t>();
  const std::string kind = require(j, "kind").is_string() ? require(j, "kind").get<std::string>() : "";
  if (kind == "affine") {
    if (n < 1) throw FormatError("affine families need n >= 1");
    return detail::parse_pairs<AffineFlat>(require(j, "pairs"), Space{field, n}, detail::affine_member);
  }
  if (kind == "projective")
    return detail::parse_pairs<ProjectiveSubspace>(require(j, "pairs"), Space{field, n + 1},
                                                   detail::projective_member);
  throw FormatError("unknown family kind " + require(j, "kind").dump());
}

inline AnyFamily parse_family(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(e.what());
  }
  return family_from_json(j);
}

inline Json to_json(const VerifyReport& r) {
  Json j;
  j["ok"] = r.ok();
  if (r.violation) {
    Json v;
    v["i"] = r.violation->i;
    v["j"] = r.violation->j;
    v["reason"] = to_string(r.violation->reason);
    j["violation"] = std::move(v);
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

inline Json to_json(const CertificateReport& r) {
  Json j;
  j["m"] = r.m;
  j["t"] = r.t;
  j["rank"] = r.rank;
  j["independent"] = r.independent;
  j["bound"] = r.bound;
  j["bound_confirmed"] = r.bound_confirmed;
  j["evaluation_table_ok"] = r.evaluation_table_ok;
  if (r.conjecture_bound) j["conjecture_bound"] = *r.conjecture_bound;
  return j;
}

inline Json to_json(const CertificateMatrix& m) {
  Json j;
  j["p"] = m.p;
  j["rows"] = rows_to_json(m.rows);
  return j;
}

inline Json to_json(const SearchReport& r) {
  Json j;
  j["max_size"] = r.max_size;
  j["witness"] = r.witness;
  j["nodes_explored"] = r.nodes_explored;
  j["restricted"] = r.restricted;
  return j;
}

}  // namespace crossint

#endif  // CROSSINT_IO_HPP
