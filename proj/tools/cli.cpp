#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "crossint/crossint.hpp"

namespace crossint::cli {
namespace {

enum class Format { text, json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Field field_from(const std::string& q) {
  try {
    const auto [p, k] = parse_field_order(q);
    return Field(p, k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_n(std::size_t n) {
  if (n < 1) throw UsageError("--n must be >= 1");
}

AnyFamily read_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_family(ss.str());
  } catch (const FormatError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string family_text(const AnyFamily& fam) { return family_to_json(fam).dump(2) + "\n"; }

void print_verify(const VerifyReport& r, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    out << to_json(r).dump() << "\n";
  } else if (r.ok()) {
    out << "ok: family is cross-intersecting\n";
  } else {
    out << "violation at (" << r.violation->i << ", " << r.violation->j << "): " << to_string(r.violation->reason)
        << "\n";
  }
}

struct Options {
  Format format = Format::text;
  std::size_t n = 0;
  std::string q;
  std::string file;
  std::string output;
  std::string kind = "affine";
  bool lower_bound = false;
  bool restricted = false;
  bool emit_matrix = false;
  std::optional<std::uint64_t> budget;
  std::size_t max_candidates = kDefaultCandidateCap;
};

int do_construct(const Options& o, std::ostream& out) {
  check_n(o.n);
  const Field field = field_from(o.q);
  const AffineFamily fam =
      o.lower_bound ? construct_lower_bound_affine(o.n, field) : construct_extremal_affine(o.n, field);
  const std::string text = family_text(fam);
  if (o.output.empty()) {
    out << text;
  } else {
    write_text_file(o.output, text);
    if (o.format == Format::text) out << "wrote " << fam.size() << " pairs to " << o.output << "\n";
  }
  return kOk;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const AnyFamily fam = read_family(o.file);
  const VerifyReport r = std::visit([](const auto& f) { return verify_cross_intersecting(f); }, fam);
  print_verify(r, o.format, out);
  if (!r.ok()) {
    err << "verification failed: " << to_string(r.violation->reason) << " at (" << r.violation->i << ", "
        << r.violation->j << ")\n";
    return kFailure;
  }
  return kOk;
}

int do_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const AnyFamily any = read_family(o.file);
  if (!std::holds_alternative<ProjectiveFamily>(any)) throw UsageError("certify expects a projective family");
  const auto& fam = std::get<ProjectiveFamily>(any);
  const VerifyReport vr = verify_cross_intersecting(fam);
  if (!vr.ok()) {
    print_verify(vr, o.format, out);
    err << "certification failed: family is not cross-intersecting (" << to_string(vr.violation->reason) << " at ("
        << vr.violation->i << ", " << vr.violation->j << "))\n";
    return kFailure;
  }
  const CertificateReport r = certify_projective_bound(fam);
  if (o.format == Format::json) {
    Json j = to_json(r);
    if (o.emit_matrix) j["matrix"] = to_json(build_certificate(fam));
    out << j.dump() << "\n";
  } else {
    out << "m = " << r.m << ", t = " << r.t << ", rank = " << r.rank << " (" << (r.independent ? "" : "not ")
        << "independent)\n"
        << "identities: " << (r.evaluation_table_ok ? "ok" : "FAILED") << "\n"
        << "bound m <= t - 1 = " << r.bound << ": " << (r.bound_confirmed ? "confirmed" : "NOT confirmed") << "\n";
    if (r.conjecture_bound) out << "q = 2: m <= 2^(n+1) - 2 = " << *r.conjecture_bound << "\n";
    if (o.emit_matrix)
      for (const auto& row : build_certificate(fam).rows) out << vec_text(row) << "\n";
  }
  if (!r.bound_confirmed) {
    err << "certification failed: bound not confirmed\n";
    return kFailure;
  }
  return kOk;
}

template <class Member>
int finish_search(const Options& o, const std::vector<CandidatePair<Member>>& cands, const Space& space,
                  std::ostream& out) {
  SearchReport r = max_family(cands, o.budget);
  r.restricted = o.restricted;
  const auto fam = witness_family(cands, r, space);
  if (o.format == Format::json) {
    Json j;
    j["kind"] = o.kind;
    j["n"] = o.n;
    j["q"] = space.q();
    j["candidates"] = cands.size();
    const Json report = to_json(r);
    for (const auto& [key, value] : report.items()) j[key] = value;
    out << j.dump() << "\n";
  } else {
    out << o.kind << " n = " << o.n << ", q = " << space.q() << (o.restricted ? ", restricted" : "") << ": "
        << cands.size() << " candidates\n"
        << "max_size = " << r.max_size << " (" << r.nodes_explored << " nodes)\n"
        << "witness:";
    for (auto id : r.witness) out << " " << id;
    out << "\n";
  }
  if (!o.output.empty()) write_text_file(o.output, family_text(fam));
  return kOk;
}

int do_search(const Options& o, std::ostream& out) {
  check_n(o.n);
  const Field field = field_from(o.q);
  if (o.kind == "affine")
    return finish_search(o, candidates_affine(o.n, field, o.restricted, o.max_candidates), Space{field, o.n}, out);
  if (o.restricted) throw UsageError("--restricted applies to affine search only");
  return finish_search(o, candidates_projective(o.n, field, o.max_candidates), Space{field, o.n + 1}, out);
}

int do_hyperplanes(const Options& o, std::ostream& out) {
  check_n(o.n);
  const auto hs = enumerate_hyperplanes(Space{field_from(o.q), o.n});
  if (o.format == Format::json) {
    Json j;
    j["count"] = hs.size();
    Json normals = Json::array();
    for (const auto& h : hs) normals.push_back(h.normal);
    j["normals"] = std::move(normals);
    out << j.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < hs.size(); ++i) out << i + 1 << " " << vec_text(hs[i].normal) << "\n";
  }
  return kOk;
}

int do_points(const Options& o, std::ostream& out) {
  check_n(o.n);
  const auto pts = enumerate_projective_points(o.n, field_from(o.q));
  if (o.format == Format::json) {
    Json j;
    j["point_order"] = kPointOrder;
    j["count"] = pts.size();
    j["points"] = rows_to_json(pts);
    out << j.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < pts.size(); ++i) out << i + 1 << " " << vec_text(pts[i]) << "\n";
  }
  return kOk;
}

}  // namespace

std::pair<int, int> parse_field_order(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        s.size() > 9)
      throw std::invalid_argument("bad field order \"" + text + "\"");
    return std::stoi(s);
  };
  const auto caret = text.find('^');
  if (caret != std::string::npos) {
    const int p = to_int(text.substr(0, caret));
    const int k = to_int(text.substr(caret + 1));
    if (!detail::is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("exponent must be >= 1");
    return {p, k};
  }
  int q = to_int(text);
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) throw std::invalid_argument("\"" + text + "\" is not a prime power");
  return {p, k};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cross-intersecting families of affine and projective subspaces over finite fields", "crossint"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  };
  auto add_space = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Dimension")->required();
    sub->add_option("--q", o.q, "Field order: p^k or a prime power")->required();
  };

  auto* construct = app.add_subcommand("construct", "Write the extremal affine family");
  add_space(construct);
  add_format(construct);
  construct->add_flag("--lower-bound", o.lower_bound, "Only the first (q^n-1)/(q-1) pairs");
  construct->add_option("-o,--output", o.output, "Family file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Check the cross-intersecting condition");
  verify->add_option("file", o.file, "Family file")->required();
  add_format(verify);

  auto* certify = app.add_subcommand("certify", "Rank certificate for a projective family");
  certify->add_option("file", o.file, "Family file")->required();
  certify->add_flag("--emit-matrix", o.emit_matrix, "Include the certificate matrix");
  add_format(certify);

  auto* search = app.add_subcommand("search", "Exact maximum family by branch and bound");
  add_space(search);
  add_format(search);
  search->add_option("--kind", o.kind, "affine or projective")->check(CLI::IsMember({"affine", "projective"}));
  search->add_flag("--restricted", o.restricted, "Hyperplane-coset candidates only (affine)");
  search->add_option("--budget", o.budget, "Node budget");
  search->add_option("--max-candidates", o.max_candidates, "Candidate count cap");
  search->add_option("-o,--output", o.output, "Write the witness as a family file");

  auto* hyperplanes = app.add_subcommand("hyperplanes", "List canonical hyperplanes of GF(q)^n");
  add_space(hyperplanes);
  add_format(hyperplanes);

  auto* points = app.add_subcommand("points", "List the point order of PG(n, q)");
  add_space(points);
  add_format(points);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (construct->parsed()) return do_construct(o, out);
    if (verify->parsed()) return do_verify(o, out, err);
    if (certify->parsed()) return do_certify(o, out, err);
    if (search->parsed()) return do_search(o, out);
    if (hyperplanes->parsed()) return do_hyperplanes(o, out);
    if (points->parsed()) return do_points(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SearchLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace crossint::cli
