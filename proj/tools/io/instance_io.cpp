#include "instance_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>

namespace fae::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a JSON array");
  return j;
}

}  // namespace

Int int_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    Rat r = parse_rational(j.get<std::string>());
    if (!is_integral(r)) throw ParseError("expected an integer, got \"" + j.get<std::string>() + "\"");
    return numerator(r);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(int_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as an integer or a \"p/q\" string, got " + j.dump());
}

IntVector int_vector_from_json(const json& j) {
  IntVector v;
  for (const auto& x : array(j, "vector")) v.push_back(int_from_json(x));
  return v;
}

RatVector rat_vector_from_json(const json& j) {
  RatVector v;
  for (const auto& x : array(j, "vector")) v.push_back(rat_from_json(x));
  return v;
}

IntMatrix int_matrix_from_json(const json& j) {
  std::vector<IntVector> rows;
  for (const auto& r : array(j, "matrix")) rows.push_back(int_vector_from_json(r));
  if (rows.empty()) throw ParseError("matrix must have at least one row");
  return IntMatrix::from_rows(rows);
}

std::vector<IntVector> int_vectors_from_json(const json& j) {
  std::vector<IntVector> out;
  for (const auto& r : array(j, "vector list")) out.push_back(int_vector_from_json(r));
  return out;
}

json to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

json to_json(const Rat& v) {
  if (is_integral(v)) return to_json(Int(numerator(v)));
  return to_string(v);
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntMatrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(to_json(a.row(i)));
  return out;
}

BodyPtr body_from_json(const json& j) {
  const json& type = field(j, "type");
  if (!type.is_string()) throw ParseError("body \"type\" must be a string");
  const std::string t = type.get<std::string>();
  if (t == "box") return make_box(rat_vector_from_json(field(j, "lo")), rat_vector_from_json(field(j, "hi")));
  if (t == "polytope") {
    const json& a = array(field(j, "A"), "polytope A");
    RatVector d = rat_vector_from_json(field(j, "d"));
    if (a.size() != d.size()) throw DimensionMismatch("polytope A and d have different row counts");
    if (a.empty()) throw ParseError("polytope needs at least one inequality");
    std::vector<RatVector> rows;
    for (const auto& r : a) rows.push_back(rat_vector_from_json(r));
    HPolyhedron p(rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) p.add(rows[i], d[i]);
    return make_polytope(std::move(p));
  }
  if (t == "ball") return make_ball(rat_vector_from_json(field(j, "center")), rat_from_json(field(j, "radius")));
  throw ParseError("unknown body type \"" + t + "\"");
}

json body_to_json(const ConvexBody& q) {
  if (auto* b = dynamic_cast<const BoxBody*>(&q))
    return {{"type", "box"}, {"lo", to_json(b->box().lo)}, {"hi", to_json(b->box().hi)}};
  if (auto* p = dynamic_cast<const PolyBody*>(&q)) {
    json a = json::array(), d = json::array();
    for (const auto& h : p->polyhedron().constraints()) {
      a.push_back(to_json(h.a));
      d.push_back(to_json(h.d));
    }
    return {{"type", "polytope"}, {"A", a}, {"d", d}};
  }
  if (auto* b = dynamic_cast<const BallBody*>(&q))
    return {{"type", "ball"}, {"center", to_json(b->center())}, {"radius", to_json(b->radius())}};
  throw InternalError("body type has no JSON form");
}

InputStatement statement_from_json(const json& j) {
  InputStatement s{int_matrix_from_json(field(j, "W")), body_from_json(field(j, "Q"))};
  s.validate();
  return s;
}

json statement_to_json(const InputStatement& s) { return {{"W", to_json(s.w)}, {"Q", body_to_json(*s.q)}}; }

json verdict_to_json(const Verdict& v) {
  json out = {{"status", to_string(v.status)}};
  if (v.witness) {
    out["b"] = to_json(*v.witness);
    out["verified"] = v.certificate.has_value() && !v.certificate->feasible;
  }
  return out;
}

json trace_to_json(const ReductionTrace& t) {
  json bases = json::array();
  for (const auto& b : t.bases) {
    bases.push_back({{"basis", b.indices},
                     {"det_abs", to_json(b.det_abs)},
                     {"residues", b.residues},
                     {"shifts", b.shifts},
                     {"subproblems", b.subproblems},
                     {"empty_residues", b.empty_residues},
                     {"cells_scanned", b.cells_scanned},
                     {"candidates_rejected", b.candidates_rejected}});
  }
  return {{"m", t.m},
          {"n", t.n},
          {"standard_columns", t.standard_columns},
          {"distinct_columns", t.distinct_columns},
          {"cone_facets", t.cone_facets},
          {"stopped_in_preprocessing", t.stopped_in_preprocessing},
          {"full_cap", to_json(t.full_cap)},
          {"l1_cap", to_json(t.l1_cap)},
          {"norm_bound", to_json(t.norm_bound)},
          {"bases_total", t.bases_total},
          {"subproblems", t.subproblems},
          {"oracle_calls", t.oracle_calls},
          {"bases", bases}};
}

json frobenius_to_json(const DiagonalFrobeniusReport& r) {
  json out;
  if (r.search.t)
    out["exact_t"] = to_json(*r.search.t);
  else
    out["exact_t"] = "unresolved";
  out["paper_bound"] = to_json(r.paper_bound);
  if (r.aliev_henk_bound)
    out["aliev_henk_bound"] = to_json(*r.aliev_henk_bound);
  else
    out["aliev_henk_bound"] = "not_applicable";
  out["m"] = r.m;
  out["n"] = r.n;
  out["delta"] = to_json(r.delta);
  out["levels_checked"] = to_json(r.search.levels_checked);
  if (!r.search.t) out["reason"] = r.search.reason;
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace fae::io
