#include "qgrass/serialize.hpp"

#include <algorithm>

#include "qgrass/error.hpp"

namespace qgrass {

namespace {

const Json& member(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string(where) + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

std::string string_of(const Json& j, const char* where) {
  if (!j.is_string()) throw InvalidArgument(std::string(where) + ": expected a string");
  return j.get<std::string>();
}

Scalar scalar_from_json(const Json& j, const Field& f) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0) {
      throw InvalidArgument("matrix entry \"" + j.get<std::string>() + "\" is not a rational");
    }
    return Scalar::from_rational(f, q);
  }
  throw InvalidArgument("matrix entry must be an integer or an \"a/b\" string");
}

}  // namespace

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back({{"id", a.id}, {"from", a.source}, {"to", a.target}});
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
  const Json& vs = member(j, "vertices", "quiver");
  if (!vs.is_array()) throw InvalidArgument("quiver: \"vertices\" must be an array");
  std::vector<std::string> vertices;
  for (const auto& v : vs) vertices.push_back(string_of(v, "quiver vertex"));
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw InvalidArgument("quiver: \"arrows\" must be an array");
    for (const auto& a : j["arrows"]) {
      arrows.push_back({string_of(member(a, "id", "arrow"), "arrow id"),
                        string_of(member(a, "from", "arrow"), "arrow from"),
                        string_of(member(a, "to", "arrow"), "arrow to")});
    }
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

Json to_json(const Field& f) {
  if (f.is_rational()) return {{"type", "rational"}};
  return {{"type", "prime"}, {"p", f.characteristic()}};
}

Field field_from_json(const Json& j) {
  if (j.is_string()) return Field::parse(j.get<std::string>());
  const std::string type = string_of(member(j, "type", "field"), "field type");
  if (type == "rational") return Field::rational();
  if (type != "prime") throw InvalidArgument("field: unknown type \"" + type + "\"");
  const Json& p = member(j, "p", "field");
  if (!p.is_number_unsigned()) throw InvalidArgument("field: \"p\" must be a positive integer");
  return Field::prime(p.get<std::uint32_t>());
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.field().is_prime()) {
        row.push_back(m.residues()[r * m.cols() + c]);
      } else {
        row.push_back(m.at(r, c).to_string());
      }
    }
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw InvalidArgument("matrix must be an array of rows");
  Matrix m(f, rows, cols);
  // A matrix with no rows carries no column information.
  if (rows == 0) {
    if (!j.empty()) throw DimensionMismatch("expected a matrix with 0 rows");
    return m;
  }
  if (j.size() != rows) {
    throw DimensionMismatch("expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw DimensionMismatch("row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar_from_json(j[r][c], f));
  }
  return m;
}

Json dims_to_json(const Quiver& q, const DimVector& d) {
  Json out = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out[q.vertex(v)] = d[v];
  return out;
}

DimVector dims_from_json(const Quiver& q, const Json& j) {
  if (!j.is_object()) throw InvalidArgument("dimension vector must be an object {vertex: dim}");
  DimVector d(q.vertex_count(), 0);
  for (const auto& [key, value] : j.items()) {
    if (!q.has_vertex(key)) throw InvalidArgument("dimension vector: unknown vertex \"" + key + "\"");
    if (!value.is_number_unsigned()) {
      throw InvalidArgument("dimension vector: entry for \"" + key + "\" must be a nonnegative integer");
    }
    d[q.vertex_index(key)] = value.get<std::size_t>();
  }
  return d;
}

Json to_json(const Representation& m) {
  Json mats = Json::object();
  for (std::size_t a = 0; a < m.quiver().arrow_count(); ++a) mats[m.quiver().arrow(a).id] = to_json(m.matrix(a));
  return {{"quiver", to_json(m.quiver())},
          {"field", to_json(m.field())},
          {"dims", dims_to_json(m.quiver(), m.dims())},
          {"matrices", mats}};
}

Representation representation_from_json(const Json& j, const std::optional<Field>& field) {
  auto q = std::make_shared<const Quiver>(quiver_from_json(member(j, "quiver", "representation")));
  Field f = field ? *field
                  : field_from_json(member(j, "field", "representation (or pass a field)"));
  DimVector dims = dims_from_json(*q, member(j, "dims", "representation"));
  const Json& mats = j.contains("matrices") ? j["matrices"] : Json::object();
  if (!mats.is_object()) throw InvalidArgument("representation: \"matrices\" must be an object");
  for (const auto& [key, value] : mats.items()) {
    (void)value;
    if (!std::any_of(q->arrows().begin(), q->arrows().end(), [&](const Arrow& a) { return a.id == key; })) {
      throw InvalidArgument("representation: matrix for unknown arrow \"" + key + "\"");
    }
  }
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    const std::string& id = q->arrow(a).id;
    const std::size_t rows = dims[q->target(a)], cols = dims[q->source(a)];
    if (mats.contains(id)) {
      try {
        out.push_back(matrix_from_json(mats[id], f, rows, cols));
      } catch (const Error& e) {
        throw DimensionMismatch("arrow \"" + id + "\": " + e.what());
      }
    } else if (rows == 0 || cols == 0) {
      out.emplace_back(f, rows, cols);
    } else {
      throw InvalidArgument("representation: missing matrix for arrow \"" + id + "\"");
    }
  }
  return Representation(q, f, std::move(dims), std::move(out));
}

Json point_to_json(const Quiver& q, const SubmodulePoint& pt) {
  Json out = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out[q.vertex(v)] = to_json(pt.subspaces[v]);
  return out;
}

Json to_json(const GrassmannianReport& r, bool count_only) {
  const Quiver& q = r.parent->quiver();
  Json out = {{"dimvec", dims_to_json(q, r.dimvec)}, {"count", r.count}, {"field", to_json(r.field)}};
  if (!count_only) {
    Json pts = Json::array();
    for (const auto& pt : r.points) pts.push_back(point_to_json(q, pt));
    out["points"] = pts;
  }
  return out;
}

Json to_json(const Morphism& f) {
  const Quiver& q = f.source().quiver();
  Json out = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out[q.vertex(v)] = to_json(f.map(v));
  return out;
}

Json to_json(const Representation& m, const ExtCocycle& c) {
  Json out = Json::object();
  for (std::size_t a = 0; a < m.quiver().arrow_count(); ++a) out[m.quiver().arrow(a).id] = to_json(c.components[a]);
  return out;
}

Json to_json(const ClassificationResult& c) {
  Json out = {{"type", to_string(c.kind)}};
  if (!c.witness.empty()) out["diagram"] = c.witness;
  return out;
}

Json to_json(const TitsResult& t) {
  Json out = {{"form", to_string(t.kind)}};
  if (t.radical) out["radical"] = to_json(*t.radical);
  return out;
}

Json to_json(const EtaWitness& w) {
  return {{"m", to_json(*w.m)},
          {"a", w.a},
          {"b", w.b},
          {"mu", to_json(w.mu)},
          {"pi", to_json(w.pi)},
          {"exact", witness_is_exact(w)}};
}

Json to_json(const Quiver& q, const ConditionCReport& r) {
  Json viol = Json::array();
  for (const auto& pt : r.violations) viol.push_back(point_to_json(q, pt));
  return {{"holds", r.holds()},
          {"dimvec", dims_to_json(q, r.dimvec)},
          {"checked", r.checked},
          {"violations", viol}};
}

Json to_json(const Quiver& q, const Lemma1Report& r) {
  Json fails = Json::array();
  for (const auto& pt : r.failures) fails.push_back(point_to_json(q, pt));
  return {{"holds", r.holds()},
          {"a", r.a},
          {"dimvec", dims_to_json(q, r.dimvec)},
          {"count", r.count},
          {"failures", fails}};
}

Json to_json(const Quiver& q, const Lemma2Report& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json fails = Json::array();
    for (const auto& pt : row.failures) fails.push_back(point_to_json(q, pt));
    Json entry = {{"w", row.w}, {"count", row.count}, {"failures", fails}};
    entry["s"] = row.s ? Json(*row.s) : Json(nullptr);
    rows.push_back(entry);
  }
  return {{"holds", r.holds()}, {"n", r.n}, {"a", r.a}, {"rows", rows}};
}

Json to_json(const FullnessReport& r) {
  return {{"equal", r.equal()}, {"hom_eta", r.hom_eta}, {"hom_kronecker", r.hom_kronecker}};
}

Json to_json(const BijectionReport& r) {
  return {{"equal", r.equal()}, {"lhs", r.lhs}, {"rhs", r.rhs}};
}

Json to_json(const RemarkReport& r) {
  const Quiver& q = r.witness.m->quiver();
  return {{"b", r.b},
          {"witness", to_json(r.witness)},
          {"x_plus_v", point_to_json(q, r.x_plus_v)},
          {"x_plus_v_is_bristle", r.x_plus_v_is_bristle},
          {"x_plus_v_among_violations", r.x_plus_v_among_violations},
          {"condition_c", to_json(q, r.condition)},
          {"counts", to_json(r.counts)}};
}

}  // namespace qgrass
