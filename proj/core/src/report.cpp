#include "toricsr/report.hpp"

#include <limits>

#include <json.hpp>

namespace toricsr {

namespace {

using Json = nlohmann::ordered_json;

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json vec(Vec2 v) { return Json::array({v.x, v.y}); }

Json vecs(std::span<const Vec2> vs) {
  Json out = Json::array();
  for (Vec2 v : vs) out.push_back(vec(v));
  return out;
}

Json binomials(const BinomialSet& set, VariableStyle style) {
  Json out = Json::array();
  for (const Binomial& b : set)
    out.push_back(Json{{"plus", b.plus()}, {"minus", b.minus()}, {"pretty", to_string(b, style)}});
  return out;
}

Json matrix_doc(const IntegerMatrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(big(a(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"matrix", std::move(rows)}};
}

}  // namespace

std::string matrix_json(const IntegerMatrix& a) { return matrix_doc(a).dump(); }

std::string report_json(const IntegerMatrix& a, const RobustnessReport& r, VariableStyle style) {
  Json doc;
  doc["input"] = matrix_doc(a);
  doc["gale"] = vecs(r.gale.rows());

  Json order = Json::array();
  for (std::size_t i : r.reduced.angular_order) order.push_back(i + 1);
  doc["reduced_gale"] = Json{{"rows", vecs(r.reduced.rows)}, {"angular_order", std::move(order)}};
  doc["positively_graded"] = true;

  Json cones = Json::array();
  for (const Cone2D& c : r.h_union.cones)
    cones.push_back(Json{{"a", vec(c.a())}, {"b", vec(c.b())}, {"det", c.det()}, {"hilbert_basis", vecs(hilbert_basis(c))}});
  doc["fan_cones"] = std::move(cones);

  Json h_union = Json::array();
  for (std::size_t i = 0; i < r.h_union.vectors.size(); ++i)
    h_union.push_back(Json{{"vector", vec(r.h_union.vectors[i])}, {"cones", r.h_union.provenance[i]}});
  doc["hilbert_union"] = std::move(h_union);
  doc["h_core"] = vecs(r.h_core);
  doc["indispensable"] = binomials(r.indispensable, style);
  doc["graver"] = binomials(r.graver, style);
  doc["markov"] = Json{{"binomials", binomials(r.markov.binomials, style)},
                       {"verified_generating", r.markov.verified_generating}};
  doc["complete_intersection"] = r.complete_intersection;

  Json bqs = Json::array();
  for (const Bouquet& b : r.bouquets) {
    Json members = Json::array();
    for (std::size_t m : b.members) members.push_back(m + 1);
    bqs.push_back(Json{{"members", std::move(members)}, {"direction", vec(b.direction)}, {"mixed", b.mixed}});
  }
  doc["bouquets"] = std::move(bqs);
  doc["mixed_count"] = r.mixed_count;
  doc["centrally_symmetric"] = r.centrally_symmetric;
  doc["strongly_robust"] = r.strongly_robust;
  doc["witness"] = r.witness ? Json{{"variable", r.witness->variable + 1}, {"direction", vec(r.witness->direction)}}
                             : Json(nullptr);
  return doc.dump(2) + "\n";
}

}  // namespace toricsr
