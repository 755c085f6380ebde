#include "serial.hpp"

namespace polylab {

json field_to_json(const FieldSpec& f) {
  switch (f.kind()) {
    case FieldKind::Rationals: return json{{"type", "Q"}};
    case FieldKind::Prime: return json{{"type", "Fp"}, {"p", f.p()}};
    case FieldKind::PrimeSquare: return json{{"type", "Fp2"}, {"p", f.p()}};
  }
  throw Error(Errc::DomainError, "unknown field kind");
}

FieldSpec field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw Error(Errc::ParseError, "field: expected {type,...}");
  std::string t = j.at("type").get<std::string>();
  if (t == "Q") return FieldSpec::rationals();
  if (t == "Fp") return FieldSpec::prime(j.at("p").get<std::uint64_t>());
  if (t == "Fp2") return FieldSpec::prime_square(j.at("p").get<std::uint64_t>());
  throw Error(Errc::ParseError, "field: unknown type " + t);
}

json triple_to_json(const Triple& t) {
  return json::array({t[0].to_string(), t[1].to_string(), t[2].to_string()});
}

Triple triple_from_json(const FieldSpec& f, const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(Errc::ParseError, "triple: expected 3 scalar strings");
  return Triple(Scalar::parse(f, j.at(0).get<std::string>()), Scalar::parse(f, j.at(1).get<std::string>()),
                Scalar::parse(f, j.at(2).get<std::string>()));
}

json arrangement_to_json(const Arrangement& a) {
  json members = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) members.push_back(triple_to_json(a.member(i)));
  return json{{"kind", a.kind() == Kind::Lines ? "lines" : "points"},
              {"field", field_to_json(a.field())},
              {"members", members},
              {"labels", a.labels()}};
}

Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "arrangement: expected an object");
  std::string k = j.at("kind").get<std::string>();
  if (k != "lines" && k != "points") throw Error(Errc::ParseError, "arrangement: kind must be lines|points");
  FieldSpec f = field_from_json(j.at("field"));
  std::vector<Triple> members;
  for (const auto& m : j.at("members")) members.push_back(triple_from_json(f, m));
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return Arrangement(k == "lines" ? Kind::Lines : Kind::Points, f, std::move(members), std::move(labels));
}

json matroid_to_json(const Rank3Matroid& m) {
  json nb = json::array();
  for (const auto& t : m.nonbases) nb.push_back(json::array({t[0], t[1], t[2]}));
  return json{{"m", m.m}, {"nonbases", nb}};
}

Rank3Matroid matroid_from_json(const json& j) {
  Rank3Matroid m;
  m.m = j.at("m").get<int>();
  for (const auto& t : j.at("nonbases")) {
    std::array<int, 3> a{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()};
    std::sort(a.begin(), a.end());
    m.nonbases.insert(a);
  }
  return m;
}

json cubic_to_json(const PlaneCubic& c) {
  json co = json::array();
  for (const auto& s : c.coeffs()) co.push_back(s.to_string());
  return json{{"field", field_to_json(c.field())}, {"coeffs", co}};
}

PlaneCubic cubic_from_json(const json& j) {
  FieldSpec f = field_from_json(j.at("field"));
  const auto& co = j.at("coeffs");
  if (!co.is_array() || co.size() != 10) throw Error(Errc::ParseError, "cubic: expected 10 coefficients");
  std::array<Scalar, 10> cs{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
                            Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
  for (std::size_t i = 0; i < 10; ++i) cs[i] = Scalar::parse(f, co.at(i).get<std::string>());
  return PlaneCubic(f, cs);
}

json profile_to_json(const SingularityProfile& p) {
  json out = json::object();
  for (auto& [k, v] : p.t) out["t" + std::to_string(k)] = v;
  return out;
}

json verify_report_to_json(const VerifyReport& r) {
  json v = json::array();
  for (const auto& viol : r.violations)
    v.push_back(json{{"triple", json::array({viol.triple[0], viol.triple[1], viol.triple[2]})},
                     {"kind", viol.unexpected_dependence ? "unexpected-dependence" : "missing-dependence"}});
  return json{{"ok", r.ok}, {"violations", v}};
}

json fiber_histogram_to_json(const FiberHistogram& h) {
  json hist = json::object();
  for (auto& [size, count] : h.histogram) hist[std::to_string(size)] = count;
  return json{{"samples", h.samples}, {"histogram", hist}, {"skipped", h.skipped}};
}

json period_rows_to_json(const std::vector<PeriodRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back(json{{"k", r.k}, {"N", r.count}, {"lowest", r.lowest}, {"r", r.rs}});
  return out;
}

std::string period_rows_to_csv(const std::vector<PeriodRow>& rows) {
  std::string s = "k,N,lowest,r_list\n";
  for (const auto& r : rows) {
    s += std::to_string(r.k) + "," + std::to_string(r.count) + "," + std::to_string(r.lowest) + ",";
    for (std::size_t i = 0; i < r.rs.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(r.rs[i]);
    }
    s += "\n";
  }
  return s;
}

json orbit_record_to_json(const OrbitRecord& rec) {
  json its = json::array();
  for (const auto& a : rec.iterates) its.push_back(arrangement_to_json(a));
  json out{{"iterates", its},
           {"mode", rec.mode == EqualityMode::LabeledExact  ? "labeled"
                    : rec.mode == EqualityMode::UnlabeledSet ? "set"
                                                             : "projective"}};
  out["period"] = rec.period ? json(*rec.period) : json();
  return out;
}

json torsion_bundle_to_json(const TorsionDatum& d, const ProjPoint* p) {
  json out{{"curve", cubic_to_json(d.group.curve())},
           {"origin", triple_to_json(d.group.origin().t)},
           {"t", triple_to_json(d.t.t)},
           {"n", d.n}};
  if (p) out["p"] = triple_to_json(p->t);
  return out;
}

TorsionDatum torsion_datum_from_json(const json& j) {
  PlaneCubic curve = cubic_from_json(j.at("curve"));
  const FieldSpec& f = curve.field();
  ProjPoint O{triple_from_json(f, j.at("origin"))};
  ProjPoint t{triple_from_json(f, j.at("t"))};
  int n = j.at("n").get<int>();
  TorsionDatum d{CubicGroup(curve, O), t, n};
  auto ord = point_order(d.group, t, n);
  if (!ord || *ord != n) throw Error(Errc::ParseError, "torsion datum: t does not have order n");
  return d;
}

}  // namespace polylab
