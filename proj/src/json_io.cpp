#include "sphspec/json_io.hpp"

namespace sphspec::io {

namespace {

Json record(const char* type) {
  Json j;
  j["schema_version"] = schema_version;
  j["type"] = type;
  return j;
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& r : v) a.push_back(rational(r));
  return a;
}

Json ktype(const KType& k) {
  Json a = Json::array();
  for (const IrrepLabel& l : k) a.push_back(to_string(l));
  return a;
}

std::int64_t ktype_dim(const KType& k) {
  std::int64_t d = 1;
  for (const IrrepLabel& l : k) d *= dim(l);
  return d;
}

Json ktype_list(const std::map<KType, std::int64_t>& m) {
  Json a = Json::array();
  for (const auto& [k, mult] : m) {
    Json e;
    e["k_type"] = ktype(k);
    e["dim"] = ktype_dim(k);
    e["multiplicity"] = mult;
    a.push_back(std::move(e));
  }
  return a;
}

void param_fields(Json& j, const DiscreteSeriesParam& d) {
  j["realization"] = to_string(d.realization);
  j["ell"] = d.ell;
  if (d.realization.kind == HypKind::U || d.realization.kind == HypKind::Sp || d.realization.kind == HypKind::Spin81) {
    j["x"] = d.x;
    j["y"] = d.y;
  }
  if (d.series) j["series"] = d.series;
}

Json parabolic(const ParabolicData& p) {
  Json j;
  j["name"] = p.name;
  j["levi"] = p.levi;
  j["levi_template"] = p.levi_template;
  j["lambda"] = p.lambda;
  j["lambda_template"] = p.lambda_template;
  return j;
}

std::string spin81_case(Spin81Case c) {
  switch (c) {
    case Spin81Case::first: return "first";
    case Spin81Case::zero: return "zero";
    case Spin81Case::third: return "third";
  }
  return "";
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

Json rational(const Rational& r) { return to_string(r); }

Json weight(const Weight& w) { return rationals(w.coords); }

Json spectrum_entry(const SphereRealization& r, const SpectrumEntry& e) {
  Json j = record("spectrum_entry");
  j["realization"] = to_string(r);
  j["params"] = e.params;
  j["highest_weight"] = weight(e.highest_weight);
  j["dim"] = e.dim;
  j["casimir"] = rational(e.casimir);
  j["compound_casimir"] = rational(compound_casimir(r, e));
  j["level"] = level(r, e.params);
  j["inf_char"] = weight(e.inf_char.representative);
  j["orbit"] = rationals(e.orbit.values);
  return j;
}

Json eigenvalue(const SphereRealization& r, const Rational& ev, std::int64_t multiplicity) {
  Json j = record("eigenvalue");
  j["realization"] = to_string(r);
  j["eigenvalue"] = rational(ev);
  j["multiplicity"] = multiplicity;
  return j;
}

Json irrep_decomp(const IrrepDecomp& d, const std::string& source, std::int64_t level) {
  Json j = record("irrep_decomp");
  j["group"] = to_string(d.group);
  j["source"] = source;
  j["level"] = level;
  Json c = Json::array();
  for (const auto& [hw, m] : d.constituents) {
    Json e;
    e["highest_weight"] = weight(hw);
    e["multiplicity"] = m;
    e["dim"] = weyl_dim(d.group, hw);
    c.push_back(std::move(e));
  }
  j["constituents"] = std::move(c);
  j["total_dim"] = d.total_dim();
  return j;
}

Json discrete_series(const DiscreteSeriesParam& d) {
  Json j = record("discrete_series_param");
  param_fields(j, d);
  j["inf_char"] = weight(ds_infchar(d).representative);
  j["orbit"] = rationals(orbit_convert(d));
  if (d.range) {
    j["range"] = to_string(d.range->kind);
    Json ps = Json::array();
    for (const auto& p : d.range->parabolics) ps.push_back(parabolic(p));
    j["parabolics"] = std::move(ps);
  }
  j["reducible"] = d.reducible;
  j["constituents"] = d.constituents;
  if (d.realization.kind == HypKind::Spin34p) j["restriction_identity"] = d.restriction_identity;
  if (d.spin81) {
    j["hc_case"] = spin81_case(d.spin81->hc_case);
    j["hc_parameter"] = weight(d.spin81->hc_parameter);
    j["lowest_k_type"] = weight(d.spin81->lowest_k_type);
  }
  return j;
}

Json range_class(const DiscreteSeriesParam& d, const RangeClass& c) {
  Json j = record("range_class");
  param_fields(j, d);
  j["range"] = to_string(c.kind);
  Json ps = Json::array();
  for (const auto& p : c.parabolics) ps.push_back(parabolic(p));
  j["parabolics"] = std::move(ps);
  return j;
}

Json ktype_sum(const DiscreteSeriesParam& d, const KTypeSum& k) {
  Json j = record("ktype_sum");
  param_fields(j, d);
  j["completeness_bound"] = k.completeness_bound;
  j["height"] = k.height;
  j["entries"] = ktype_list(k.entries);
  return j;
}

Json consistency(HypKind family, int p, int q, std::int64_t ell, std::int64_t cutoff, const ConsistencyReport& r) {
  Json j = record("consistency_report");
  j["realization"] = to_string(HypRealization{family, p, q});
  j["ell"] = ell;
  j["cutoff"] = cutoff;
  j["bound"] = r.bound;
  j["result"] = r.pass ? "PASS" : "FAIL";
  j["o_side_count"] = r.o_side.size();
  j["family_side_count"] = r.family_side.size();
  if (!r.pass) {
    j["first_discrepancy"] = r.first_discrepancy;
    j["o_side"] = ktype_list(r.o_side);
    j["family_side"] = ktype_list(r.family_side);
  }
  return j;
}

Json assertion(const std::string& suite, const Assertion& a) {
  Json j = record("assertion");
  j["suite"] = suite;
  j["name"] = a.name;
  j["expected"] = a.expected;
  j["actual"] = a.actual;
  j["pass"] = a.pass;
  return j;
}

Json verify_summary(const VerifyReport& r) {
  Json j = record("verify_report");
  j["suite"] = r.suite;
  j["assertions"] = r.assertions.size();
  j["failures"] = r.failures();
  j["result"] = r.pass() ? "PASS" : "FAIL";
  return j;
}

void Writer::write(std::ostream& os) const {
  if (format_ == Format::json) {
    for (const Json& r : records_) os << r.dump() << '\n';
    return;
  }
  std::string current;
  for (const Json& r : records_) {
    std::string header;
    for (const auto& [k, v] : r.items()) header += (header.empty() ? "" : "\t") + k;
    if (header != current) {
      current = header;
      os << header << '\n';
    }
    bool first = true;
    for (const auto& [k, v] : r.items()) {
      os << (first ? "" : "\t") << cell(v);
      first = false;
    }
    os << '\n';
  }
}

}  // namespace sphspec::io
