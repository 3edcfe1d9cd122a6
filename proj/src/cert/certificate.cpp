#include "symcc/cert/certificate.hpp"

#include "symcc/cert/certify.hpp"
#include "symcc/exact/interval.hpp"
#include "symcc/model/lift.hpp"
#include "symcc/poly/mobius.hpp"

namespace symcc {

Json field_json(const FieldElement& x) { return x.to_string(); }
FieldElement field_from(const Json& j) { return FieldElement::parse(j.get<std::string>()); }

Json uni_json(const UniPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(field_json(c));
  return a;
}

UniPoly uni_from(const Json& j) {
  std::vector<FieldElement> c;
  for (const auto& x : j) c.push_back(field_from(x));
  return UniPoly(std::move(c));
}

Json multi_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, field_json(c)}));
  return {{"vars", p.vars()}, {"terms", terms}};
}

MultiPoly multi_from(const Json& j) {
  MultiPoly p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms")) p.add_term(t.at(0).get<Exponent>(), field_from(t.at(1)));
  return p;
}

Json interval_json(const IntervalQ& I) {
  return {{"lo", field_json(I.lo)}, {"hi", field_json(I.hi)}, {"lo_closed", I.lo_closed}, {"hi_closed", I.hi_closed}};
}

IntervalQ interval_from(const Json& j) {
  return {field_from(j.at("lo")), field_from(j.at("hi")), j.at("lo_closed").get<bool>(), j.at("hi_closed").get<bool>()};
}

Json box_json(const Box& B) {
  Json a = Json::array();
  for (const auto& I : B.intervals) a.push_back(interval_json(I));
  return a;
}

Box box_from(const Json& j) {
  Box B;
  for (const auto& I : j) B.intervals.push_back(interval_from(I));
  return B;
}

Json Certificate::to_json() const {
  Json j{{"kind", kind}, {"target", target}, {"claimed_sign", claimed_sign}, {"verified", verified}, {"data", data}};
  Json p = Json::array();
  for (const auto& c : parts) p.push_back(c.to_json());
  j["parts"] = p;
  return j;
}

Certificate Certificate::from_json(const Json& j) {
  Certificate c;
  c.kind = j.at("kind").get<std::string>();
  c.target = j.value("target", "");
  c.claimed_sign = j.value("claimed_sign", 0);
  c.verified = j.value("verified", false);
  c.data = j.value("data", Json::object());
  for (const auto& p : j.value("parts", Json::array())) c.parts.push_back(from_json(p));
  return c;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool same_interval(const IntervalQ& a, const IntervalQ& b) {
  return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed && a.hi_closed == b.hi_closed;
}

bool replay_sturm(const Certificate& c, std::string* why) {
  const Json& d = c.data;
  UniPoly p = uni_from(d.at("poly"));
  IntervalQ I = interval_from(d.at("interval"));
  auto seq = sturm_sequence(p);
  const Json& stored = d.at("sequence");
  if (stored.size() != seq.size()) return fail(why, "Sturm sequence length differs");
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (uni_from(stored[i]) != seq[i]) return fail(why, "Sturm sequence entry " + std::to_string(i) + " differs");
  if (p.eval(I.lo).is_zero() || p.eval(I.hi).is_zero()) return fail(why, "interval endpoint is a root");
  UniPoly original = p;
  if (d.contains("original")) {
    original = uni_from(d.at("original"));
    UniPoly prod = p;
    for (const auto& f : d.value("deflated", Json::array())) {
      FieldElement r = field_from(f.at("root"));
      if (r != I.lo && r != I.hi) return fail(why, "deflated root is not an interval end");
      prod = prod * UniPoly::linear_root(r).pow(f.at("multiplicity").get<unsigned>());
    }
    if (prod != original) return fail(why, "deflation does not reproduce the original polynomial");
  }
  int vlo = sign_variations_at(seq, I.lo), vhi = sign_variations_at(seq, I.hi);
  if (vlo != d.at("v_lo").get<int>() || vhi != d.at("v_hi").get<int>()) return fail(why, "sign variations differ");
  if (vlo - vhi != d.at("roots").get<int>()) return fail(why, "root count differs");
  if (d.contains("expected_roots") && d.at("roots") != d.at("expected_roots")) return fail(why, "unexpected root count");
  if (d.contains("sample")) {
    const Json& s = d.at("sample");
    FieldElement x = field_from(s.at("point"));
    if (!I.contains(x)) return fail(why, "sample point outside the interval");
    int sn = sign_of(original.eval(x));
    if (sn != s.at("numerator_sign").get<int>()) return fail(why, "numerator sign at sample differs");
    int sd = 1;
    if (s.contains("denominator")) sd = sign_of(uni_from(s.at("denominator")).eval(x));
    if (sd != s.at("denominator_sign").get<int>()) return fail(why, "denominator sign at sample differs");
    int cleared = s.value("cleared_sign", 1);
    if (c.claimed_sign != 0 && sn * sd * cleared != c.claimed_sign) return fail(why, "claimed sign does not follow");
  }
  return true;
}

bool replay_covering(const Certificate& c, std::string* why) {
  const Json& d = c.data;
  MultiPoly p = multi_from(d.at("poly"));
  IntervalQ dom = interval_from(d.at("domain"));
  const Json& boxes = d.at("boxes");
  if (boxes.empty()) return fail(why, "empty covering");
  int sign = 0;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const Json& b = boxes[i];
    IntervalQ t = interval_from(b.at("t"));
    Box B = box_from(b.at("box"));
    if (i == 0 && (t.lo != dom.lo || (dom.lo_closed && !t.lo_closed))) return fail(why, "covering misses the left end");
    if (i + 1 == boxes.size() && (t.hi != dom.hi || (dom.hi_closed && !t.hi_closed)))
      return fail(why, "covering misses the right end");
    if (i > 0) {
      IntervalQ prev = interval_from(boxes[i - 1].at("t"));
      if (prev.hi != t.lo || !(prev.hi_closed || t.lo_closed)) return fail(why, "gap in covering at box " + std::to_string(i));
    }
    if (d.contains("curve")) {
      const Json& cv = d.at("curve");
      Box expect;
      if (cv.at("kind") == "radical") {
        std::vector<UniPoly> qs;
        for (const auto& q : cv.at("quadratics")) qs.push_back(uni_from(q));
        Curve g{RadicalTable::make(qs), cv.at("radicals").get<std::vector<std::size_t>>()};
        expect = curve_box(g, t);
      } else {
        std::vector<UniPoly> comps;
        for (const auto& comp : cv.at("components")) comps.push_back(uni_from(comp));
        expect = polynomial_curve_box(comps, t);
      }
      if (expect.dim() != B.dim()) return fail(why, "box dimension differs");
      for (std::size_t k = 0; k < B.dim(); ++k)
        if (!same_interval(expect.intervals[k], B.intervals[k])) return fail(why, "box " + std::to_string(i) + " differs from the curve box");
    }
    SignSummary s = mobius_sign_summary(p, B, MobiusMode::full, false);
    if (s.positive != b.at("positive").get<long>() || s.negative != b.at("negative").get<long>() ||
        s.zero != b.at("zero").get<long>())
      return fail(why, "coefficient census differs on box " + std::to_string(i));
    int ss = s.strict_sign();
    if (ss == 0) return fail(why, "box " + std::to_string(i) + " has no strict sign");
    if (sign != 0 && ss != sign) return fail(why, "boxes disagree in sign");
    sign = ss;
  }
  if (sign != d.at("numerator_sign").get<int>()) return fail(why, "numerator sign differs");
  if (c.claimed_sign != 0 && sign * d.value("cleared_sign", 1) != c.claimed_sign) return fail(why, "claimed sign does not follow");
  return true;
}

bool replay_limit(const Certificate& c, std::string* why) {
  int s = sign_of(field_from(c.data.at("coefficient")));
  if (s != c.data.at("sign").get<int>()) return fail(why, "limit coefficient sign differs");
  if (c.claimed_sign != 0 && s != c.claimed_sign) return fail(why, "limit sign contradicts the claim");
  return true;
}

}  // namespace

bool replay(const Certificate& c, std::string* why) {
  if (!c.verified) return fail(why, c.target + ": certificate is not marked verified");
  try {
    bool ok = true;
    if (c.kind == "sturm-count")
      ok = replay_sturm(c, why);
    else if (c.kind == "box-covering")
      ok = replay_covering(c, why);
    else if (c.kind == "endpoint-limit")
      ok = replay_limit(c, why);
    else if (c.kind != "kernel-trivial")
      return fail(why, "unknown certificate kind " + c.kind);
    if (!ok) {
      if (why) *why = c.target + ": " + *why;
      return false;
    }
  } catch (const std::exception& e) {
    return fail(why, c.target + ": " + e.what());
  }
  for (const auto& p : c.parts)
    if (!replay(p, why)) return false;
  return true;
}

}  // namespace symcc
