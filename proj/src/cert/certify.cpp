#include "symcc/cert/certify.hpp"

#include <algorithm>
#include <map>

#include "symcc/exact/interval.hpp"
#include "symcc/model/reparam.hpp"
#include "symcc/poly/mobius.hpp"

namespace symcc {

IntervalQ unit_interval() { return IntervalQ::open(FieldElement(0), FieldElement(1)); }

namespace {

std::string sign_word(int s) { return s > 0 ? "positive" : s < 0 ? "negative" : "zero"; }

struct Deflated {
  UniPoly poly;
  std::vector<std::pair<FieldElement, int>> factors;
};

// Removes roots sitting exactly at the interval ends.
Deflated deflate(UniPoly p, const IntervalQ& I) {
  Deflated d;
  for (const FieldElement* x : {&I.lo, &I.hi}) {
    int m = 0;
    while (p.degree() > 0 && p.eval(*x).is_zero()) {
      p = p.exact_div(UniPoly::linear_root(*x));
      ++m;
    }
    if (m > 0) d.factors.emplace_back(*x, m);
  }
  d.poly = std::move(p);
  return d;
}

}  // namespace

Certificate sturm_certificate(const UniPoly& original, const IntervalQ& I, const std::string& var, int expected,
                              const std::string& target) {
  if (original.is_zero()) throw CertificationFailed(target + ": identically zero");
  Deflated d = deflate(original, I);
  auto seq = sturm_sequence(d.poly);
  Certificate c;
  c.kind = "sturm-count";
  c.target = target;
  int vlo = sign_variations_at(seq, I.lo), vhi = sign_variations_at(seq, I.hi);
  Json seqj = Json::array();
  for (const auto& s : seq) seqj.push_back(uni_json(s));
  Json defl = Json::array();
  for (const auto& [r, m] : d.factors) defl.push_back({{"root", field_json(r)}, {"multiplicity", m}});
  c.data = {{"variable", var},
            {"original", uni_json(original)},
            {"poly", uni_json(d.poly)},
            {"deflated", defl},
            {"interval", interval_json(I)},
            {"sequence", seqj},
            {"v_lo", vlo},
            {"v_hi", vhi},
            {"roots", vlo - vhi},
            {"expected_roots", expected}};
  c.verified = vlo - vhi == expected;
  return c;
}

Certificate limit_certificate(const RadicalExpr& e, int endpoint, int claimed, const std::string& target) {
  EndpointLimit L = endpoint_limit(e, endpoint);
  if (claimed != 0 && L.sign != claimed)
    throw CertificationFailed(target + ": limit at " + std::to_string(endpoint) + " is " + sign_word(L.sign));
  Certificate c;
  c.kind = "endpoint-limit";
  c.target = target + " as t -> " + (endpoint == 0 ? "0+" : "1-");
  c.claimed_sign = claimed;
  c.data = {{"endpoint", endpoint}, {"order", L.order}, {"coefficient", field_json(L.coefficient)}, {"sign", L.sign},
            {"leading", L.to_string()}};
  c.verified = true;
  return c;
}

namespace {

std::vector<Certificate> limit_parts(const RadicalExpr& e, int claimed, const IntervalQ& dom, const std::string& target) {
  std::vector<Certificate> out;
  if (dom.lo.is_zero() && !dom.lo_closed) out.push_back(limit_certificate(e, 0, claimed, target));
  if (dom.hi == FieldElement(1) && !dom.hi_closed) out.push_back(limit_certificate(e, 1, claimed, target));
  return out;
}

UniPoly univariate(const MultiPoly& p) {
  std::vector<FieldElement> c;
  for (const auto& [e, x] : p.terms()) {
    std::size_t k = static_cast<std::size_t>(e.at(0));
    if (c.size() <= k) c.resize(k + 1);
    c[k] = x;
  }
  return UniPoly(std::move(c));
}

Json curve_json(const Curve& g) {
  Json qs = Json::array();
  for (const auto& q : g.table->quadratics()) qs.push_back(uni_json(q));
  return {{"kind", "radical"}, {"quadratics", qs}, {"radicals", g.radicals}};
}

}  // namespace

Certificate certify_sign_univariate(const RadicalExpr& e, int claimed, const std::string& target, bool with_limits) {
  if (e.is_zero()) throw CertificationFailed(target + ": identically zero");
  if (e.radical_count() > 1) throw NotSingleRadical(target + ": more than one radical");
  UniPoly num, den;
  IntervalQ I = unit_interval();
  FieldElement sample(Rational(1, 2));
  std::string var = "t";
  if (e.radical_count() == 1) {
    Reparametrization R = reparametrize(e);
    num = R.numerator;
    den = R.denominator;
    I = R.domain;
    sample = R.inverse(Rational(1, 2));
    var = "w";
  } else {
    Lift L = lift(e);
    num = univariate(L.numerator);
    den = univariate(L.denominator());
  }
  Certificate c = sturm_certificate(num, I, var, 0, target);
  c.claimed_sign = claimed;
  if (!c.verified) throw RootFound(target, c.data.at("roots").get<int>());
  Certificate dc = sturm_certificate(den, I, var, 0, "denominator of " + target);
  if (!dc.verified) throw CertificationFailed(target + ": denominator vanishes in the interval");
  int sn = sign_of(num.eval(sample)), sd = sign_of(den.eval(sample));
  int s = sn * sd;
  if (s != e.sign_at(Rational(1, 2))) throw CertificationFailed(target + ": sample sign disagrees with direct evaluation");
  if (claimed != 0 && s != claimed)
    throw CertificationFailed(target + ": sign is " + sign_word(s) + ", claimed " + sign_word(claimed));
  c.data["sample"] = {{"point", field_json(sample)}, {"numerator_sign", sn}, {"denominator", uni_json(den)},
                      {"denominator_sign", sd}};
  c.parts.push_back(std::move(dc));
  if (with_limits)
    for (auto& p : limit_parts(e, s, unit_interval(), target)) c.parts.push_back(std::move(p));
  c.claimed_sign = s;
  return c;
}

CoveringResult cover(const MultiPoly& p, const BoxOf& box_of, const IntervalQ& domain, int max_depth, WorkerPool* pool,
                     const std::string& target) {
  if (p.is_zero()) throw CertificationFailed(target + ": identically zero");
  struct Item {
    IntervalQ t;
    int depth;
  };
  CoveringResult out;
  std::vector<Item> level{{domain, 0}};
  while (!level.empty()) {
    std::vector<CoverPiece> done(level.size());
    parallel_for(pool, level.size(), [&](std::size_t i) {
      Box B = box_of(level[i].t);
      done[i] = {level[i].t, B, mobius_sign_summary(p, B, MobiusMode::full, false), level[i].depth};
    });
    std::vector<Item> next;
    for (auto& piece : done) {
      if (piece.summary.strict_sign() != 0) {
        out.pieces.push_back(std::move(piece));
        continue;
      }
      ++out.rejected;
      if (piece.depth >= max_depth) throw DepthExceeded(target, piece.t);
      FieldElement mid = (piece.t.lo + piece.t.hi) * FieldElement(Rational(1, 2));
      next.push_back({{piece.t.lo, mid, piece.t.lo_closed, true}, piece.depth + 1});
      next.push_back({{mid, piece.t.hi, true, piece.t.hi_closed}, piece.depth + 1});
    }
    level = std::move(next);
  }
  std::sort(out.pieces.begin(), out.pieces.end(),
            [](const CoverPiece& a, const CoverPiece& b) { return compare(a.t.lo, b.t.lo) < 0; });
  out.sign = out.pieces.front().summary.strict_sign();
  for (const auto& piece : out.pieces)
    if (piece.summary.strict_sign() != out.sign)
      throw CertificationFailed(target + ": boxes carry opposite signs around " + piece.t.to_string());
  return out;
}

Box polynomial_curve_box(const std::vector<UniPoly>& components, const IntervalQ& I) {
  struct Cand {
    FieldElement v;
    bool attained;
  };
  Box B;
  for (const auto& q : components) {
    if (q.degree() > 2) throw std::invalid_argument("polynomial curve components must have degree at most 2");
    std::vector<Cand> c{{q.eval(I.lo), I.lo_closed}, {q.eval(I.hi), I.hi_closed}};
    if (q.degree() == 2) {
      FieldElement v = -q.coeff(1) / (FieldElement(2) * q.coeff(2));
      if (compare(v, I.lo) > 0 && compare(I.hi, v) > 0) c.push_back({q.eval(v), true});
    }
    FieldElement mn = c[0].v, mx = c[0].v;
    for (const auto& x : c) {
      if (compare(x.v, mn) < 0) mn = x.v;
      if (compare(x.v, mx) > 0) mx = x.v;
    }
    bool lc = false, hc = false;
    for (const auto& x : c) {
      if (x.v == mn && x.attained) lc = true;
      if (x.v == mx && x.attained) hc = true;
    }
    B.intervals.push_back({mn, mx, lc, hc});
  }
  return B;
}

namespace {

Json covering_boxes(const CoveringResult& r) {
  Json boxes = Json::array();
  for (const auto& piece : r.pieces)
    boxes.push_back({{"t", interval_json(piece.t)},
                     {"box", box_json(piece.box)},
                     {"positive", piece.summary.positive},
                     {"negative", piece.summary.negative},
                     {"zero", piece.summary.zero},
                     {"total", piece.summary.total},
                     {"sign", piece.summary.strict_sign()},
                     {"depth", piece.depth}});
  return boxes;
}

}  // namespace

Certificate certify_polynomial_on_curve(const MultiPoly& P, const std::vector<UniPoly>& components,
                                        const IntervalQ& domain, const std::string& target, int max_depth,
                                        WorkerPool* pool) {
  if (components.size() != P.nvars()) throw std::invalid_argument("curve dimension differs from the polynomial");
  CoveringResult r = cover(
      P, [&components](const IntervalQ& I) { return polynomial_curve_box(components, I); }, domain, max_depth, pool,
      target);
  Json comps = Json::array();
  for (const auto& q : components) comps.push_back(uni_json(q));
  Certificate c;
  c.kind = "box-covering";
  c.target = target;
  c.claimed_sign = r.sign;
  c.data = {{"vars", P.vars()},
            {"poly", multi_json(P)},
            {"domain", interval_json(domain)},
            {"boxes", covering_boxes(r)},
            {"rejected", r.rejected},
            {"numerator_sign", r.sign},
            {"cleared_sign", 1},
            {"curve", {{"kind", "polynomial"}, {"components", comps}}}};
  c.verified = true;
  return c;
}

Certificate certify_sign_on_curve(const RadicalExpr& e, int claimed, const std::string& target, const CurveOptions& opt) {
  if (e.is_zero()) throw CertificationFailed(target + ": identically zero");
  Lift L = lift(e, opt.form);
  const Curve g = L.curve;
  CoveringResult r = cover(
      L.numerator, [&g](const IntervalQ& I) { return curve_box(g, I); }, opt.domain, opt.max_depth, opt.pool, target);
  const int s = r.sign * L.cleared_sign();
  if (claimed != 0 && s != claimed)
    throw CertificationFailed(target + ": sign is " + sign_word(s) + ", claimed " + sign_word(claimed));
  Certificate c;
  c.kind = "box-covering";
  c.target = target;
  c.claimed_sign = s;
  Json clears = Json::array();
  for (const auto& f : L.clears) clears.push_back({{"name", f.name}, {"exponent", f.exponent}, {"sign", f.sign}});
  c.data = {{"vars", g.vars()},
            {"form", opt.form == LiftForm::cubic ? "cubic" : "mixed"},
            {"poly", multi_json(L.numerator)},
            {"degrees", L.numerator.degrees()},
            {"domain", interval_json(opt.domain)},
            {"boxes", covering_boxes(r)},
            {"rejected", r.rejected},
            {"numerator_sign", r.sign},
            {"cleared", clears},
            {"cleared_sign", L.cleared_sign()},
            {"curve", curve_json(g)}};
  c.verified = true;
  if (opt.with_limits)
    for (auto& p : limit_parts(e, s, opt.domain, target)) c.parts.push_back(std::move(p));
  return c;
}

Certificate certify_nonvanishing(const RadicalExpr& e, const std::string& target, const CurveOptions& opt) {
  if (e.is_zero()) throw CertificationFailed(target + ": identically zero");
  // Cheap screen: a sign change between sample points means a root.
  int s = 0;
  for (int k = 1; k < 16; ++k) {
    Rational t0(k, 16);
    t0.canonicalize();
    if (!opt.domain.contains(FieldElement(t0))) continue;
    int sk = e.sign_at(t0);
    if (sk == 0 || (s != 0 && sk != s)) throw RootFound(target, 1);
    s = sk;
  }
  if (s == 0) s = e.sign_at(rational_between(opt.domain.lo, opt.domain.hi));
  const bool whole = opt.domain.lo.is_zero() && opt.domain.hi == FieldElement(1) && !opt.domain.lo_closed &&
                     !opt.domain.hi_closed;
  if (e.radical_count() <= 1 && whole) return certify_sign_univariate(e, s, target, opt.with_limits);
  return certify_sign_on_curve(e, s, target, opt);
}

std::pair<RadicalExpr, RadicalExpr> det_affine(const Matrix<CExpr>& block) {
  if (block.rows() != 2 || block.cols() != 2) throw std::invalid_argument("det_affine needs a 2x2 block");
  CExpr d = block(0, 0) * block(1, 1) - block(0, 1) * block(1, 0);
  if (d.degree() > 1) throw NotAffine("determinant has a nonzero c^2 coefficient");
  return {d.coeff(1), d.coeff(0)};
}

namespace {

std::string rows_name(std::pair<int, int> r) {
  return "rows(" + std::to_string(r.first + 1) + "," + std::to_string(r.second + 1) + ")";
}

}  // namespace

Certificate kernel_trivial_rect(const Matrix<CExpr>& block, const std::string& target, const KernelOptions& opt) {
  if (block.cols() != 2 || block.rows() < 2) throw std::invalid_argument("kernel_trivial_rect needs an n x 2 block");
  struct Minor {
    std::pair<int, int> rows;
    CExpr m;
  };
  std::vector<Minor> minors;
  const int n = static_cast<int>(block.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      minors.push_back({{i, j}, block(ui, 0) * block(uj, 1) - block(ui, 1) * block(uj, 0)});
    }
  std::vector<std::string> tried;
  auto attempt = [&](const RadicalExpr& e, const std::string& name) -> std::optional<Certificate> {
    try {
      return certify_nonvanishing(e, name, opt.curve);
    } catch (const CertificationFailed& ex) {
      tried.push_back(ex.what());
    } catch (const NotSingleRadical& ex) {
      tried.push_back(name + ": " + ex.what());
    } catch (const ArithmeticError& ex) {
      tried.push_back(name + ": " + ex.what());
    }
    return std::nullopt;
  };

  // (a) a minor free of c
  for (const auto& mn : minors) {
    if (mn.m.degree() != 0) continue;
    std::string name = target + " minor " + rows_name(mn.rows);
    if (auto cert = attempt(mn.m.coeff(0), name)) {
      Certificate c;
      c.kind = "kernel-trivial";
      c.target = target;
      c.data = {{"strategy", "a"}, {"minors", Json::array({{{"rows", {mn.rows.first + 1, mn.rows.second + 1}}, {"c_degree", 0}}})}};
      c.parts.push_back(std::move(*cert));
      c.verified = true;
      return c;
    }
  }

  // (b) eliminate c between two minors
  std::vector<std::pair<std::size_t, std::size_t>> order;
  auto index_of = [&](std::pair<int, int> r) {
    for (std::size_t k = 0; k < minors.size(); ++k)
      if (minors[k].rows == r) return k;
    throw std::invalid_argument("preferred rows " + rows_name(r) + " out of range");
  };
  for (const auto& [r1, r2] : opt.preferred) order.emplace_back(index_of(r1), index_of(r2));
  for (std::size_t k = 0; k < minors.size(); ++k)
    for (std::size_t l = 0; l < minors.size(); ++l)
      if (k != l && std::find(order.begin(), order.end(), std::make_pair(k, l)) == order.end()) order.emplace_back(k, l);
  std::map<std::size_t, std::optional<Certificate>> lead;
  for (const auto& [k, l] : order) {
    const Minor& m1 = minors[k];
    const Minor& m2 = minors[l];
    if (m1.m.degree() != 1 || m2.m.is_zero()) continue;
    std::string n1 = target + " minor " + rows_name(m1.rows);
    if (!lead.count(k)) lead[k] = attempt(m1.m.coeff(1), "c-coefficient of " + n1);
    if (!lead[k]) continue;
    RadicalExpr res = m2.m.homogenized(-m1.m.coeff(0), m1.m.coeff(1));
    if (res.is_zero()) continue;
    std::string rn = target + " resolvent of " + rows_name(m1.rows) + " and " + rows_name(m2.rows);
    if (auto cert = attempt(res, rn)) {
      Certificate c;
      c.kind = "kernel-trivial";
      c.target = target;
      c.data = {{"strategy", "b"},
                {"minors", Json::array({{{"rows", {m1.rows.first + 1, m1.rows.second + 1}}, {"c_degree", 1}},
                                        {{"rows", {m2.rows.first + 1, m2.rows.second + 1}}, {"c_degree", m2.m.degree()}}})}};
      c.parts.push_back(*lead[k]);
      c.parts.push_back(std::move(*cert));
      c.verified = true;
      return c;
    }
  }
  std::string msg = target + ": no minor or minor pair certifies a trivial kernel";
  for (const auto& t : tried) msg += "\n  " + t;
  throw StrategyExhausted(msg);
}

Certificate block_nonsingular(const Matrix<CExpr>& block, const std::string& target, const CurveOptions& opt) {
  auto [a1, a0] = det_affine(block);
  if (!a1.is_zero()) throw NotAffine(target + ": determinant depends on c");
  Certificate c;
  c.kind = "kernel-trivial";
  c.target = target;
  c.data = {{"strategy", "det"}, {"minors", Json::array({{{"rows", {1, 2}}, {"c_degree", 0}}})}};
  c.parts.push_back(certify_nonvanishing(a0, "det " + target, opt));
  c.verified = true;
  return c;
}

}  // namespace symcc
