#include "symcc/cert/cases.hpp"

#include <algorithm>
#include <tuple>

#include "symcc/exact/interval.hpp"
#include "symcc/model/reparam.hpp"

namespace symcc {

std::vector<std::string> block_names(PolyhedronKind kind) {
  switch (kind) {
    case PolyhedronKind::tetrahedron: return {"T1", "t4"};
    case PolyhedronKind::octahedron: return {"O1", "O5", "O9"};
    case PolyhedronKind::cube: return {"C1", "C2", "C7", "C8"};
  }
  return {};
}

const NamedBlock& CaseAnalysis::block(const std::string& name) const {
  for (const auto& b : blocks)
    if (b.name == name) return b;
  throw std::out_of_range("no block named " + name);
}

RadicalExpr CaseAnalysis::entry_numerator(std::size_t col) const {
  return first().matrix(0, col).homogenized(-alpha0, alpha1);
}

namespace {

std::vector<std::size_t> by_label(const Configuration& c, const std::vector<std::size_t>& m) {
  std::vector<std::size_t> out(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) out[static_cast<std::size_t>(c.printed_label[j] - 1)] = m[j];
  return out;
}

}  // namespace

std::vector<std::size_t> CaseAnalysis::theta_multiplicities() const {
  return by_label(config, multiplicities(config.theta, config.group.irreps));
}

std::vector<std::size_t> CaseAnalysis::theta_rho_multiplicities() const {
  return by_label(config, multiplicities(config.theta_rho(), config.group.irreps));
}

CaseAnalysis analyze_case(PolyhedronKind kind) {
  CaseAnalysis a;
  a.kind = kind;
  a.config = nested_polyhedron(kind);
  a.s = build_S(a.config);
  a.symmetry = check_symmetry(a.s.S, a.config);
  if (!a.symmetry.holds) throw CertificationFailed("symmetry check: " + a.symmetry.message);
  auto dom = symmetry_adapted_basis(a.config.theta, a.config.group.irreps);
  auto cod = symmetry_adapted_basis(a.config.theta_rho(), a.config.group.irreps);
  a.structure = block_decompose(a.s.S, dom, cod);
  const auto names = block_names(kind);
  for (const auto& b : a.structure.blocks) {
    NamedBlock nb;
    nb.label = a.config.printed_label[b.irrep];
    nb.irrep = b.irrep;
    nb.copies = b.copies;
    nb.matrix = b.matrix;
    for (const auto& n : names)
      if (std::stoi(n.substr(1)) == nb.label) nb.name = n;
    if (nb.name.empty()) nb.name = "B" + std::to_string(nb.label);
    a.blocks.push_back(std::move(nb));
  }
  std::sort(a.blocks.begin(), a.blocks.end(), [](const NamedBlock& x, const NamedBlock& y) { return x.label < y.label; });
  std::tie(a.alpha1, a.alpha0) = det_affine(a.first().matrix);
  return a;
}

MassRatio mass_ratio_at(const CaseAnalysis& a, const Rational& t0, int digits) {
  if (t0 <= 0 || t0 >= 1) throw std::invalid_argument("t0 must lie in (0,1)");
  MassRatio r;
  r.t = t0;
  FieldElement a1 = a.alpha1.eval_exact(t0);
  if (a1.is_zero()) throw DenominatorZero("alpha1 vanishes at t = " + t0.get_str());
  r.c = -a.alpha0.eval_exact(t0) / a1;
  const auto& B = a.first().matrix;
  auto at = [&](const CExpr& e) { return e.coeff(0).eval_exact(t0) + r.c * e.coeff(1).eval_exact(t0); };
  FieldElement b11 = at(B(0, 0)), b12 = at(B(0, 1));
  if (b11.is_zero()) throw DenominatorZero("(B)_11(c(t), t) vanishes at t = " + t0.get_str());
  r.ratio = -b12 / b11;
  r.c_decimal = decimal_enclosure(r.c, digits);
  r.ratio_decimal = decimal_enclosure(r.ratio, digits);
  r.sign = sign_of(r.ratio);
  return r;
}

namespace {

std::string case_prefix(const CaseAnalysis& a) { return kind_name(a.kind) + " " + a.first().name; }

}  // namespace

Certificate certify_threshold(const CaseAnalysis& a, const CurveOptions& opt) {
  const std::string name = case_prefix(a) + "_12(c(t), t)";
  const RadicalExpr N = a.entry_numerator(1);
  Certificate lead = certify_nonvanishing(a.alpha1, "alpha1 of " + case_prefix(a), opt);
  const int s1 = lead.claimed_sign;
  if (N.radical_count() <= 1) {
    Reparametrization R = reparametrize(N);
    EndpointLimit l0 = endpoint_limit(N, 0), l1 = endpoint_limit(N, 1);
    if (l0.sign == l1.sign) throw CertificationFailed(name + ": same sign at both ends");
    Certificate c = sturm_certificate(R.numerator, R.domain, "w", 1, "numerator of " + name);
    if (!c.verified)
      throw CertificationFailed(name + ": expected one root, found " + std::to_string(c.data.at("roots").get<int>()));
    Certificate dc = sturm_certificate(R.denominator, R.domain, "w", 0, "denominator of " + name);
    if (!dc.verified) throw CertificationFailed(name + ": reparametrized denominator vanishes");
    c.parts.push_back(std::move(dc));
    c.parts.push_back(limit_certificate(N, 0, 0, "numerator of " + name));
    c.parts.push_back(limit_certificate(N, 1, 0, "numerator of " + name));
    c.parts.push_back(std::move(lead));
    return c;
  }
  // Two radicals: negative on (0,1/2], increasing on [1/2,1), +infinity at 1.
  CurveOptions left = opt;
  left.domain = {FieldElement(0), FieldElement(Rational(1, 2)), false, true};
  Certificate fa = certify_sign_on_curve(N, -s1, "fact (a): numerator of " + name + " on (0,1/2]", left);
  CurveOptions right = opt;
  right.domain = {FieldElement(Rational(1, 2)), FieldElement(1), true, false};
  right.with_limits = false;
  RadicalExpr D = N.derivative() * a.alpha1 - N * a.alpha1.derivative();
  Certificate fb = certify_sign_on_curve(D, 1, "fact (b): numerator of the t-derivative of " + name + " on [1/2,1)", right);
  EndpointLimit ln = endpoint_limit(N, 1), la = endpoint_limit(a.alpha1, 1);
  if (ln.order - la.order >= 0 || ln.sign * la.sign <= 0)
    throw CertificationFailed(name + ": limit at 1 is not +infinity");
  fa.parts.push_back(limit_certificate(N, 1, 0, "fact (c): numerator of " + name));
  fa.parts.push_back(limit_certificate(a.alpha1, 1, 0, "fact (c): alpha1"));
  fa.parts.push_back(std::move(fb));
  fa.parts.push_back(std::move(lead));
  return fa;
}

DeltaResult find_delta(const CaseAnalysis& a, int digits, const CurveOptions& opt) {
  DeltaResult r;
  r.certificate = certify_threshold(a, opt);
  const RadicalExpr N = a.entry_numerator(1);
  Rational lo = 0, hi = 1;
  int slo = endpoint_limit(N, 0).sign;
  if (N.radical_count() > 1) {
    lo = Rational(1, 2);
    slo = N.sign_at(lo);
  }
  Rational tol = 1;
  for (int k = 0; k < digits + 2; ++k) tol /= 10;
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    int s = N.sign_at(mid);
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    if (s == slo)
      lo = mid;
    else
      hi = mid;
  }
  r.lo = lo;
  r.hi = hi;
  r.delta_decimal = {decimal_enclosure(FieldElement(lo), digits).first, decimal_enclosure(FieldElement(hi), digits).second};
  r.inverse_decimal = {decimal_enclosure(FieldElement(Rational(1) / hi), digits).first,
                       decimal_enclosure(FieldElement(Rational(1) / lo), digits).second};
  return r;
}

Certificate certify_block(const CaseAnalysis& a, const std::string& name, const CurveOptions& opt) {
  const NamedBlock& b = a.block(name);
  const std::string target = kind_name(a.kind) + " " + name;
  if (b.matrix.rows() == 2 && b.matrix.cols() == 2) return block_nonsingular(b.matrix, target, opt);
  KernelOptions k;
  k.curve = opt;
  if (a.kind == PolyhedronKind::octahedron && name == "O9") k.preferred = {{{0, 2}, {0, 3}}};
  return kernel_trivial_rect(b.matrix, target, k);
}

ExampleOne example_one() {
  const std::vector<std::string> vars{"u", "v"};
  auto c = [](long n, long d = 1) { return FieldElement(Rational(n, d)); };
  MultiPoly u = MultiPoly::variable(vars, 0), v = MultiPoly::variable(vars, 1);
  auto k = [&](long n) { return MultiPoly::constant(vars, c(n)); };
  MultiPoly a = (u * c(10) - k(7)).pow(2) * c(4) + (v * c(20) - k(9)).pow(2);
  MultiPoly b = u.pow(2) - v.pow(2) * c(49);
  ExampleOne ex;
  ex.P = a.pow(3) * b.pow(3) * FieldElement(Rational(-1) / Rational(mpz_class("7529536000000")));
  ex.curve = {UniPoly::x(), UniPoly({c(37, 50), c(-7, 5), c(1)})};
  return ex;
}

}  // namespace symcc
