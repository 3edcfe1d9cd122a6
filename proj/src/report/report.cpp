#include "symcc/report/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <ostream>

namespace symcc {

namespace {

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

Json pair_json(const std::pair<std::string, std::string>& p) { return Json::array({p.first, p.second}); }

Json inventory_json(const CaseAnalysis& a) {
  Json blocks = Json::array();
  for (const auto& b : a.blocks)
    blocks.push_back({{"name", b.name},
                      {"label", b.label},
                      {"rows", b.matrix.rows()},
                      {"cols", b.matrix.cols()},
                      {"copies", b.copies}});
  return blocks;
}

}  // namespace

Json decomposition_json(const CaseAnalysis& a) {
  return {{"case", kind_name(a.kind)},
          {"group", a.config.group.group->name()},
          {"theta", a.theta_multiplicities()},
          {"theta_rho", a.theta_rho_multiplicities()},
          {"blocks", inventory_json(a)},
          {"checks",
           {{"symmetry", a.symmetry.holds},
            {"forbidden_blocks_zero", a.structure.forbidden_zero},
            {"copies_equal", a.structure.copies_equal},
            {"real", a.structure.real}}}};
}

bool CaseReport::ok() const {
  if (!failures.empty()) return false;
  return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.verified; });
}

Json CaseReport::to_json(bool with_timing) const {
  Json j;
  j["case"] = name;
  j["theta"] = theta;
  j["theta_rho"] = theta_rho;
  j["checks"] = {{"symmetry", symmetry}, {"forbidden_blocks_zero", forbidden_zero}, {"copies_equal", copies_equal}, {"real", real}};
  Json bl = Json::array();
  for (const auto& b : blocks) {
    Json e = {{"name", b.name}, {"label", b.label}, {"rows", b.rows}, {"cols", b.cols}, {"copies", b.copies}, {"claim", b.claim}};
    e["certificate"] = b.certificate ? Json(*b.certificate) : Json(nullptr);
    e["verified"] = b.certificate && certificates[*b.certificate].verified;
    if (!b.error.empty()) e["error"] = b.error;
    bl.push_back(std::move(e));
  }
  j["blocks"] = std::move(bl);
  if (delta) {
    j["delta"] = {{"lo", delta->lo.get_str()},
                  {"hi", delta->hi.get_str()},
                  {"decimal", pair_json(delta->delta_decimal)},
                  {"inverse_decimal", pair_json(delta->inverse_decimal)},
                  {"certificate", delta_certificate ? Json(*delta_certificate) : Json(nullptr)}};
  } else {
    j["delta"] = nullptr;
  }
  j["equal_masses"] = equal_masses;
  Json fl = Json::array();
  for (const auto& f : failures) fl.push_back({{"stage", f.stage}, {"message", f.message}});
  j["failures"] = std::move(fl);
  j["ok"] = ok();
  Json certs = Json::array();
  for (const auto& c : certificates) certs.push_back(c.to_json());
  j["certificates"] = std::move(certs);
  if (with_timing) {
    Json t = Json::object();
    for (const auto& [k, v] : timing) t[k] = v;
    j["timing"] = std::move(t);
  }
  return j;
}

CaseReport run_case(PolyhedronKind kind, const CaseOptions& opt) {
  CaseReport r;
  r.name = kind_name(kind);
  auto stage = [&](const std::string& name, auto&& fn) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    try {
      fn();
    } catch (const std::exception& e) {
      r.failures.push_back({name, e.what()});
      ok = false;
    }
    r.timing.emplace_back(name, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return ok;
  };

  CaseAnalysis a;
  if (!stage("decomposition", [&] { a = analyze_case(kind); })) return r;
  r.theta = a.theta_multiplicities();
  r.theta_rho = a.theta_rho_multiplicities();
  r.symmetry = a.symmetry.holds;
  r.forbidden_zero = a.structure.forbidden_zero;
  r.copies_equal = a.structure.copies_equal;
  r.real = a.structure.real;
  if (!r.forbidden_zero) r.failures.push_back({"decomposition", "a forbidden block is nonzero"});
  if (!r.copies_equal) r.failures.push_back({"decomposition", "repeated block copies differ"});

  for (const auto& want : opt.blocks) {
    bool found = std::any_of(a.blocks.begin(), a.blocks.end(), [&](const NamedBlock& b) { return lower(b.name) == lower(want); });
    if (!found) r.failures.push_back({"certify", "no block named " + want + " in " + r.name});
  }

  CurveOptions curve;
  curve.max_depth = opt.max_depth;
  curve.pool = opt.pool;
  bool all_blocks = opt.blocks.empty();
  bool others_verified = true;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    const auto& nb = a.blocks[i];
    BlockReport br;
    br.name = nb.name;
    br.label = nb.label;
    br.rows = nb.matrix.rows();
    br.cols = nb.matrix.cols();
    br.copies = nb.copies;
    br.claim = i == 0 ? "alpha1 nonzero" : (br.rows == br.cols ? "nonsingular" : "kernel trivial");
    bool wanted = all_blocks || std::any_of(opt.blocks.begin(), opt.blocks.end(),
                                            [&](const std::string& w) { return lower(w) == lower(nb.name); });
    if (wanted) {
      stage("certify " + nb.name, [&] {
        try {
          Certificate c = i == 0 ? certify_nonvanishing(a.alpha1, r.name + " alpha1 of " + nb.name, curve)
                                 : certify_block(a, nb.name, curve);
          br.certificate = r.certificates.size();
          r.certificates.push_back(std::move(c));
        } catch (const std::exception& e) {
          br.error = e.what();
          throw;
        }
      });
    }
    if (i > 0 && !(br.certificate && r.certificates[*br.certificate].verified)) others_verified = false;
    r.blocks.push_back(std::move(br));
  }
  r.equal_masses = a.blocks.size() > 1 && others_verified;

  if (opt.threshold) {
    stage("delta", [&] {
      DeltaResult d = find_delta(a, opt.digits, curve);
      r.delta_certificate = r.certificates.size();
      r.certificates.push_back(d.certificate);
      r.delta = std::move(d);
    });
  }
  return r;
}

bool replay_document(const Json& doc, std::ostream* log) {
  std::vector<Certificate> certs;
  if (doc.is_object() && doc.contains("certificates")) {
    for (const auto& c : doc.at("certificates")) certs.push_back(Certificate::from_json(c));
  } else if (doc.is_object() && doc.contains("certificate") && doc.at("certificate").is_object()) {
    certs.push_back(Certificate::from_json(doc.at("certificate")));
  } else if (doc.is_array()) {
    for (const auto& c : doc) certs.push_back(Certificate::from_json(c));
  } else {
    certs.push_back(Certificate::from_json(doc));
  }
  bool all = !certs.empty();
  for (const auto& c : certs) {
    std::string why;
    bool ok = replay(c, &why);
    if (log) *log << (ok ? "OK   " : "FAIL ") << c.kind << " " << (ok ? c.target : why) << "\n";
    all = all && ok;
  }
  return all;
}

std::vector<Rational> curve_grid(int samples) {
  if (samples < 2) throw std::invalid_argument("at least 2 samples are required");
  std::vector<Rational> g;
  for (int k = 1; k <= samples; ++k) {
    Rational q(k, samples + 1);
    q.canonicalize();
    g.push_back(q);
  }
  return g;
}

std::vector<CurveSample> sample_curve(const CaseAnalysis& a, int samples, int digits, WorkerPool* pool) {
  auto grid = curve_grid(samples);
  std::vector<CurveSample> rows(grid.size());
  parallel_for(pool, grid.size(), [&](std::size_t i) {
    MassRatio m = mass_ratio_at(a, grid[i], digits);
    rows[i] = {m.t, m.c, m.ratio, m.c_decimal, m.ratio_decimal, m.sign};
  });
  return rows;
}

void write_curve_csv(const std::vector<CurveSample>& rows, std::ostream& out) {
  out << "t_num,t_den,c_lo,c_hi,ratio_lo,ratio_hi,ratio_sign\n";
  for (const auto& s : rows)
    out << s.t.get_num().get_str() << ',' << s.t.get_den().get_str() << ',' << s.c_decimal.first << ','
        << s.c_decimal.second << ',' << s.ratio_decimal.first << ',' << s.ratio_decimal.second << ',' << s.sign << '\n';
}

void export_curve(PolyhedronKind kind, int samples, const std::string& path, int digits, WorkerPool* pool) {
  auto rows = sample_curve(analyze_case(kind), samples, digits, pool);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_curve_csv(rows, out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace symcc
