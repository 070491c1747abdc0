#include "qcalc/report.hpp"

#include <iomanip>
#include <sstream>

#include "qcalc/conformal.hpp"
#include "qcalc/family.hpp"

namespace qcalc {

namespace {

Json matrix_json(const HMatrix& m) {
  Json rows = Json::array();
  for (int a = 0; a < 4; ++a) {
    Json row = Json::array();
    for (int b = 0; b < 4; ++b) row.push_back(m(a, b).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Audit {
  Json entries = Json::array();
  std::vector<std::string> failed;

  void add(const std::string& name, bool passed, const std::string& detail = {}, bool diagnostic = false) {
    Json e;
    e["name"] = name;
    e["passed"] = passed;
    e["diagnostic"] = diagnostic;
    e["detail"] = passed ? std::string() : detail;
    entries.push_back(std::move(e));
    if (!passed && !diagnostic) failed.push_back(name);
  }
};

}  // namespace

GeometryReport build_report(const AlgebraDocument& doc) {
  if (doc.parameter) {
    throw ParametricNotSupported("document '" + doc.name + "' depends on '" + *doc.parameter +
                                 "'; fix a value with --param");
  }
  const LieAlgebra g = to_algebra(doc);
  const QCFrame frame = to_frame(doc);
  if (g.dim() != 7) throw InvalidFrame("qc reports need a 7-dimensional algebra");
  frame.validate();

  Audit audit;
  Json j;
  j["name"] = doc.name;

  auto violations = jacobi_check(g);
  const bool jacobi = violations.empty();
  j["jacobi"] = jacobi;
  audit.add("jacobi", jacobi,
            jacobi ? "" : "d(d e" + std::to_string(violations.front().index) + ") = " + violations.front().value.to_string());

  bool qc_valid = true;
  std::string qc_detail;
  try {
    derive_complex_structures(frame);
    if (!check_compatibility(g, frame)) {
      qc_valid = false;
      qc_detail = "d eta_r|_H != " + frame.scale.to_string() + " omega_r";
    }
  } catch (const NotQuaternionic& e) {
    qc_valid = false;
    qc_detail = e.what();
  }
  j["qc_valid"] = qc_valid;
  audit.add("qc_valid", qc_valid, qc_detail);

  Bi1Result bi1 = check_bi1(g, frame);
  j["bi1"] = bi1.ok;
  audit.add("bi1", bi1.ok, bi1.ok ? "" : bi1.violations.front());

  std::optional<BiquardAnalysis> an;
  if (jacobi && qc_valid && bi1.ok) {
    try {
      an = analyze_biquard(g, frame);
      audit.add("biquard_pipeline", true);
    } catch (const Error& e) {
      audit.add("biquard_pipeline", false, e.kind() + ": " + e.what());
    }
  }

  const bool d_omega_zero = d_fundamental_form(g, frame).is_zero();
  const bool v_integrable = vertical_integrable(g, frame);

  if (an) {
    j["S"] = an->s.to_string();
    j["T0"] = matrix_json(an->t0);
    Json endos = Json::array();
    bool nonzero = false;
    for (const auto& e : an->torsion_endos) {
      endos.push_back(matrix_json(e));
      nonzero = nonzero || !e.is_zero();
    }
    j["torsion_endos"] = std::move(endos);
    j["torsion_nonzero"] = nonzero;
  } else {
    j["S"] = nullptr;
    j["T0"] = nullptr;
    j["torsion_endos"] = nullptr;
    j["torsion_nonzero"] = nullptr;
  }
  j["dOmega_zero"] = d_omega_zero;
  j["vertical_integrable"] = v_integrable;
  if (qc_valid) {
    audit.add("closed_form_iff_vertical_integrable", d_omega_zero == v_integrable,
              "d Omega = 0 is " + std::string(d_omega_zero ? "true" : "false") + " but [V,V] in V is " +
                  (v_integrable ? "true" : "false"));
  }

  if (an) {
    const HTensor4 w = wqc_tensor(*an);
    Json r_samples = Json::array();
    Json w_samples = Json::array();
    for (const auto& p : kSamplePositions) {
      Json idx = Json::array();
      for (int pos : p) idx.push_back(an->frame.h_index(pos));
      const Rational r = an->curvature(an->frame.h_index(p[0]), an->frame.h_index(p[1]),
                                       an->frame.h_index(p[2]), an->frame.h_index(p[3]));
      r_samples.push_back(Json{{"idx", idx}, {"value", r.to_string()}});
      w_samples.push_back(Json{{"idx", idx}, {"value", w(p[0], p[1], p[2], p[3]).to_string()}});
    }
    j["R_samples"] = std::move(r_samples);
    j["wqc_samples"] = std::move(w_samples);
    j["conformally_flat"] = is_qc_conformally_flat(w);
    for (const auto& c : an->audit) audit.add(c.name, c.passed, c.detail, c.diagnostic);
  } else {
    j["R_samples"] = nullptr;
    j["wqc_samples"] = nullptr;
    j["conformally_flat"] = nullptr;
  }

  j["audit"] = audit.entries;

  if (jacobi) {
    Fingerprint fp = fingerprint(g);
    j["fingerprint"] = Json{{"betti", fp.betti}, {"nilpotent", fp.nilpotent}, {"solvable", fp.solvable}};
  } else {
    j["fingerprint"] = nullptr;
  }
  return {std::move(j), std::move(audit.failed)};
}

namespace {

std::string scalar_or_dash(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_matrix(std::ostream& out, const Json& m, const std::string& indent) {
  for (const auto& row : m) {
    out << indent;
    for (const auto& x : row) out << " " << std::setw(6) << x.get<std::string>();
    out << "\n";
  }
}

}  // namespace

std::string report_text(const GeometryReport& report) {
  const Json& j = report.json;
  std::ostringstream out;
  out << "algebra " << j["name"].get<std::string>() << "\n";
  for (const char* key : {"jacobi", "qc_valid", "bi1", "S", "torsion_nonzero", "dOmega_zero",
                          "vertical_integrable", "conformally_flat"}) {
    out << "  " << std::left << std::setw(20) << key << std::right << scalar_or_dash(j[key]) << "\n";
  }
  if (!j["T0"].is_null()) {
    out << "  T0\n";
    print_matrix(out, j["T0"], "   ");
    int r = 1;
    for (const auto& e : j["torsion_endos"]) {
      out << "  T_xi" << r++ << "\n";
      print_matrix(out, e, "   ");
    }
  }
  for (const char* key : {"R_samples", "wqc_samples"}) {
    if (j[key].is_null()) continue;
    out << "  " << key << "\n";
    for (const auto& s : j[key]) {
      out << "    (";
      bool first = true;
      for (const auto& i : s["idx"]) {
        out << (first ? "" : ",") << i.get<int>();
        first = false;
      }
      out << ") = " << s["value"].get<std::string>() << "\n";
    }
  }
  if (!j["fingerprint"].is_null()) {
    out << "  betti              ";
    for (const auto& b : j["fingerprint"]["betti"]) out << " " << b.get<int>();
    out << "\n  nilpotent           " << scalar_or_dash(j["fingerprint"]["nilpotent"]) << "\n";
    out << "  solvable            " << scalar_or_dash(j["fingerprint"]["solvable"]) << "\n";
  }
  out << "  audit\n";
  for (const auto& a : j["audit"]) {
    out << "    " << (a["passed"].get<bool>() ? "ok   " : (a["diagnostic"].get<bool>() ? "note " : "FAIL ")) << a["name"].get<std::string>();
    if (!a["passed"].get<bool>()) out << ": " << a["detail"].get<std::string>();
    out << "\n";
  }
  return out.str();
}

}  // namespace qcalc
