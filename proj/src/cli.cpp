#include "qcalc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qcalc/catalog.hpp"
#include "qcalc/conformal.hpp"
#include "qcalc/family.hpp"
#include "qcalc/report.hpp"

namespace qcalc::cli {

namespace {

struct Options {
  std::string format = "text";
  std::string param;
  std::vector<std::string> files;
  std::string catalog_name;
  int k = -1;
};

bool json_mode(const Options& o) { return o.format == "json"; }

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (json_mode(o)) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AlgebraDocument apply_param(AlgebraDocument doc, const std::string& param) {
  if (param.empty()) return doc;
  const auto eq = param.find('=');
  if (eq == std::string::npos) throw InputError("--param expects NAME=VALUE, got '" + param + "'");
  const std::string name = param.substr(0, eq);
  if (!doc.parameter) throw InputError("document '" + doc.name + "' has no parameter");
  if (name != *doc.parameter) {
    throw InputError("document parameter is '" + *doc.parameter + "', not '" + name + "'");
  }
  Rational value;
  try {
    value = Rational::parse(param.substr(eq + 1));
  } catch (const std::exception&) {
    throw InputError("cannot parse '" + param.substr(eq + 1) + "' as a rational number");
  }
  return substitute_parameter(doc, value);
}

std::vector<AlgebraDocument> load_documents(const Options& o, bool substitute = true) {
  std::vector<AlgebraDocument> docs;
  if (!o.catalog_name.empty() && !o.files.empty()) throw InputError("give either FILE or --catalog, not both");
  if (!o.catalog_name.empty()) {
    docs.push_back(catalog_document(o.catalog_name));
  } else {
    if (o.files.empty()) throw InputError("no input: give FILE or --catalog NAME");
    for (const auto& f : o.files) docs.push_back(parse_document(read_file(f)));
  }
  if (substitute)
    for (auto& d : docs) d = apply_param(std::move(d), o.param);
  return docs;
}

AlgebraDocument load_one(const Options& o, bool substitute = true) {
  auto docs = load_documents(o, substitute);
  if (docs.size() != 1) throw InputError("this command takes exactly one document");
  return std::move(docs.front());
}

LieAlgebra rational_algebra(const AlgebraDocument& doc) {
  if (doc.parameter) {
    throw ParametricNotSupported("document '" + doc.name + "' depends on '" + *doc.parameter +
                                 "'; fix a value with --param");
  }
  return to_algebra(doc);
}

Json form_list(const std::vector<Vector>& basis) {
  Json j = Json::array();
  for (const auto& v : basis) j.push_back(covector_form(v).to_string());
  return j;
}

// --- commands --------------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out) {
  AlgebraDocument doc = load_one(o);
  LieAlgebra g = rational_algebra(doc);
  Json j;
  std::ostringstream text;
  j["name"] = doc.name;
  auto violations = jacobi_check(g);
  bool ok = violations.empty();
  j["jacobi"] = violations.empty();
  Json details = Json::array();
  for (const auto& v : violations) details.push_back("d(d e" + std::to_string(v.index) + ") = " + v.value.to_string());
  text << "jacobi     " << (violations.empty() ? "ok" : "FAIL") << "\n";
  if (doc.qc) {
    QCFrame frame = to_frame(doc);
    bool qc_valid = g.dim() == 7;
    if (qc_valid) {
      try {
        derive_complex_structures(frame);
        qc_valid = check_compatibility(g, frame);
        if (!qc_valid) details.push_back("d eta_r|_H != " + frame.scale.to_string() + " omega_r");
      } catch (const NotQuaternionic& e) {
        qc_valid = false;
        details.push_back(e.what());
      }
    } else {
      details.push_back("qc structures need dimension 7");
    }
    Bi1Result bi1;
    if (g.dim() == 7) bi1 = check_bi1(g, frame);
    else bi1.ok = false;
    for (const auto& v : bi1.violations) details.push_back(v);
    j["qc_valid"] = qc_valid;
    j["bi1"] = bi1.ok;
    text << "qc_valid   " << (qc_valid ? "ok" : "FAIL") << "\n";
    text << "bi1        " << (bi1.ok ? "ok" : "FAIL") << "\n";
    ok = ok && qc_valid && bi1.ok;
  } else {
    j["qc_valid"] = nullptr;
    j["bi1"] = nullptr;
  }
  j["violations"] = details;
  for (const auto& d : details) text << "  " << d.get<std::string>() << "\n";
  emit(out, o, j, text.str());
  return ok ? kOk : kCheckFailed;
}

int cmd_report(const Options& o, std::ostream& out) {
  auto docs = load_documents(o);
  Json all = Json::array();
  std::string text;
  bool ok = true;
  for (const auto& doc : docs) {
    GeometryReport r = build_report(doc);
    ok = ok && r.passed();
    text += report_text(r);
    all.push_back(std::move(r.json));
  }
  emit(out, o, docs.size() == 1 ? all.front() : all, text);
  return ok ? kOk : kCheckFailed;
}

int cmd_wqc(const Options& o, std::ostream& out) {
  AlgebraDocument doc = load_one(o);
  BiquardAnalysis an = analyze_biquard(rational_algebra(doc), to_frame(doc));
  HTensor4 w = wqc_tensor(an);
  Json nonzero = Json::array();
  std::ostringstream text;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z)
        for (int v = 0; v < 4; ++v) {
          if (w(x, y, z, v).is_zero()) continue;
          Json idx = {an.frame.h_index(x), an.frame.h_index(y), an.frame.h_index(z), an.frame.h_index(v)};
          nonzero.push_back(Json{{"idx", idx}, {"value", w(x, y, z, v).to_string()}});
          text << "W(" << idx[0] << "," << idx[1] << "," << idx[2] << "," << idx[3] << ") = " << w(x, y, z, v) << "\n";
        }
  const bool flat = is_qc_conformally_flat(w);
  text << (flat ? "qc conformally flat\n" : "not qc conformally flat\n");
  Json j;
  j["name"] = doc.name;
  j["conformally_flat"] = flat;
  j["nonzero"] = std::move(nonzero);
  emit(out, o, j, text.str());
  return kOk;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  AlgebraDocument doc = load_one(o);
  LieAlgebra g = rational_algebra(doc);
  Json j;
  j["name"] = doc.name;
  std::ostringstream text;
  if (o.k >= 0) {
    if (o.k > g.dim()) throw InputError("--k must be between 0 and " + std::to_string(g.dim()));
    int dim = cohomology_dim(g, o.k);
    j["k"] = o.k;
    j["dim"] = dim;
    text << "dim H^" << o.k << " = " << dim << "\n";
  } else {
    auto betti = betti_numbers(g);
    j["betti"] = betti;
    text << "betti";
    for (int b : betti) text << " " << b;
    text << "\n";
  }
  emit(out, o, j, text.str());
  return kOk;
}

int cmd_flag_verify(const Options& o, std::ostream& out) {
  AlgebraDocument doc = load_one(o);
  LieAlgebra g = rational_algebra(doc);
  Flag flag = to_flag(doc);
  FlagCheck check = verify_flag(g, flag);
  std::vector<int> corollary = flag_corollary_violations(g, flag);
  Json j;
  std::ostringstream text;
  j["name"] = doc.name;
  j["ok"] = check.ok;
  if (check.first_violation) {
    const auto& v = *check.first_violation;
    j["violation"] = Json{{"level", v.level},
                          {"covector", covector_form(v.covector).to_string()},
                          {"d_covector", v.d_covector.to_string()}};
    text << "not a normal flag: d(" << covector_form(v.covector) << ") = " << v.d_covector << " is not in Lambda^2 V^"
         << v.level << "\n";
  } else {
    j["violation"] = nullptr;
    text << "normal flag\n";
  }
  j["corollary_violations"] = corollary;
  for (int level : corollary) text << "corollary fails on V^" << level << "\n";
  emit(out, o, j, text.str());
  return check.ok && corollary.empty() ? kOk : kCheckFailed;
}

int cmd_flag_search(const Options& o, std::ostream& out) {
  AlgebraDocument doc = load_one(o);
  auto flag = search_flag(rational_algebra(doc));
  Json j;
  std::ostringstream text;
  j["name"] = doc.name;
  j["found"] = flag.has_value();
  if (flag) {
    Json levels = Json::array();
    for (std::size_t i = 0; i < flag->levels.size(); ++i) {
      levels.push_back(form_list(flag->levels[i]));
      text << "V^" << i + 1 << " =";
      for (const auto& s : levels.back()) text << " [" << s.get<std::string>() << "]";
      text << "\n";
    }
    j["flag"] = std::move(levels);
  } else {
    j["flag"] = nullptr;
    text << "no normal flag found\n";
  }
  emit(out, o, j, text.str());
  return flag ? kOk : kCheckFailed;
}

int cmd_family_solve(const Options& o, std::ostream& out) {
  AlgebraDocument doc = load_one(o, false);
  if (!doc.parameter) throw InputError("document '" + doc.name + "' has no parameter");
  ParametricAlgebra fam{to_algebra(doc), *doc.parameter};
  auto constraints = jacobi_constraints(fam);
  FamilySolution sol = solve_family(fam);
  Json j;
  std::ostringstream text;
  j["name"] = doc.name;
  j["parameter"] = fam.parameter;
  Json cs = Json::array();
  for (const auto& c : constraints) {
    cs.push_back(c.to_string());
    text << "constraint " << c.to_string() << " = 0\n";
  }
  j["constraints"] = std::move(cs);
  j["all_values"] = sol.all_values;
  Json roots = Json::array();
  for (const auto& r : sol.roots) roots.push_back(r.to_string());
  j["roots"] = roots;
  if (sol.all_values) {
    text << "every value of " << fam.parameter << " gives a Lie algebra\n";
  } else {
    text << "roots";
    if (sol.roots.empty()) text << " (none)";
    for (const auto& r : sol.roots) text << " " << r;
    text << "\n";
  }
  emit(out, o, j, text.str());
  return kOk;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
  Json entries = Json::array();
  std::ostringstream text;
  for (const auto& e : catalog()) {
    entries.push_back(Json{{"name", e.name}, {"summary", e.summary}});
    text << std::left << std::setw(16) << e.name << e.summary << "\n";
  }
  emit(out, o, Json{{"entries", entries}}, text.str());
  return kOk;
}

int cmd_catalog_show(const Options& o, const std::string& name, std::ostream& out) {
  const CatalogEntry& e = catalog_entry(name);
  emit(out, o, Json{{"name", e.name}, {"source", e.source}}, e.source);
  return kOk;
}

void report_error(std::ostream& err, const Options& o, const std::string& kind, const std::string& message,
                  const ParseError* parse = nullptr) {
  if (json_mode(o)) {
    Json e{{"kind", kind}, {"message", message}};
    if (parse) {
      e["line"] = parse->line();
      e["column"] = parse->column();
    }
    err << Json{{"error", e}}.dump() << "\n";
  } else {
    err << "error: " << message << "\n";
  }
}

int exit_code_for(const Error& e) {
  static const std::vector<std::string> input_kinds{"ParseError",    "LookupError",  "InputError",
                                                    "InvalidFrame",  "InvalidFlag",  "InvalidAlgebra",
                                                    "ParametricNotSupported", "IndeterminateMismatch"};
  return std::find(input_kinds.begin(), input_kinds.end(), e.kind()) != input_kinds.end() ? kInputError
                                                                                             : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::string show_name;
  CLI::App app{"Exact computations for left-invariant qc structures on 7-dimensional Lie algebras", "qcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->envname("QCALC_FORMAT");
  app.add_option("--param", o.param, "Fix the family parameter, e.g. mu=-1");

  auto inputs = [&](CLI::App* sub, bool many = false) {
    auto* files = sub->add_option("files", o.files, many ? "Input .alg files" : "Input .alg file");
    if (!many) files->expected(0, 1);
    sub->add_option("--catalog", o.catalog_name, "Use a built-in catalog entry");
    sub->fallthrough();
  };

  auto* check = app.add_subcommand("check", "Jacobi identity, qc compatibility and integrability");
  inputs(check);
  auto* report = app.add_subcommand("report", "Full Biquard pipeline report");
  inputs(report, true);
  auto* wqc = app.add_subcommand("wqc", "Nonzero components of the qc conformal curvature");
  inputs(wqc);
  auto* cohom = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology dimensions");
  inputs(cohom);
  cohom->add_option("--k", o.k, "Degree (all degrees when omitted)")->check(CLI::NonNegativeNumber);

  auto* flag = app.add_subcommand("flag", "Normal ascending flags");
  flag->require_subcommand(1);
  flag->fallthrough();
  auto* flag_verify = flag->add_subcommand("verify", "Check the document's flag");
  inputs(flag_verify);
  auto* flag_search = flag->add_subcommand("search", "Search for a flag with rational coefficients");
  inputs(flag_search);

  auto* family = app.add_subcommand("family", "One-parameter families");
  family->require_subcommand(1);
  family->fallthrough();
  auto* family_solve = family->add_subcommand("solve", "Parameter values satisfying d^2 = 0");
  inputs(family_solve);

  auto* cat = app.add_subcommand("catalog", "Built-in algebras");
  cat->require_subcommand(1);
  cat->fallthrough();
  auto* cat_list = cat->add_subcommand("list", "List entries");
  cat_list->fallthrough();
  auto* cat_show = cat->add_subcommand("show", "Print an entry's source");
  cat_show->add_option("name", show_name, "Entry name")->required();
  cat_show->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (o.format != "json" && o.format != "text") o.format = "text";
    report_error(err, o, "UsageError", e.what());
    return kInputError;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*report) return cmd_report(o, out);
    if (*wqc) return cmd_wqc(o, out);
    if (*cohom) return cmd_cohomology(o, out);
    if (*flag_verify) return cmd_flag_verify(o, out);
    if (*flag_search) return cmd_flag_search(o, out);
    if (*family_solve) return cmd_family_solve(o, out);
    if (*cat_list) return cmd_catalog_list(o, out);
    if (*cat_show) return cmd_catalog_show(o, show_name, out);
  } catch (const ParseError& e) {
    report_error(err, o, e.kind(), e.what(), &e);
    return kInputError;
  } catch (const Error& e) {
    report_error(err, o, e.kind(), e.what());
    return exit_code_for(e);
  }
  return kInputError;
}

}  // namespace qcalc::cli
