#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcalc/catalog.hpp"
#include "qcalc/cli.hpp"
#include "qcalc/report.hpp"

using qcalc::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
  Json error() const { return Json::parse(err); }
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = qcalc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Writes `text` to a fresh file under the system temp directory.
std::string temp_file(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "qcalc_cli_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

bool audit_failed(const Json& report) {
  for (const auto& a : report["audit"])
    if (!a["passed"].get<bool>() && !a["diagnostic"].get<bool>()) return true;
  return false;
}

const char* kSo3R4 = "algebra so3r4 dim 7\nd e1 = e23\nd e2 = e31\nd e3 = e12\n";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("report schema and g1 values") {
    Result r = run({"report", "--catalog", "g1", "--format", "json"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"name", "jacobi", "qc_valid", "bi1", "S", "T0", "torsion_endos",
                                           "torsion_nonzero", "dOmega_zero", "vertical_integrable", "R_samples",
                                           "wqc_samples", "conformally_flat", "audit", "fingerprint"});
    CHECK(j["S"] == "-1/2");
    CHECK(j["torsion_nonzero"] == true);
    CHECK(j["dOmega_zero"] == true);
    CHECK(j["vertical_integrable"] == true);
    CHECK(j["conformally_flat"] == false);
    CHECK(j["wqc_samples"][0] == Json{{"idx", {1, 2, 1, 2}}, {"value", "-1/2"}});
    CHECK(j["R_samples"][0] == Json{{"idx", {1, 2, 1, 2}}, {"value", "1/2"}});
    CHECK(j["T0"][0] == Json{"-1/2", "0", "0", "0"});
    CHECK(j["fingerprint"]["betti"] == Json{1, 1, 2, 4, 2, 1, 1, 0});
    CHECK(j["fingerprint"]["nilpotent"] == false);
    CHECK(j["fingerprint"]["solvable"] == true);
    CHECK(r.err.empty());
  }

  TEST_CASE("report on the flat model") {
    Json j = run({"report", "--catalog", "heisenberg", "--format", "json"}).json();
    CHECK(j["S"] == "0");
    CHECK(j["conformally_flat"] == true);
    CHECK(j["torsion_nonzero"] == false);
    CHECK(j["fingerprint"]["nilpotent"] == true);
  }

  TEST_CASE("output is byte-identical across runs") {
    for (const char* name : {"g1", "g2", "heisenberg"}) {
      for (const char* format : {"json", "text"}) {
        Result a = run({"report", "--catalog", name, "--format", format});
        Result b = run({"report", "--catalog", name, "--format", format});
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
      }
    }
  }

  TEST_CASE("batch report over files") {
    std::string g1 = temp_file("g1.alg", qcalc::catalog_entry("g1").source);
    std::string g2 = temp_file("g2.alg", qcalc::catalog_entry("g2").source);
    Result r = run({"--format", "json", "report", g1, g2});
    REQUIRE(r.code == 0);
    Json j = r.json();
    REQUIRE(j.is_array());
    CHECK(j[0]["S"] == "-1/2");
    CHECK(j[1]["S"] == "-1/6");
  }

  TEST_CASE("exit code 1 exactly when a named audit check fails") {
    std::string unscaled = qcalc::catalog_entry("heisenberg").source;
    unscaled.replace(unscaled.find("scale 1"), 7, "scale 2");
    std::string perturbed = qcalc::catalog_entry("heisenberg").source;
    perturbed.replace(perturbed.find("d e1 = 0"), 8, "d e1 = e56");
    std::vector<std::vector<std::string>> runs{
        {"report", "--catalog", "g1"},
        {"report", "--catalog", "g2"},
        {"report", "--catalog", "heisenberg"},
        {"report", "--catalog", "prop31_family", "--param", "mu=-1"},
        {"report", "--catalog", "prop31_family", "--param", "mu=-1/3"},
        {"report", temp_file("unscaled.alg", unscaled)},
        {"report", temp_file("perturbed.alg", perturbed)},
    };
    int failures = 0;
    for (auto args : runs) {
      args.insert(args.end(), {"--format", "json"});
      Result r = run(args);
      INFO(args[2]);
      REQUIRE(r.code != 2);
      Json j = r.json();
      CHECK((r.code == 1) == audit_failed(j));
      failures += r.code;
    }
    CHECK(failures == 2);
    Json bad = run({"report", temp_file("unscaled2.alg", unscaled), "--format", "json"}).json();
    CHECK(bad["qc_valid"] == false);
    CHECK(bad["S"].is_null());
    Json pert = run({"report", temp_file("perturbed2.alg", perturbed), "--format", "json"}).json();
    // d(e56) != 0, so the injected vertical bracket breaks Jacobi; the 4-form test still runs.
    CHECK(pert["jacobi"] == false);
    CHECK(pert["dOmega_zero"] == false);
    CHECK(pert["vertical_integrable"] == false);
  }

  TEST_CASE("parameter substitution") {
    Json a = run({"report", "--catalog", "prop31_family", "--param", "mu=-1", "--format", "json"}).json();
    CHECK(a["S"] == "-1/2");
    Json b = run({"report", "--catalog", "prop31_family", "--param", "mu=-1/3", "--format", "json"}).json();
    CHECK(b["S"] == "-1/6");
    CHECK(run({"report", "--catalog", "prop31_family"}).code == 2);
    CHECK(run({"report", "--catalog", "prop31_family", "--param", "nu=1"}).code == 2);
    CHECK(run({"report", "--catalog", "prop31_family", "--param", "mu=x"}).code == 2);
    CHECK(run({"report", "--catalog", "g1", "--param", "mu=1"}).code == 2);
    Result zero = run({"check", "--catalog", "prop31_family", "--param", "mu=0", "--format", "json"});
    CHECK(zero.code == 1);
    CHECK(zero.json()["jacobi"] == false);
  }

  TEST_CASE("family solve") {
    std::string path = temp_file("solvable_examples.alg", qcalc::catalog_entry("prop31_family").source);
    Result r = run({"family", "solve", path, "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["roots"] == Json{"-1", "-1/3"});
    CHECK(r.json()["all_values"] == false);
    CHECK(run({"family", "solve", "--catalog", "g1"}).code == 2);
  }

  TEST_CASE("check, cohomology, flags, wqc") {
    for (const char* name : {"g1", "g2", "heisenberg"}) CHECK(run({"check", "--catalog", name}).code == 0);
    Result broken = run({"check", temp_file("broken.alg", "algebra b dim 4\nd e1 = e23\nd e4 = e14\n"),
                         "--format", "json"});
    CHECK(broken.code == 1);
    CHECK(broken.json()["violations"][0] == "d(d e4) = e234");

    CHECK(run({"cohomology", "--catalog", "g1", "--k", "2", "--format", "json"}).json()["dim"] == 2);
    CHECK(run({"cohomology", "--catalog", "g2", "--k", "2", "--format", "json"}).json()["dim"] == 0);
    CHECK(run({"cohomology", "--catalog", "g1", "--k", "8"}).code == 2);

    for (const char* name : {"g1", "g2", "heisenberg"}) CHECK(run({"flag", "verify", "--catalog", name}).code == 0);
    Result none = run({"flag", "search", temp_file("so3r4.alg", kSo3R4), "--format", "json"});
    CHECK(none.code == 1);
    CHECK(none.json()["found"] == false);
    Result found = run({"flag", "search", "--catalog", "heisenberg", "--format", "json"});
    CHECK(found.code == 0);
    CHECK(found.json()["flag"].size() == 7);

    Json w = run({"wqc", "--catalog", "heisenberg", "--format", "json"}).json();
    CHECK(w["conformally_flat"] == true);
    CHECK(w["nonzero"].empty());
    Json w1 = run({"wqc", "--catalog", "g1", "--format", "json"}).json();
    CHECK(w1["conformally_flat"] == false);
  }

  TEST_CASE("catalog commands") {
    Result list = run({"catalog", "list", "--format", "json"});
    CHECK(list.json()["entries"].size() == 4);
    Result show = run({"catalog", "show", "g1"});
    CHECK(show.out == qcalc::catalog_entry("g1").source);
    CHECK(show.out.find("d e5 = 2(e12 + e34) - e46") != std::string::npos);
    CHECK(run({"catalog", "show", "prop31_family"}).out.find("param mu") != std::string::npos);
    Result missing = run({"catalog", "show", "g3", "--format", "json"});
    CHECK(missing.code == 2);
    CHECK(missing.error()["error"]["kind"] == "LookupError");
  }

  TEST_CASE("input errors") {
    std::string bad = temp_file("bad.alg", "algebra t dim 7\nd e1 = e1\n");
    Result r = run({"check", bad, "--format", "json"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    Json e = r.error()["error"];
    CHECK(e["kind"] == "ParseError");
    CHECK(e["line"] == 2);
    CHECK(e["column"] == 8);
    Result text = run({"check", bad});
    CHECK(text.err.rfind("error: 2:8:", 0) == 0);
    CHECK(run({"check", "/nonexistent/x.alg"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"report", "--catalog", "g1", "--format", "xml"}).code == 2);
    CHECK(run({"check", bad, "--catalog", "g1"}).code == 2);
  }

  TEST_CASE("QCALC_FORMAT selects the default format") {
    ::setenv("QCALC_FORMAT", "json", 1);
    Result env = run({"catalog", "list"});
    Result flag = run({"catalog", "list", "--format", "text"});
    ::unsetenv("QCALC_FORMAT");
    CHECK(env.json()["entries"].size() == 4);
    CHECK(flag.out.rfind("heisenberg", 0) == 0);
    CHECK(run({"catalog", "list"}).out.rfind("heisenberg", 0) == 0);
  }
}
