#include <doctest.h>

#include <fstream>

#include "fano216/certificate.hpp"
#include "fano216/models.hpp"

using namespace fano216;

TEST_CASE("content hashes and the manifest") {
  CHECK(content_hash("") == "cbf29ce484222325");
  CHECK(content_hash("a") != content_hash("b"));
  // every shipped model verifies against the manifest
  for (const char* f : {"bl2p2.surface", "n216.threefold", "reducible_fiber.flag",
                        "rows/singular_5_c10.row"}) {
    CHECK_NOTHROW(load_checked(default_data_dir(), f));
  }
  // unknown files require --unchecked
  CHECK_THROWS(load_checked(default_data_dir(), "rows/INDEX"));
}

TEST_CASE("surface and threefold parse errors") {
  CHECK_THROWS(parse_surface("surface x\nbasis A B\ngram\n1 0\n0 1\nbogus\nend\n"));
  CHECK_THROWS(parse_surface("surface x\nbasis A B\ngram\n1 2\n3 4\nend\n"));  // asymmetric
  CHECK_THROWS(parse_threefold("threefold t\nlabels H E\nvolume 5\nend\n"));
}

TEST_CASE("flag files resolve curves and points") {
  FlagCaseData data = load_flag_case(default_data_dir(), "reducible_fiber");
  CHECK(data.config.curve_name == "L1");
  CHECK_FALSE(data.config.curve_fixed.has_value());
  CHECK(data.points.size() == 6);
  CHECK(data.has_blowup);
  CHECK(data.blowup_points.size() == 3);
  FlagCaseData p55 = load_flag_case(default_data_dir(), "iskovskikh");
  REQUIRE(p55.config.curve_fixed.has_value());
  CHECK(p55.config.fixed_curves[*p55.config.curve_fixed].name == "C");
}

TEST_CASE("certificates serialize deterministically") {
  Certificate a;
  a.command = "test";
  a.add_result("x", Rational(22, 7), "somewhere");
  Certificate b = a;
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_json().find("22/7") != std::string::npos);
}

TEST_CASE("golden table names are unique and anchored") {
  const auto& table = golden_table();
  std::set<std::string> names;
  for (const auto& e : table) {
    CHECK(names.insert(e.name).second);
    CHECK_FALSE(e.anchor.empty());
  }
}

TEST_CASE("restriction pieces must agree at shared breakpoints") {
  std::string base = read_file(default_data_dir() + "/models/iskovskikh.flag");
  // corrupt the second piece's class at the junction
  std::string bad = base;
  auto pos = bad.find("bclass 4:-2 2:-1 2:-1");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, std::string("bclass 4:-2 2:-1 2:-1").size(), "bclass 5:-2 2:-1 2:-1");
  // write to a scratch data dir mirroring the layout
  std::string scratch = "/tmp/fano216_scratch";
  std::system(("rm -rf " + scratch + " && mkdir -p " + scratch + "/models").c_str());
  std::system(("cp " + default_data_dir() + "/models/iskovskikh.surface " + scratch +
               "/models/").c_str());
  {
    std::ofstream out(scratch + "/models/iskovskikh.flag");
    out << bad;
  }
  CHECK_THROWS(load_flag_case(scratch, "iskovskikh", /*unchecked=*/true));
}
