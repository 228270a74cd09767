#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rmeasure/roots.hpp"
#include "rmeasure/tables.hpp"

using namespace rmeasure;

TEST_SUITE_BEGIN("tables");

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::filesystem::path kTables = std::filesystem::path(RMEASURE_SOURCE_DIR) / "tables";

}  // namespace

TEST_CASE("shipped files match the embedded data") {
  CHECK(read_file(kTables / "table1.tsv") == table1_tsv());
  CHECK(read_file(kTables / "theorem2.aux") == theorem2_aux());
  for (int i = 1; i <= 9; ++i) CHECK(read_file(kTables / ("f" + std::to_string(i) + ".aux")) == sector_aux(i));
}

TEST_CASE("dump_tables reproduces the shipped files") {
  auto dir = std::filesystem::temp_directory_path() / "rmeasure_dump_test";
  std::filesystem::remove_all(dir);
  dump_tables(dir.string());
  for (const auto& e : std::filesystem::directory_iterator(kTables)) CHECK(read_file(e.path()) == read_file(dir / e.path().filename()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("sector table shape") {
  const auto& rows = table1();
  REQUIRE(rows.size() == 9);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].index == static_cast<int>(i) + 1);
    CHECK(rows[i].theta_lo < rows[i].theta_hi);
    CHECK(rows[i].c_value > 0);
    if (i) CHECK(rows[i].c_value < rows[i - 1].c_value);
    CHECK(rows[i].p.is_monic());
    CHECK(is_irreducible(rows[i].p));
  }
  CHECK(rows[0].theta_lo == 0);
  CHECK(rows[8].theta_hi == 88.45);
}

TEST_CASE("the 45-term function") {
  const AuxFunction& f = theorem2_function();
  CHECK(f.terms.size() == 45);
  CHECK(f.weight == WeightKind::positive_real());
  for (const auto& t : f.terms) {
    CHECK(t.c > 0);
    CHECK(is_irreducible(t.q));
    CHECK(t.q.leading() > 0);
  }
  auto m = global_min(f);
  CHECK(m.m >= kHalfLineBound);
  CHECK(m.m == doctest::Approx(1.6165).epsilon(1e-4));
}

TEST_CASE("the as-printed variant falls short") {
  auto m = global_min(theorem2_function_variant());
  CHECK(m.m == doctest::Approx(1.57835).epsilon(1e-4));
}

TEST_CASE("sector functions sit at the right end of their intervals") {
  for (int i = 1; i <= 9; ++i) {
    const AuxFunction& f = sector_function(i);
    CHECK(f.weight.is_sector());
    CHECK(f.weight.theta() == table1()[static_cast<std::size_t>(i - 1)].theta_hi);
    for (const auto& t : f.terms) CHECK(t.c > 0);
  }
  CHECK_THROWS_AS(sector_function(0), std::out_of_range);
  CHECK_THROWS_AS(sector_function(10), std::out_of_range);
}

TEST_SUITE_END();
