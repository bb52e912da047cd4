// Exercises the shared library through its public header only.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "reeder/reeder.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  reeder_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("family diagrams and counts") {
  reeder_diagram* d = nullptr;
  REQUIRE(reeder_diagram_from_family("affE7:7", &d) == REEDER_OK);
  CHECK(reeder_diagram_vertex_count(d) == 8);
  CHECK(reeder_diagram_free_count(d) == 8);
  CHECK(reeder_diagram_is_family(d) == 1);
  CHECK(std::string(reeder_diagram_name(d)) == "affE7:7");

  reeder_partition* p = nullptr;
  REQUIRE(reeder_partition_enumerate(d, 0, &p) == REEDER_OK);
  CHECK(reeder_partition_class_count(p) == 6);

  uint64_t formula = 0;
  int has = 0;
  REQUIRE(reeder_diagram_closed_form(d, &formula, &has) == REEDER_OK);
  CHECK(has == 1);
  CHECK(formula == 6);

  char* rep = nullptr;
  REQUIRE(reeder_partition_min_rep(p, 0, &rep) == REEDER_OK);
  CHECK(take(rep) == "00000000");
  uint64_t size = 0;
  REQUIRE(reeder_partition_class_size(p, 0, &size) == REEDER_OK);
  CHECK(size == 1);
  CHECK(reeder_partition_min_rep(p, 99, &rep) == REEDER_ERR_INVALID);
  CHECK(std::string(reeder_last_error()).size() > 0);

  char* json = nullptr;
  REQUIRE(reeder_partition_export(p, REEDER_FORMAT_JSON, 0, &json) == REEDER_OK);
  CHECK(take(json).find("\"class_count\": 6") != std::string::npos);

  reeder_partition_free(p);
  reeder_diagram_free(d);
}

TEST_CASE("labeling operations in display order") {
  reeder_diagram* d = nullptr;
  REQUIRE(reeder_diagram_from_family("A:3", &d) == REEDER_OK);
  char* out = nullptr;
  REQUIRE(reeder_apply_move(d, "111", 0, &out) == REEDER_OK);
  CHECK(take(out) == "011");
  int comps = -1;
  REQUIRE(reeder_count_components(d, "101", &comps) == REEDER_OK);
  CHECK(comps == 2);
  int fixed = -1;
  REQUIRE(reeder_is_fixed(d, "101", &fixed) == REEDER_OK);
  CHECK(fixed == 1);
  CHECK(reeder_count_components(d, "10", &comps) == REEDER_ERR_INVALID);
  CHECK(reeder_apply_move(d, "111", 7, &out) == REEDER_ERR_INVALID);

  reeder_partition* p = nullptr;
  REQUIRE(reeder_partition_enumerate(d, 0, &p) == REEDER_OK);
  int a = -1;
  int b = -1;
  REQUIRE(reeder_partition_class_of(p, "100", &a) == REEDER_OK);
  REQUIRE(reeder_partition_class_of(p, "001", &b) == REEDER_OK);
  CHECK(a == b);

  char* report = nullptr;
  int available = 0;
  int ok = 0;
  REQUIRE(reeder_check_representatives(d, p, REEDER_FORMAT_TEXT, &report, &available, &ok) == REEDER_OK);
  CHECK(available == 1);
  CHECK(ok == 1);
  CHECK(take(report).find("MATCH") != std::string::npos);
  reeder_partition_free(p);
  reeder_diagram_free(d);
}

TEST_CASE("errors map to status codes") {
  reeder_diagram* d = nullptr;
  CHECK(reeder_diagram_from_family("nonsense", &d) == REEDER_ERR_PARSE);
  CHECK(reeder_diagram_from_family("D:2", &d) == REEDER_ERR_INVALID);
  CHECK(reeder_diagram_from_family(nullptr, &d) == REEDER_ERR_INVALID);
  CHECK(reeder_diagram_from_dsl("vertices 2\nedge 0 0\n", &d) == REEDER_ERR_PARSE);
  CHECK(reeder_diagram_load("/no/such/file.dg", &d) == REEDER_ERR_PARSE);
  CHECK(d == nullptr);

  REQUIRE(reeder_diagram_from_family("A:12", &d) == REEDER_OK);
  reeder_partition* p = nullptr;
  CHECK(reeder_partition_enumerate(d, 8, &p) == REEDER_ERR_RESOURCE);
  CHECK(p == nullptr);
  reeder_diagram_free(d);
  reeder_diagram_free(nullptr);
  reeder_partition_free(nullptr);
  CHECK(reeder_default_max_free() == 26);
}

TEST_CASE("DSL diagrams, verify and duality") {
  const char* path = "capi_test_diagram.dg";
  {
    std::ofstream out(path);
    out << "vertices 3\nedge 0 1\nedge 1 2\n";
  }
  reeder_diagram* d = nullptr;
  REQUIRE(reeder_diagram_open(path, &d) == REEDER_OK);
  std::remove(path);
  CHECK(reeder_diagram_is_family(d) == 0);
  uint64_t formula = 1;
  int has = 1;
  REQUIRE(reeder_diagram_closed_form(d, &formula, &has) == REEDER_OK);
  CHECK(has == 0);

  char* dsl = nullptr;
  REQUIRE(reeder_diagram_to_dsl(d, &dsl) == REEDER_OK);
  reeder_diagram* again = nullptr;
  CHECK(reeder_diagram_from_dsl(dsl, &again) == REEDER_OK);
  reeder_string_free(dsl);
  CHECK(reeder_diagram_vertex_count(again) == 3);
  reeder_diagram_free(again);

  char* report = nullptr;
  int passed = 0;
  REQUIRE(reeder_verify(d, 0, REEDER_FORMAT_TEXT, &report, &passed) == REEDER_OK);
  CHECK(passed == 1);
  reeder_string_free(report);

  char* json = nullptr;
  int applicable = 1;
  int verified = 1;
  REQUIRE(reeder_duality(d, 0, &json, &applicable, &verified) == REEDER_OK);
  CHECK(applicable == 0);
  CHECK(take(json).find("\"det_A\": 0") != std::string::npos);
  reeder_diagram_free(d);

  REQUIRE(reeder_diagram_from_family("B:3", &d) == REEDER_OK);
  CHECK(reeder_duality(d, 0, &json, &applicable, &verified) == REEDER_ERR_INVALID);
  reeder_diagram_free(d);
}
