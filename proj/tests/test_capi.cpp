#include "doctest.h"

#include <cstring>
#include <string>

#include "nullpar/nullpar.h"

TEST_CASE("generate, serialize, parse") {
  nullpar_walker* w = nullptr;
  REQUIRE(nullpar_walker_generate(5, 2, 7, &w) == NULLPAR_OK);
  CHECK(nullpar_walker_n(w) == 5);
  CHECK(nullpar_walker_r(w) == 2);
  char* text = nullptr;
  REQUIRE(nullpar_walker_to_text(w, &text) == NULLPAR_OK);
  nullpar_walker* back = nullptr;
  REQUIRE(nullpar_walker_parse(text, std::strlen(text), &back) == NULLPAR_OK);
  char* text2 = nullptr;
  REQUIRE(nullpar_walker_to_text(back, &text2) == NULLPAR_OK);
  CHECK(std::string(text) == std::string(text2));
  CHECK(nullpar_walker_validate(back) == NULLPAR_OK);
  nullpar_string_free(text);
  nullpar_string_free(text2);
  nullpar_walker_free(back);
  nullpar_walker_free(w);
}

TEST_CASE("argument and parse errors") {
  nullpar_walker* w = nullptr;
  CHECK(nullpar_walker_generate(4, 3, 1, &w) == NULLPAR_ERR_ARGUMENT);
  CHECK(w == nullptr);
  CHECK(nullpar_walker_generate(4, 1, 1, nullptr) == NULLPAR_ERR_ARGUMENT);

  const char* bad = "walker n=3 r=1\nA:\n1\nH:\nx2 + )\nB:\n0\n";
  CHECK(nullpar_walker_parse(bad, std::strlen(bad), &w) == NULLPAR_ERR_PARSE);
  CHECK(nullpar_last_error_offset() == 28);
  CHECK(std::string(nullpar_last_error()).find("line 5") != std::string::npos);

  const char* range = "walker n=3 r=1\nA:\n1\nH:\nx9\nB:\n0\n";
  CHECK(nullpar_walker_parse(range, std::strlen(range), &w) == NULLPAR_ERR_INDEX);
  CHECK(nullpar_walker_load("no/such/file", &w) == NULLPAR_ERR_IO);
  CHECK(std::string(nullpar_status_name(NULLPAR_ERR_IO)) == "i/o error");

  const char* dep = "walker n=3 r=1\nA:\n1\nH:\nx1\nB:\n0\n";
  REQUIRE(nullpar_walker_parse(dep, std::strlen(dep), &w) == NULLPAR_OK);
  CHECK(nullpar_walker_validate(w) == NULLPAR_ERR_INVARIANT);
  CHECK(std::string(nullpar_last_error()).find("condition (ii)") != std::string::npos);
  nullpar_walker_free(w);
}

TEST_CASE("verify and report access") {
  nullpar_walker* w = nullptr;
  REQUIRE(nullpar_walker_generate(4, 1, 3, &w) == NULLPAR_OK);
  nullpar_verify_options opts;
  nullpar_verify_options_default(&opts);
  CHECK(opts.samples == 25);
  CHECK(opts.tol == 1e-9);
  nullpar_report* rep = nullptr;
  REQUIRE(nullpar_verify(w, &opts, &rep) == NULLPAR_OK);
  CHECK(nullpar_report_passed(rep) == 1);
  CHECK(nullpar_report_skipped_count(rep) == 0);
  const size_t count = nullpar_report_check_count(rep);
  CHECK(count >= 10);
  nullpar_check_info info;
  for (size_t i = 0; i < count; ++i) {
    REQUIRE(nullpar_report_check(rep, i, &info) == NULLPAR_OK);
    CHECK(info.passed == 1);
    CHECK(info.max_residual <= info.tolerance);
  }
  CHECK(nullpar_report_check(rep, count, &info) == NULLPAR_ERR_ARGUMENT);

  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(nullpar_report_serialize(rep, NULLPAR_FORMAT_JSON, &a) == NULLPAR_OK);
  nullpar_report* rep2 = nullptr;
  REQUIRE(nullpar_verify(w, &opts, &rep2) == NULLPAR_OK);
  REQUIRE(nullpar_report_serialize(rep2, NULLPAR_FORMAT_JSON, &b) == NULLPAR_OK);
  CHECK(std::string(a) == std::string(b));
  nullpar_string_free(a);
  nullpar_string_free(b);
  nullpar_report_free(rep2);

  opts.samples = 0;
  CHECK(nullpar_verify(w, &opts, &rep2) == NULLPAR_ERR_ARGUMENT);

  nullpar_walker* ctrl = nullptr;
  REQUIRE(nullpar_walker_negative_control(w, &ctrl) == NULLPAR_OK);
  REQUIRE(ctrl != nullptr);
  nullpar_verify_options_default(&opts);
  nullpar_report* bad = nullptr;
  REQUIRE(nullpar_verify(ctrl, &opts, &bad) == NULLPAR_OK);
  CHECK(nullpar_report_passed(bad) == 0);
  nullpar_report_free(bad);
  nullpar_walker_free(ctrl);
  nullpar_report_free(rep);
  nullpar_walker_free(w);

  REQUIRE(nullpar_walker_generate(4, 2, 3, &w) == NULLPAR_OK);
  REQUIRE(nullpar_walker_negative_control(w, &ctrl) == NULLPAR_OK);
  CHECK(ctrl == nullptr);
  nullpar_walker_free(w);
}

TEST_CASE("extension demo through the C API") {
  nullpar_walker* w = nullptr;
  REQUIRE(nullpar_walker_generate(6, 2, 1, &w) == NULLPAR_OK);
  nullpar_extension* ext = nullptr;
  REQUIRE(nullpar_extend(w, nullptr, &ext) == NULLPAR_OK);
  int pp = -1, mp = -1, pr = -1, mr = -1;
  nullpar_extension_counts(ext, &pp, &mp, &pr, &mr);
  CHECK(pp == 4);
  CHECK(mp == 3);
  CHECK(pr == pp);
  CHECK(mr == mp);
  CHECK(nullpar_extension_passed(ext) == 1);
  char* text = nullptr;
  REQUIRE(nullpar_extension_serialize(ext, NULLPAR_FORMAT_TEXT, &text) == NULLPAR_OK);
  CHECK(std::string(text).find("klm") != std::string::npos);
  nullpar_string_free(text);
  nullpar_extension_free(ext);
  nullpar_walker_free(w);
}
