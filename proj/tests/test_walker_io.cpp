#include "doctest.h"

#include <cstdio>
#include <string>

#include "nullpar/errors.hpp"
#include "nullpar/walker_io.hpp"
#include "support.hpp"

using namespace nullpar;
using namespace nullpar::walker;

namespace {

std::size_t parse_offset(const std::string& text, std::string* msg = nullptr) {
  try {
    parse_walker(text);
  } catch (const ParseError& e) {
    if (msg) *msg = e.what();
    return e.offset();
  }
  FAIL("expected a parse error");
  return 0;
}

}  // namespace

TEST_CASE("documented example parses") {
  const std::string text =
      "# pp-wave\n"
      "walker n=4 r=1\n"
      "A:\n"
      "1; 0\n"
      "0; 1\n"
      "H:\n"
      "x2\n"
      "0\n"
      "B:\n"
      "x2^2 - x3^2\n";
  const WalkerData d = parse_walker(text);
  CHECK(d.n == 4);
  CHECK(d.r == 1);
  CHECK(d.H(0, 0).to_string() == "x2");
  CHECK(d.B(0, 0).to_string() == "x2^2 - x3^2");
  CHECK(parse_walker(format_walker(d)).B(0, 0) == d.B(0, 0));
}

TEST_CASE("format/parse round trip over the corpus grid") {
  for (int i = 0; i < 50; ++i) {
    const auto c = oracle::corpus_entry(i);
    const WalkerData d = random_walker_data(c.n, c.r, c.seed);
    const std::string text = format_walker(d);
    const WalkerData back = parse_walker(text);
    CHECK(format_walker(back) == text);
    CHECK(assemble(back).canonical_text() == assemble(d).canonical_text());
  }
}

TEST_CASE("empty blocks are omitted") {
  const std::string mid = format_walker(random_walker_data(2, 1, 1));
  CHECK(mid.find("A:") == std::string::npos);
  CHECK(mid.find("H:") == std::string::npos);
  CHECK(mid.find("B:") != std::string::npos);
  const std::string r0 = format_walker(random_walker_data(3, 0, 1));
  CHECK(r0.find("B:") == std::string::npos);
  CHECK(parse_walker(r0).A.rows() == 3);
}

TEST_CASE("syntax errors report line and byte offset") {
  std::string msg;
  const std::string text = "walker n=3 r=1\nA:\n1\nH:\nx2 +* 1\nB:\n0\n";
  CHECK(parse_offset(text, &msg) == text.find('*'));
  CHECK(msg.find("line 5") != std::string::npos);

  CHECK(parse_offset("walker n=3 r=1\nA:\n1; 2\nH:\n0\nB:\n0\n") == 19);  // extra entry
  CHECK(parse_offset("walk n=3 r=1\n") == 0);
  CHECK(parse_offset("walker n=3 r=2\n") == 0);
  CHECK(parse_offset("walker n=3 r=1\nA:\n1\nB:\n0\n") == 20);  // H missing
  CHECK(parse_offset("walker n=3 r=1\nA:\n1\nH:\n") == 23);   // truncated
  CHECK(parse_offset("") == 0);

  try {
    parse_walker("walker n=3 r=1\nA:\n1\nH:\nx4\nB:\n0\n");
    FAIL("expected index error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::index_range);
  }
}

TEST_CASE("file I/O") {
  const WalkerData d = random_walker_data(4, 1, 9);
  const std::string path = "walker_io_test.txt";
  save_walker(d, path);
  CHECK(format_walker(load_walker(path)) == format_walker(d));
  std::remove(path.c_str());
  try {
    load_walker("does/not/exist.txt");
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::io);
  }
}
