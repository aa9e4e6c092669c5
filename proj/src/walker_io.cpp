#include "nullpar/walker_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "nullpar/errors.hpp"

namespace nullpar::walker {

namespace {

struct Line {
  std::string_view text;
  std::size_t offset;  // byte offset of the line start
  int number;          // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  int number = 1;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(pos, end - pos);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back({l, pos, number++});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t a = 0;
  while (a < s.size() && (s[a] == ' ' || s[a] == '\t')) ++a;
  std::size_t b = s.size();
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t')) --b;
  if (lead) *lead = a;
  return s.substr(a, b - a);
}

bool skippable(std::string_view s) {
  s = trim(s);
  return s.empty() || s.front() == '#';
}

[[noreturn]] void fail(const Line& line, std::size_t column, const std::string& msg) {
  throw ParseError(line.offset + column, "line " + std::to_string(line.number) + ": " + msg);
}

int header_int(const Line& line, std::string_view key) {
  const std::size_t at = line.text.find(key);
  if (at == std::string_view::npos) fail(line, 0, "header must be 'walker n=<int> r=<int>'");
  std::size_t pos = at + key.size();
  const std::size_t start = pos;
  int v = 0;
  while (pos < line.text.size() && line.text[pos] >= '0' && line.text[pos] <= '9') {
    v = v * 10 + (line.text[pos] - '0');
    if (v > 1000) fail(line, start, "dimension too large");
    ++pos;
  }
  if (pos == start) fail(line, start, "expected integer after '" + std::string(key) + "'");
  return v;
}

}  // namespace

WalkerData parse_walker(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && skippable(lines[i].text)) ++i;
  if (i == lines.size()) throw ParseError(text.size(), "empty input: missing 'walker' header");

  const Line& head = lines[i++];
  std::size_t lead = 0;
  std::string_view h = trim(head.text, &lead);
  if (h.substr(0, 6) != "walker") fail(head, lead, "header must start with 'walker'");
  const int n = header_int(head, " n=");
  const int r = header_int(head, " r=");
  if (n < 1) fail(head, lead, "n must be positive");
  if (2 * r > n) fail(head, lead, "need 0 <= r <= n/2");

  WalkerData d = blank_walker_data(n, r);
  const int s = n - 2 * r;
  struct Expected {
    const char* label;
    FieldMatrix* target;
    int rows;
    int cols;
  };
  const std::vector<Expected> blocks = {
      {"A:", &d.A, s, s}, {"H:", &d.H, s, r}, {"B:", &d.B, r, r}};

  std::size_t next_block = 0;
  while (true) {
    while (i < lines.size() && skippable(lines[i].text)) ++i;
    if (i == lines.size()) break;
    const Line& label = lines[i];
    std::string_view t = trim(label.text, &lead);
    std::size_t which = next_block;
    while (which < blocks.size() && t != blocks[which].label) ++which;
    if (which == blocks.size()) {
      fail(label, lead, "expected block label " +
                            std::string(next_block < blocks.size() ? blocks[next_block].label : "(end)"));
    }
    for (std::size_t skipped = next_block; skipped < which; ++skipped) {
      if (blocks[skipped].rows * blocks[skipped].cols != 0) {
        fail(label, lead, std::string("missing block ") + blocks[skipped].label);
      }
    }
    const Expected& blk = blocks[which];
    if (blk.rows * blk.cols == 0) fail(label, lead, std::string("block ") + blk.label + " must be omitted (empty)");
    ++i;
    for (int row = 0; row < blk.rows; ++row) {
      while (i < lines.size() && skippable(lines[i].text)) ++i;
      if (i == lines.size()) {
        throw ParseError(text.size(), std::string("unexpected end of input in block ") + blk.label);
      }
      const Line& line = lines[i++];
      std::size_t col_start = 0;
      for (int col = 0; col < blk.cols; ++col) {
        std::size_t sep = line.text.find(';', col_start);
        const bool last = col + 1 == blk.cols;
        if (last) {
          if (sep != std::string_view::npos) fail(line, sep, "too many entries in row");
          sep = line.text.size();
        } else if (sep == std::string_view::npos) {
          fail(line, line.text.size(), "expected " + std::to_string(blk.cols) + " entries separated by ';'");
        }
        const std::string_view cell = line.text.substr(col_start, sep - col_start);
        try {
          (*blk.target)(row, col) = expr::parse(cell, n);
        } catch (const ParseError& e) {
          fail(line, col_start + e.offset(), "in block " + std::string(blk.label) + " entry (" +
                                                 std::to_string(row + 1) + "," +
                                                 std::to_string(col + 1) + "): " + e.detail());
        } catch (const Error& e) {
          throw Error(e.code(), "line " + std::to_string(line.number) + ": " + e.what());
        }
        col_start = sep + 1;
      }
    }
    next_block = which + 1;
  }
  for (std::size_t b = next_block; b < blocks.size(); ++b) {
    if (blocks[b].rows * blocks[b].cols != 0) {
      throw ParseError(text.size(), std::string("missing block ") + blocks[b].label);
    }
  }
  return d;
}

std::string format_walker(const WalkerData& d) {
  std::ostringstream out;
  out << "walker n=" << d.n << " r=" << d.r << "\n";
  auto block = [&](const char* label, const FieldMatrix& m) {
    if (m.empty()) return;
    out << label << "\n";
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        if (j) out << "; ";
        out << m(i, j).to_string();
      }
      out << "\n";
    }
  };
  block("A:", d.A);
  block("H:", d.H);
  block("B:", d.B);
  return out.str();
}

WalkerData load_walker(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_walker(ss.str());
}

void save_walker(const WalkerData& data, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io, "cannot write '" + path + "'");
  out << format_walker(data);
  if (!out) throw Error(Errc::io, "write to '" + path + "' failed");
}

}  // namespace nullpar::walker
