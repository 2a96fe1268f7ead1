#include <sstream>

#include "demroot/io.hpp"

namespace demroot {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_space_on_line() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
  }
  void skip_whitespace() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
      advance();
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError,
         "parse error at line " + std::to_string(line) + ", column " + std::to_string(col) +
             ": " + msg);
  }

  // integer token; accepts ASCII '-' and the UTF-8 minus sign
  Int integer() {
    skip_whitespace();
    if (done()) error("expected integer, found end of input");
    std::string digits;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      advance();
    } else if (static_cast<unsigned char>(peek()) == 0xe2 && pos + 2 < text.size() &&
               static_cast<unsigned char>(text[pos + 1]) == 0x88 &&
               static_cast<unsigned char>(text[pos + 2]) == 0x92) {
      negative = true;
      advance();
      advance();
      advance();
    }
    while (!done() && peek() >= '0' && peek() <= '9') {
      digits.push_back(peek());
      advance();
    }
    if (digits.empty()) error("expected integer");
    Int v(digits);
    return negative ? Int(-v) : v;
  }

  std::string rest_of_line() {
    std::string s;
    while (!done() && peek() != '\n') {
      s.push_back(peek());
      advance();
    }
    if (!done()) advance();
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r' || s.back() == '\t')) s.pop_back();
    size_t b = s.find_first_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b);
  }
};

InputDocument parse_one(Cursor& cur, InputDocument::Kind kind, int index) {
  Int rr = cur.integer();
  cur.skip_space_on_line();
  Int cc = cur.integer();
  require(rr > 0 && cc > 0 && rr < 4096 && cc < 4096, ErrorKind::ParseError,
          "parse error at line " + std::to_string(cur.line) + ": implausible header " +
              rr.get_str() + " " + cc.get_str());
  const int r = static_cast<int>(rr.get_si());
  const int c = static_cast<int>(cc.get_si());
  std::string comment = cur.rest_of_line();

  std::vector<IntVec> rows;
  for (int i = 0; i < r; ++i) {
    cur.skip_whitespace();
    IntVec row(c);
    for (int j = 0; j < c; ++j) {
      cur.skip_space_on_line();
      if (cur.done() || cur.peek() == '\n')
        fail(ErrorKind::RaggedMatrix, "row " + std::to_string(i + 1) + " at line " +
                                          std::to_string(cur.line) + " has fewer than " +
                                          std::to_string(c) + " entries");
      row[j] = cur.integer();
    }
    cur.skip_space_on_line();
    if (!cur.done() && cur.peek() != '\n')
      fail(ErrorKind::RaggedMatrix, "row " + std::to_string(i + 1) + " at line " +
                                        std::to_string(cur.line) + " has more than " +
                                        std::to_string(c) + " entries");
    rows.push_back(std::move(row));
  }

  InputDocument doc;
  doc.kind = kind;
  doc.label = comment.empty() ? "doc" + std::to_string(index) : comment;
  if (r <= c) {
    // rows are coordinates: dimension r, c points as columns
    doc.dim = r;
    for (int j = 0; j < c; ++j) {
      IntVec p(r);
      for (int i = 0; i < r; ++i) p[i] = rows[i][j];
      doc.points.push_back(std::move(p));
    }
  } else {
    doc.dim = c;
    doc.points = std::move(rows);
  }
  return doc;
}

}  // namespace

InputDocument parse_matrix_document(const std::string& text, InputDocument::Kind kind) {
  require(!text.empty(), ErrorKind::ParseError, "empty input");
  Cursor cur{text};
  InputDocument doc = parse_one(cur, kind, 0);
  cur.skip_whitespace();
  if (!cur.done()) cur.error("trailing data after the matrix");
  return doc;
}

std::vector<InputDocument> parse_batch(const std::string& text, InputDocument::Kind kind) {
  require(!text.empty(), ErrorKind::ParseError, "empty input");
  Cursor cur{text};
  std::vector<InputDocument> docs;
  cur.skip_whitespace();
  while (!cur.done()) {
    docs.push_back(parse_one(cur, kind, static_cast<int>(docs.size())));
    cur.skip_whitespace();
  }
  require(!docs.empty(), ErrorKind::ParseError, "no documents in input");
  return docs;
}

std::string emit_vertices(const LatticePolytope& P, const std::string& comment) {
  std::ostringstream os;
  os << P.vertices().size() << " " << P.dim();
  if (!comment.empty()) os << " " << comment;
  os << "\n";
  for (const auto& v : P.vertices()) {
    for (size_t j = 0; j < v.size(); ++j) {
      if (j) os << " ";
      os << v[j].get_str();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace demroot
