#include <setbound/parse.hpp>

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace setbound {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument("expected '" + std::string(1, c) + "' at position " +
                                  std::to_string(pos) + " in '" + text + "'");
    ++pos;
  }
  double number() {
    skip_ws();
    const char* start = text.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end == start)
      throw std::invalid_argument("expected a number at position " + std::to_string(pos) +
                                  " in '" + text + "'");
    pos += static_cast<size_t>(end - start);
    return v;
  }
};

Intervald read_interval(Cursor& cur) {
  cur.expect('[');
  const double lo = cur.number();
  cur.expect(',');
  const double hi = cur.number();
  cur.expect(']');
  return Intervald(lo, hi);
}

}  // namespace

Boxd parse_box(const std::string& text) {
  Cursor cur{text};
  std::vector<Intervald> dims;
  dims.push_back(read_interval(cur));
  while (!cur.done()) {
    cur.expect('x');
    dims.push_back(read_interval(cur));
  }
  Boxd box(static_cast<Eigen::Index>(dims.size()));
  for (size_t i = 0; i < dims.size(); ++i) box(static_cast<Eigen::Index>(i)) = dims[i];
  return box;
}

SafeSet parse_safe(const std::string& text) {
  Cursor cur{text};
  SafeSet s;
  for (;;) {
    if (cur.peek() == '*') {
      cur.expect('*');
      s.bounds.push_back(std::nullopt);
    } else {
      s.bounds.push_back(read_interval(cur));
    }
    if (cur.done()) break;
    cur.expect('x');
  }
  if (s.constrained_count() == 0)
    throw std::invalid_argument("safe set must constrain at least one dimension");
  return s;
}

}  // namespace setbound
