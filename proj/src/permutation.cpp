#include "burnside/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace burnside {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  if (images_.empty()) throw DegreeError("permutation degree must be >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size()) {
      throw Error("image " + std::to_string(v) + " out of range for degree " +
                  std::to_string(images_.size()));
    }
    if (seen[v]) {
      throw Error("image " + std::to_string(v) +
                  " appears twice; not a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw DegreeError("permutation degree must be >= 1");
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeError("compose: degree mismatch (" +
                      std::to_string(p.degree()) + " vs " +
                      std::to_string(q.degree()) + ")");
  }
  std::vector<std::uint32_t> images(p.degree());
  for (std::uint32_t i = 0; i < images.size(); ++i) images[i] = p(q(i));
  return Permutation(std::move(images));
}

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t'; }

// Grammar: CYCLES := "()" | CYCLE+ ; CYCLE := "(" INT (WS+ INT)* ")".
// Whitespace is additionally tolerated around parentheses and between
// cycles.
struct CycleScanner {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!done() && is_ws(peek())) ++pos;
  }

  std::uint32_t read_int() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected a point", pos);
    }
    std::size_t start = pos;
    std::uint64_t value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > 0xffffffffull) throw ParseError("point too large", start);
      ++pos;
    }
    return static_cast<std::uint32_t>(value);
  }
};

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw DegreeError("permutation degree must be >= 1");

  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  CycleScanner in{text};
  in.skip_ws();
  if (in.done()) throw ParseError("expected '('", in.pos);

  std::size_t cycle_count = 0;
  bool saw_empty = false;
  while (true) {
    in.skip_ws();
    if (in.done()) break;
    if (in.peek() != '(') throw ParseError("expected '('", in.pos);
    std::size_t open_pos = in.pos;
    ++in.pos;
    in.skip_ws();

    if (!in.done() && in.peek() == ')') {
      // "()" denotes the identity and must stand alone.
      ++in.pos;
      saw_empty = true;
      ++cycle_count;
      continue;
    }

    std::vector<std::uint32_t> cycle;
    while (true) {
      std::size_t int_pos = in.pos;
      std::uint32_t point = in.read_int();
      if (point >= degree) {
        throw ParseError("point " + std::to_string(point) +
                             " out of range for degree " +
                             std::to_string(degree),
                         int_pos);
      }
      if (used[point]) {
        throw ParseError("duplicate point " + std::to_string(point), int_pos);
      }
      used[point] = true;
      cycle.push_back(point);

      bool had_ws = !in.done() && is_ws(in.peek());
      in.skip_ws();
      if (in.done()) throw ParseError("unterminated cycle", open_pos);
      if (in.peek() == ')') {
        ++in.pos;
        break;
      }
      if (!had_ws) throw ParseError("expected whitespace or ')'", in.pos);
    }
    ++cycle_count;

    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }

  if (cycle_count == 0) throw ParseError("expected '('", in.pos);
  if (saw_empty && cycle_count > 1) {
    throw ParseError("\"()\" must stand alone", 0);
  }
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> visited(p.degree(), false);
  for (std::uint32_t start = 0; start < p.degree(); ++start) {
    if (visited[start] || p(start) == start) continue;
    out += '(';
    std::uint32_t i = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(i);
      visited[i] = true;
      i = p(i);
      first = false;
    } while (i != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace burnside
