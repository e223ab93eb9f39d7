#include "parker/dessin.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "parker/error.hpp"

namespace parker {

Dessin::Dessin(Perm a, Perm b) : a_(std::move(a)), b_(std::move(b)), c_(inverse(compose(a_, b_))) {}

namespace {

struct RawPoint {
  std::size_t value;  // 1-based as written
  std::size_t offset;
};

struct RawCycles {
  std::vector<std::vector<RawPoint>> cycles;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void run() {
    skip_space();
    if (at_end()) throw ParseError("empty dessin text", pos_);
    while (!at_end()) {
      statement();
      if (!at_end() && !is_space(peek())) throw ParseError("expected whitespace between statements", pos_);
      skip_space();
    }
    if (!n_) throw ParseError("missing statement n=", pos_);
    if (!a_) throw ParseError("missing statement a=", pos_);
    if (!b_) throw ParseError("missing statement b=", pos_);
  }

  std::size_t n() const { return *n_; }
  const RawCycles& a() const { return *a_; }
  const RawCycles& b() const { return *b_; }

 private:
  static bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  void expect(char ch) {
    if (at_end() || peek() != ch) {
      throw ParseError(std::string("expected '") + ch + "'", pos_);
    }
    ++pos_;
  }

  std::size_t integer() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer too large", start);
    if (ec != std::errc() || ptr == text_.data() + pos_) throw ParseError("expected integer", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void statement() {
    const std::size_t start = pos_;
    const char key = peek();
    ++pos_;
    expect('=');
    switch (key) {
      case 'n':
        if (n_) throw ParseError("duplicate statement n=", start);
        n_ = integer();
        if (*n_ == 0) throw ParseError("degree must be at least 1", start + 2);
        break;
      case 'a':
        if (a_) throw ParseError("duplicate statement a=", start);
        a_ = cycles();
        break;
      case 'b':
        if (b_) throw ParseError("duplicate statement b=", start);
        b_ = cycles();
        break;
      default:
        throw ParseError(std::string("unknown statement '") + key + "'", start);
    }
  }

  RawCycles cycles() {
    RawCycles out;
    expect('(');
    if (!at_end() && peek() == ')') {
      ++pos_;
      return out;
    }
    for (;;) {
      std::vector<RawPoint> cycle;
      for (;;) {
        const std::size_t offset = pos_;
        cycle.push_back({integer(), offset});
        if (!at_end() && peek() == ' ') {
          while (!at_end() && peek() == ' ') ++pos_;
          continue;
        }
        expect(')');
        break;
      }
      out.cycles.push_back(std::move(cycle));
      if (at_end() || peek() != '(') break;
      ++pos_;
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<std::size_t> n_;
  std::optional<RawCycles> a_;
  std::optional<RawCycles> b_;
};

Perm build(std::size_t n, const RawCycles& raw, char name) {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> used(n, false);
  for (const auto& rc : raw.cycles) {
    std::vector<Point> cycle;
    for (const auto& pt : rc) {
      if (pt.value < 1 || pt.value > n) {
        throw InputError(std::string("in ") + name + "=: point " + std::to_string(pt.value) +
                         " out of range 1.." + std::to_string(n) + " at offset " +
                         std::to_string(pt.offset));
      }
      const Point x = static_cast<Point>(pt.value - 1);
      if (used[x]) {
        throw InputError(std::string("in ") + name + "=: point " + std::to_string(pt.value) +
                         " appears twice at offset " + std::to_string(pt.offset));
      }
      used[x] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  return Perm::from_cycles(n, cycles);
}

}  // namespace

Dessin parse_dessin(std::string_view text) {
  Parser parser(text);
  parser.run();
  Dessin d(build(parser.n(), parser.a(), 'a'), build(parser.n(), parser.b(), 'b'));
  if (!validate_connected(d)) throw InputError("dessin is not connected: <a, b> is not transitive");
  return d;
}

std::string to_dessin_string(const Dessin& d) {
  return "n=" + std::to_string(d.degree()) + " a=" + to_cycle_string(d.a()) +
         " b=" + to_cycle_string(d.b());
}

bool validate_connected(const Dessin& d) {
  const std::size_t n = d.degree();
  std::vector<bool> seen(n, false);
  std::vector<Point> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Point x = stack.back();
    stack.pop_back();
    for (Point y : {d.a()[x], d.b()[x]}) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

std::array<Partition, 3> passport(const Dessin& d) {
  return {cycle_type(d.a()), cycle_type(d.b()), cycle_type(d.c())};
}

std::size_t genus(const Dessin& d) {
  if (!validate_connected(d)) throw InputError("genus is defined for connected dessins only");
  const auto v = static_cast<long long>(cycle_count(d.a()) + cycle_count(d.b()));
  const auto e = static_cast<long long>(d.degree());
  const auto f = static_cast<long long>(cycle_count(d.c()));
  const long long euler = v - e + f;
  if (euler > 2 || (2 - euler) % 2 != 0) throw InternalError("invalid Euler characteristic");
  return static_cast<std::size_t>((2 - euler) / 2);
}

GroupTable monodromy_group(const Dessin& d, std::size_t cap) {
  const std::array<Perm, 2> gens{d.a(), d.b()};
  return enumerate_group(gens, cap);
}

}  // namespace parker
