#include "parker/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "parker/error.hpp"

namespace parker {

Perm::Perm(std::size_t degree) : images_(degree) {
  if (degree == 0) throw InputError("permutation degree must be at least 1");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw InputError("permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v]) throw InputError("image sequence is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree) {
        throw InputError("point " + std::to_string(x + 1) + " out of range 1.." +
                         std::to_string(degree));
      }
      if (used[x]) throw InputError("point " + std::to_string(x + 1) + " repeated in cycles");
      used[x] = true;
      p.images_[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw InputError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                     std::to_string(q.degree()));
  }
  std::vector<Point> r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p[q[i]];
  return Perm(std::move(r));
}

Perm inverse(const Perm& p) {
  std::vector<Point> r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[p[i]] = static_cast<Point>(i);
  return Perm(std::move(r));
}

Perm conjugate(const Perm& p, const Perm& g) { return compose(inverse(g), compose(p, g)); }

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<std::size_t> parts;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

std::size_t cycle_count(const Perm& p) { return cycle_type(p).size(); }

std::uint64_t element_order(const Perm& p) {
  std::uint64_t order = 1;
  for (std::size_t len : cycle_type(p)) order = std::lcm(order, static_cast<std::uint64_t>(len));
  return order;
}

std::string to_cycle_string(const Perm& p) {
  auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) os << ' ';
      os << cycle[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

}  // namespace parker

std::size_t std::hash<parker::Perm>::operator()(const parker::Perm& p) const noexcept {
  // FNV-1a over the image words
  std::uint64_t h = 1469598103934665603ULL;
  for (parker::Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}
