#include "parker/group.hpp"

#include <algorithm>
#include <numeric>

#include "parker/error.hpp"

namespace parker {

std::optional<std::size_t> GroupTable::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroupTable::index_of(const Perm& p) const {
  auto idx = find(p);
  if (!idx) throw InputError("permutation " + to_cycle_string(p) + " is not in the group");
  return *idx;
}

std::size_t GroupTable::mul(std::size_t i, std::size_t j) const {
  if (!mul_table_.empty()) return mul_table_[i * order() + j];
  return index_.at(compose(elements_[i], elements_[j]));
}

std::size_t GroupTable::pow(std::size_t i, std::int64_t k) const {
  const auto n = static_cast<std::int64_t>(orders_[i]);
  k %= n;
  if (k < 0) k += n;
  std::size_t result = 0;
  std::size_t base = i;
  for (auto e = static_cast<std::uint64_t>(k); e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

GroupTable enumerate_group(std::span<const Perm> gens, std::size_t cap) {
  if (gens.empty()) throw InputError("enumerate_group needs at least one generator");
  if (cap == 0) throw InputError("group cap must be positive");
  const std::size_t n = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != n) throw InputError("generators have different degrees");
  }

  GroupTable G;
  G.generators_.assign(gens.begin(), gens.end());
  G.elements_.push_back(Perm(n));
  G.index_.emplace(G.elements_.front(), 0);

  std::size_t layer_begin = 0;
  while (layer_begin < G.elements_.size()) {
    const std::size_t layer_end = G.elements_.size();
    std::vector<Perm> fresh;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& g : gens) {
        Perm h = compose(g, G.elements_[i]);
        if (G.index_.contains(h)) continue;
        G.index_.emplace(h, 0);
        fresh.push_back(std::move(h));
        if (G.index_.size() > cap) throw SizeError("group_cap", cap, G.index_.size());
      }
    }
    std::sort(fresh.begin(), fresh.end());
    for (auto& h : fresh) {
      G.index_[h] = G.elements_.size();
      G.elements_.push_back(std::move(h));
    }
    layer_begin = layer_end;
  }

  const std::size_t order = G.elements_.size();
  if (order <= kMulTableMaxOrder) {
    G.mul_table_.resize(order * order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j)
        G.mul_table_[i * order + j] =
            static_cast<std::uint32_t>(G.index_.at(compose(G.elements_[i], G.elements_[j])));
  }

  G.inverse_.resize(order);
  G.orders_.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    G.inverse_[i] = G.index_.at(inverse(G.elements_[i]));
    G.orders_[i] = element_order(G.elements_[i]);
    G.exponent_ = std::lcm(G.exponent_, G.orders_[i]);
  }

  // Conjugacy classes: orbits under conjugation by the generators.
  std::vector<std::size_t> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(G.index_.at(g));
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  G.class_of_.assign(order, kUnassigned);
  for (std::size_t start = 0; start < order; ++start) {
    if (G.class_of_[start] != kUnassigned) continue;
    const std::size_t cls = G.classes_.size();
    ConjugacyClass c;
    c.representative = start;
    c.members.push_back(start);
    G.class_of_[start] = cls;
    for (std::size_t k = 0; k < c.members.size(); ++k) {
      for (std::size_t g : gen_idx) {
        std::size_t y = G.conj(c.members[k], g);
        if (G.class_of_[y] == kUnassigned) {
          G.class_of_[y] = cls;
          c.members.push_back(y);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    G.classes_.push_back(std::move(c));
  }
  return G;
}

const std::vector<ConjugacyClass>& conjugacy_classes(const GroupTable& group) {
  return group.classes();
}

bool are_conjugate(const GroupTable& group, const Perm& p, const Perm& q) {
  return group.class_of(group.index_of(p)) == group.class_of(group.index_of(q));
}

std::uint64_t exponent(const GroupTable& group) { return group.exponent(); }

std::size_t centralizer_order(const GroupTable& group, std::size_t i) {
  std::size_t count = 0;
  for (std::size_t g = 0; g < group.order(); ++g)
    if (group.mul(i, g) == group.mul(g, i)) ++count;
  return count;
}

}  // namespace parker
