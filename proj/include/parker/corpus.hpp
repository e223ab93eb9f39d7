#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace parker {

/// A reference dessin with independently computed expectations.
struct CorpusEntry {
  std::string name;
  std::string text;               // dessin input format
  std::vector<std::string> tags;  // e.g. "abelian", "dense", "scale"
  std::size_t group_order;
  std::size_t min_poly_degree;
  /// Ascending integer coefficients, when small enough to list.
  std::optional<std::vector<long>> min_poly;
  /// describe() of k and of L; L empty when it cannot be located.
  std::string field_k;
  std::string field_L;
  /// Whether every eigenvalue lies in Q(zeta_exponent).
  bool eigenvalues_in_exponent_field = true;
};

const std::vector<CorpusEntry>& corpus();

/// Entries whose name or one of whose tags contains `filter` (all when empty).
std::vector<const CorpusEntry*> select_corpus(const std::string& filter);

/// "n=m a=(1 2 ... m) b=(1 2 ... m)": the cyclic group Z_m with a = b a generator.
std::string cyclic_dessin(std::size_t m);

}  // namespace parker
