#include "parker/corpus.hpp"

namespace parker {

// Minimal polynomials below |G| = 60 come from a brute-force dense computation
// over Q (own closure, flattened matrix powers); fields from the factored
// polynomials. The two |G| >= 60 entries are pinned by degree and fields only;
// their polynomials were matched modulo a prime by a separate Krylov script,
// and the A5 fields against a symbolic factorization (square classes 5, 13, 61).
const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"trivial", "n=1 a=() b=()", {"abelian", "dense"}, 1, 1, std::vector<long>{-1, 1}, "Q", "Q"},
      {"z2", "n=2 a=(1 2) b=(1 2)", {"abelian", "dense"}, 2, 2, std::vector<long>{-4, 0, 1}, "Q", "Q"},
      {"z2_b_trivial", "n=2 a=(1 2) b=()", {"abelian", "dense"}, 2, 2, std::vector<long>{-4, 0, 1}, "Q", "Q"},
      {"z3", "n=3 a=(1 2 3) b=(1 2 3)", {"abelian", "dense"}, 3, 3, std::vector<long>{-27, 0, 0, 1}, "Q(zeta_3)", "Q(zeta_3)"},
      {"z3_inverse", "n=3 a=(1 2 3) b=(1 3 2)", {"abelian", "dense"}, 3, 3, std::vector<long>{-27, 0, 0, 1}, "Q(zeta_3)",
       "Q(zeta_3)"},
      {"z4", "n=4 a=(1 2 3 4) b=(1 2 3 4)", {"abelian", "dense"}, 4, 4, std::vector<long>{-256, 0, 0, 0, 1}, "Q(zeta_4)",
       "Q(zeta_4)"},
      {"z5", "n=5 a=(1 2 3 4 5) b=(1 2 3 4 5)", {"abelian", "dense"}, 5, 5, std::vector<long>{-3125, 0, 0, 0, 0, 1},
       "Q(zeta_5)", "Q(zeta_5)"},
      {"z6", "n=6 a=(1 3 5)(2 4 6) b=(1 4)(2 5)(3 6)", {"abelian", "dense"}, 6, 6,
       std::vector<long>{-46656, 0, 0, 0, 0, 0, 1}, "Q(zeta_3)", "Q(zeta_3)"},
      {"z2xz2", "n=4 a=(1 2)(3 4) b=(1 3)(2 4)", {"abelian", "dense"}, 4, 2, std::vector<long>{-16, 0, 1}, "Q", "Q"},
      {"s3", "n=3 a=(1 2 3) b=(1 2)", {"dense"}, 6, 5, std::vector<long>{0, 324, 0, -45, 0, 1}, "Q", "Q"},
      {"s3_transpositions", "n=3 a=(1 2) b=(2 3)", {"dense"}, 6, 5, std::vector<long>{0, 324, 0, -45, 0, 1}, "Q", "Q"},
      {"d4", "n=4 a=(1 2 3 4) b=(1 3)", {"dense"}, 8, 3, std::vector<long>{0, -64, 0, 1}, "Q", "Q"},
      {"q8", "n=8 a=(1 2 3 4)(5 6 7 8) b=(1 5 3 7)(2 8 4 6)", {"dense"}, 8, 3, std::vector<long>{0, -64, 0, 1}, "Q", "Q"},
      {"d5", "n=5 a=(1 2 3 4 5) b=(2 5)(3 4)", {"dense"}, 10, 7, std::vector<long>{0, -62500, 0, 8125, 0, -175, 0, 1},
       "Q(zeta_5)^<4>", "Q(zeta_5)^<4>"},
      {"a4", "n=4 a=(1 2 3) b=(1 2)(3 4)", {"dense"}, 12, 7, std::vector<long>{0, -110592, 0, 0, -1664, 0, 0, 1},
       "Q(zeta_3)", "Q(zeta_3)"},
      {"s4", "n=4 a=(1 2 3 4) b=(1 2)", {"dense"}, 24, 9,
       std::vector<long>{0, 84934656, 0, -7372800, 0, 141568, 0, -800, 0, 1}, "Q", "Q"},
      {"a5", "n=5 a=(1 2 3 4 5) b=(1 2 3)", {"krylov", "scale"}, 60, 41, std::nullopt, "Q(zeta_5)^<4>", "Q(zeta_3965)^<4,9,14>", false},
      {"s5", "n=5 a=(1 2 3 4 5) b=(1 2)", {"krylov", "scale"}, 120, 37, std::nullopt, "Q", "Q(zeta_24)^<5,19>", false},
  };
  return entries;
}

std::vector<const CorpusEntry*> select_corpus(const std::string& filter) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus()) {
    bool hit = filter.empty() || e.name.find(filter) != std::string::npos;
    for (const auto& t : e.tags) hit = hit || t.find(filter) != std::string::npos;
    if (hit) out.push_back(&e);
  }
  return out;
}

std::string cyclic_dessin(std::size_t m) {
  std::string cycle = "(";
  for (std::size_t i = 1; i <= m; ++i) cycle += (i > 1 ? " " : "") + std::to_string(i);
  cycle += ")";
  if (m == 1) cycle = "()";
  return "n=" + std::to_string(m) + " a=" + cycle + " b=" + cycle;
}

}  // namespace parker
