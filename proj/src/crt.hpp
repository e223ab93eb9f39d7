#pragma once

#include <gmpxx.h>

#include <vector>

#include "parker/modp.hpp"

namespace parker::detail {

/// Chinese remaindering of fixed-length coefficient vectors.
class CrtAccumulator {
 public:
  void reset() {
    residues_.clear();
    modulus_ = 1;
  }

  /// Adds residues modulo a new prime p; `values` has the same length each time.
  void add(const std::vector<modp::u64>& values, modp::u64 p) {
    if (residues_.empty()) residues_.assign(values.size(), 0);
    const mpz_class mp = p;
    mpz_class m_inv;
    const mpz_class m_mod = modulus_ % mp;
    mpz_invert(m_inv.get_mpz_t(), m_mod.get_mpz_t(), mp.get_mpz_t());
    for (std::size_t i = 0; i < values.size(); ++i) {
      mpz_class diff = mpz_class(static_cast<unsigned long>(values[i])) - residues_[i] % mp;
      diff = (diff * m_inv) % mp;
      if (diff < 0) diff += mp;
      residues_[i] += modulus_ * diff;
    }
    modulus_ *= mp;
  }

  const mpz_class& modulus() const { return modulus_; }

  /// Representatives in (-M/2, M/2].
  std::vector<mpz_class> symmetric() const {
    std::vector<mpz_class> out = residues_;
    const mpz_class half = modulus_ / 2;
    for (auto& c : out)
      if (c > half) c -= modulus_;
    return out;
  }

 private:
  std::vector<mpz_class> residues_;
  mpz_class modulus_ = 1;
};

}  // namespace parker::detail
