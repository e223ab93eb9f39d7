#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>

#include "parker/error.hpp"
#include "parker/spectrum.hpp"
#include "parker/zfactor.hpp"

namespace parker {

namespace {

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void add_check(SpectrumReport& r, std::string name, bool passed, std::string detail = {}) {
  r.checks.push_back({std::move(name), passed ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
}

void skip_check(SpectrumReport& r, std::string name, std::string why) {
  r.checks.push_back({std::move(name), CheckStatus::Skipped, std::move(why)});
}

// Conductors past this are not worth enumerating unit groups for.
constexpr std::uint64_t kMaxLConductor = 1u << 22;

// L when some eigenvalues escape Q(zeta_exponent): the factors that stay inside
// go through the Frobenius test as usual, and each escaping factor is placed
// exactly by its Kronecker character when it is quadratic. Anything else is
// left unlocated.
std::optional<Subfield> field_L_beyond(SpectrumReport& r, const std::vector<RatPoly>& factors) {
  RatPoly inside{1};
  for (const auto& f : factors)
    if (std::find(r.factors_outside_exponent_field.begin(), r.factors_outside_exponent_field.end(), f) ==
        r.factors_outside_exponent_field.end())
      inside = inside * f;
  Subfield l = field_L(inside, r.exponent, &r.frobenius);
  for (const auto& f : r.factors_outside_exponent_field) {
    if (f.degree() != 2) return std::nullopt;
    const auto q = quadratic_field(f, kMaxLConductor);
    if (!q || std::lcm(l.conductor, q->conductor) > kMaxLConductor) return std::nullopt;
    l = compositum(l, *q);
  }
  return l;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool SpectrumReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

const Check* SpectrumReport::find_check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

SpectrumReport analyze(const Dessin& d, const AnalysisConfig& config) {
  Stopwatch total, clock;
  SpectrumReport r;
  r.dessin = to_dessin_string(d);
  r.degree = d.degree();
  r.a = to_cycle_string(d.a());
  r.b = to_cycle_string(d.b());
  r.c = to_cycle_string(d.c());
  r.passport = passport(d);
  r.genus = genus(d);

  const GroupTable group = monodromy_group(d, config.group_cap);
  r.group_order = group.order();
  r.exponent = group.exponent();
  r.class_count = group.classes().size();
  const Caps caps{config.dense_cap, config.krylov_cap};
  r.strategy = resolve_strategy(config.strategy, r.group_order, caps);
  if (config.multiplicities && r.group_order > config.dense_cap)
    throw SizeError("dense_cap", config.dense_cap, r.group_order);
  r.timings_ms.push_back({"group", clock.lap_ms()});

  const AlgebraElement x = parker_element(d, group);
  r.support_size = x.support().size();
  r.pair_centralizer_order = x.support().at({group.index_of(d.a()), group.index_of(d.b())});
  const CheckOutcome commutes = verify_commutation(x);
  add_check(r, "commutes_with_diagonal", commutes.passed, commutes.detail);

  r.min_poly = min_poly_of_x(x, r.strategy, caps);
  if (r.group_order <= config.dense_cap && r.group_order <= config.krylov_cap) {
    const RatPoly other = r.strategy == Strategy::Dense ? min_poly_krylov(x, config.krylov_cap) : min_poly_dense(x, config.dense_cap);
    add_check(r, "dense_krylov_agree", other == r.min_poly,
              other == r.min_poly ? "" : "other route gave " + other.to_string());
  } else {
    skip_check(r, "dense_krylov_agree", "group order above dense_cap");
  }
  r.squarefree_min_poly = squarefree_part(r.min_poly);
  r.min_poly_is_squarefree = r.squarefree_min_poly == r.min_poly;
  r.distinct_eigenvalues = static_cast<std::size_t>(r.squarefree_min_poly.degree());
  r.rational_eigenvalues = integer_roots(r.squarefree_min_poly, r.group_order);
  r.timings_ms.push_back({"min_poly", clock.lap_ms()});

  try {
    r.field_L = field_L(r.squarefree_min_poly, r.exponent, &r.frobenius);
    r.field_L_ambient = r.exponent;
    add_check(r, "eigenvalues_in_exponent_field", true);
  } catch (const EigenvalueFieldError&) {
    const auto factors = factor_over_q(r.squarefree_min_poly);
    for (const auto& f : factors) {
      try {
        field_L(f, r.exponent);
      } catch (const EigenvalueFieldError&) {
        r.factors_outside_exponent_field.push_back(f);
      }
    }
    std::string witness;
    for (const auto& f : r.factors_outside_exponent_field) witness += (witness.empty() ? "" : ", ") + f.to_string();
    add_check(r, "eigenvalues_in_exponent_field", false,
              "roots of " + witness + " are not in Q(zeta_" + std::to_string(normalize_conductor(r.exponent)) + ")");
    r.frobenius.clear();
    r.field_L = field_L_beyond(r, factors);
    if (r.field_L) r.field_L_ambient = r.field_L->conductor;
  }
  if (r.field_L) r.galois_L = galois_group_of_L(*r.field_L);
  r.field_k = field_k_power_maps(group, d.a(), d.b());
  r.field_K_exponent = cyclotomic_field(r.exponent);
  r.field_K_order = cyclotomic_field(r.group_order);
  r.timings_ms.push_back({"fields", clock.lap_ms()});

  std::optional<CharacterTable> table;
  if (r.group_order <= config.chartab_cap) {
    table = character_table(group, config.chartab_cap);
    r.has_character_table = true;
    r.character_degrees = table->degrees();
    add_check(r, "character_orthogonality", rows_orthogonal(*table) && columns_orthogonal(*table));
    r.field_k_table = field_k_table(*table, d.a(), d.b());
    add_check(r, "k_methods_agree", *r.field_k_table == r.field_k,
              *r.field_k_table == r.field_k ? "" : "character values give " + describe(*r.field_k_table));
    r.predicted = predicted_eigenvalues(*table, d.a(), d.b());
    const CheckOutcome roots = verify_predicted_are_roots(r.min_poly, r.predicted);
    add_check(r, "predicted_are_roots", roots.passed, roots.detail);
  } else {
    const std::string why = "group order above chartab_cap";
    skip_check(r, "character_orthogonality", why);
    skip_check(r, "k_methods_agree", why);
    skip_check(r, "predicted_are_roots", why);
  }
  r.timings_ms.push_back({"character_table", clock.lap_ms()});

  if (r.field_L) {
    const auto tower = verify_tower(r.field_k, *r.field_L, r.field_K_exponent, r.field_K_order);
    add_check(r, "k_in_L", tower[0], tower[0] ? "" : describe(r.field_k) + " is not inside " + describe(*r.field_L));
    add_check(r, "L_in_K_exponent", tower[1], tower[1] ? "" : describe(*r.field_L) + " is not inside " + describe(r.field_K_exponent));
    const bool in_order = subfield_leq(*r.field_L, r.field_K_order);
    add_check(r, "L_in_K_order", in_order, in_order ? "" : describe(*r.field_L) + " is not inside " + describe(r.field_K_order));
  } else {
    const std::string why = "eigenvalues generate a field that could not be located in a cyclotomic field";
    skip_check(r, "k_in_L", "L not located: " + why);
    add_check(r, "L_in_K_exponent", false, why);
    add_check(r, "L_in_K_order", false, why);
  }
  add_check(r, "K_exponent_in_K_order", subfield_leq(r.field_K_exponent, r.field_K_order));

  if (config.multiplicities) {
    r.multiplicities = eigenvalue_multiplicities(x, r.squarefree_min_poly, config.dense_cap);
    r.timings_ms.push_back({"multiplicities", clock.lap_ms()});
  }
  r.timings_ms.push_back({"total", total.lap_ms()});
  return r;
}

}  // namespace parker
