#include "parker/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "parker/corpus.hpp"
#include "parker/error.hpp"

namespace parker {

namespace {

using nlohmann::ordered_json;

ordered_json poly_json(const RatPoly& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_string(c));
  return a;
}

ordered_json field_json(const Subfield& f) {
  return ordered_json{{"conductor", f.conductor}, {"subgroup", f.subgroup}, {"degree", f.degree}, {"text", describe(f)}};
}

std::string partition_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::string read_source(const DessinSource& source) {
  if (source.path && source.text) throw InputError("give either an input file or inline text, not both");
  if (source.text) return *source.text;
  if (!source.path) throw InputError("no dessin given (use --input or --inline)");
  if (*source.path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(*source.path);
  if (!in) throw InputError("cannot read '" + *source.path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

nlohmann::ordered_json report_to_json(const SpectrumReport& r) {
  ordered_json j;
  j["dessin"] = r.dessin;
  j["degree"] = r.degree;
  j["a"] = r.a;
  j["b"] = r.b;
  j["c"] = r.c;
  j["passport"] = {{"a", r.passport[0]}, {"b", r.passport[1]}, {"c", r.passport[2]}};
  j["genus"] = r.genus;
  j["group_order"] = r.group_order;
  j["exponent"] = r.exponent;
  j["class_count"] = r.class_count;
  j["support_size"] = r.support_size;
  j["pair_centralizer_order"] = r.pair_centralizer_order;
  j["strategy"] = to_string(r.strategy);
  j["min_poly"] = poly_json(r.min_poly);
  j["min_poly_text"] = r.min_poly.to_string();
  j["squarefree_min_poly"] = poly_json(r.squarefree_min_poly);
  j["min_poly_is_squarefree"] = r.min_poly_is_squarefree;
  j["distinct_eigenvalues"] = r.distinct_eigenvalues;
  ordered_json roots = ordered_json::array();
  for (const auto& z : r.rational_eigenvalues) roots.push_back(z.get_str());
  j["rational_eigenvalues"] = roots;
  j["field_k"] = field_json(r.field_k);
  j["field_k_table"] = r.field_k_table ? field_json(*r.field_k_table) : ordered_json(nullptr);
  j["field_L"] = r.field_L ? field_json(*r.field_L) : ordered_json(nullptr);
  j["field_L_ambient"] = r.field_L_ambient;
  ordered_json outside = ordered_json::array();
  for (const auto& f : r.factors_outside_exponent_field) outside.push_back(poly_json(f));
  j["factors_outside_exponent_field"] = outside;
  j["field_K"] = {{"exponent", field_json(r.field_K_exponent)}, {"order", field_json(r.field_K_order)}};
  j["galois_group_L"] = r.galois_L ? ordered_json{{"invariant_factors", r.galois_L->invariant_factors}, {"text", r.galois_L->to_string()}}
                                   : ordered_json(nullptr);
  ordered_json frob = ordered_json::array();
  for (const auto& f : r.frobenius) frob.push_back({{"residue", f.residue}, {"prime", f.prime}, {"splits", f.splits}});
  j["frobenius"] = frob;
  j["character_degrees"] = r.character_degrees;
  ordered_json pred = ordered_json::array();
  for (const auto& p : r.predicted) {
    ordered_json src = ordered_json::array();
    for (const auto& s : p.sources) src.push_back({{"row", s.row}, {"element", std::string(1, s.element)}});
    ordered_json coords = ordered_json::array();
    for (const auto& c : p.value.coords()) coords.push_back(rational_string(c));
    pred.push_back({{"value", p.value.to_string()}, {"conductor", p.value.conductor()}, {"coords", coords}, {"sources", src}});
  }
  j["predicted_eigenvalues"] = pred;
  if (r.multiplicities) {
    ordered_json mult = ordered_json::array();
    for (const auto& m : *r.multiplicities)
      mult.push_back({{"factor", poly_json(m.factor)},
                      {"root", m.root ? ordered_json(rational_string(*m.root)) : ordered_json(nullptr)},
                      {"multiplicity", m.multiplicity}});
    j["multiplicities"] = mult;
  }
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  j["checks"] = checks;
  ordered_json timings;
  for (const auto& [k, v] : r.timings_ms) timings[k] = v;
  j["timings_ms"] = timings;
  return j;
}

std::string render_text(const SpectrumReport& r) {
  std::ostringstream os;
  auto line = [&](const std::string& key, const std::string& value) { os << std::left << std::setw(22) << key << value << "\n"; };
  line("dessin", r.dessin);
  line("face permutation c", r.c);
  line("passport", partition_string(r.passport[0]) + " " + partition_string(r.passport[1]) + " " + partition_string(r.passport[2]));
  line("genus", std::to_string(r.genus));
  line("group", "order " + std::to_string(r.group_order) + ", exponent " + std::to_string(r.exponent) + ", " +
                    std::to_string(r.class_count) + " classes");
  line("support of x", std::to_string(r.support_size) + " pairs, coefficient " + std::to_string(r.pair_centralizer_order));
  line("strategy", to_string(r.strategy));
  line("minimal polynomial", r.min_poly.to_string());
  line("squarefree", std::string(r.min_poly_is_squarefree ? "yes" : "no") + ", " + std::to_string(r.distinct_eigenvalues) +
                         " distinct eigenvalues");
  std::string roots;
  for (const auto& z : r.rational_eigenvalues) roots += (roots.empty() ? "" : " ") + z.get_str();
  line("rational eigenvalues", roots.empty() ? "none" : roots);
  line("k", describe(r.field_k));
  if (r.field_L)
    line("L", describe(*r.field_L) + ", degree " + std::to_string(r.field_L->degree) + ", Galois group " + r.galois_L->to_string());
  else
    line("L", "not inside Q(zeta_" + std::to_string(r.group_order) + ")");
  for (const auto& f : r.factors_outside_exponent_field) line("outside Q(zeta_N)", f.to_string());
  line("K", describe(r.field_K_exponent) + " (exponent), " + describe(r.field_K_order) + " (|G|)");
  if (r.has_character_table) {
    std::string degs;
    for (auto d : r.character_degrees) degs += (degs.empty() ? "" : " ") + std::to_string(d);
    line("character degrees", degs);
  }
  for (const auto& p : r.predicted) {
    std::string src;
    for (const auto& s : p.sources) src += (src.empty() ? "" : " ") + std::string(1, s.element) + std::to_string(s.row);
    line("predicted eigenvalue", p.value.to_string() + "  [" + src + "]");
  }
  if (r.multiplicities)
    for (const auto& m : *r.multiplicities) line("multiplicity", m.factor.to_string() + " : " + std::to_string(m.multiplicity));
  os << "checks\n";
  for (const auto& c : r.checks)
    os << "  " << std::left << std::setw(8) << to_string(c.status) << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  std::ostringstream t;
  t << std::fixed << std::setprecision(1);
  for (const auto& [k, v] : r.timings_ms) t << (t.tellp() > 0 ? ", " : "") << k << " " << v;
  line("timings ms", t.str());
  return os.str();
}

std::string render(const SpectrumReport& r, OutputFormat format) {
  return format == OutputFormat::Machine ? report_to_json(r).dump(2) + "\n" : render_text(r);
}

int exit_code_for(const SpectrumReport& r) {
  const Check* in_field = r.find_check("eigenvalues_in_exponent_field");
  if (in_field && in_field->status == CheckStatus::Fail) return exit_code::kEigenvalueField;
  return r.all_passed() ? exit_code::kOk : exit_code::kInternal;
}

int cmd_analyze(const DessinSource& source, const Config& config, std::ostream& out, std::ostream& err) {
  try {
    const Dessin d = parse_dessin(read_source(source));
    const SpectrumReport r = analyze(d, config.analysis);
    out << render(r, config.format);
    const int code = exit_code_for(r);
    if (code == exit_code::kEigenvalueField)
      err << "error: eigenvalues outside Q(zeta_" << normalize_conductor(r.exponent) << "): "
          << r.find_check("eigenvalues_in_exponent_field")->detail << "\n";
    else if (code != exit_code::kOk)
      err << "error: a verification check failed\n";
    return code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_code::kInput;
  } catch (const SizeError& e) {
    err << "size error: " << e.what() << "\n";
    return exit_code::kSize;
  } catch (const EigenvalueFieldError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kEigenvalueField;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::kInternal;
  }
}

int cmd_selftest(const Config& config, const std::string& filter, std::ostream& out, std::ostream& err) {
  const auto entries = select_corpus(filter);
  if (entries.empty()) {
    err << "input error: no corpus entry matches '" << filter << "'\n";
    return exit_code::kInput;
  }
  std::vector<std::string> failing;
  out << std::left << std::setw(20) << "name" << std::setw(6) << "|G|" << std::setw(7) << "genus" << std::setw(6) << "deg"
      << std::setw(7) << "[k:Q]" << std::setw(7) << "[L:Q]" << std::setw(12) << "checks" << "notes\n";
  for (const CorpusEntry* e : entries) {
    std::vector<std::string> notes;
    std::string genus = "-", deg = "-", k_deg = "-", l_deg = "-", checks = "-";
    bool checks_ok = false;
    try {
      const SpectrumReport r = analyze(parse_dessin(e->text), config.analysis);
      genus = std::to_string(r.genus);
      deg = std::to_string(r.min_poly.degree());
      k_deg = std::to_string(r.field_k.degree);
      l_deg = r.field_L ? std::to_string(r.field_L->degree) : "?";
      std::size_t pass = 0, total = 0;
      for (const auto& c : r.checks) {
        if (c.status == CheckStatus::Skipped) continue;
        ++total;
        if (c.status == CheckStatus::Pass) ++pass;
        else notes.push_back(c.name + " failed");
      }
      checks = std::to_string(pass) + "/" + std::to_string(total);
      checks_ok = pass == total;
      // Regression against the recorded expectations.
      if (r.group_order != e->group_order) notes.push_back("expected |G| " + std::to_string(e->group_order));
      if (r.min_poly.degree() != static_cast<int>(e->min_poly_degree))
        notes.push_back("expected degree " + std::to_string(e->min_poly_degree));
      if (e->min_poly && !(RatPoly(std::vector<mpq_class>(e->min_poly->begin(), e->min_poly->end())) == r.min_poly))
        notes.push_back("minimal polynomial differs from the recorded one");
      if (describe(r.field_k) != e->field_k) notes.push_back("expected k = " + e->field_k);
      if ((r.field_L ? describe(*r.field_L) : "") != e->field_L)
        notes.push_back("expected L = " + (e->field_L.empty() ? std::string("none") : e->field_L));
      const Check* in_field = r.find_check("eigenvalues_in_exponent_field");
      if ((in_field->status == CheckStatus::Pass) != e->eigenvalues_in_exponent_field)
        notes.push_back("eigenvalue-field outcome differs from the recorded one");
    } catch (const std::exception& ex) {
      notes.push_back(ex.what());
    }
    if (!checks_ok || !notes.empty()) failing.push_back(e->name);
    std::string text;
    for (const auto& n : notes) text += (text.empty() ? "" : "; ") + n;
    out << std::left << std::setw(20) << e->name << std::setw(6) << e->group_order << std::setw(7) << genus << std::setw(6) << deg
        << std::setw(7) << k_deg << std::setw(7) << l_deg << std::setw(12) << checks << text << "\n";
  }
  out << entries.size() - failing.size() << "/" << entries.size() << " dessins pass every check\n";
  if (failing.empty()) return exit_code::kOk;
  std::string names;
  for (const auto& n : failing) names += (names.empty() ? "" : ", ") + n;
  err << "error: checks failed for " << names << "\n";
  return exit_code::kInternal;
}

}  // namespace parker
