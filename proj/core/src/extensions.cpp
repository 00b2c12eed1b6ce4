#include "virasoro/extensions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace virasoro {

std::string to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::ZeroAlgebra: return "ZeroAlgebra";
    case VerdictTag::TrivialAlgebraC: return "TrivialAlgebraC";
    case VerdictTag::ExtensionOfMinimalModel: return "ExtensionOfMinimalModel";
    case VerdictTag::NoSuchAlgebra: return "NoSuchAlgebra";
    case VerdictTag::OutsideTheoremScope: return "OutsideTheoremScope";
  }
  return "unknown";
}

std::vector<KacEntry> integral_weight_entries(long p, long q) {
  const KacTable table = kac_table(p, q);
  std::vector<KacEntry> out;
  out.push_back(KacEntry{1, 1, Rational(0)});  // the vacuum label
  for (const KacEntry& e : table.entries) {
    if (e.r == 1 && e.s == 1) continue;
    if (is_integer(e.h) && sgn(e.h) > 0) out.push_back(e);
  }
  return out;
}

namespace {

CharacterSeries summed_character(const std::vector<std::pair<KacEntry, long>>& multiplicities,
                                 const std::vector<CharacterSeries>& label_characters) {
  QExpansion total = label_characters.front().series;  // vacuum, multiplicity 1
  std::string label = label_characters.front().label;
  for (std::size_t i = 1; i < multiplicities.size(); ++i) {
    const long m = multiplicities[i].second;
    if (m == 0) continue;
    total = add(total, scale(Rational(m), label_characters[i].series));
    label += " + " + std::to_string(m) + "*" + label_characters[i].label;
  }
  if (total.coefficient(0) != 1) {
    throw std::logic_error("extension candidate does not have a one-dimensional weight-0 space");
  }
  return CharacterSeries{std::move(label), std::move(total)};
}

}  // namespace

std::vector<ExtensionCandidate> scan_extensions(long p, long q, long max_total_multiplicity,
                                                int order) {
  const MinimalModel model = minimal_model(p, q);
  const std::vector<KacEntry> admissible = integral_weight_entries(p, q);

  std::vector<CharacterSeries> label_characters;
  label_characters.reserve(admissible.size());
  for (const KacEntry& e : admissible) {
    label_characters.push_back(irreducible_character(p, q, e.r, e.s, order));
  }

  std::vector<ExtensionCandidate> out;
  if (max_total_multiplicity < 1) return out;

  // Depth-first enumeration over the non-vacuum labels; the assignment
  // vector grows lexicographically, so the output order is canonical
  // regardless of how the search is executed.
  std::vector<long> assignment(admissible.size(), 0);
  assignment[0] = 1;
  const long budget = max_total_multiplicity - 1;

  auto emit = [&]() {
    std::vector<std::pair<KacEntry, long>> mults;
    long total = 0;
    for (std::size_t i = 0; i < admissible.size(); ++i) {
      mults.emplace_back(admissible[i], assignment[i]);
      total += assignment[i];
    }
    CharacterSeries character = summed_character(mults, label_characters);
    out.push_back(ExtensionCandidate{model, std::move(mults), std::move(character), total});
  };

  std::function<void(std::size_t, long)> walk = [&](std::size_t index, long remaining) {
    if (index == admissible.size()) {
      emit();
      return;
    }
    for (long m = 0; m <= remaining; ++m) {
      assignment[index] = m;
      walk(index + 1, remaining - m);
    }
    assignment[index] = 0;
  };
  walk(1, budget);

  std::sort(out.begin(), out.end(), [](const ExtensionCandidate& a, const ExtensionCandidate& b) {
    for (std::size_t i = 0; i < a.multiplicities.size(); ++i) {
      if (a.multiplicities[i].second != b.multiplicities[i].second) {
        return a.multiplicities[i].second < b.multiplicities[i].second;
      }
    }
    return false;
  });
  return out;
}

std::pair<Rational, Rational> tensor_invariants(
    std::span<const std::pair<Rational, Rational>> factors) {
  Rational c(0), c_tilde(0);
  for (const auto& [fc, fct] : factors) {
    c += fc;
    c_tilde += fct;
  }
  return {c, c_tilde};
}

ClassificationVerdict classify_voa(const Rational& c, const Rational& c_tilde) {
  ClassificationVerdict verdict;
  if (sgn(c_tilde) < 0) {
    verdict.tag = VerdictTag::ZeroAlgebra;
    verdict.note = "negative effective central charge: only the zero algebra has these invariants";
    return verdict;
  }
  if (c_tilde == 0) {
    verdict.tag = VerdictTag::TrivialAlgebraC;
    verdict.note = "effective central charge 0 forces the one-dimensional algebra C";
    return verdict;
  }
  if (c == c_tilde && c < 1) {
    if (auto pq = recognize_central_charge(c)) {
      verdict.tag = VerdictTag::ExtensionOfMinimalModel;
      verdict.model = pq;
      verdict.note = "c = c~ = c_{" + std::to_string(pq->first) + "," + std::to_string(pq->second) +
                     "}: a finite extension of the minimal-model vertex algebra by its "
                     "irreducible modules";
    } else {
      verdict.tag = VerdictTag::NoSuchAlgebra;
      verdict.note = "c = c~ in (0,1) forces c = c_{p,q} for coprime 1<p<q, and this value is "
                     "not of that form: no such algebra exists";
    }
    return verdict;
  }
  verdict.tag = VerdictTag::OutsideTheoremScope;
  verdict.note = "invariants outside the c = c~ < 1 regime: no classification is asserted";
  return verdict;
}

}  // namespace virasoro
