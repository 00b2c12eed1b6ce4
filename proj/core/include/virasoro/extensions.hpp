#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "virasoro/characters.hpp"
#include "virasoro/minimal_models.hpp"

namespace virasoro {

// A direct sum of irreducible modules that passes the necessary conditions
// for extending the vacuum module of the (p, q) model: vacuum multiplicity
// exactly 1, every other summand of positive integral weight. Candidates
// are necessary-condition only; closure of vertex operations is not checked.
struct ExtensionCandidate {
  MinimalModel model;
  // One entry per admissible label, in table order (vacuum first); zero
  // multiplicities are kept so the table schema is stable.
  std::vector<std::pair<KacEntry, long>> multiplicities;
  CharacterSeries character;  // multiplicity-weighted sum of characters
  long total_multiplicity = 0;
};

enum class VerdictTag {
  ZeroAlgebra,
  TrivialAlgebraC,
  ExtensionOfMinimalModel,
  NoSuchAlgebra,
  OutsideTheoremScope,
};

std::string to_string(VerdictTag tag);

struct ClassificationVerdict {
  VerdictTag tag = VerdictTag::OutsideTheoremScope;
  std::optional<std::pair<long, long>> model;  // set for ExtensionOfMinimalModel
  std::string note;                            // human-readable justification
};

// Kac entries whose weight is a positive integer, preceded by the vacuum
// entry (r = s = 1, h = 0). These are the only admissible direct summands.
std::vector<KacEntry> integral_weight_entries(long p, long q);

// All multiplicity assignments over integral_weight_entries with vacuum
// multiplicity 1 and total multiplicity <= max_total_multiplicity, each with
// its summed character truncated at the given order. Deterministically
// sorted by multiplicity vector.
std::vector<ExtensionCandidate> scan_extensions(long p, long q, long max_total_multiplicity,
                                                int order);

// Componentwise sums (sum c_i, sum c~_i) over tensor factors.
std::pair<Rational, Rational> tensor_invariants(
    std::span<const std::pair<Rational, Rational>> factors);

// Verdict for a hypothetical simple, rational, C2-cofinite algebra with
// invariants (c, c_tilde):
//   c~ < 0                         -> ZeroAlgebra
//   c~ = 0                         -> TrivialAlgebraC
//   c = c~ in (0,1), c recognized  -> ExtensionOfMinimalModel(p, q)
//   c = c~ in (0,1), unrecognized  -> NoSuchAlgebra
//   otherwise                      -> OutsideTheoremScope
ClassificationVerdict classify_voa(const Rational& c, const Rational& c_tilde);

}  // namespace virasoro
