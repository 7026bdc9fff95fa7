#pragma once

#include <optional>
#include <vector>

#include "canondeg/numerical_semigroup.hpp"

namespace canondeg {

/// Every invariant computed for one semigroup ring k[[H]].
struct DegreeReport {
  std::vector<int> generators;
  int type = 0;
  int multiplicity = 0;
  int frobenius = 0;
  int genus = 0;
  int n_of = 0;
  int cdeg = 0;
  int bideg = 0;
  /// Canonical index. Gorenstein rings report 1 (see rho_by_convention).
  int rho = 0;
  int e1 = 0;
  int s0 = 0;
  /// s0; 0 for Gorenstein, n for an n-AGL ring.
  int agl_level = 0;
  bool is_goto = false;
  bool is_nearly_gorenstein = false;
  bool is_far_flung = false;
  bool comparison_holds = true;
  /// λ(K^{j+1} / K^j) for j = 0 .. rho - 1.
  std::vector<int> power_steps;
  bool rho_by_convention = false;

  friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

struct CanonicalPowers {
  int rho = 0;
  std::vector<int> steps;
  int e1 = 0;
  int s0 = 0;
};

struct Comparison {
  int cdeg = 0;
  int bideg = 0;
  bool holds = true;
};

/// Invariants of the augmented ring R ⋉ m. cdeg and type are absent when R is
/// a DVR, bideg when R is Gorenstein.
struct AugmentedPrediction {
  std::optional<int> cdeg;
  std::optional<int> type;
  std::optional<int> bideg;
};

struct MmAnalysis {
  NumericalSemigroup overring;
  int cdeg = 0;
  int bideg = 0;
  int predicted_cdeg = 0;
  bool matches = false;
};

/// λ(K/H), checked against genus - n_of. Throws InternalMismatch.
int canonical_degree(const NumericalSemigroup& h);

/// λ(K**/K), checked against λ(H / tr K). Throws InternalMismatch.
int bicanonical_degree(const NumericalSemigroup& h);

/// Powers of the normalized canonical ideal until they stabilize.
CanonicalPowers canonical_powers(const NumericalSemigroup& h);

DegreeReport classify(const NumericalSemigroup& h);

Comparison comparison(const NumericalSemigroup& h);

AugmentedPrediction augmented_predictions(const DegreeReport& report);
AugmentedPrediction augmented_predictions(const NumericalSemigroup& h);

/// Invariants of A = (m : m) next to cdeg(A) = cdeg(R) + e0(m) - 2 r(R).
/// Throws IsFullMonoid for H = Z>=0.
MmAnalysis mm_analysis(const NumericalSemigroup& h);

}  // namespace canondeg
