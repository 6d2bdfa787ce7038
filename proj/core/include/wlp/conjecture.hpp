#pragma once

// Predicted WLP behaviour for every parameter tuple, and batch scans that
// compare the prediction with the determinant criterion and with direct rank
// computations.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wlp/ideal.hpp"
#include "wlp/lefschetz.hpp"

namespace wlp {

enum class ProofStatus { Proved, Computed, Conjectured };

std::string_view to_string(ProofStatus s);

/// Predicted behaviour in characteristic zero.
struct Prediction {
  bool wlp_holds = true;
  ProofStatus status = ProofStatus::Proved;
  CaseLabel label = CaseLabel::IA;
  std::string branch;  // sub-condition that fired
};

Prediction predict(const MaciParams& p);

/// Case III failure condition in its original three-clause form; predict()
/// uses the compact form (t even, sigma odd, alpha = beta or beta = gamma).
bool case_iii_fails_three_clause(const MaciParams& p);
bool case_iii_fails_compact(const MaciParams& p);

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct ScanBox {
  IntRange alpha;
  IntRange beta;
  IntRange gamma;
  IntRange t;
};

struct ScanOptions {
  std::vector<Characteristic> characteristics{Characteristic::zero()};
  unsigned threads = 0;  // 0: hardware concurrency
};

enum class ConjectureCheck {
  Confirmed,       // PROVED/COMPUTED prediction matches the direct verdict
  Mismatch,        // PROVED/COMPUTED prediction contradicts the direct verdict
  Consistent,      // CONJECTURED prediction matches the direct verdict
  Counterexample,  // CONJECTURED prediction contradicts the direct verdict
  Unchecked,       // characteristic 0 not scanned
};

std::string_view to_string(ConjectureCheck c);

struct CharacteristicResult {
  Characteristic characteristic;
  std::optional<bool> determinant_holds;  // only where the matrix criterion applies
  bool direct_holds = false;
  std::optional<int> first_deficit_degree;
  std::optional<bool> agreement;  // determinant vs direct
};

struct HilbertSummary {
  int socle_degree = 0;
  int peak_start = 0;
  int peak_length = 0;
  bool peaked_strictly_unimodal = false;
  bool resolution_matches_oracle = false;
  bool resolution_minimal = false;
};

struct ScanRow {
  MaciParams params;
  Prediction prediction;
  std::optional<BigInt> determinant;
  std::vector<CharacteristicResult> results;  // in requested order
  ConjectureCheck check = ConjectureCheck::Unchecked;
  bool case_iii_forms_agree = true;
  HilbertSummary hilbert;
};

struct ScanReport {
  std::vector<ScanRow> rows;  // lexicographic in (alpha, beta, gamma, t)

  std::size_t determinant_mismatches() const;
  std::size_t prediction_mismatches() const;
  std::size_t counterexamples() const;
  std::size_t case_iii_form_mismatches() const;
  std::size_t hilbert_mismatches() const;

  /// Any determinant/direct disagreement, proved-prediction mismatch,
  /// case III form mismatch, or Hilbert route mismatch.
  bool has_hard_failure() const;
};

/// Every admissible tuple of the box, one row each. Ranges with lo > hi are
/// empty. Throws ParameterError for negative bounds, t below 1, or an empty
/// characteristic list.
ScanReport scan(const ScanBox& box, const ScanOptions& options = {});

ScanRow scan_one(const MaciParams& p, const std::vector<Characteristic>& characteristics);

}  // namespace wlp
