#include "wlp/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace wlp {

std::string_view to_string(ProofStatus s) {
  switch (s) {
    case ProofStatus::Proved: return "PROVED";
    case ProofStatus::Computed: return "COMPUTED";
    case ProofStatus::Conjectured: return "CONJECTURED";
  }
  return "?";
}

std::string_view to_string(ConjectureCheck c) {
  switch (c) {
    case ConjectureCheck::Confirmed: return "confirmed";
    case ConjectureCheck::Mismatch: return "MISMATCH";
    case ConjectureCheck::Consistent: return "consistent";
    case ConjectureCheck::Counterexample: return "COUNTEREXAMPLE";
    case ConjectureCheck::Unchecked: return "unchecked";
  }
  return "?";
}

bool case_iii_fails_three_clause(const MaciParams& p) {
  const int a = p.alpha(), b = p.beta(), g = p.gamma();
  if (p.t() % 2 != 0) return false;
  const bool a_even = a % 2 == 0;
  return (a_even && a == b && (g - a) % 6 == 3) || (!a_even && a == b && (g - a) % 6 == 0) ||
         (!a_even && b == g && (g - a) % 3 == 0);
}

bool case_iii_fails_compact(const MaciParams& p) {
  return p.t() % 2 == 0 && p.sigma() % 2 == 1 && (p.alpha() == p.beta() || p.beta() == p.gamma());
}

Prediction predict(const MaciParams& p) {
  Prediction pr;
  pr.label = classify(p);
  switch (pr.label) {
    case CaseLabel::IA:
      pr.branch = "i(a): alpha = 0";
      break;
    case CaseLabel::IB:
      pr.branch = "i(b): alpha + beta + gamma not divisible by 3";
      break;
    case CaseLabel::IC:
      pr.branch = "i(c): gamma > 2(alpha + beta)";
      break;
    case CaseLabel::ID:
      pr.branch = "i(d): t < (alpha + beta + gamma)/3";
      break;
    case CaseLabel::Exceptional:
      pr.wlp_holds = false;
      pr.status = ProofStatus::Computed;
      pr.branch = "ii: exceptional tuple";
      break;
    case CaseLabel::CaseIII:
      if (case_iii_fails_compact(p)) {
        pr.wlp_holds = false;
        pr.status = ProofStatus::Proved;
        pr.branch = p.alpha() == p.beta() ? "iii: t even, sigma odd, alpha = beta"
                                          : "iii: t even, sigma odd, beta = gamma";
      } else {
        pr.wlp_holds = true;
        pr.status = ProofStatus::Conjectured;
        pr.branch = "iii: not (t even, sigma odd, alpha = beta or beta = gamma)";
      }
      break;
  }
  return pr;
}

std::size_t ScanReport::determinant_mismatches() const {
  std::size_t n = 0;
  for (const auto& row : rows) {
    for (const auto& r : row.results) n += r.agreement.has_value() && !*r.agreement;
  }
  return n;
}

std::size_t ScanReport::prediction_mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.check == ConjectureCheck::Mismatch; }));
}

std::size_t ScanReport::counterexamples() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const ScanRow& r) { return r.check == ConjectureCheck::Counterexample; }));
}

std::size_t ScanReport::case_iii_form_mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return !r.case_iii_forms_agree; }));
}

std::size_t ScanReport::hilbert_mismatches() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const ScanRow& r) { return !r.hilbert.resolution_matches_oracle; }));
}

bool ScanReport::has_hard_failure() const {
  return determinant_mismatches() > 0 || prediction_mismatches() > 0 || case_iii_form_mismatches() > 0 ||
         hilbert_mismatches() > 0;
}

ScanRow scan_one(const MaciParams& p, const std::vector<Characteristic>& characteristics) {
  ScanRow row{p, predict(p), std::nullopt, {}, ConjectureCheck::Unchecked, true, {}};

  const HilbertFunction h = hilbert_oracle(p);
  const UnimodalityReport u = unimodality(h);
  row.hilbert.socle_degree = h.socle_degree();
  row.hilbert.peak_start = u.peak_start;
  row.hilbert.peak_length = u.peak_length;
  row.hilbert.peaked_strictly_unimodal = u.peaked_strictly_unimodal;
  row.hilbert.resolution_matches_oracle = hilbert_from_resolution(p) == h;
  row.hilbert.resolution_minimal = free_resolution(p).minimal;

  if (row.prediction.label == CaseLabel::CaseIII) {
    row.case_iii_forms_agree = case_iii_fails_three_clause(p) == case_iii_fails_compact(p);
  }

  const bool criterion_applies = !matrix_criterion_violation(p).has_value();
  if (criterion_applies) row.determinant = det_M(p);

  for (const Characteristic c : characteristics) {
    CharacteristicResult res;
    res.characteristic = c;
    const WlpVerdict direct = wlp_direct(p, c);
    res.direct_holds = direct.holds;
    res.first_deficit_degree = direct.first_deficit_degree();
    if (row.determinant) {
      res.determinant_holds = c.is_zero() ? *row.determinant != 0
                                          : !mpz_divisible_ui_p(row.determinant->get_mpz_t(), c.value());
      res.agreement = *res.determinant_holds == res.direct_holds;
    }
    if (c.is_zero()) {
      const bool match = row.prediction.wlp_holds == res.direct_holds;
      if (row.prediction.status == ProofStatus::Conjectured) {
        row.check = match ? ConjectureCheck::Consistent : ConjectureCheck::Counterexample;
      } else {
        row.check = match ? ConjectureCheck::Confirmed : ConjectureCheck::Mismatch;
      }
    }
    row.results.push_back(std::move(res));
  }
  return row;
}

namespace {

void check_range(const IntRange& r, int min, const char* name) {
  if (r.lo < min || r.hi < min) {
    throw ParameterError(std::string("scan: ") + name + " range must satisfy values >= " + std::to_string(min) +
                         ", got " + std::to_string(r.lo) + ".." + std::to_string(r.hi));
  }
}

}  // namespace

ScanReport scan(const ScanBox& box, const ScanOptions& options) {
  check_range(box.alpha, 0, "alpha");
  check_range(box.beta, 0, "beta");
  check_range(box.gamma, 0, "gamma");
  check_range(box.t, 1, "t");
  if (options.characteristics.empty()) throw ParameterError("scan: at least one characteristic is required");

  std::vector<MaciParams> tuples;
  for (int a = box.alpha.lo; a <= box.alpha.hi; ++a) {
    for (int b = std::max(a, box.beta.lo); b <= box.beta.hi; ++b) {
      for (int g = std::max(b, box.gamma.lo); g <= box.gamma.hi; ++g) {
        for (int t = box.t.lo; t <= box.t.hi; ++t) {
          if (!MaciParams::validate(a, b, g, t)) tuples.emplace_back(a, b, g, t);
        }
      }
    }
  }

  ScanReport report;
  std::vector<std::optional<ScanRow>> slots(tuples.size());
  unsigned workers = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, tuples.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) {
      try {
        slots[i] = scan_one(tuples[i], options.characteristics);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  report.rows.reserve(slots.size());
  for (auto& s : slots) report.rows.push_back(std::move(*s));
  return report;
}

}  // namespace wlp
