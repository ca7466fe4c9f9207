#ifndef MALCEV_REPORT_HPP
#define MALCEV_REPORT_HPP

#include "malcev/linalg.hpp"
#include "malcev/scalar.hpp"

#include <json.hpp>

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace malcev {

enum class Status { pass, fail, error };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

/// Concrete data reproducing a failed check: basis indices plus coefficient vectors.
struct Witness {
  std::vector<std::size_t> indices;
  std::vector<std::string> labels;
  std::vector<Vector> vectors;  // e.g. the nonzero defect element
};

struct Report {
  std::string check;
  Status status = Status::pass;
  std::optional<Witness> witness;
  std::string detail;
  std::size_t cases = 0;  // number of instances examined
  double millis = 0;

  bool passed() const { return status == Status::pass; }

  static Report pass(std::string check, std::size_t cases = 0, std::string detail = {}) {
    Report r;
    r.check = std::move(check);
    r.cases = cases;
    r.detail = std::move(detail);
    return r;
  }

  static Report fail(std::string check, Witness w, std::string detail = {}) {
    Report r;
    r.check = std::move(check);
    r.status = Status::fail;
    r.witness = std::move(w);
    r.detail = std::move(detail);
    return r;
  }
};

/// Adds wall-clock duration of a scope to a report's timing field.
class ScopedTimer {
 public:
  explicit ScopedTimer(Report& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ScopedTimer() {
    auto d = std::chrono::steady_clock::now() - start_;
    report_.millis += std::chrono::duration<double, std::milli>(d).count();
  }
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  Report& report_;
  std::chrono::steady_clock::time_point start_;
};

/// Runs a report-producing callable and records its wall-clock duration.
template <class F>
Report timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  Report r = f();
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline nlohmann::ordered_json vector_to_json(const Vector& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : v) arr.push_back(to_string(c));
  return arr;
}

/// One structured record; timing is omitted when include_timing is false.
inline nlohmann::ordered_json to_json(const Report& r, bool include_timing = true) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["cases"] = r.cases;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.witness) {
    nlohmann::ordered_json w;
    w["indices"] = r.witness->indices;
    if (!r.witness->labels.empty()) w["labels"] = r.witness->labels;
    auto vecs = nlohmann::ordered_json::array();
    for (const auto& v : r.witness->vectors) vecs.push_back(vector_to_json(v));
    w["vectors"] = vecs;
    j["witness"] = w;
  }
  if (include_timing) j["millis"] = r.millis;
  return j;
}

/// Error categories raised by the constructive procedures.
enum class ErrorKind {
  invalid_input,
  hypothesis_violated,
  lie_component,
  centroid_violation,
  not_closed,
  not_supercommutative,
  dimension_mismatch,
  iso_check_failed,
  not_central,
  singular_form,
  not_invariant,
  involution_invalid,
  not_j_admissible,
  not_symmetric,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::hypothesis_violated: return "HypothesisViolated";
    case ErrorKind::lie_component: return "LieComponent";
    case ErrorKind::centroid_violation: return "CentroidViolation";
    case ErrorKind::not_closed: return "NotClosed";
    case ErrorKind::not_supercommutative: return "NotSupercommutative";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::iso_check_failed: return "IsoCheckFailed";
    case ErrorKind::not_central: return "NotCentral";
    case ErrorKind::singular_form: return "SingularForm";
    case ErrorKind::not_invariant: return "NotInvariant";
    case ErrorKind::involution_invalid: return "InvolutionInvalid";
    case ErrorKind::not_j_admissible: return "NotJAdmissible";
    case ErrorKind::not_symmetric: return "NotSymmetric";
  }
  return "Unknown";
}

/// Mathematical failure of a constructive step, carrying the witness that exposes it.
class MalcevError : public std::runtime_error {
 public:
  MalcevError(ErrorKind kind, const std::string& message, Witness witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const Witness& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  Witness witness_;
};

}  // namespace malcev

#endif  // MALCEV_REPORT_HPP
