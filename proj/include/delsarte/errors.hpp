#pragma once

#include <stdexcept>
#include <string>

namespace delsarte {

/// Invalid input or out-of-contract request; CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A compile-time size cap was exceeded.
class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A mathematical guarantee failed to verify; CLI maps these to exit code 2.
class SoundnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EquipartitionViolation : public DomainError {
 public:
  EquipartitionViolation(int i, int j, int k, const std::string& detail)
      : DomainError("equipartition violated at (i=" + std::to_string(i) +
                    ", j=" + std::to_string(j) + ", k=" + std::to_string(k) + "): " + detail),
        i(i),
        j(j),
        k(k) {}
  int i, j, k;
};

class DegenerateScheme : public DomainError {
 public:
  explicit DegenerateScheme(int k)
      : DomainError("degenerate scheme: p_{1," + std::to_string(k) + "}^{" +
                    std::to_string(k + 1) + "} = 0"),
        k(k) {}
  int k;
};

class SpectralAmbiguity : public DomainError {
 public:
  using DomainError::DomainError;
};

class MultiplicityExtractionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularMatrix : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A candidate dual certificate failed one of its feasibility conditions.
class InfeasibleCertificate : public SoundnessError {
 public:
  enum class Condition { FhatNonnegative, FhatPositiveAtZero, FNonpositiveBeyondD };
  InfeasibleCertificate(Condition c, int index, const std::string& detail)
      : SoundnessError(detail), condition(c), index(index) {}
  Condition condition;
  int index;
};

class SandwichViolation : public SoundnessError {
 public:
  using SoundnessError::SoundnessError;
};

class Q1NotDecreasing : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoAdmissibleU : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotQPolynomial : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoValidRPerp : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoSignChange : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace delsarte
