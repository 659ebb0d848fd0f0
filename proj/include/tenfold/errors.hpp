#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tenfold {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: shape mismatches, bad files, out-of-range arguments.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A BlochModel that violates Hermitian closure H_{-R} = H_R^dagger.
class ModelError : public InvalidArgument {
 public:
  ModelError(const std::string& what, std::vector<int> displacement = {})
      : InvalidArgument(what), displacement_(std::move(displacement)) {}
  const std::vector<int>& displacement() const { return displacement_; }

 private:
  std::vector<int> displacement_;
};

class GapClosed : public Error {
 public:
  GapClosed(std::vector<double> k, double gap)
      : Error(describe(k, gap)), k_(std::move(k)), gap_(gap) {}
  const std::vector<double>& k() const { return k_; }
  double gap() const { return gap_; }

 private:
  static std::string describe(const std::vector<double>& k, double gap) {
    std::ostringstream os;
    os << "gap closed at k=(";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << ") gap=" << gap;
    return os.str();
  }
  std::vector<double> k_;
  double gap_;
};

class InconsistentFilling : public Error {
 public:
  using Error::Error;
};

class NonUnitary : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// U*conj(U) is neither +I nor -I.
class InvalidRepresentation : public Error {
 public:
  using Error::Error;
};

class ClassificationConflict : public Error {
 public:
  using Error::Error;
};

class SymmetryViolation : public Error {
 public:
  using Error::Error;
};

class ChiralViolation : public SymmetryViolation {
 public:
  using SymmetryViolation::SymmetryViolation;
};

/// Link overlap too small to define a lattice gauge field; refine the grid.
class SingularLink : public Error {
 public:
  using Error::Error;
};

/// Phase steps too large to resolve the branch of a logarithm; refine the grid.
class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

class NotAntisymmetric : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DegenerateWilsonPhases : public Error {
 public:
  using Error::Error;
};

/// The linear interpolation path cannot be flattened: its spectrum reaches zero.
class Obstruction : public Error {
 public:
  Obstruction(double k, double theta, double gap, const std::string& why)
      : Error(describe(k, theta, gap, why)), k_(k), theta_(theta), gap_(gap), why_(why) {}
  double k() const { return k_; }
  double theta() const { return theta_; }
  double gap() const { return gap_; }
  const std::string& why() const { return why_; }

 private:
  static std::string describe(double k, double theta, double gap, const std::string& why) {
    std::ostringstream os;
    os << "obstruction at k=" << k << " theta=" << theta << " gap=" << gap << " (" << why << ")";
    return os.str();
  }
  double k_, theta_, gap_;
  std::string why_;
};

class EndpointAsymmetry : public Error {
 public:
  EndpointAsymmetry(std::string endpoint, double residual)
      : Error("endpoint theta=" + endpoint + " breaks the symmetry, residual=" +
              std::to_string(residual)),
        endpoint_(std::move(endpoint)),
        residual_(residual) {}
  const std::string& endpoint() const { return endpoint_; }
  double residual() const { return residual_; }

 private:
  std::string endpoint_;
  double residual_;
};

}  // namespace tenfold
