#ifndef QES_TYPES_HPP
#define QES_TYPES_HPP

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qes {

#ifdef QES_EXTENDED_PRECISION
using real_t = long double;
#else
using real_t = double;
#endif
using complex_t = std::complex<real_t>;

inline constexpr real_t pi = 3.141592653589793238462643383279502884L;

enum class ErrorKind {
  InvalidParameter,
  EmptySector,
  InvalidSector,
  SingularL,
  SingularPoint,
  DomainError,
  ContinuationFailure,
  CertificationFailure,
  DegenerateConfiguration,
  ConvergenceFailure,
  BracketFailure,
  ResolutionFailure,
  ComplexEigenvalue,
  ContourError,
  WronskianZero,
  MissingZeroMode,
  LevelMismatch,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::EmptySector: return "EmptySector";
    case ErrorKind::InvalidSector: return "InvalidSector";
    case ErrorKind::SingularL: return "SingularL";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ContinuationFailure: return "ContinuationFailure";
    case ErrorKind::CertificationFailure: return "CertificationFailure";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::ResolutionFailure: return "ResolutionFailure";
    case ErrorKind::ComplexEigenvalue: return "ComplexEigenvalue";
    case ErrorKind::ContourError: return "ContourError";
    case ErrorKind::WronskianZero: return "WronskianZero";
    case ErrorKind::MissingZeroMode: return "MissingZeroMode";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors caused by bad input rather than solver trouble.
  bool is_parameter_error() const noexcept {
    return kind_ == ErrorKind::InvalidParameter || kind_ == ErrorKind::InvalidSector ||
           kind_ == ErrorKind::SingularL || kind_ == ErrorKind::DomainError ||
           kind_ == ErrorKind::EmptySector || kind_ == ErrorKind::SingularPoint;
  }

 private:
  ErrorKind kind_;
};

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) throw Error(kind, msg);
}

enum class Method { BAE, Fock, BenderDunne, ODE };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::BAE: return "BAE";
    case Method::Fock: return "Fock";
    case Method::BenderDunne: return "BenderDunne";
    case Method::ODE: return "ODE";
  }
  return "Unknown";
}

struct Level {
  int index = 0;
  real_t energy = 0;
  real_t residual = 0;  // solver-specific defect at the reported energy
};

/// Sorted eigenvalue list plus whatever the producing solver wants to report.
struct Spectrum {
  std::vector<Level> levels;
  Method method = Method::ODE;
  std::map<std::string, double> diagnostics;

  std::vector<real_t> energies() const {
    std::vector<real_t> out;
    out.reserve(levels.size());
    for (const auto& l : levels) out.push_back(l.energy);
    return out;
  }
  std::size_t size() const { return levels.size(); }
};

inline Spectrum make_spectrum(const std::vector<real_t>& sorted, Method m) {
  Spectrum s;
  s.method = m;
  for (std::size_t i = 0; i < sorted.size(); ++i) s.levels.push_back({static_cast<int>(i), sorted[i]});
  return s;
}

}  // namespace qes

#endif
