#pragma once

// Exception hierarchy used across the library. Every throw site prefixes the
// message with the function name, e.g. throw NotHermitian("hermitian_eigen: ...").

#include <stdexcept>
#include <string>

namespace rqi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- linear algebra ----
struct NotHermitian : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// ---- kinematics ----
struct SuperluminalVelocity : Error { using Error::Error; };
struct OffMassShell : Error { using Error::Error; };

// ---- quantum states ----
struct LabelMismatch : Error { using Error::Error; };
struct InvalidPartition : Error { using Error::Error; };
struct InvalidDensityMatrix : Error { using Error::Error; };

// ---- entanglement measures ----
struct InvalidAlpha : Error { using Error::Error; };

// ---- wave-packet quadrature ----
struct QuadratureTooCoarse : Error { using Error::Error; };

// ---- command line / configuration ----
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace rqi
