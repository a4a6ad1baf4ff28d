#pragma once

#include <stdexcept>
#include <string>

namespace ncqm {

// Base class for domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// No nondegenerate realization/representation exists at kappa*theta = hbar^2.
struct CriticalRegionError : Error {
    explicit CriticalRegionError(const std::string& msg = "parameters sit at the critical point kappa*theta = hbar^2")
        : Error(msg) {}
};

struct CutoffTooSmallError : Error {
    explicit CutoffTooSmallError(const std::string& msg = "Fock cutoff too small (need >= 6)") : Error(msg) {}
};

// The sl(2,R)/su(2) generator sets divide by kappa and are undefined at kappa = 0.
struct ZeroKappaGeneratorsError : Error {
    explicit ZeroKappaGeneratorsError(const std::string& msg = "group generators undefined at kappa = 0")
        : Error(msg) {}
};

struct NonHermitianInputError : Error {
    explicit NonHermitianInputError(const std::string& msg = "input matrix is not Hermitian") : Error(msg) {}
};

struct IrrepRegionMismatchError : Error {
    explicit IrrepRegionMismatchError(const std::string& msg = "irrep is not admissible in this parameter region")
        : Error(msg) {}
};

struct NotBoundRegimeError : Error {
    explicit NotBoundRegimeError(const std::string& msg = "spectral value lies in the oscillatory (scattering) regime")
        : Error(msg) {}
};

struct NoBoundStatesError : Error {
    explicit NoBoundStatesError(const std::string& msg = "no requested level converged") : Error(msg) {}
};

// theta = 0 has no coordinate lattice; the commutative well is out of scope.
struct ThetaZeroError : Error {
    explicit ThetaZeroError(const std::string& msg = "operation requires theta > 0") : Error(msg) {}
};

struct NotBoostableError : Error {
    explicit NotBoostableError(const std::string& msg = "|B| >= |A|: combination is not conjugate to a multiple of J0")
        : Error(msg) {}
};

struct DegenerateAxisError : Error {
    explicit DegenerateAxisError(const std::string& msg = "A = 0: rotation axis undefined") : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace ncqm
