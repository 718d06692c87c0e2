// Exception hierarchy shared by every zeno module

#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

// Base class so callers can catch everything the library throws in one place.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (e.g. J(ω) for ω < 0).
class DomainError : public Error {
public:
    using Error::Error;
};

// φ_R(t) does not converge for this (s, β); the coherence factor B is exactly 0.
class DivergentKernel : public Error {
public:
    using Error::Error;
};

class QuadratureFailure : public Error {
public:
    QuadratureFailure(const std::string& what, double previous, double last);

    double previous_estimate() const noexcept { return previous_; }
    double last_estimate() const noexcept { return last_; }

private:
    double previous_;
    double last_;
};

// ε = Δ_r = 0: the free system Hamiltonian vanishes and Ω_r = 0.
class DegenerateSystem : public Error {
public:
    using Error::Error;
};

// Second-order perturbation theory has left its regime (s ≤ 0 or s noticeably > 1).
class OutOfRegime : public Error {
public:
    OutOfRegime(const std::string& what, double survival, double validity);

    double survival() const noexcept { return survival_; }
    double validity() const noexcept { return validity_; }

private:
    double survival_;
    double validity_;
};

// Oracle Hilbert-space dimension larger than the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Fock truncation dropped too much norm from a coherent state.
class TruncationError : public Error {
public:
    using Error::Error;
};

}  // namespace zeno
