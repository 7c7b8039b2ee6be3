#pragma once

#include <stdexcept>
#include <string>

namespace froblab {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live in different fields (Q vs GF(p), or different primes).
class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

// Shape errors: incompatible dimensions, bad permutation length, etc.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// Malformed input: bad scalar string, non-prime modulus, bad file contents.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// An algebra presentation violates associativity or the unit axiom.
class AlgebraAxiomError : public Error {
public:
    explicit AlgebraAxiomError(const std::string& msg) : Error(msg) {}
};

// A module/comodule representation violates its axioms.
class ModuleAxiomError : public Error {
public:
    explicit ModuleAxiomError(const std::string& msg) : Error(msg) {}
};

// The bilinear form attached to a counit candidate is singular.
class DegenerateForm : public Error {
public:
    explicit DegenerateForm(const std::string& msg) : Error(msg) {}
};

// Search for a nondegenerate counit exhausted its budget.  `definitive` is
// true only when the search space was enumerated completely (GF(p),
// exhaustive mode); over infinite fields the result is merely inconclusive.
class NotFrobeniusFound : public Error {
public:
    NotFrobeniusFound(const std::string& msg, bool definitive_)
        : Error(msg), definitive(definitive_) {}
    bool definitive;
};

// An internal cross-check failed; signals a bug, not a mathematical fact.
class VerificationFailed : public Error {
public:
    explicit VerificationFailed(const std::string& msg) : Error(msg) {}
};

// An operation was invoked outside the hypotheses it requires.
class HypothesisViolated : public Error {
public:
    explicit HypothesisViolated(const std::string& msg) : Error(msg) {}
};

// A requested computation exceeds the configured size cap.
class SizeLimitExceeded : public Error {
public:
    explicit SizeLimitExceeded(const std::string& msg) : Error(msg) {}
};

} // namespace froblab
