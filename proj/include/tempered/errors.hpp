#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tempered {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hecke datum fails its invariants (e.g. central character off the unit circle).
struct InvalidDatumError : Error {
    using Error::Error;
};

// A Satake class violates the unitarity symmetry beyond tolerance.
struct InvalidClassError : Error {
    using Error::Error;
};

// Archimedean parameters violate the unitarity invariant.
struct InvalidParamsError : Error {
    using Error::Error;
};

// Iterative numerics (root polishing etc.) failed to reach the requested accuracy.
struct NumericError : Error {
    using Error::Error;
};

// Evaluation attempted at or inside a pole radius / divergence region.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation hit a pole of a gamma factor; carries the total pole order.
struct PoleError : Error {
    PoleError(const std::string& what, int order) : Error(what), order_(order) {}
    int order() const { return order_; }

  private:
    int order_;
};

// A prime required by the requested window is absent from the corpus.
struct IncompleteDataError : Error {
    IncompleteDataError(const std::string& what, std::int64_t p) : Error(what), prime_(p) {}
    std::int64_t prime() const { return prime_; }

  private:
    std::int64_t prime_;
};

// Corpus file errors carry the 1-based line number of the offending row.
struct CorpusError : Error {
    CorpusError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

struct ParseError : CorpusError {
    using CorpusError::CorpusError;
};

struct DuplicatePrimeError : CorpusError {
    using CorpusError::CorpusError;
};

struct ValidationError : CorpusError {
    using CorpusError::CorpusError;
};

}  // namespace tempered
