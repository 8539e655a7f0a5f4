#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamlab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates an operation's precondition
/// (out-of-range vertex, loop arc, overlapping vertex sets, ...).
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// Malformed digraph text; `line()` is 1-based.
class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_ = 0;
};

/// The hypothesis of a lemma-backed operation does not hold for the input.
class HypothesisUnmet : public Error {
   public:
    using Error::Error;
};

/// A lemma's hypothesis held but its promised object could not be found.
/// Any instance of this is either a bug or a counterexample to the lemma.
class LemmaViolation : public Error {
   public:
    using Error::Error;
};

/// A search space exceeds the exhaustive-enumeration cap.
class CapExceeded : public Error {
   public:
    using Error::Error;
};

/// Rejection sampling gave up before producing an acceptable sample.
class SamplingExhausted : public Error {
   public:
    using Error::Error;
};

/// Checkpoint file is unreadable, corrupt, or belongs to another campaign.
class CheckpointError : public Error {
   public:
    using Error::Error;
};

}  // namespace hamlab
