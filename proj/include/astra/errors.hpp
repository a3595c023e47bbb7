#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace astra {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Some (state, control, disturbance) triple has no successor.
class BlockedState : public Error {
public:
    BlockedState(std::string state, std::string control, std::string disturbance)
        : Error("blocked state: no successor for (" + state + ", " + control + ", " +
                disturbance + ")"),
          state(std::move(state)),
          control(std::move(control)),
          disturbance(std::move(disturbance)) {}

    std::string state;
    std::string control;
    std::string disturbance;
};

class UndeclaredSymbol : public Error {
public:
    UndeclaredSymbol(const std::string& kind, std::string name)
        : Error("undeclared " + kind + " '" + name + "'"), name(std::move(name)) {}

    std::string name;
};

class DuplicateSymbol : public Error {
public:
    DuplicateSymbol(const std::string& kind, std::string name)
        : Error("duplicate " + kind + " '" + name + "'"), name(std::move(name)) {}

    std::string name;
};

class EmptyAlphabet : public Error {
public:
    explicit EmptyAlphabet(const std::string& what) : Error("empty set of " + what) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error("syntax error at position " + std::to_string(position) + ": " + message),
          position(position) {}

    std::size_t position;
};

class UnknownProposition : public Error {
public:
    explicit UnknownProposition(std::string name)
        : Error("unknown proposition '" + name + "'"), name(std::move(name)) {}

    std::string name;
};

/// An enumeration grew past its configured cap.
class ExplosionGuard : public Error {
public:
    explicit ExplosionGuard(std::size_t cap)
        : Error("enumeration exceeded cap of " + std::to_string(cap)), cap(cap) {}

    std::size_t cap;
};

/// Two successors of one SCR share a world state.
class UniquenessViolated : public Error {
public:
    UniquenessViolated(std::size_t plan_state, std::size_t first, std::size_t second)
        : Error("plan state " + std::to_string(plan_state) + " has successors " +
                std::to_string(first) + " and " + std::to_string(second) +
                " labeled by the same world state"),
          plan_state(plan_state) {}

    std::size_t plan_state;
};

/// A synthesized plan failed independent verification. Indicates a bug.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

/// T_fin construction exceeded the length bound: the controller does not win.
class CapExceeded : public Error {
public:
    explicit CapExceeded(std::size_t cap)
        : Error("outcome prefix longer than " + std::to_string(cap) +
                " without accepting recurrence"),
          cap(cap) {}

    std::size_t cap;
};

class InvalidPlan : public Error {
public:
    using Error::Error;
};

/// Malformed input file or document.
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace astra
