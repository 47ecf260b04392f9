#pragma once

#include <stdexcept>
#include <string>

namespace ocp {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Cover digraph has a directed cycle (antisymmetry would be violated).
class CycleError : public Error {
public:
    explicit CycleError(const std::string& what) : Error(what) {}
};

// Element label outside 0..d-1.
class IndexError : public Error {
public:
    explicit IndexError(const std::string& what) : Error(what) {}
};

// Connectivity of the empty set is undefined; callers must pass a nonempty set.
class EmptySetError : public Error {
public:
    explicit EmptySetError(const std::string& what) : Error(what) {}
};

class NotIdealError : public Error {
public:
    explicit NotIdealError(const std::string& what) : Error(what) {}
};

class NotAntichainError : public Error {
public:
    explicit NotAntichainError(const std::string& what) : Error(what) {}
};

class NotInOmegaError : public Error {
public:
    explicit NotInOmegaError(const std::string& what) : Error(what) {}
};

class NotInPsiError : public Error {
public:
    explicit NotInPsiError(const std::string& what) : Error(what) {}
};

// Input exceeds a configured enumeration or arithmetic guard.
class SizeError : public Error {
public:
    explicit SizeError(const std::string& what) : Error(what) {}
};

// A candidate inequality is violated by some vertex.
class NotValidError : public Error {
public:
    explicit NotValidError(const std::string& what) : Error(what) {}
};

// Malformed poset file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace ocp
