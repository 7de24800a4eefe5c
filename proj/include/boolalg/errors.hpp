#pragma once

#include <stdexcept>
#include <string>

namespace boolalg {

// Base class of every error thrown by the engine.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. Positions are 1-based.
class syntax_error : public error {
public:
    syntax_error(const std::string& msg, int line, int column)
        : error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A term mentions a variable outside the context / assignment it is
// evaluated against.
class unbound_variable : public error {
public:
    explicit unbound_variable(const std::string& name)
        : error("unbound variable: " + name) {}
};

// Two operands built over different variable contexts were combined.
class context_mismatch : public error {
public:
    using error::error;
};

// An operation restricted to equations received a negated equation,
// or vice versa.
class polarity_error : public error {
public:
    using error::error;
};

// The canonical model does not exist: every constituent of the term is
// already forced empty, so the equation has no model over a nonempty
// universe.
class no_model : public error {
public:
    using error::error;
};

// A variable context exceeds the supported size (all the algorithms here
// are exponential in the number of variables).
class context_too_large : public error {
public:
    using error::error;
};

}  // namespace boolalg
