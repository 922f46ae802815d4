#pragma once

#include <stdexcept>
#include <string>

namespace pairsolve {

// A caller-visible contract violation (bad arguments, unmet solver
// precondition). Reported, never fatal.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A state the algorithms guarantee unreachable. Carries a reproducible
// instance dump so a failure can be replayed.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg, std::string dump = "")
        : std::logic_error(dump.empty() ? msg : msg + "\n-- instance dump --\n" + dump),
          dump_(std::move(dump)) {}

    const std::string& dump() const { return dump_; }

private:
    std::string dump_;
};

// Instance/solution text that does not follow the grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace pairsolve
