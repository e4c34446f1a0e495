#ifndef SERREDEPTH_ERRORS_HPP
#define SERREDEPTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace serredepth {

/// Invalid user-supplied data (bad exponents, malformed expressions,
/// out-of-range indices). Maps to exit code 1 in the CLI.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computation would exceed the configured pattern-count ceiling.
/// Maps to exit code 3 in the CLI; distinct from any mathematical verdict.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed. The message carries the witness data.
/// Maps to exit code 2 in the CLI.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace serredepth

#endif
