#pragma once

#include <stdexcept>
#include <string>

namespace ttk {

// Two failure families, matching the CLI exit-code taxonomy:
//   invalid_input -> exit 2 (bad user data: malformed files, unknown names,
//                            shape mismatches, bound violations)
//   math_guard    -> exit 3 (a mathematical precondition failed: the input
//                            violated a theorem-level assumption)
// Each carries a short machine-readable kind ("NotEndotrivial", ...) plus a
// human message with the witness.

class invalid_input : public std::runtime_error {
public:
    invalid_input(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class math_guard : public std::runtime_error {
public:
    math_guard(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

} // namespace ttk
