#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hauptq {

// Base for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed value construction (e.g. coefficient count does not match the
// valuation/precision window).
class construction_error : public error {
public:
    using error::error;
};

// Argument outside the operation's domain.
class domain_error : public error {
public:
    using error::error;
};

// Leading coefficient is not a unit (+1/-1), or the series is zero within
// its precision.
class non_invertible_error : public error {
public:
    using error::error;
};

// A coefficient was requested at or beyond the truncation bound.
class insufficient_precision_error : public error {
public:
    insufficient_precision_error(std::int64_t required, std::int64_t available)
        : error("insufficient precision: need coefficients below " + std::to_string(required) +
                ", have below " + std::to_string(available)),
          required_(required),
          available_(available) {}

    std::int64_t required() const noexcept { return required_; }
    std::int64_t available() const noexcept { return available_; }

private:
    std::int64_t required_;
    std::int64_t available_;
};

// Unknown catalog/registry name.
class catalog_error : public error {
public:
    using error::error;
};

// Lexical or syntax error in any of the text formats. Position is a 0-based
// character offset into the input.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position, std::vector<std::string> expected = {})
        : error(format(what, position, expected)), position_(position), expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string format(const std::string& what, std::size_t position,
                              const std::vector<std::string>& expected) {
        std::string msg = what + " at position " + std::to_string(position);
        if (!expected.empty()) {
            msg += ", expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) msg += " | ";
                msg += expected[i];
            }
        }
        return msg;
    }

    std::size_t position_;
    std::vector<std::string> expected_;
};

// Expression evaluation failed (offset mismatch, non-invertible divisor).
class evaluation_error : public error {
public:
    using error::error;
};

// An operation's documented precondition does not hold.
class precondition_error : public error {
public:
    using error::error;
};

} // namespace hauptq
