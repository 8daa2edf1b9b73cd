#pragma once

// Fan documents:
//
//   # comment
//   rank: 2
//   rays:
//     [1, 0]
//     [0, 1]
//     [-1, -1]
//   max_cones:
//     [0, 1]
//     [1, 2]
//     [0, 2]
//
// Whitespace is insignificant. Vectors may also follow a section header on
// the same line.

#include <cstddef>
#include <string>

#include "toric/errors.hpp"
#include "toric/fan.hpp"

namespace toric {

class FanParseError : public InputError {
public:
    enum class Kind { Syntax, Semantic };

    FanParseError(Kind kind, std::size_t line, std::string field, const std::string& message);

    Kind kind() const noexcept { return kind_; }
    /// 1-based; 0 when the error concerns the document as a whole.
    std::size_t line() const noexcept { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

/// Builds the Fan; geometric validity is left to validate_fan.
Fan parse_fan_file(const std::string& text);
std::string serialize_fan(const Fan& fan);

/// P1, P2, P3, P1xP1, F1, F2, F3, P112. Throws InputError otherwise.
Fan named_fan(const std::string& name);
const std::vector<std::string>& named_fan_names();

}  // namespace toric
