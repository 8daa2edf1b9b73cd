#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Malformed input: bad index, zero ray, dimension mismatch and the like.
/// `field` names the offending input item when there is one.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what, std::string field = {})
        : std::invalid_argument(what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Well-formed input that violates the hypotheses of an operation
/// (non-complete fan, non-Cartier divisor, non-simplicial fan, ...).
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace toric
