#pragma once

#include <stdexcept>
#include <string>

namespace planesep {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands do not share a variable context, or a point/polynomial arity mismatch.
struct arity_error : error {
    explicit arity_error(const std::string& what) : error(what) {}
};

/// Exact division requested on a non-divisor.
struct nondivisible_error : error {
    explicit nondivisible_error(const std::string& what) : error(what) {}
};

/// Zero polynomial where a nonzero one is required.
struct degenerate_input_error : error {
    explicit degenerate_input_error(const std::string& what) : error(what) {}
};

/// The instance falls outside the engine's supported class
/// (e.g. a blow-up center with irrational coordinates).
struct unsupported_instance_error : error {
    explicit unsupported_instance_error(const std::string& what) : error(what) {}
};

/// Scene-file problems. `code` is one of the documented diagnostic codes.
struct input_error : error {
    std::string code;
    input_error(std::string code_, const std::string& what)
        : error("[" + code_ + "] " + what), code(std::move(code_)) {}
};

/// A 1-dimensional boundary piece is not covered by any declared factor.
struct incomplete_factorization_error : error {
    explicit incomplete_factorization_error(const std::string& what) : error(what) {}
};

}  // namespace planesep
