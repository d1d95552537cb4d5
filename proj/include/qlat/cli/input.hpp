#pragma once

// Line-oriented input documents:
//
//   # comment
//   dim 2
//   ray u = [1, 1]
//   proj p = [[1/2, 1/2], [1/2, 1/2]]
//   context x = p, q
//
// `dim` must precede every other declaration. Names are identifiers and must
// be unique across rays, projectors and contexts.

#include "qlat/exactlin.hpp"
#include "qlat/subspace.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qlat::cli {

/// Syntax error; line and column are 1-based.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& what, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A well-formed declaration that breaks a law (shape, Hermiticity, ...).
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& declaration, const std::string& law);

    const std::string& declaration() const noexcept { return declaration_; }

private:
    std::string declaration_;
};

struct NamedRay {
    std::string name;
    ExactMatrix vector;
};

struct NamedProjector {
    std::string name;
    ExactMatrix matrix;
};

struct NamedContext {
    std::string name;
    std::vector<std::string> members;
};

struct InputDocument {
    std::size_t ambient_dim = 0;
    std::vector<NamedRay> rays;
    std::vector<NamedProjector> projectors;
    std::vector<NamedContext> contexts;

    const NamedRay* find_ray(std::string_view name) const;
    const NamedProjector* find_projector(std::string_view name) const;
    const NamedContext* find_context(std::string_view name) const;

    /// Ray spans, then each projector's image and kernel, in declaration order.
    std::vector<Subspace> seeds() const;
};

InputDocument parse_input(std::string_view text);
InputDocument read_input_file(const std::string& path);

}  // namespace qlat::cli
