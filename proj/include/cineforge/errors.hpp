#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cineforge {

enum class ErrorKind {
    syntax,
    schema,
    enum_token,
    interval,
    validation,
    provider,
    io,
    missing_floor,
    not_a_surface,
    unresolvable_mesh,
    zone_empty,
    duration_mismatch,
    out_of_range,
    empty_keywords,
    non_positive_size,
};

// Base for every pipeline error; the CLI maps kinds onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct SyntaxError : Error {
    explicit SyntaxError(std::string m) : Error(ErrorKind::syntax, std::move(m)) {}
};

struct SchemaError : Error {
    explicit SchemaError(std::string m) : Error(ErrorKind::schema, std::move(m)) {}
};

struct EnumError : Error {
    explicit EnumError(std::string m) : Error(ErrorKind::enum_token, std::move(m)) {}
};

struct IntervalError : Error {
    explicit IntervalError(std::string m) : Error(ErrorKind::interval, std::move(m)) {}
};

struct ValidationFailure : Error {
    explicit ValidationFailure(std::string m) : Error(ErrorKind::validation, std::move(m)) {}
};

struct ProviderError : Error {
    explicit ProviderError(std::string m) : Error(ErrorKind::provider, std::move(m)) {}
};

struct IoError : Error {
    explicit IoError(std::string m) : Error(ErrorKind::io, std::move(m)) {}
};

struct MissingFloorError : Error {
    explicit MissingFloorError(std::string m) : Error(ErrorKind::missing_floor, std::move(m)) {}
};

struct NotASurfaceError : Error {
    explicit NotASurfaceError(std::string m) : Error(ErrorKind::not_a_surface, std::move(m)) {}
};

struct UnresolvableMeshError : Error {
    explicit UnresolvableMeshError(std::string m) : Error(ErrorKind::unresolvable_mesh, std::move(m)) {}
};

struct ZoneEmptyError : Error {
    explicit ZoneEmptyError(std::string m) : Error(ErrorKind::zone_empty, std::move(m)) {}
};

struct DurationMismatchError : Error {
    explicit DurationMismatchError(std::string m) : Error(ErrorKind::duration_mismatch, std::move(m)) {}
};

struct OutOfRangeError : Error {
    explicit OutOfRangeError(std::string m) : Error(ErrorKind::out_of_range, std::move(m)) {}
};

struct EmptyKeywordsError : Error {
    explicit EmptyKeywordsError(std::string m) : Error(ErrorKind::empty_keywords, std::move(m)) {}
};

struct NonPositiveSizeError : Error {
    explicit NonPositiveSizeError(std::string m) : Error(ErrorKind::non_positive_size, std::move(m)) {}
};

} // namespace cineforge
