#pragma once

#include <stdexcept>
#include <string>

namespace quiverlab {

enum class Errc {
    Syntax,
    UnknownVertex,
    UnknownArrow,
    DuplicateName,
    NotComposable,
    NonParallel,
    Inhomogeneous,
    InvalidRelation,
    EmptyAlgebra,
    InfiniteDimensional,
    NotMonomial,
    InvalidWord,
    ShapeMismatch,
    Decomposable,
    IncompleteList,
    DirectednessViolated,
    MultiplicityUnsupported,
    NotPDS,
    OutOfRange,
    InvalidSpec,
    Indeterminate,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error(Errc::Syntax, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                  ": " + what),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace quiverlab
