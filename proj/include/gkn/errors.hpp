#pragma once

#include <stdexcept>
#include <string>

namespace gkn {

struct IncompatibleField : std::runtime_error {
    explicit IncompatibleField(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedSpec : std::runtime_error {
    // `path` locates the offending item, e.g. "pairs[2].a" or "family f.pattern.point x1".
    std::string path;
    MalformedSpec(std::string path_, const std::string& what)
        : std::runtime_error(path_ + ": " + what), path(std::move(path_)) {}
};

struct UnknownVertex : std::runtime_error {
    explicit UnknownVertex(const std::string& id) : std::runtime_error("unknown vertex: " + id) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct BraidEquationViolation : std::runtime_error {
    explicit BraidEquationViolation(const std::string& what) : std::runtime_error(what) {}
};

struct GradingViolation : std::runtime_error {
    explicit GradingViolation(const std::string& what) : std::runtime_error(what) {}
};

struct NotDiagonal : std::runtime_error {
    explicit NotDiagonal(const std::string& what) : std::runtime_error(what) {}
};

struct NotATemplate : std::runtime_error {
    explicit NotATemplate(const std::string& what) : std::runtime_error(what) {}
};

struct MissingData : std::runtime_error {
    explicit MissingData(const std::string& what) : std::runtime_error(what) {}
};

struct NotConvex : std::runtime_error {
    explicit NotConvex(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroLambda : std::runtime_error {
    explicit ZeroLambda(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + what),
          line(line_), col(col_) {}
};

struct DataFileError : std::runtime_error {
    explicit DataFileError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gkn
