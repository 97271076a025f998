#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frolicher/structure.hpp"

namespace frolicher {

/// Position of a token inside the parsed text.
struct SourceSpan {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    std::size_t offset = 0;
    std::size_t length = 0;
};

enum class ParseErrorKind {
    Syntax,
    UnknownGenerator,
    DegreeMismatch,
    DuplicateDefinition,
    BadScalar,
};

const char* parseErrorKindName(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message);

    ParseErrorKind kind() const { return kind_; }
    const SourceSpan& span() const { return span_; }

private:
    ParseErrorKind kind_;
    SourceSpan span_;
};

/// Non-fatal diagnostics, e.g. a term that wedges to zero.
struct LintWarning {
    SourceSpan span;
    std::string message;
};

struct ParsedStructureFile {
    StructureEquations equations;
    std::vector<LintWarning> warnings;
};

/// Parses the structure-equation file format:
///
///   generators 3        # complex dimension
///   d f3 = -f1^f2       # one line per nonzero differential
///
/// Terms are optionally scaled by a Gaussian rational ("1/2", "-3", "i",
/// "3/4i", "(1/2+3/4i)"); "~" marks a conjugate generator. Generators
/// without a "d fK" line are closed; duplicate lines are errors.
ParsedStructureFile parseStructureFile(std::string_view text);

/// Canonical text form; parse(serialize(eq)) reproduces eq exactly and the
/// output is deterministic (terms in canonical monomial order).
std::string serializeStructureFile(const StructureEquations& eq);

/// Parses a single wedge expression ("~f4^~f2", "f1^f2 - i*f3^f4", "0")
/// over m generators; wedges of any length are allowed here.
Form parseFormExpr(std::string_view text, int m);

/// One deterministic string per term, e.g. {"-f1^~f1", "f1^f2"}; joined
/// by " + "/" - " these make up the serialized expression.
std::vector<std::string> formTermStrings(const Form& a);
std::string formToString(const Form& a);

}  // namespace frolicher
