#include "frolicher/structfile.hpp"

#include <cctype>
#include <map>

namespace frolicher {

const char* parseErrorKindName(ParseErrorKind kind)
{
    switch (kind) {
        case ParseErrorKind::Syntax: return "syntax";
        case ParseErrorKind::UnknownGenerator: return "unknown-generator";
        case ParseErrorKind::DegreeMismatch: return "degree-mismatch";
        case ParseErrorKind::DuplicateDefinition: return "duplicate-definition";
        case ParseErrorKind::BadScalar: return "bad-scalar";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message)
    : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
                         parseErrorKindName(kind) + ": " + message),
      kind_(kind),
      span_(span)
{
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return eof() ? '\0' : text[pos]; }

    void advance()
    {
        if (eof())
            return;
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        }
        else {
            ++column;
        }
        ++pos;
    }

    SourceSpan mark() const { return SourceSpan{line, column, pos, 1}; }

    SourceSpan spanFrom(const SourceSpan& start) const
    {
        SourceSpan s = start;
        s.length = pos > start.offset ? pos - start.offset : 1;
        return s;
    }

    /// Spaces, tabs, carriage returns and comments; never crosses a newline.
    void skipInline()
    {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            }
            else if (c == '#') {
                while (!eof() && peek() != '\n')
                    advance();
            }
            else {
                break;
            }
        }
    }

    void skipBlank()
    {
        skipInline();
        while (!eof() && peek() == '\n') {
            advance();
            skipInline();
        }
    }

    bool atLineEnd()
    {
        skipInline();
        return eof() || peek() == '\n';
    }
};

[[noreturn]] void fail(ParseErrorKind kind, SourceSpan span, const std::string& message)
{
    throw ParseError(kind, span, message);
}

std::string readWord(Cursor& cur)
{
    std::string word;
    while (!cur.eof() && std::isalpha(static_cast<unsigned char>(cur.peek())))
        word.push_back(cur.text[cur.pos]), cur.advance();
    return word;
}

long readInt(Cursor& cur)
{
    SourceSpan start = cur.mark();
    std::string digits;
    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek())))
        digits.push_back(cur.text[cur.pos]), cur.advance();
    if (digits.empty())
        fail(ParseErrorKind::Syntax, start, "expected an integer");
    if (digits.size() > 9)
        fail(ParseErrorKind::Syntax, cur.spanFrom(start), "integer literal too large");
    return std::stol(digits);
}

// ratio := INT ('/' INT)?; rejects floats and zero denominators
mpq_class readRatio(Cursor& cur)
{
    SourceSpan start = cur.mark();
    long num = readInt(cur);
    if (cur.peek() == '.')
        fail(ParseErrorKind::BadScalar, cur.spanFrom(start),
             "floating-point literals are not allowed; use exact rationals");
    if (cur.peek() != '/')
        return mpq_class(num);
    cur.advance();
    long den = readInt(cur);
    if (den == 0)
        fail(ParseErrorKind::BadScalar, cur.spanFrom(start), "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// component := ratio 'i'? | 'i'; the sign is consumed by the caller
void readComponent(Cursor& cur, mpq_class& re, mpq_class& im, bool& haveRe, bool& haveIm, int sign)
{
    SourceSpan start = cur.mark();
    mpq_class value(1);
    bool sawRatio = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        value = readRatio(cur);
        sawRatio = true;
    }
    if (cur.peek() == 'i') {
        cur.advance();
        if (haveIm)
            fail(ParseErrorKind::BadScalar, cur.spanFrom(start), "two imaginary parts");
        im = sign < 0 ? mpq_class(-value) : value;
        haveIm = true;
        return;
    }
    if (!sawRatio)
        fail(ParseErrorKind::BadScalar, start, "expected a rational or 'i'");
    if (haveRe)
        fail(ParseErrorKind::BadScalar, cur.spanFrom(start), "two real parts");
    re = sign < 0 ? mpq_class(-value) : value;
    haveRe = true;
}

bool startsScalar(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == '(' || c == '-' ||
           c == '+';
}

Scalar readScalar(Cursor& cur)
{
    SourceSpan start = cur.mark();
    mpq_class re(0), im(0);
    bool haveRe = false, haveIm = false;
    if (cur.peek() == '(') {
        cur.advance();
        cur.skipInline();
        do {
            int sign = 1;
            if (cur.peek() == '+' || cur.peek() == '-') {
                sign = cur.peek() == '-' ? -1 : 1;
                cur.advance();
                cur.skipInline();
            }
            readComponent(cur, re, im, haveRe, haveIm, sign);
            cur.skipInline();
        } while (cur.peek() == '+' || cur.peek() == '-');
        if (cur.peek() != ')')
            fail(ParseErrorKind::BadScalar, cur.spanFrom(start), "expected ')' in scalar");
        cur.advance();
    }
    else {
        int sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.peek() == '-' ? -1 : 1;
            cur.advance();
        }
        readComponent(cur, re, im, haveRe, haveIm, sign);
    }
    return Scalar(re, im);
}

struct GeneratorRef {
    int index = 0;
    bool conjugated = false;
    SourceSpan span;
};

GeneratorRef readGenerator(Cursor& cur, int m)
{
    SourceSpan start = cur.mark();
    GeneratorRef gen;
    if (cur.peek() == '~') {
        gen.conjugated = true;
        cur.advance();
    }
    if (cur.peek() != 'f')
        fail(ParseErrorKind::Syntax, start, "expected a generator like f1 or ~f1");
    cur.advance();
    long index = readInt(cur);
    gen.span = cur.spanFrom(start);
    if (index < 1 || index > m)
        fail(ParseErrorKind::UnknownGenerator, gen.span,
             "generator index " + std::to_string(index) + " outside 1.." + std::to_string(m));
    gen.index = static_cast<int>(index);
    return gen;
}

// term := [scalar '*'?]? GEN ('^' GEN)*; factor count checked by the caller
struct Term {
    Form form;
    SourceSpan span;
    std::size_t factorCount = 0;
    bool wedgedToZero = false;
};

Term readTerm(Cursor& cur, int m, int sign)
{
    SourceSpan start = cur.mark();
    Scalar coeff(sign);
    if (cur.peek() != 'f' && cur.peek() != '~' && startsScalar(cur.peek())) {
        coeff = coeff * readScalar(cur);
        cur.skipInline();
        if (cur.peek() == '*') {
            cur.advance();
            cur.skipInline();
        }
    }
    std::vector<std::pair<int, bool>> factors;
    GeneratorRef first = readGenerator(cur, m);
    factors.emplace_back(first.index, first.conjugated);
    cur.skipInline();
    while (cur.peek() == '^') {
        cur.advance();
        cur.skipInline();
        GeneratorRef gen = readGenerator(cur, m);
        factors.emplace_back(gen.index, gen.conjugated);
        cur.skipInline();
    }
    Term term{Form::wedgeOfGenerators(m, factors) * coeff, cur.spanFrom(start), factors.size(),
              false};
    term.wedgedToZero = term.form.isZero() && !coeff.isZero();
    return term;
}

// expr := "0" | ['-'|'+'] term (('+'|'-') term)*
Form readExpr(Cursor& cur, int m, bool exactlyTwoFactors, std::vector<LintWarning>* warnings)
{
    cur.skipInline();
    if (cur.peek() == '0') {
        Cursor probe = cur;
        probe.advance();
        probe.skipInline();
        char next = probe.peek();
        if (next == '\n' || next == '\0') {
            cur = probe;
            return Form(m);
        }
    }
    Form result(m);
    int sign = 1;
    if (cur.peek() == '-' || cur.peek() == '+') {
        sign = cur.peek() == '-' ? -1 : 1;
        cur.advance();
        cur.skipInline();
    }
    while (true) {
        Term term = readTerm(cur, m, sign);
        if (exactlyTwoFactors && term.factorCount != 2)
            fail(ParseErrorKind::DegreeMismatch, term.span,
                 "each term must wedge exactly two generators");
        if (term.wedgedToZero && warnings != nullptr)
            warnings->push_back({term.span, "term wedges to zero (repeated generator)"});
        result = result + term.form;
        cur.skipInline();
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.peek() == '-' ? -1 : 1;
            cur.advance();
            cur.skipInline();
        }
        else {
            break;
        }
    }
    return result;
}

}  // namespace

ParsedStructureFile parseStructureFile(std::string_view text)
{
    Cursor cur{text};
    cur.skipBlank();
    SourceSpan headSpan = cur.mark();
    if (readWord(cur) != "generators")
        fail(ParseErrorKind::Syntax, headSpan, "file must start with 'generators <m>'");
    cur.skipInline();
    SourceSpan countSpan = cur.mark();
    long m = readInt(cur);
    if (m < 1 || m > 64)
        fail(ParseErrorKind::Syntax, cur.spanFrom(countSpan),
             "generator count must be between 1 and 64");
    if (!cur.atLineEnd())
        fail(ParseErrorKind::Syntax, cur.mark(), "unexpected input after the generator count");

    ParsedStructureFile out;
    std::vector<Form> diffs(static_cast<std::size_t>(m), Form(static_cast<int>(m)));
    std::map<int, SourceSpan> defined;

    while (true) {
        cur.skipBlank();
        if (cur.eof())
            break;
        SourceSpan lineSpan = cur.mark();
        if (readWord(cur) != "d")
            fail(ParseErrorKind::Syntax, lineSpan, "expected a differential line 'd fK = ...'");
        cur.skipInline();
        GeneratorRef gen = readGenerator(cur, static_cast<int>(m));
        if (gen.conjugated)
            fail(ParseErrorKind::Syntax, gen.span,
                 "differentials are given on holomorphic generators only; d ~fK is forced by "
                 "conjugation");
        if (auto it = defined.find(gen.index); it != defined.end())
            fail(ParseErrorKind::DuplicateDefinition, gen.span,
                 "d f" + std::to_string(gen.index) + " was already defined at line " +
                     std::to_string(it->second.line));
        defined.emplace(gen.index, gen.span);
        cur.skipInline();
        if (cur.peek() != '=')
            fail(ParseErrorKind::Syntax, cur.mark(), "expected '='");
        cur.advance();
        diffs[static_cast<std::size_t>(gen.index - 1)] =
            readExpr(cur, static_cast<int>(m), /*exactlyTwoFactors=*/true, &out.warnings);
        if (!cur.atLineEnd())
            fail(ParseErrorKind::Syntax, cur.mark(), "unexpected trailing input");
    }

    out.equations = makeStructureEquations(static_cast<int>(m), std::move(diffs));
    return out;
}

Form parseFormExpr(std::string_view text, int m)
{
    Cursor cur{text};
    cur.skipBlank();
    Form result = readExpr(cur, m, /*exactlyTwoFactors=*/false, nullptr);
    cur.skipBlank();
    if (!cur.eof())
        fail(ParseErrorKind::Syntax, cur.mark(), "unexpected trailing input");
    return result;
}

namespace {

std::string monomialString(const Monomial& mono)
{
    std::string out;
    GeneratorMask bits = mono.holo;
    while (bits != 0) {
        int slot = std::countr_zero(bits);
        bits &= bits - 1;
        if (!out.empty())
            out += "^";
        out += "f" + std::to_string(slot + 1);
    }
    bits = mono.anti;
    while (bits != 0) {
        int slot = std::countr_zero(bits);
        bits &= bits - 1;
        if (!out.empty())
            out += "^";
        out += "~f" + std::to_string(slot + 1);
    }
    return out;
}

std::string termBody(const Scalar& magnitude, const Monomial& mono)
{
    std::string monoStr = monomialString(mono);
    if (monoStr.empty())
        return magnitude.str();
    if (magnitude.isOne())
        return monoStr;
    return magnitude.str() + "*" + monoStr;
}

}  // namespace

std::vector<std::string> formTermStrings(const Form& a)
{
    std::vector<std::string> out;
    for (const auto& [mono, coeff] : a.terms()) {
        bool negative = coeff.negativeLeading();
        std::string body = termBody(negative ? -coeff : coeff, mono);
        out.push_back(negative ? "-" + body : body);
    }
    return out;
}

std::string formToString(const Form& a)
{
    if (a.isZero())
        return "0";
    std::string out;
    for (const auto& [mono, coeff] : a.terms()) {
        bool negative = coeff.negativeLeading();
        std::string body = termBody(negative ? -coeff : coeff, mono);
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

std::string serializeStructureFile(const StructureEquations& eq)
{
    std::string out = "generators " + std::to_string(eq.m) + "\n";
    for (int k = 1; k <= eq.m; ++k) {
        const Form& d = eq.diffs[static_cast<std::size_t>(k - 1)];
        if (d.isZero())
            continue;
        out += "d f" + std::to_string(k) + " = " + formToString(d) + "\n";
    }
    return out;
}

}  // namespace frolicher
