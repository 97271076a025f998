// Command-line front door: validate structure files, print Froelicher page
// tables and Hodge/Betti numbers, emit the built-in family, search and
// verify zig-zag witnesses.
//
// Exit codes: 0 success; 1 parse/validation/verification error; 2 internal
// invariant violation; 3 zig-zag nonexistence.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "frolicher/report_json.hpp"
#include "frolicher/spectral.hpp"
#include "frolicher/structfile.hpp"

using namespace frolicher;

namespace {

struct InputSelector {
    std::string file;
    std::string builtin;
    int builtinDim = 0;
    int familyN = 0;

    void attach(CLI::App* cmd, bool fileOnly = false)
    {
        auto* filePos = cmd->add_option("file", file, "structure-equation file (.lie)");
        if (!fileOnly) {
            auto* b = cmd->add_option("--builtin", builtin, "builtin example: torus | iwasawa");
            cmd->add_option("--dim", builtinDim, "complex dimension for --builtin torus");
            auto* f = cmd->add_option("--family-xn", familyN, "the family X_n with the given n");
            filePos->excludes(b);
            filePos->excludes(f);
            b->excludes(f);
        }
        else {
            filePos->required();
        }
    }

    StructureEquations load(std::vector<LintWarning>* warnings = nullptr) const
    {
        if (!builtin.empty())
            return builtinExample(builtin, builtinDim);
        if (familyN != 0)
            return familyXn(familyN);
        if (file.empty())
            throw std::runtime_error("no input: give a file, --builtin or --family-xn");
        std::ifstream in(file, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot open " + file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        ParsedStructureFile parsed = parseStructureFile(buffer.str());
        if (warnings != nullptr)
            *warnings = parsed.warnings;
        else
            for (const LintWarning& w : parsed.warnings)
                std::cerr << "warning: " << w.span.line << ":" << w.span.column << ": "
                          << w.message << "\n";
        return parsed.equations;
    }
};

void printGrid(std::ostream& out, const std::string& title,
               const std::vector<std::vector<std::int64_t>>& dims)
{
    int m = static_cast<int>(dims.size()) - 1;
    out << title << "\n";
    out << "  q\\p";
    for (int p = 0; p <= m; ++p)
        out << std::setw(7) << p;
    out << "\n";
    for (int q = m; q >= 0; --q) {
        out << std::setw(5) << q;
        for (int p = 0; p <= m; ++p)
            out << std::setw(7) << dims[p][q];
        out << "\n";
    }
}

void printValidation(std::ostream& out, const ValidationReport& report)
{
    out << "jacobi:     " << (report.jacobiOk ? "ok" : "FAILED") << "\n";
    out << "integrable: " << (report.integrable ? "ok" : "FAILED") << "\n";
    out << "nilpotent:  " << (report.nilpotent ? "ok" : "no") << "\n";
    for (const auto& off : report.offenders)
        out << "  f" << off.index << " fails " << off.what << ": "
            << formToString(off.diagnostic) << "\n";
}

void warnIfNotNilpotent(const ValidationReport& report)
{
    if (!report.nilpotent)
        std::cerr << "warning: input is not nilpotent; page dimensions are still exact, the "
                     "interpretation as nilmanifold cohomology is not available\n";
}

int runCheck(const InputSelector& input)
{
    std::vector<LintWarning> warnings;
    StructureEquations eq = input.load(&warnings);
    for (const LintWarning& w : warnings)
        std::cout << "lint: " << w.span.line << ":" << w.span.column << ": " << w.message << "\n";
    ValidationReport report = validate(eq);
    printValidation(std::cout, report);
    return report.ok() ? 0 : 1;
}

int runPages(const InputSelector& input, int maxPage, bool json)
{
    StructureEquations eq = input.load();
    ValidationReport report = validate(eq);
    if (!report.ok()) {
        printValidation(std::cerr, report);
        return 1;
    }
    warnIfNotNilpotent(report);
    DoubleComplex dc = DoubleComplex::build(eq);
    FrolicherReport fr = pagesUntilDegeneration(dc, maxPage);
    if (json) {
        std::cout << emitReportJson(fr);
        return 0;
    }
    std::cout << "m = " << fr.m << "\n";
    for (std::size_t r = 0; r < fr.pageDims.size(); ++r)
        printGrid(std::cout, "page E_" + std::to_string(r), fr.pageDims[r]);
    std::cout << "betti:";
    for (std::int64_t b : fr.betti)
        std::cout << " " << b;
    std::cout << "\n";
    printGrid(std::cout, "hodge h^{p,q}", fr.hodge);
    std::cout << "euler characteristic: " << fr.euler << "\n";
    if (fr.degenerationPage)
        std::cout << "degeneration page: " << *fr.degenerationPage << "\n";
    else
        std::cout << "degeneration page: not determined (capped at r = " << fr.maxPage << ")\n";
    return 0;
}

int runHodge(const InputSelector& input)
{
    StructureEquations eq = input.load();
    ValidationReport report = validate(eq);
    if (!report.ok()) {
        printValidation(std::cerr, report);
        return 1;
    }
    warnIfNotNilpotent(report);
    DoubleComplex dc = DoubleComplex::build(eq);
    auto hodge = dolbeaultDims(dc);
    auto betti = totalCohomology(dc);
    printGrid(std::cout, "hodge h^{p,q}", hodge);
    std::cout << "betti:";
    for (std::int64_t b : betti)
        std::cout << " " << b;
    std::cout << "\n";
    bool ok = true;
    for (int k = 0; k <= 2 * dc.m(); ++k) {
        std::int64_t sum = 0;
        for (int p = 0; p <= dc.m(); ++p) {
            int q = k - p;
            if (q >= 0 && q <= dc.m())
                sum += hodge[p][q];
        }
        ok = ok && betti[k] <= sum;
    }
    std::cout << "froelicher inequality b_k <= sum h^{p,q}: " << (ok ? "ok" : "VIOLATED") << "\n";
    if (!ok)
        throw InternalError("Froelicher inequality violated");
    return 0;
}

int runFamily(int n, const std::string& outPath)
{
    std::string text = serializeStructureFile(familyXn(n));
    if (outPath.empty()) {
        std::cout << text;
    }
    else {
        std::ofstream out(outPath, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write " + outPath);
        out << text;
    }
    return 0;
}

int runZigZag(const InputSelector& input, const std::string& startExpr, int length)
{
    StructureEquations eq = input.load();
    ValidationReport report = validate(eq);
    if (!report.ok()) {
        printValidation(std::cerr, report);
        return 1;
    }
    DoubleComplex dc = DoubleComplex::build(eq);
    Form start = parseFormExpr(startExpr, eq.m);
    ZigZagSearch search;
    try {
        search = findZigZag(dc, start, length);
    }
    catch (const NotACocycle&) {
        std::cout << "start is not a delBar-cocycle: it lives only to E_0\n";
        return 3;
    }
    if (!search.zigzag) {
        std::cout << "no zig-zag of length " << length << ": the start lives exactly to E_"
                  << search.livesTo << "\n";
        return 3;
    }
    const ZigZag& z = *search.zigzag;
    std::cout << "start bidegree (" << z.p << "," << z.q << "), length " << z.length << "\n";
    for (std::size_t i = 0; i < z.chain.size(); ++i)
        std::cout << "beta_" << i << " = " << formToString(z.chain[i]) << "\n";
    std::cout << "terminal = " << formToString(z.terminal) << "\n";
    return 0;
}

int runVerifyPaper(int n)
{
    StructureEquations eq = familyXn(n);
    ValidationReport report = validate(eq);
    bool pass = true;
    std::cout << "family X_" << n << ": m = " << eq.m << ", validation "
              << (report.ok() && report.nilpotent ? "ok" : "FAILED") << "\n";
    pass = pass && report.ok() && report.nilpotent;

    DoubleComplex dc = DoubleComplex::build(eq);
    auto chain = familyXnZigZagChain(n);
    std::vector<std::pair<int, bool>> topFactors;
    for (int k = 1; k <= n; ++k)
        topFactors.emplace_back(k, false);
    Form top = Form::wedgeOfGenerators(eq.m, topFactors);

    ZigZag explicitChain{0, n - 1, n, chain, top};
    auto check = verifyZigZag(dc, explicitChain);
    std::cout << "explicit chain β1..β" << n << " with ∂β" << n << " = " << formToString(top)
              << ": " << (check.valid ? "verified exactly" : "FAILED (" + check.message + ")")
              << "\n";
    pass = pass && check.valid;

    auto found = findZigZag(dc, chain[0], n);
    std::cout << "solver zig-zag of length " << n << ": "
              << (found.zigzag ? "found" : "NOT FOUND") << "\n";
    pass = pass && found.zigzag.has_value();

    PageComputer pc(dc);
    Form total(eq.m);
    for (const Form& f : chain)
        total = total + f;
    const PageBlock& src = pc.block(n, 0, n - 1);
    SparseVector y = dc.formToCoords(n - 1, total);
    bool startLives = src.numerator.contains(y) && !src.denominator.contains(y);
    std::cout << "[β1] ≠ 0 in E_" << n << "^{0," << n - 1 << "}: "
              << (startLives ? "ok" : "FAILED") << "\n";
    pass = pass && startLives;

    const PageBlock& tgt = pc.block(n, n, 0);
    SparseVector t = dc.formToCoords(n, top);
    if (!tgt.numerator.contains(t))
        throw InternalError("top holomorphic form is not a page cycle");
    bool dNonzero = !tgt.denominator.contains(t);
    if (dNonzero) {
        std::cout << "d_" << n << "[β1] = [" << formToString(top) << "] ≠ 0 in E_" << n << "^{"
                  << n << ",0}\n";
    }
    else {
        std::cout << "d_" << n << "[β1] = [" << formToString(top) << "] = 0 in E_" << n << "^{"
                  << n << ",0}: FAILED (the class is a boundary)\n";
        auto extended = findZigZag(dc, chain[0], n + 1);
        if (extended.zigzag) {
            std::cout << "  counterexample: the chain extends to length " << n + 1 << " via\n";
            for (std::size_t i = 0; i < extended.zigzag->chain.size(); ++i)
                std::cout << "    beta_" << i << " = " << formToString(extended.zigzag->chain[i])
                          << "\n";
        }
    }
    pass = pass && dNonzero;

    std::cout << "verify-paper: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Froelicher spectral sequence of Lie algebras with invariant complex "
                 "structure, in exact arithmetic"};
    app.require_subcommand(1);

    InputSelector checkInput;
    auto* check = app.add_subcommand("check", "validate a structure file");
    checkInput.attach(check, /*fileOnly=*/true);

    InputSelector pagesInput;
    int maxPage = -1;
    bool pagesJson = false;
    auto* pages = app.add_subcommand("pages", "page dimension tables and the degeneration page");
    pagesInput.attach(pages);
    pages->add_option("--max-page", maxPage, "cap the computed pages at this r");
    pages->add_flag("--json", pagesJson, "emit the JSON report");

    InputSelector hodgeInput;
    auto* hodge = app.add_subcommand(
        "hodge", "Hodge and Betti numbers with the Froelicher inequality check");
    hodgeInput.attach(hodge);

    std::string familyKind;
    int familyN = 2;
    std::string familyOut;
    auto* family = app.add_subcommand("family", "serialize a built-in family");
    family->add_option("kind", familyKind, "family name (xn)")->required();
    family->add_option("--n", familyN, "family parameter n >= 2")->required();
    family->add_option("-o,--output", familyOut, "output file (default stdout)");

    InputSelector zigzagInput;
    std::string startExpr;
    int length = 1;
    auto* zigzag = app.add_subcommand("zigzag", "search a zig-zag witness from a starting form");
    zigzagInput.attach(zigzag);
    zigzag->add_option("--start", startExpr, "starting form expression, e.g. \"~f3\"")->required();
    zigzag->add_option("--length", length, "requested zig-zag length")->required();

    int verifyN = 2;
    auto* verify =
        app.add_subcommand("verify-paper", "check the d_n non-degeneracy certificate for X_n");
    verify->add_option("--n", verifyN, "family parameter n >= 2")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return runCheck(checkInput);
        if (pages->parsed())
            return runPages(pagesInput, maxPage, pagesJson);
        if (hodge->parsed())
            return runHodge(hodgeInput);
        if (family->parsed()) {
            if (familyKind != "xn")
                throw std::runtime_error("unknown family: " + familyKind);
            return runFamily(familyN, familyOut);
        }
        if (zigzag->parsed())
            return runZigZag(zigzagInput, startExpr, length);
        if (verify->parsed())
            return runVerifyPaper(verifyN);
    }
    catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
