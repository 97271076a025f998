#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "frolicher/exactla.hpp"
#include "frolicher/structure.hpp"

namespace frolicher {

/// Raised by buildDoubleComplex when the input fails Jacobi or
/// integrability; carries the offending report.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Raised by findZigZag when the starting form is not delBar-closed.
class NotACocycle : public std::invalid_argument {
public:
    NotACocycle() : std::invalid_argument("starting form is not a delBar-cocycle") {}
};

/// A computed quantity violated an identity that holds for every valid
/// input; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// The bigraded double complex (A^{p,q}, del, delBar) of a validated set of
/// structure equations. Block bases, block matrices and total-complex
/// matrices are materialized on first use; the cache is guarded, so a built
/// complex may be shared across threads.
///
/// Coordinates: the basis of A^{p,q} is the monomials ordered by ascending
/// (holo, anti) masks; the basis of K^n concatenates the blocks p+q = n in
/// descending p, so the filtration F^p K^n is a coordinate prefix.
class DoubleComplex {
public:
    static DoubleComplex build(const StructureEquations& eq);

    int m() const { return eq_.m; }
    const StructureEquations& equations() const { return eq_; }
    const DifferentialOperator& differential() const { return op_; }

    std::int64_t blockDim(int p, int q) const;
    const std::vector<Monomial>& blockBasis(int p, int q) const;
    /// Matrix of del : A^{p,q} -> A^{p+1,q}.
    const SparseMatrix& delMatrix(int p, int q) const;
    /// Matrix of delBar : A^{p,q} -> A^{p,q+1}.
    const SparseMatrix& delBarMatrix(int p, int q) const;

    std::int64_t totalDim(int n) const;  // dim K^n, zero outside 0..2m
    /// dim F^p K^n; F^p K^n occupies the first filtrationDim coordinates.
    std::int64_t filtrationDim(int n, int p) const;
    /// Matrix of d = del + delBar : K^n -> K^{n+1}.
    const SparseMatrix& totalMatrix(int n) const;

    /// Position of a degree-n monomial in the K^n coordinate order.
    std::int64_t coordIndex(const Monomial& mono) const;
    /// Coordinates of a form all of whose terms have total degree n.
    SparseVector formToCoords(int n, const Form& a) const;
    Form coordsToForm(int n, const SparseVector& v) const;
    /// Coordinates within the A^{p,q} block basis.
    SparseVector blockCoords(const Form& a, int p, int q) const;
    Form blockForm(int p, int q, const SparseVector& v) const;

private:
    explicit DoubleComplex(StructureEquations eq);

    struct Caches {
        std::mutex mutex;
        std::map<std::pair<int, int>, std::vector<Monomial>> bases;
        std::map<std::pair<int, int>, SparseMatrix> del, delBar;
        std::map<int, SparseMatrix> total;
    };

    void buildBlock(int p, int q) const;

    StructureEquations eq_;
    DifferentialOperator op_;
    std::unique_ptr<Caches> caches_;
};

DoubleComplex buildDoubleComplex(const StructureEquations& eq);

/// One spot E_r^{p,q}: the cycle space Z_r^{p,q}, the boundary space it is
/// divided by, and a deterministic representative basis of the quotient.
/// Subspaces live in the K^{p+q} coordinates of the double complex.
struct PageBlock {
    int r = 0, p = 0, q = 0;
    std::int64_t dim = 0;
    Subspace numerator;    // Z_r^{p,q}
    Subspace denominator;  // Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2}
    std::vector<SparseVector> representatives;
};

/// Memoizing computer for pages of one double complex; cheap to query the
/// same (r,p,q) repeatedly. Not thread-safe; create one per computation.
class PageComputer {
public:
    explicit PageComputer(const DoubleComplex& dc);

    const DoubleComplex& complex() const { return dc_; }

    /// Z_r^{p, n-p} = F^p K^n  intersect  d^{-1}(F^{p+r} K^{n+1}); r >= -1.
    const Subspace& cycles(int r, int p, int n);
    const PageBlock& block(int r, int p, int q);
    /// Matrix of d_r : E_r^{p,q} -> E_r^{p+r,q-r+1} over the representative
    /// bases; targets outside the first quadrant give the zero map.
    const SparseMatrix& differential(int r, int p, int q);

    /// Coordinates of the class of a cycle in the representative basis of a
    /// block, or nullopt when the vector is not in Z_r^{p,q}.
    std::optional<SparseVector> classCoordinates(const PageBlock& block, const SparseVector& x);

private:
    const Subspace& boundaries(int r, int p, int n);

    const DoubleComplex& dc_;
    std::map<std::tuple<int, int, int>, Subspace> cycleCache_;     // (n, pLow, pHigh)
    std::map<std::tuple<int, int, int>, Subspace> boundaryCache_;  // (n, pLow, pHigh)
    std::map<std::tuple<int, int, int>, PageBlock> blockCache_;
    std::map<std::tuple<int, int, int>, SparseMatrix> diffCache_;
};

struct Page {
    int r = 0;
    std::vector<std::vector<std::int64_t>> dims;  // dims[p][q], 0..m each
    std::map<std::pair<int, int>, PageBlock> blocks;

    std::int64_t dim(int p, int q) const;
};

Page computePage(const DoubleComplex& dc, int r);
SparseMatrix pageDifferential(const DoubleComplex& dc, int r, int p, int q);

/// A witness chain beta_0..beta_{r-1} with delBar beta_0 = 0 and
/// del beta_{i-1} + delBar beta_i = 0; certifies that [beta_0] survives to
/// page r with d_r[beta_0] = [terminal].
struct ZigZag {
    int p = 0, q = 0;  // bidegree of beta_0
    int length = 0;
    std::vector<Form> chain;
    Form terminal;
};

struct ZigZagSearch {
    std::optional<ZigZag> zigzag;
    /// Largest page the start certifiably lives to: equals the requested
    /// length on success, the last solvable length on failure.
    int livesTo = 0;
};

/// Looks for a zig-zag of the requested length starting at beta0. Each
/// prefix is solved as one joint linear system, so failure at step i proves
/// no chain of length i+1 exists at all, not merely that one greedy
/// extension got stuck.
ZigZagSearch findZigZag(const DoubleComplex& dc, const Form& beta0, int length);

struct ZigZagCheck {
    bool valid = true;
    int violatedRelation = -1;  // 0: delBar beta_0; i: join at beta_i; length: terminal
    std::string message;
};

/// Exact check of every zig-zag relation, bidegrees included.
ZigZagCheck verifyZigZag(const DoubleComplex& dc, const ZigZag& z);

/// Betti numbers b_0..b_{2m} of the total complex (K^n, del + delBar).
std::vector<std::int64_t> totalCohomology(const DoubleComplex& dc);

/// delBar-cohomology dimensions computed directly from kernel/image ranks,
/// with no filtration machinery; the independent route to the E_1 page.
std::vector<std::vector<std::int64_t>> dolbeaultDims(const DoubleComplex& dc);
/// del-cohomology dimensions, same direct route.
std::vector<std::vector<std::int64_t>> delCohomologyDims(const DoubleComplex& dc);

struct FrolicherReport {
    int m = 0;
    int maxPage = 0;                                              // pages cover r = 0..maxPage
    std::vector<std::vector<std::vector<std::int64_t>>> pageDims;  // [r][p][q]
    std::vector<std::int64_t> betti;
    std::vector<std::vector<std::int64_t>> hodge;  // E_1 dims
    std::optional<int> degenerationPage;  // unset when maxPage was capped below m+1
    std::int64_t euler = 0;
    std::optional<ZigZag> witness;
};

/// Pages r = 0..m+1 (E_{m+1} = E_infinity by the quadrant bound), Betti and
/// Hodge numbers, Euler characteristic and the degeneration page: the
/// smallest r >= 1 with d_s = 0 for every s >= r, cross-checked against the
/// dimension tables. maxPage < 0 means the full range.
FrolicherReport pagesUntilDegeneration(const DoubleComplex& dc, int maxPage = -1);

}  // namespace frolicher
