#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "frolicher/scalar.hpp"

namespace frolicher {

/// Coordinate vector with only the nonzero entries stored.
using SparseVector = std::map<std::int64_t, Scalar>;

void addScaled(SparseVector& target, const Scalar& factor, const SparseVector& source);

/// Sparse matrix over the Gaussian rationals, row-major. No zero entries are
/// stored; indices are checked on access.
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(std::int64_t rows, std::int64_t cols);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    void set(std::int64_t r, std::int64_t c, const Scalar& value);
    void add(std::int64_t r, std::int64_t c, const Scalar& value);
    Scalar get(std::int64_t r, std::int64_t c) const;
    const SparseVector& row(std::int64_t r) const;
    void setRow(std::int64_t r, SparseVector v);

    std::int64_t entryCount() const;
    SparseMatrix transpose() const;
    SparseVector apply(const SparseVector& x) const;  // M x

    bool operator==(const SparseMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    void checkIndex(std::int64_t r, std::int64_t c) const;

    std::int64_t rows_, cols_;
    std::vector<SparseVector> data_;
};

struct RrefResult {
    SparseMatrix matrix;  // zero rows dropped, rows ordered by pivot column
    std::int64_t rank = 0;
    std::vector<std::int64_t> pivotCols;
};

/// Exact Gauss-Jordan over Q(i). Pivot choice: first nonzero column, then
/// the topmost remaining row, so the result is deterministic.
RrefResult rref(const SparseMatrix& m);

/// A linear subspace stored as an RREF row basis; two subspaces are equal
/// iff their basis matrices are equal.
class Subspace {
public:
    static Subspace zero(std::int64_t ambient);
    static Subspace fromVectors(std::int64_t ambient, const std::vector<SparseVector>& vectors);
    static Subspace fromRref(RrefResult r, std::int64_t ambient);

    std::int64_t ambientDim() const { return ambient_; }
    std::int64_t dim() const { return basis_.rows(); }
    const SparseMatrix& basis() const { return basis_; }
    const std::vector<std::int64_t>& pivotCols() const { return pivots_; }

    /// Residue of x after eliminating all pivot coordinates; zero iff x lies
    /// in the subspace.
    SparseVector reduce(SparseVector x) const;
    bool contains(const SparseVector& x) const { return reduce(x).empty(); }

    bool operator==(const Subspace& o) const
    {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    std::int64_t ambient_ = 0;
    SparseMatrix basis_;
    std::vector<std::int64_t> pivots_;
};

/// Basis of {x : Mx = 0}; dim = cols - rank.
Subspace kernel(const SparseMatrix& m);

/// RREF basis of the column space of M.
Subspace image(const SparseMatrix& m);

/// A particular solution of Mx = b with every free variable set to zero,
/// or nullopt when the system is inconsistent.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b);

Subspace subspaceSum(const Subspace& u, const Subspace& v);
Subspace subspaceIntersect(const Subspace& u, const Subspace& v);

/// dim U - dim V; requires (and checks) V to be contained in U.
std::int64_t quotientDim(const Subspace& u, const Subspace& v);

}  // namespace frolicher
