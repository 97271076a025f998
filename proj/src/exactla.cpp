#include "frolicher/exactla.hpp"

#include <stdexcept>

namespace frolicher {

void addScaled(SparseVector& target, const Scalar& factor, const SparseVector& source)
{
    if (factor.isZero())
        return;
    for (const auto& [idx, value] : source) {
        auto [it, inserted] = target.emplace(idx, factor * value);
        if (!inserted) {
            it->second += factor * value;
            if (it->second.isZero())
                target.erase(it);
        }
    }
}

SparseMatrix::SparseMatrix(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
    data_.resize(static_cast<std::size_t>(rows));
}

void SparseMatrix::checkIndex(std::int64_t r, std::int64_t c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
}

void SparseMatrix::set(std::int64_t r, std::int64_t c, const Scalar& value)
{
    checkIndex(r, c);
    if (value.isZero())
        data_[r].erase(c);
    else
        data_[r][c] = value;
}

void SparseMatrix::add(std::int64_t r, std::int64_t c, const Scalar& value)
{
    checkIndex(r, c);
    auto [it, inserted] = data_[r].emplace(c, value);
    if (!inserted) {
        it->second += value;
        if (it->second.isZero())
            data_[r].erase(it);
    }
    if (inserted && value.isZero())
        data_[r].erase(c);
}

Scalar SparseMatrix::get(std::int64_t r, std::int64_t c) const
{
    checkIndex(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Scalar(0) : it->second;
}

const SparseVector& SparseMatrix::row(std::int64_t r) const
{
    if (r < 0 || r >= rows_)
        throw std::out_of_range("row index out of range");
    return data_[r];
}

void SparseMatrix::setRow(std::int64_t r, SparseVector v)
{
    if (r < 0 || r >= rows_)
        throw std::out_of_range("row index out of range");
    if (!v.empty() && (v.begin()->first < 0 || v.rbegin()->first >= cols_))
        throw std::out_of_range("column index out of range");
    data_[r] = std::move(v);
}

std::int64_t SparseMatrix::entryCount() const
{
    std::int64_t n = 0;
    for (const auto& row : data_)
        n += static_cast<std::int64_t>(row.size());
    return n;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(cols_, rows_);
    for (std::int64_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            t.data_[c].emplace(r, v);
    return t;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const
{
    if (!x.empty() && x.rbegin()->first >= cols_)
        throw std::out_of_range("vector longer than matrix width");
    SparseVector y;
    for (std::int64_t r = 0; r < rows_; ++r) {
        Scalar acc(0);
        const auto& row = data_[r];
        // iterate the sparser of the two
        if (row.size() <= x.size()) {
            for (const auto& [c, v] : row) {
                auto it = x.find(c);
                if (it != x.end())
                    acc += v * it->second;
            }
        }
        else {
            for (const auto& [c, v] : x) {
                auto it = row.find(c);
                if (it != row.end())
                    acc += v * it->second;
            }
        }
        if (!acc.isZero())
            y.emplace(r, acc);
    }
    return y;
}

namespace {

// Shared elimination core: returns pivot rows in pivot-column order.
struct Elimination {
    std::vector<SparseVector> rows;
    std::vector<std::int64_t> pivotCols;
};

Elimination eliminate(const SparseMatrix& m)
{
    std::vector<SparseVector> work;
    work.reserve(m.rows());
    for (std::int64_t r = 0; r < m.rows(); ++r)
        work.push_back(m.row(r));

    Elimination out;
    std::vector<std::size_t> pivotRows;
    std::vector<bool> used(work.size(), false);
    for (std::int64_t c = 0; c < m.cols(); ++c) {
        std::size_t pivot = work.size();
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (used[r])
                continue;
            auto it = work[r].find(c);
            if (it != work[r].end() && !it->second.isZero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == work.size())
            continue;
        used[pivot] = true;
        SparseVector& prow = work[pivot];
        Scalar inv = prow.at(c).inverse();
        if (!inv.isOne())
            for (auto& [col, v] : prow)
                v *= inv;
        // Earlier pivot rows are reduced too, so the final rows are fully
        // reduced, not merely in echelon form.
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r == pivot)
                continue;
            auto it = work[r].find(c);
            if (it == work[r].end())
                continue;
            Scalar factor = -it->second;
            addScaled(work[r], factor, prow);
        }
        out.pivotCols.push_back(c);
        pivotRows.push_back(pivot);
    }
    out.rows.reserve(pivotRows.size());
    for (std::size_t r : pivotRows)
        out.rows.push_back(std::move(work[r]));
    return out;
}

}  // namespace

RrefResult rref(const SparseMatrix& m)
{
    Elimination e = eliminate(m);
    RrefResult out;
    out.rank = static_cast<std::int64_t>(e.pivotCols.size());
    out.pivotCols = std::move(e.pivotCols);
    out.matrix = SparseMatrix(out.rank, m.cols());
    for (std::int64_t r = 0; r < out.rank; ++r)
        out.matrix.setRow(r, std::move(e.rows[r]));
    return out;
}

Subspace Subspace::zero(std::int64_t ambient)
{
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = SparseMatrix(0, ambient);
    return s;
}

Subspace Subspace::fromRref(RrefResult r, std::int64_t ambient)
{
    if (r.matrix.cols() != ambient)
        throw std::invalid_argument("basis width differs from ambient dimension");
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = std::move(r.matrix);
    s.pivots_ = std::move(r.pivotCols);
    return s;
}

Subspace Subspace::fromVectors(std::int64_t ambient, const std::vector<SparseVector>& vectors)
{
    SparseMatrix m(static_cast<std::int64_t>(vectors.size()), ambient);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        m.setRow(static_cast<std::int64_t>(r), vectors[r]);
    return fromRref(rref(m), ambient);
}

SparseVector Subspace::reduce(SparseVector x) const
{
    if (!x.empty() && x.rbegin()->first >= ambient_)
        throw std::out_of_range("vector outside ambient space");
    for (std::int64_t r = 0; r < basis_.rows(); ++r) {
        auto it = x.find(pivots_[r]);
        if (it == x.end())
            continue;
        Scalar factor = -it->second;
        addScaled(x, factor, basis_.row(r));
    }
    return x;
}

Subspace kernel(const SparseMatrix& m)
{
    RrefResult r = rref(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (std::int64_t c : r.pivotCols)
        isPivot[c] = true;

    std::vector<SparseVector> basis;
    for (std::int64_t f = 0; f < m.cols(); ++f) {
        if (isPivot[f])
            continue;
        SparseVector v;
        v.emplace(f, Scalar(1));
        for (std::int64_t i = 0; i < r.rank; ++i) {
            Scalar entry = r.matrix.get(i, f);
            if (!entry.isZero())
                v.emplace(r.pivotCols[i], -entry);
        }
        basis.push_back(std::move(v));
    }
    return Subspace::fromVectors(m.cols(), basis);
}

Subspace image(const SparseMatrix& m)
{
    return Subspace::fromRref(rref(m.transpose()), m.rows());
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b)
{
    if (!b.empty() && b.rbegin()->first >= m.rows())
        throw std::out_of_range("right-hand side outside target space");
    SparseMatrix aug(m.rows(), m.cols() + 1);
    for (std::int64_t r = 0; r < m.rows(); ++r) {
        SparseVector row = m.row(r);
        auto it = b.find(r);
        if (it != b.end() && !it->second.isZero())
            row.emplace(m.cols(), it->second);
        aug.setRow(r, std::move(row));
    }
    RrefResult r = rref(aug);
    SparseVector x;
    for (std::int64_t i = 0; i < r.rank; ++i) {
        if (r.pivotCols[i] == m.cols())
            return std::nullopt;  // a row reduced to 0 = 1
        Scalar rhs = r.matrix.get(i, m.cols());
        if (!rhs.isZero())
            x.emplace(r.pivotCols[i], rhs);
    }
    return x;
}

Subspace subspaceSum(const Subspace& u, const Subspace& v)
{
    if (u.ambientDim() != v.ambientDim())
        throw std::invalid_argument("subspace ambient dimensions differ");
    SparseMatrix stacked(u.dim() + v.dim(), u.ambientDim());
    for (std::int64_t r = 0; r < u.dim(); ++r)
        stacked.setRow(r, u.basis().row(r));
    for (std::int64_t r = 0; r < v.dim(); ++r)
        stacked.setRow(u.dim() + r, v.basis().row(r));
    return Subspace::fromRref(rref(stacked), u.ambientDim());
}

Subspace subspaceIntersect(const Subspace& u, const Subspace& v)
{
    if (u.ambientDim() != v.ambientDim())
        throw std::invalid_argument("subspace ambient dimensions differ");
    // Solve a*U = b*V: kernel of [U^T | -V^T]; the a-part spans the intersection.
    SparseMatrix system(u.ambientDim(), u.dim() + v.dim());
    for (std::int64_t r = 0; r < u.dim(); ++r)
        for (const auto& [c, val] : u.basis().row(r))
            system.set(c, r, val);
    for (std::int64_t r = 0; r < v.dim(); ++r)
        for (const auto& [c, val] : v.basis().row(r))
            system.set(c, u.dim() + r, -val);
    Subspace pairs = kernel(system);
    std::vector<SparseVector> vectors;
    for (std::int64_t r = 0; r < pairs.dim(); ++r) {
        SparseVector w;
        for (const auto& [c, coeff] : pairs.basis().row(r)) {
            if (c >= u.dim())
                break;
            addScaled(w, coeff, u.basis().row(c));
        }
        if (!w.empty())
            vectors.push_back(std::move(w));
    }
    return Subspace::fromVectors(u.ambientDim(), vectors);
}

std::int64_t quotientDim(const Subspace& u, const Subspace& v)
{
    if (u.ambientDim() != v.ambientDim())
        throw std::invalid_argument("subspace ambient dimensions differ");
    for (std::int64_t r = 0; r < v.dim(); ++r)
        if (!u.contains(v.basis().row(r)))
            throw std::invalid_argument("quotientDim: denominator is not contained in numerator");
    return u.dim() - v.dim();
}

}  // namespace frolicher
