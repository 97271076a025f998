#include "frolicher/spectral.hpp"

#include <algorithm>

namespace frolicher {

namespace {

std::string validationMessage(const ValidationReport& report)
{
    std::string msg = "structure equations failed validation:";
    if (!report.jacobiOk)
        msg += " d^2 != 0 (Jacobi identity fails);";
    if (!report.integrable)
        msg += " some d f_k has a (0,2)-component (complex structure not integrable);";
    return msg;
}

// All popcount-k masks over m slots in increasing order (Gosper's hack).
std::vector<GeneratorMask> masksOfWeight(int m, int k)
{
    std::vector<GeneratorMask> out;
    if (k < 0 || k > m)
        return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::int64_t count = binomial(m, k);
    out.reserve(static_cast<std::size_t>(count));
    GeneratorMask v = k == 64 ? ~GeneratorMask(0) : (GeneratorMask(1) << k) - 1;
    for (std::int64_t i = 0; i < count; ++i) {
        out.push_back(v);
        if (i + 1 == count)
            break;
        GeneratorMask t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

const std::vector<Monomial>& emptyBasis()
{
    static const std::vector<Monomial> empty;
    return empty;
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(validationMessage(report)), report_(std::move(report))
{
}

DoubleComplex::DoubleComplex(StructureEquations eq)
    : eq_(std::move(eq)), op_(eq_), caches_(std::make_unique<Caches>())
{
}

DoubleComplex DoubleComplex::build(const StructureEquations& eq)
{
    ValidationReport report = validate(eq);
    if (!report.ok())
        throw ValidationError(std::move(report));
    return DoubleComplex(eq);
}

DoubleComplex buildDoubleComplex(const StructureEquations& eq) { return DoubleComplex::build(eq); }

std::int64_t DoubleComplex::blockDim(int p, int q) const
{
    if (p < 0 || q < 0 || p > m() || q > m())
        return 0;
    __int128 dim = static_cast<__int128>(binomial(m(), p)) * binomial(m(), q);
    if (dim > INT64_MAX)
        throw std::overflow_error("block dimension overflows int64");
    return static_cast<std::int64_t>(dim);
}

std::int64_t DoubleComplex::totalDim(int n) const
{
    if (n < 0 || n > 2 * m())
        return 0;
    return binomial(2 * m(), n);
}

std::int64_t DoubleComplex::filtrationDim(int n, int p) const
{
    if (n < 0 || n > 2 * m())
        return 0;
    std::int64_t dim = 0;
    for (int i = std::max(p, 0); i <= std::min(m(), n); ++i)
        dim += blockDim(i, n - i);
    return dim;
}

std::int64_t DoubleComplex::coordIndex(const Monomial& mono) const
{
    int n = mono.degree();
    int p = mono.p();
    return filtrationDim(n, p + 1) + combinationRank(mono.holo) * binomial(m(), mono.q()) +
           combinationRank(mono.anti);
}

void DoubleComplex::buildBlock(int p, int q) const
{
    // caller holds the cache mutex
    auto key = std::pair{p, q};
    if (caches_->bases.count(key) != 0)
        return;

    std::vector<Monomial> basis;
    basis.reserve(static_cast<std::size_t>(blockDim(p, q)));
    for (GeneratorMask h : masksOfWeight(m(), p))
        for (GeneratorMask a : masksOfWeight(m(), q))
            basis.push_back(Monomial{h, a});

    SparseMatrix del(blockDim(p + 1, q), blockDim(p, q));
    SparseMatrix delBar(blockDim(p, q + 1), blockDim(p, q));
    std::int64_t binomQ = binomial(m(), q);
    std::int64_t binomQ1 = binomial(m(), q + 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Form da = op_.d(basis[j]);
        for (const auto& [mono, c] : da.terms()) {
            std::int64_t holoRank = combinationRank(mono.holo);
            std::int64_t antiRank = combinationRank(mono.anti);
            if (mono.p() == p + 1 && mono.q() == q)
                del.set(holoRank * binomQ + antiRank, static_cast<std::int64_t>(j), c);
            else if (mono.p() == p && mono.q() == q + 1)
                delBar.set(holoRank * binomQ1 + antiRank, static_cast<std::int64_t>(j), c);
            else
                throw InternalError("differential left the (p+1,q)/(p,q+1) bidegrees");
        }
    }
    caches_->bases.emplace(key, std::move(basis));
    caches_->del.emplace(key, std::move(del));
    caches_->delBar.emplace(key, std::move(delBar));
}

const std::vector<Monomial>& DoubleComplex::blockBasis(int p, int q) const
{
    if (p < 0 || q < 0 || p > m() || q > m())
        return emptyBasis();
    std::scoped_lock lock(caches_->mutex);
    buildBlock(p, q);
    return caches_->bases.at({p, q});
}

const SparseMatrix& DoubleComplex::delMatrix(int p, int q) const
{
    if (p < 0 || q < 0 || p > m() || q > m())
        throw std::out_of_range("block out of range");
    std::scoped_lock lock(caches_->mutex);
    buildBlock(p, q);
    return caches_->del.at({p, q});
}

const SparseMatrix& DoubleComplex::delBarMatrix(int p, int q) const
{
    if (p < 0 || q < 0 || p > m() || q > m())
        throw std::out_of_range("block out of range");
    std::scoped_lock lock(caches_->mutex);
    buildBlock(p, q);
    return caches_->delBar.at({p, q});
}

const SparseMatrix& DoubleComplex::totalMatrix(int n) const
{
    if (n < 0 || n > 2 * m())
        throw std::out_of_range("total degree out of range");
    std::scoped_lock lock(caches_->mutex);
    auto it = caches_->total.find(n);
    if (it != caches_->total.end())
        return it->second;

    SparseMatrix d(totalDim(n + 1), totalDim(n));
    for (int p = std::min(m(), n); p >= std::max(0, n - m()); --p) {
        buildBlock(p, n - p);
        const auto& basis = caches_->bases.at({p, n - p});
        for (const Monomial& mono : basis) {
            std::int64_t col = coordIndex(mono);
            Form da = op_.d(mono);
            for (const auto& [target, c] : da.terms())
                d.set(coordIndex(target), col, c);
        }
    }
    return caches_->total.emplace(n, std::move(d)).first->second;
}

SparseVector DoubleComplex::formToCoords(int n, const Form& a) const
{
    if (a.ambient() != m())
        throw AmbientMismatch();
    SparseVector v;
    for (const auto& [mono, c] : a.terms()) {
        if (mono.degree() != n)
            throw std::invalid_argument("form is not homogeneous of the requested total degree");
        v.emplace(coordIndex(mono), c);
    }
    return v;
}

Form DoubleComplex::coordsToForm(int n, const SparseVector& v) const
{
    Form a(m());
    for (const auto& [idx, c] : v) {
        int p = std::min(m(), n);
        while (p >= 0 && filtrationDim(n, p + 1) + blockDim(p, n - p) <= idx)
            --p;
        if (p < 0 || idx < filtrationDim(n, p + 1))
            throw std::out_of_range("coordinate outside K^n");
        std::int64_t local = idx - filtrationDim(n, p + 1);
        a = a + Form::term(m(), blockBasis(p, n - p)[static_cast<std::size_t>(local)], c);
    }
    return a;
}

SparseVector DoubleComplex::blockCoords(const Form& a, int p, int q) const
{
    if (a.ambient() != m())
        throw AmbientMismatch();
    SparseVector v;
    std::int64_t binomQ = binomial(m(), q);
    for (const auto& [mono, c] : a.terms()) {
        if (mono.p() != p || mono.q() != q)
            throw std::invalid_argument("form has a term outside the requested bidegree");
        v.emplace(combinationRank(mono.holo) * binomQ + combinationRank(mono.anti), c);
    }
    return v;
}

Form DoubleComplex::blockForm(int p, int q, const SparseVector& v) const
{
    Form a(m());
    const auto& basis = blockBasis(p, q);
    for (const auto& [idx, c] : v)
        a = a + Form::term(m(), basis.at(static_cast<std::size_t>(idx)), c);
    return a;
}

// ---------------------------------------------------------------------------
// pages

namespace {

// Reinterpret an RREF basis over a coordinate prefix inside a larger space.
Subspace embedPrefix(const Subspace& s, std::int64_t ambient)
{
    RrefResult r;
    r.rank = s.dim();
    r.pivotCols = s.pivotCols();
    r.matrix = SparseMatrix(s.dim(), ambient);
    for (std::int64_t i = 0; i < s.dim(); ++i)
        r.matrix.setRow(i, s.basis().row(i));
    return Subspace::fromRref(std::move(r), ambient);
}

// The coordinate subspace spanned by the first `dim` unit vectors.
Subspace coordinatePrefix(std::int64_t dim, std::int64_t ambient)
{
    RrefResult r;
    r.rank = dim;
    r.matrix = SparseMatrix(dim, ambient);
    for (std::int64_t i = 0; i < dim; ++i) {
        r.matrix.set(i, i, Scalar(1));
        r.pivotCols.push_back(i);
    }
    return Subspace::fromRref(std::move(r), ambient);
}

}  // namespace

PageComputer::PageComputer(const DoubleComplex& dc) : dc_(dc) {}

const Subspace& PageComputer::cycles(int r, int p, int n)
{
    int m = dc_.m();
    int pLow = std::clamp(p, 0, m + 1);
    int pHigh = std::clamp(p + r, pLow, m + 1);
    auto key = std::tuple{n, pLow, pHigh};
    auto it = cycleCache_.find(key);
    if (it != cycleCache_.end())
        return it->second;

    std::int64_t ambient = dc_.totalDim(n);
    Subspace result = Subspace::zero(ambient);
    std::int64_t cols = dc_.filtrationDim(n, pLow);
    if (cols > 0) {
        std::int64_t cutoff = dc_.filtrationDim(n + 1, pHigh);
        std::int64_t rows = dc_.totalDim(n + 1) - cutoff;
        if (rows == 0 || pHigh == pLow) {
            // d preserves the filtration on validated inputs, so the
            // membership condition is vacuous and Z is all of F^pLow
            result = coordinatePrefix(cols, ambient);
        }
        else {
            const SparseMatrix& d = dc_.totalMatrix(n);
            SparseMatrix c(rows, cols);
            for (std::int64_t row = cutoff; row < dc_.totalDim(n + 1); ++row) {
                for (const auto& [col, v] : d.row(row)) {
                    if (col < cols)
                        c.set(row - cutoff, col, v);
                }
            }
            result = embedPrefix(kernel(c), ambient);
        }
    }
    return cycleCache_.emplace(key, std::move(result)).first->second;
}

const Subspace& PageComputer::boundaries(int r, int p, int n)
{
    int m = dc_.m();
    int pLow = std::clamp(p, 0, m + 1);
    int pHigh = std::clamp(p + r, pLow, m + 1);
    auto key = std::tuple{n, pLow, pHigh};
    auto it = boundaryCache_.find(key);
    if (it != boundaryCache_.end())
        return it->second;

    std::int64_t targetDim = dc_.totalDim(n + 1);
    Subspace result = Subspace::zero(targetDim);
    if (dc_.totalDim(n) > 0 && targetDim > 0) {
        const Subspace& z = cycles(r, p, n);
        const SparseMatrix dT = dc_.totalMatrix(n).transpose();
        std::vector<SparseVector> images;
        images.reserve(static_cast<std::size_t>(z.dim()));
        for (std::int64_t i = 0; i < z.dim(); ++i) {
            SparseVector w;
            for (const auto& [col, v] : z.basis().row(i))
                addScaled(w, v, dT.row(col));
            if (!w.empty())
                images.push_back(std::move(w));
        }
        result = Subspace::fromVectors(targetDim, images);
    }
    return boundaryCache_.emplace(key, std::move(result)).first->second;
}

const PageBlock& PageComputer::block(int r, int p, int q)
{
    auto key = std::tuple{r, p, q};
    auto it = blockCache_.find(key);
    if (it != blockCache_.end())
        return it->second;

    int n = p + q;
    PageBlock blk;
    blk.r = r;
    blk.p = p;
    blk.q = q;
    blk.numerator = cycles(r, p, n);
    blk.denominator = subspaceSum(cycles(r - 1, p + 1, n), boundaries(r - 1, p - r + 1, n - 1));
    try {
        blk.dim = quotientDim(blk.numerator, blk.denominator);
    }
    catch (const std::invalid_argument&) {
        throw InternalError("page denominator is not contained in the cycle space");
    }

    Subspace span = blk.denominator;
    for (std::int64_t i = 0; i < blk.numerator.dim(); ++i) {
        SparseVector v = blk.numerator.basis().row(i);
        if (span.contains(v))
            continue;
        span = subspaceSum(span, Subspace::fromVectors(blk.numerator.ambientDim(), {v}));
        blk.representatives.push_back(std::move(v));
    }
    if (static_cast<std::int64_t>(blk.representatives.size()) != blk.dim)
        throw InternalError("representative count does not match the page dimension");
    return blockCache_.emplace(key, std::move(blk)).first->second;
}

std::optional<SparseVector> PageComputer::classCoordinates(const PageBlock& blk,
                                                           const SparseVector& x)
{
    if (!blk.numerator.contains(x))
        return std::nullopt;
    std::int64_t reps = static_cast<std::int64_t>(blk.representatives.size());
    SparseMatrix a(blk.numerator.ambientDim(), reps + blk.denominator.dim());
    for (std::int64_t j = 0; j < reps; ++j)
        for (const auto& [row, v] : blk.representatives[static_cast<std::size_t>(j)])
            a.set(row, j, v);
    for (std::int64_t j = 0; j < blk.denominator.dim(); ++j)
        for (const auto& [row, v] : blk.denominator.basis().row(j))
            a.set(row, reps + j, v);
    auto sol = solve(a, x);
    if (!sol)
        throw InternalError("cycle not expressible over representatives and boundaries");
    SparseVector coords;
    for (const auto& [idx, c] : *sol)
        if (idx < reps)
            coords.emplace(idx, c);
    return coords;
}

const SparseMatrix& PageComputer::differential(int r, int p, int q)
{
    auto key = std::tuple{r, p, q};
    auto it = diffCache_.find(key);
    if (it != diffCache_.end())
        return it->second;

    const PageBlock& source = block(r, p, q);
    int tp = p + r;
    int tq = q - r + 1;
    SparseMatrix matrix;
    if (tp > dc_.m() || tq < 0 || tq > dc_.m()) {
        matrix = SparseMatrix(0, source.dim);  // target leaves the first quadrant
    }
    else {
        const PageBlock& target = block(r, tp, tq);
        matrix = SparseMatrix(target.dim, source.dim);
        if (source.dim > 0 && dc_.totalDim(p + q) > 0) {
            const SparseMatrix dT = dc_.totalMatrix(p + q).transpose();
            for (std::int64_t j = 0; j < source.dim; ++j) {
                SparseVector w;
                for (const auto& [col, v] : source.representatives[static_cast<std::size_t>(j)])
                    addScaled(w, v, dT.row(col));
                auto coords = classCoordinates(target, w);
                if (!coords)
                    throw InternalError("page differential image is not a cycle of the target");
                for (const auto& [i, c] : *coords)
                    matrix.set(i, j, c);
            }
        }
    }
    return diffCache_.emplace(key, std::move(matrix)).first->second;
}

std::int64_t Page::dim(int p, int q) const
{
    if (p < 0 || q < 0 || p >= static_cast<int>(dims.size()) ||
        q >= static_cast<int>(dims.size()))
        return 0;
    return dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

Page computePage(const DoubleComplex& dc, int r)
{
    if (r < 0)
        throw std::invalid_argument("page index must be non-negative");
    PageComputer pc(dc);
    int m = dc.m();
    Page page;
    page.r = r;
    page.dims.assign(m + 1, std::vector<std::int64_t>(m + 1, 0));
    for (int p = 0; p <= m; ++p) {
        for (int q = 0; q <= m; ++q) {
            PageBlock blk = pc.block(r, p, q);
            page.dims[p][q] = blk.dim;
            page.blocks.emplace(std::pair{p, q}, std::move(blk));
        }
    }
    return page;
}

SparseMatrix pageDifferential(const DoubleComplex& dc, int r, int p, int q)
{
    PageComputer pc(dc);
    return pc.differential(r, p, q);
}

// ---------------------------------------------------------------------------
// zig-zags

namespace {

struct ChainLayout {
    std::vector<std::int64_t> colOffset;  // per unknown beta_1..beta_L, plus end
    std::vector<std::int64_t> rowOffset;  // per equation 1..L, plus end
};

ChainLayout chainLayout(const DoubleComplex& dc, int p, int q, int unknowns)
{
    ChainLayout layout;
    layout.colOffset.assign(1, 0);
    layout.rowOffset.assign(1, 0);
    for (int i = 1; i <= unknowns; ++i) {
        layout.colOffset.push_back(layout.colOffset.back() + dc.blockDim(p + i, q - i));
        layout.rowOffset.push_back(layout.rowOffset.back() + dc.blockDim(p + i, q - i + 1));
    }
    return layout;
}

// The joint system for beta_1..beta_L given beta_0:
//   delBar beta_i = -del beta_{i-1}   (i = 1..L)
std::optional<std::vector<SparseVector>> solveChain(const DoubleComplex& dc, int p, int q, int L,
                                                    const Form& minusDelBeta0)
{
    ChainLayout layout = chainLayout(dc, p, q, L);
    SparseMatrix system(layout.rowOffset.back(), layout.colOffset.back());
    for (int e = 1; e <= L; ++e) {
        if (dc.blockDim(p + e, q - e + 1) == 0)
            continue;
        if (dc.blockDim(p + e, q - e) > 0) {
            const SparseMatrix& bar = dc.delBarMatrix(p + e, q - e);
            for (std::int64_t row = 0; row < bar.rows(); ++row)
                for (const auto& [col, v] : bar.row(row))
                    system.set(layout.rowOffset[e - 1] + row, layout.colOffset[e - 1] + col, v);
        }
        if (e >= 2 && dc.blockDim(p + e - 1, q - e + 1) > 0) {
            const SparseMatrix& del = dc.delMatrix(p + e - 1, q - e + 1);
            for (std::int64_t row = 0; row < del.rows(); ++row)
                for (const auto& [col, v] : del.row(row))
                    system.set(layout.rowOffset[e - 1] + row, layout.colOffset[e - 2] + col, v);
        }
    }
    SparseVector rhs;
    if (!minusDelBeta0.isZero())
        for (const auto& [idx, c] : dc.blockCoords(minusDelBeta0, p + 1, q))
            rhs.emplace(layout.rowOffset[0] + idx, c);

    auto sol = solve(system, rhs);
    if (!sol)
        return std::nullopt;
    std::vector<SparseVector> betas(static_cast<std::size_t>(L));
    for (const auto& [idx, c] : *sol) {
        auto next = std::upper_bound(layout.colOffset.begin(), layout.colOffset.end(), idx);
        std::size_t i = static_cast<std::size_t>(next - layout.colOffset.begin()) - 1;
        betas[i].emplace(idx - layout.colOffset[i], c);
    }
    return betas;
}

}  // namespace

ZigZagSearch findZigZag(const DoubleComplex& dc, const Form& beta0, int length)
{
    if (length < 1)
        throw std::invalid_argument("zig-zag length must be at least 1");
    if (beta0.ambient() != dc.m())
        throw AmbientMismatch();
    const DifferentialOperator& op = dc.differential();

    if (beta0.isZero()) {
        ZigZag z{0, 0, length, std::vector<Form>(static_cast<std::size_t>(length), Form(dc.m())),
                 Form(dc.m())};
        return ZigZagSearch{std::move(z), length};
    }

    auto pq = beta0.bidegree();
    if (!pq)
        throw std::invalid_argument("starting form must be bigraded homogeneous");
    auto [p, q] = *pq;
    if (!op.delBar(beta0).isZero())
        throw NotACocycle();

    Form minusDelBeta0 = -op.del(beta0);
    std::vector<SparseVector> best;
    for (int L = 1; L <= length - 1; ++L) {
        auto betas = solveChain(dc, p, q, L, minusDelBeta0);
        if (!betas)
            return ZigZagSearch{std::nullopt, L};
        best = std::move(*betas);
    }

    std::vector<Form> chain;
    chain.push_back(beta0);
    for (int i = 1; i <= length - 1; ++i)
        chain.push_back(dc.blockForm(p + i, q - i, best[static_cast<std::size_t>(i - 1)]));
    Form terminal = op.del(chain.back());
    ZigZag z{p, q, length, std::move(chain), std::move(terminal)};
    return ZigZagSearch{std::move(z), length};
}

ZigZagCheck verifyZigZag(const DoubleComplex& dc, const ZigZag& z)
{
    auto fail = [](int relation, std::string message) {
        return ZigZagCheck{false, relation, std::move(message)};
    };
    if (static_cast<int>(z.chain.size()) != z.length || z.length < 1)
        return fail(-1, "chain length does not match the declared length");
    for (const Form& f : z.chain)
        if (f.ambient() != dc.m())
            return fail(-1, "chain element from a different ambient algebra");

    const DifferentialOperator& op = dc.differential();
    for (int i = 0; i < z.length; ++i) {
        const Form& f = z.chain[static_cast<std::size_t>(i)];
        if (f.isZero())
            continue;
        auto pq = f.bidegree();
        if (!pq || pq->first != z.p + i || pq->second != z.q - i)
            return fail(i, "beta_" + std::to_string(i) + " is not of bidegree (p+i, q-i)");
    }

    if (!op.delBar(z.chain[0]).isZero())
        return fail(0, "delBar beta_0 != 0");
    for (int i = 1; i < z.length; ++i) {
        Form lhs = op.del(z.chain[static_cast<std::size_t>(i - 1)]) +
                   op.delBar(z.chain[static_cast<std::size_t>(i)]);
        if (!lhs.isZero())
            return fail(i, "del beta_" + std::to_string(i - 1) + " + delBar beta_" +
                               std::to_string(i) + " != 0");
    }
    if (op.del(z.chain.back()) != z.terminal)
        return fail(z.length, "terminal != del beta_" + std::to_string(z.length - 1));
    return ZigZagCheck{};
}

// ---------------------------------------------------------------------------
// cohomology and reports

std::vector<std::int64_t> totalCohomology(const DoubleComplex& dc)
{
    int m = dc.m();
    std::vector<std::int64_t> rank(static_cast<std::size_t>(2 * m) + 1, 0);
    for (int n = 0; n <= 2 * m; ++n)
        rank[static_cast<std::size_t>(n)] = rref(dc.totalMatrix(n)).rank;
    std::vector<std::int64_t> betti(static_cast<std::size_t>(2 * m) + 1, 0);
    for (int k = 0; k <= 2 * m; ++k) {
        betti[static_cast<std::size_t>(k)] = dc.totalDim(k) - rank[static_cast<std::size_t>(k)] -
                                             (k > 0 ? rank[static_cast<std::size_t>(k - 1)] : 0);
    }
    return betti;
}

std::vector<std::vector<std::int64_t>> dolbeaultDims(const DoubleComplex& dc)
{
    int m = dc.m();
    std::vector<std::vector<std::int64_t>> h(m + 1, std::vector<std::int64_t>(m + 1, 0));
    for (int p = 0; p <= m; ++p) {
        std::vector<std::int64_t> rank(static_cast<std::size_t>(m) + 1, 0);
        for (int q = 0; q <= m; ++q)
            rank[static_cast<std::size_t>(q)] = rref(dc.delBarMatrix(p, q)).rank;
        for (int q = 0; q <= m; ++q) {
            h[p][q] = dc.blockDim(p, q) - rank[static_cast<std::size_t>(q)] -
                      (q > 0 ? rank[static_cast<std::size_t>(q - 1)] : 0);
        }
    }
    return h;
}

std::vector<std::vector<std::int64_t>> delCohomologyDims(const DoubleComplex& dc)
{
    int m = dc.m();
    std::vector<std::vector<std::int64_t>> h(m + 1, std::vector<std::int64_t>(m + 1, 0));
    for (int q = 0; q <= m; ++q) {
        std::vector<std::int64_t> rank(static_cast<std::size_t>(m) + 1, 0);
        for (int p = 0; p <= m; ++p)
            rank[static_cast<std::size_t>(p)] = rref(dc.delMatrix(p, q)).rank;
        for (int p = 0; p <= m; ++p) {
            h[p][q] = dc.blockDim(p, q) - rank[static_cast<std::size_t>(p)] -
                      (p > 0 ? rank[static_cast<std::size_t>(p - 1)] : 0);
        }
    }
    return h;
}

FrolicherReport pagesUntilDegeneration(const DoubleComplex& dc, int maxPage)
{
    int m = dc.m();
    int rStar = m + 1;
    int cap = maxPage < 0 ? rStar : std::min(maxPage, rStar);

    PageComputer pc(dc);
    FrolicherReport report;
    report.m = m;
    report.maxPage = cap;
    report.pageDims.reserve(static_cast<std::size_t>(cap) + 1);
    for (int r = 0; r <= cap; ++r) {
        std::vector<std::vector<std::int64_t>> dims(m + 1, std::vector<std::int64_t>(m + 1, 0));
        for (int p = 0; p <= m; ++p)
            for (int q = 0; q <= m; ++q)
                dims[p][q] = pc.block(r, p, q).dim;
        report.pageDims.push_back(std::move(dims));
    }

    report.hodge.assign(m + 1, std::vector<std::int64_t>(m + 1, 0));
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q)
            report.hodge[p][q] = pc.block(1, p, q).dim;

    report.betti = totalCohomology(dc);
    report.euler = 0;
    for (int k = 0; k <= 2 * m; ++k)
        report.euler += (k % 2 == 0 ? 1 : -1) * report.betti[static_cast<std::size_t>(k)];

    if (cap == rStar) {
        int lastNonzero = 0;
        for (int r = 1; r <= m; ++r)
            for (int p = 0; p <= m; ++p)
                for (int q = 0; q <= m; ++q)
                    if (pc.differential(r, p, q).entryCount() > 0)
                        lastNonzero = std::max(lastNonzero, r);
        int r0 = lastNonzero + 1;
        if (report.pageDims[static_cast<std::size_t>(r0)] !=
            report.pageDims[static_cast<std::size_t>(rStar)])
            throw InternalError("page dimensions keep moving after all differentials vanish");
        report.degenerationPage = r0;
    }
    return report;
}

}  // namespace frolicher
