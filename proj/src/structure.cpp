#include "frolicher/structure.hpp"

#include <map>

#include "frolicher/exactla.hpp"

namespace frolicher {

StructureEquations makeStructureEquations(int m, std::vector<Form> diffs)
{
    if (m < 1 || m > 64)
        throw std::invalid_argument("generator count must be in 1..64");
    if (static_cast<int>(diffs.size()) != m)
        throw std::invalid_argument("expected one differential per generator");
    for (const Form& f : diffs) {
        if (f.ambient() != m)
            throw AmbientMismatch();
        auto deg = f.totalDegree();
        if (!f.isZero() && (!deg || *deg != 2))
            throw std::invalid_argument("generator differentials must have total degree 2");
    }
    return StructureEquations{m, std::move(diffs)};
}

DifferentialOperator::DifferentialOperator(const StructureEquations& eq) : m_(eq.m)
{
    if (static_cast<int>(eq.diffs.size()) != m_)
        throw std::invalid_argument("malformed structure equations");
    dGen_.reserve(m_);
    dConjGen_.reserve(m_);
    for (const Form& f : eq.diffs) {
        if (f.ambient() != m_)
            throw AmbientMismatch();
        dGen_.push_back(f);
        dConjGen_.push_back(f.conjugate());
    }
}

Form DifferentialOperator::d(const Monomial& mono) const
{
    // Leibniz over the canonical factor sequence. d of a single generator is
    // a 2-form, hence even: the replaced factor's differential commutes past
    // the remaining factors, so each summand is +/- (rest ^ d(generator)).
    Form result(m_);
    int p = mono.p();
    GeneratorMask bits = mono.holo;
    while (bits != 0) {
        int slot = std::countr_zero(bits);
        bits &= bits - 1;
        const Form& dg = dGen_[slot];
        if (dg.isZero())
            continue;
        int position = bitsBelow(mono.holo, slot);
        Monomial rest{mono.holo & ~(GeneratorMask(1) << slot), mono.anti};
        for (const auto& [dmono, c] : dg.terms()) {
            int sign = wedgeSign(rest, dmono);
            if (sign == 0)
                continue;
            if ((position & 1) != 0)
                sign = -sign;
            Monomial out{rest.holo | dmono.holo, rest.anti | dmono.anti};
            result = result + Form::term(m_, out, sign < 0 ? -c : c);
        }
    }
    bits = mono.anti;
    while (bits != 0) {
        int slot = std::countr_zero(bits);
        bits &= bits - 1;
        const Form& dg = dConjGen_[slot];
        if (dg.isZero())
            continue;
        int position = p + bitsBelow(mono.anti, slot);
        Monomial rest{mono.holo, mono.anti & ~(GeneratorMask(1) << slot)};
        for (const auto& [dmono, c] : dg.terms()) {
            int sign = wedgeSign(rest, dmono);
            if (sign == 0)
                continue;
            if ((position & 1) != 0)
                sign = -sign;
            Monomial out{rest.holo | dmono.holo, rest.anti | dmono.anti};
            result = result + Form::term(m_, out, sign < 0 ? -c : c);
        }
    }
    return result;
}

Form DifferentialOperator::d(const Form& a) const
{
    if (a.ambient() != m_)
        throw AmbientMismatch();
    Form result(m_);
    for (const auto& [mono, c] : a.terms())
        result = result + d(mono) * c;
    return result;
}

Form DifferentialOperator::del(const Form& a) const
{
    auto pq = a.bidegree();
    if (!pq)
        throw std::invalid_argument("del requires a bigraded-homogeneous form");
    if (pq->first + 1 > m_)
        return Form(m_);
    return d(a).bigradedComponent(pq->first + 1, pq->second);
}

Form DifferentialOperator::delBar(const Form& a) const
{
    auto pq = a.bidegree();
    if (!pq)
        throw std::invalid_argument("delBar requires a bigraded-homogeneous form");
    if (pq->second + 1 > m_)
        return Form(m_);
    return d(a).bigradedComponent(pq->first, pq->second + 1);
}

Form applyD(const StructureEquations& eq, const Form& a)
{
    return DifferentialOperator(eq).d(a);
}

Form del(const StructureEquations& eq, const Form& a)
{
    return DifferentialOperator(eq).del(a);
}

Form delBar(const StructureEquations& eq, const Form& a)
{
    return DifferentialOperator(eq).delBar(a);
}

namespace {

// Coordinates on the 2m-dimensional space of 1-forms: f_k -> k-1,
// ~f_k -> m+k-1.
Form oneFormFromCoords(int m, const SparseVector& v)
{
    Form f(m);
    for (const auto& [idx, c] : v) {
        bool conjugated = idx >= m;
        int index = static_cast<int>(conjugated ? idx - m + 1 : idx + 1);
        f = f + Form::generator(m, index, conjugated) * c;
    }
    return f;
}

// The nilpotency test runs on the ascending chain V_0 = ker d,
// V_j = {a : da in Lambda^2 V_{j-1}} inside the span of all 1-forms; the
// input is nilpotent iff the chain reaches the whole space.
bool nilpotencyChainReachesEverything(const DifferentialOperator& op, int m)
{
    // Index every degree-2 monomial of the complexified algebra.
    std::map<Monomial, std::int64_t> twoFormIndex;
    for (int i = 0; i < 2 * m; ++i) {
        for (int j = i + 1; j < 2 * m; ++j) {
            Monomial mono;
            if (i < m)
                mono.holo |= GeneratorMask(1) << i;
            else
                mono.anti |= GeneratorMask(1) << (i - m);
            if (j < m)
                mono.holo |= GeneratorMask(1) << j;
            else
                mono.anti |= GeneratorMask(1) << (j - m);
            twoFormIndex.emplace(mono, 0);
        }
    }
    std::int64_t next = 0;
    for (auto& [mono, idx] : twoFormIndex)
        idx = next++;
    auto indexOf = [&](const Monomial& mono) { return twoFormIndex.at(mono); };

    std::vector<SparseVector> dColumns(2 * m);
    for (int idx = 0; idx < 2 * m; ++idx) {
        bool conjugated = idx >= m;
        Form dg = op.d(Form::generator(m, conjugated ? idx - m + 1 : idx + 1, conjugated));
        for (const auto& [mono, c] : dg.terms())
            dColumns[idx].emplace(indexOf(mono), c);
    }
    std::int64_t twoFormDim = static_cast<std::int64_t>(twoFormIndex.size());
    if (twoFormDim == 0)
        return true;

    Subspace wedgeSquare = Subspace::zero(twoFormDim);
    std::int64_t previousDim = -1;
    for (int step = 0; step <= 2 * m; ++step) {
        // V = {a : da in wedgeSquare}, as kernel of the reduced matrix.
        SparseMatrix reduced(twoFormDim, 2 * m);
        for (int idx = 0; idx < 2 * m; ++idx)
            for (const auto& [row, c] : wedgeSquare.reduce(dColumns[idx]))
                reduced.set(row, idx, c);
        Subspace v = kernel(reduced);
        if (v.dim() == 2 * m)
            return true;
        if (v.dim() == previousDim)
            return false;  // chain stalled below the full space
        previousDim = v.dim();

        // wedgeSquare = Lambda^2 V for the next step.
        std::vector<Form> basisForms;
        for (std::int64_t r = 0; r < v.dim(); ++r)
            basisForms.push_back(oneFormFromCoords(m, v.basis().row(r)));
        std::vector<SparseVector> wedges;
        for (std::size_t a = 0; a < basisForms.size(); ++a) {
            for (std::size_t b = a + 1; b < basisForms.size(); ++b) {
                Form w = wedge(basisForms[a], basisForms[b]);
                SparseVector coords;
                for (const auto& [mono, c] : w.terms())
                    coords.emplace(indexOf(mono), c);
                if (!coords.empty())
                    wedges.push_back(std::move(coords));
            }
        }
        wedgeSquare = Subspace::fromVectors(twoFormDim, wedges);
    }
    return false;
}

}  // namespace

ValidationReport validate(const StructureEquations& eq)
{
    DifferentialOperator op(eq);
    ValidationReport report;
    report.jacobiOk = true;
    report.integrable = true;
    for (int k = 1; k <= eq.m; ++k) {
        Form ddg = op.d(eq.diffs[k - 1]);
        if (!ddg.isZero()) {
            report.jacobiOk = false;
            report.offenders.push_back({k, "jacobi", ddg});
        }
        if (eq.m >= 2) {  // a (0,2)-component needs two anti-holomorphic slots
            Form bad = eq.diffs[k - 1].bigradedComponent(0, 2);
            if (!bad.isZero()) {
                report.integrable = false;
                report.offenders.push_back({k, "integrability", bad});
            }
        }
    }
    report.nilpotent = report.jacobiOk && nilpotencyChainReachesEverything(op, eq.m);
    return report;
}

StructureEquations familyXn(int n)
{
    if (n < 2)
        throw std::invalid_argument("familyXn requires n >= 2");
    if (n > 32)
        throw std::invalid_argument("familyXn requires 2n <= 64 generators");
    int m = 2 * n;
    std::vector<Form> diffs(m, Form(m));
    auto dx = [&](int k) { return Form::generator(m, k); };
    auto dxBar = [&](int k) { return Form::generator(m, k, true); };
    // w_k is generator n+k; dx_k stays closed.
    diffs[n] = wedge(dxBar(1), dx(1));
    for (int k = 2; k <= n; ++k)
        diffs[n + k - 1] = -wedge(dx(k), dx(1)) - wedge(dx(1), dxBar(k - 1));
    return makeStructureEquations(m, std::move(diffs));
}

std::vector<Form> familyXnZigZagChain(int n)
{
    if (n < 2)
        throw std::invalid_argument("familyXnZigZagChain requires n >= 2");
    int m = 2 * n;
    std::vector<Form> chain;
    // beta_0 = ~w_1 ^ ~dx_2 ^ ... ^ ~dx_{n-1}
    std::vector<std::pair<int, bool>> factors{{n + 1, true}};
    for (int j = 2; j <= n - 1; ++j)
        factors.emplace_back(j, true);
    chain.push_back(Form::wedgeOfGenerators(m, factors));
    // beta_{k-1} = dx_2 ^..^ dx_{k-1} ^ w_k ^ ~dx_k ^..^ ~dx_{n-1}, k = 2..n
    for (int k = 2; k <= n; ++k) {
        factors.clear();
        for (int j = 2; j <= k - 1; ++j)
            factors.emplace_back(j, false);
        factors.emplace_back(n + k, false);
        for (int j = k; j <= n - 1; ++j)
            factors.emplace_back(j, true);
        chain.push_back(Form::wedgeOfGenerators(m, factors));
    }
    return chain;
}

StructureEquations builtinExample(const std::string& name, int dim)
{
    if (name == "torus") {
        if (dim < 1 || dim > 64)
            throw std::invalid_argument("torus requires a dimension in 1..64");
        return makeStructureEquations(dim, std::vector<Form>(dim, Form(dim)));
    }
    if (name == "iwasawa") {
        std::vector<Form> diffs(3, Form(3));
        diffs[2] = -wedge(Form::generator(3, 1), Form::generator(3, 2));
        return makeStructureEquations(3, std::move(diffs));
    }
    throw std::invalid_argument("unknown builtin example: " + name);
}

}  // namespace frolicher
