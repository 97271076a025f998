#include "frolicher/form.hpp"

namespace frolicher {

std::int64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    __int128 v = 1;
    for (int i = 0; i < k; ++i) {
        v = v * (n - i) / (i + 1);
        if (v > __int128(INT64_MAX))
            throw std::overflow_error("binomial overflows int64");
    }
    return static_cast<std::int64_t>(v);
}

std::int64_t combinationRank(GeneratorMask mask)
{
    std::int64_t rank = 0;
    int j = 1;
    while (mask != 0) {
        int c = std::countr_zero(mask);
        mask &= mask - 1;
        rank += binomial(c, j);
        ++j;
    }
    return rank;
}

Form::Form(int m) : m_(m)
{
    if (m < 1 || m > 64)
        throw std::invalid_argument("ambient generator count must be in 1..64");
}

Form Form::term(int m, const Monomial& mono, Scalar coeff)
{
    Form f(m);
    GeneratorMask valid = m == 64 ? ~GeneratorMask(0) : (GeneratorMask(1) << m) - 1;
    if ((mono.holo & ~valid) != 0 || (mono.anti & ~valid) != 0)
        throw std::invalid_argument("monomial uses a generator outside the ambient algebra");
    f.addTerm(mono, coeff);
    return f;
}

Form Form::generator(int m, int index, bool conjugated)
{
    if (index < 1 || index > m)
        throw std::invalid_argument("generator index out of range");
    Monomial mono;
    (conjugated ? mono.anti : mono.holo) = GeneratorMask(1) << (index - 1);
    return term(m, mono, Scalar(1));
}

Form Form::wedgeOfGenerators(int m, const std::vector<std::pair<int, bool>>& factors)
{
    Form result = term(m, Monomial{}, Scalar(1));
    for (const auto& [index, conjugated] : factors)
        result = wedge(result, generator(m, index, conjugated));
    return result;
}

Scalar Form::coefficient(const Monomial& mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Form::addTerm(const Monomial& mono, const Scalar& coeff)
{
    if (coeff.isZero())
        return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.isZero())
            terms_.erase(it);
    }
}

Form Form::operator-() const
{
    Form r(m_);
    for (const auto& [mono, c] : terms_)
        r.terms_.emplace(mono, -c);
    return r;
}

Form Form::operator+(const Form& o) const
{
    if (m_ != o.m_)
        throw AmbientMismatch();
    Form r = *this;
    for (const auto& [mono, c] : o.terms_)
        r.addTerm(mono, c);
    return r;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator*(const Scalar& c) const
{
    Form r(m_);
    if (c.isZero())
        return r;
    for (const auto& [mono, coeff] : terms_)
        r.terms_.emplace(mono, coeff * c);
    return r;
}

Form wedge(const Form& a, const Form& b)
{
    if (a.m_ != b.m_)
        throw AmbientMismatch();
    Form r(a.m_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            int sign = wedgeSign(ma, mb);
            if (sign == 0)
                continue;
            Monomial mono{ma.holo | mb.holo, ma.anti | mb.anti};
            Scalar c = ca * cb;
            r.addTerm(mono, sign < 0 ? -c : c);
        }
    }
    return r;
}

Form Form::conjugate() const
{
    Form r(m_);
    for (const auto& [mono, c] : terms_) {
        // Swapping the blocks re-sorts p factors past q factors.
        bool flip = (mono.p() * mono.q()) % 2 != 0;
        Scalar cc = c.conj();
        r.terms_.emplace(Monomial{mono.anti, mono.holo}, flip ? -cc : cc);
    }
    return r;
}

Form Form::bigradedComponent(int p, int q) const
{
    if (p < 0 || q < 0 || p > m_ || q > m_)
        throw std::invalid_argument("bidegree out of range");
    Form r(m_);
    for (const auto& [mono, c] : terms_)
        if (mono.p() == p && mono.q() == q)
            r.terms_.emplace(mono, c);
    return r;
}

std::optional<std::pair<int, int>> Form::bidegree() const
{
    if (terms_.empty())
        return std::pair{0, 0};
    auto first = terms_.begin()->first;
    std::pair<int, int> pq{first.p(), first.q()};
    for (const auto& [mono, c] : terms_)
        if (mono.p() != pq.first || mono.q() != pq.second)
            return std::nullopt;
    return pq;
}

std::optional<int> Form::totalDegree() const
{
    if (terms_.empty())
        return 0;
    int deg = terms_.begin()->first.degree();
    for (const auto& [mono, c] : terms_)
        if (mono.degree() != deg)
            return std::nullopt;
    return deg;
}

}  // namespace frolicher
