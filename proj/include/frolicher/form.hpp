#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "frolicher/monomial.hpp"
#include "frolicher/scalar.hpp"

namespace frolicher {

/// Thrown when two forms from different ambient algebras are combined.
class AmbientMismatch : public std::invalid_argument {
public:
    AmbientMismatch() : std::invalid_argument("forms have different ambient generator counts") {}
};

/// A sparse Scalar-linear combination of wedge monomials over m complex
/// generators. Immutable value; zero coefficients are never stored, so
/// equality is term-map equality. A Form may mix bidegrees (total-complex
/// elements); homogeneity is queryable, not an invariant.
class Form {
public:
    explicit Form(int m);

    static Form term(int m, const Monomial& mono, Scalar coeff);
    /// The 1-form f_index or ~f_index (index is 1-based).
    static Form generator(int m, int index, bool conjugated = false);
    /// Wedge product of 1-form generators in the listed order; each entry is
    /// (index, conjugated). Signs come out relative to canonical order.
    static Form wedgeOfGenerators(int m, const std::vector<std::pair<int, bool>>& factors);

    int ambient() const { return m_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    Scalar coefficient(const Monomial& mono) const;

    Form operator-() const;
    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(const Scalar& c) const;

    Form conjugate() const;
    Form bigradedComponent(int p, int q) const;

    /// (p,q) when every term has the same bidegree; nullopt for mixed forms.
    /// The zero form reports (0,0).
    std::optional<std::pair<int, int>> bidegree() const;
    /// Total degree when every term has the same one; zero form reports 0.
    std::optional<int> totalDegree() const;

    bool operator==(const Form& o) const { return m_ == o.m_ && terms_ == o.terms_; }
    bool operator!=(const Form& o) const { return !(*this == o); }

    friend Form wedge(const Form& a, const Form& b);

private:
    void addTerm(const Monomial& mono, const Scalar& coeff);

    int m_;
    std::map<Monomial, Scalar> terms_;
};

Form wedge(const Form& a, const Form& b);

inline Form conjugate(const Form& a) { return a.conjugate(); }
inline Form bigradedComponent(const Form& a, int p, int q) { return a.bigradedComponent(p, q); }

}  // namespace frolicher
