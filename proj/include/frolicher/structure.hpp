#pragma once

#include <string>
#include <vector>

#include "frolicher/form.hpp"

namespace frolicher {

/// The whole input datum: the differential of each holomorphic 1-form
/// generator. diffs[i] = d f_{i+1}, a form of total degree 2. The action on
/// conjugate generators is forced: d ~f_k = conjugate(d f_k).
struct StructureEquations {
    int m = 0;
    std::vector<Form> diffs;
};

/// Checks the invariants (degree-2 diffs, consistent ambient) and returns
/// the datum.
StructureEquations makeStructureEquations(int m, std::vector<Form> diffs);

struct OffendingGenerator {
    int index;         // 1-based generator index
    std::string what;  // "jacobi" or "integrability"
    Form diagnostic;   // d^2 f_index, resp. the (0,2)-component of d f_index
};

struct ValidationReport {
    bool jacobiOk = false;    // d^2 = 0 on every generator
    bool integrable = false;  // no (0,2)-component in any d f_k
    bool nilpotent = false;   // annihilator chain of 1-forms reaches everything
    std::vector<OffendingGenerator> offenders;

    bool ok() const { return jacobiOk && integrable; }
};

/// The Chevalley-Eilenberg differential induced by a set of structure
/// equations, extended to the full exterior algebra as an anti-derivation.
/// Immutable once built; all methods are pure.
class DifferentialOperator {
public:
    explicit DifferentialOperator(const StructureEquations& eq);

    int ambient() const { return m_; }

    Form d(const Form& a) const;
    Form d(const Monomial& mono) const;

    /// (p+1,q)-part of d on a bigraded-homogeneous form.
    Form del(const Form& a) const;
    /// (p,q+1)-part of d on a bigraded-homogeneous form.
    Form delBar(const Form& a) const;

private:
    int m_;
    std::vector<Form> dGen_;      // d f_k
    std::vector<Form> dConjGen_;  // d ~f_k = conjugate(d f_k)
};

Form applyD(const StructureEquations& eq, const Form& a);
Form del(const StructureEquations& eq, const Form& a);
Form delBar(const StructureEquations& eq, const Form& a);

ValidationReport validate(const StructureEquations& eq);

/// The built-in family X_n, complex dimension m = 2n. Generators are
/// ordered f_1..f_n = dx_1..dx_n and f_{n+1}..f_{2n} = w_1..w_n, with
/// d dx_k = 0, d w_1 = ~dx_1 ^ dx_1 and d w_k = -dx_k^dx_1 - dx_1^~dx_{k-1}
/// for k >= 2. Requires n >= 2.
StructureEquations familyXn(int n);

/// The explicit zig-zag chain beta_0..beta_{n-1} starting at
/// beta_0 = ~w_1 ^ ~dx_2 ^ ... ^ ~dx_{n-1} in bidegree (0, n-1) that
/// certifies d_n != 0 for familyXn(n).
std::vector<Form> familyXnZigZagChain(int n);

/// Built-in examples: "torus" (dim = m, all differentials zero) and
/// "iwasawa" (m = 3, d f_3 = -f_1^f_2). Unknown names are rejected.
StructureEquations builtinExample(const std::string& name, int dim = 0);

}  // namespace frolicher
