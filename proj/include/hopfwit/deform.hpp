#pragma once

#include "witness.hpp"

namespace hopfwit {

// Deformation maps: turning splittings at a weaker level into morphisms at a
// stronger level, with naturality checked on instances rather than assumed.

// A primitive separable extension K = k(alpha) with minimal polynomial
// p(X) = X^n - sum c_i X^i; requires gcd(p, p') = 1 and c_0 != 0.
struct PrimitiveExtensionData {
    FieldPtr K;              // SimpleExtension handle
    FieldPtr k;              // base field
    std::vector<Scalar> c;   // c_0..c_{n-1} over k, p(X) = X^n - sum c_i X^i
    Scalar alpha;            // class of X in K
    Scalar dp_alpha_inv;     // p'(alpha)^{-1}

    static PrimitiveExtensionData from_field(const FieldPtr& ext);
    size_t degree() const { return c.size(); }
};

// A K-vector space presented over k by the k-linear matrix of
// multiplication-by-alpha.
struct KSpace {
    size_t kdim = 0;
    Matrix alpha_action;
};

// K^m as a k-space (alpha acts blockwise via the companion structure)
KSpace kspace_free(const PrimitiveExtensionData& d, size_t m);
// the k-linear matrix by which the scalar s in K acts on the K-space
Matrix scalar_action(const PrimitiveExtensionData& d, const KSpace& space, const Scalar& s);
bool is_k_linear_over_K(const KSpace& m, const KSpace& n, const Matrix& f); // commutes with alpha

// P(f)(x) = p'(alpha)^{-1} sum_i alpha^{-i-1} (sum_{j<=i} c_j alpha^j) f(alpha^i x).
// Sends any k-linear map M -> N to a K-linear one; fixes maps that are
// already K-linear and is natural in f on test squares.
Matrix field_ext_deform(const PrimitiveExtensionData& d, const KSpace& m, const KSpace& n,
                        const Matrix& f);

// P(g)(x) = g(x_[0])_[0] theta(g(x_[0])_[1] (x) x_[1]) for an A-linear g; the
// output is C-colinear, and entwined morphisms are fixed entrywise.
Matrix deform_to_colinear(const EntwiningStructure& e, const Matrix& theta, const EntwinedModule& m,
                          const EntwinedModule& n, const Matrix& g);

// From an A-linear retraction p of an entwined monic i, produce a colinear
// retraction r = P(p) with r o i = id exactly.
Matrix maschke_split(const EntwiningStructure& e, const Matrix& theta, const EntwinedModule& m,
                     const EntwinedModule& n, const Matrix& i, const Matrix& p);

} // namespace hopfwit
