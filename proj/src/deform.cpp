#include "hopfwit/deform.hpp"

namespace hopfwit {

namespace {

Scalar embed_base(const FieldPtr& ext, const Scalar& b) { return ext->make_ext({b}); }

} // namespace

PrimitiveExtensionData PrimitiveExtensionData::from_field(const FieldPtr& ext) {
    if (ext->kind() != FieldKind::SimpleExtension)
        throw StructureMismatch("primitive extension data needs a SimpleExtension field");
    const FieldPtr& k = ext->base();
    const auto& mp = ext->minpoly();
    polyring::Poly der = polyring::derivative(mp, k);
    polyring::Poly g = polyring::gcd_monic(mp, der, k);
    if (polyring::degree(g) != 0)
        throw InseparableMinimalPolynomial("gcd(p, p') is not constant; the extension is inseparable");
    if (mp[0].is_zero())
        throw ReducibleMinimalPolynomial("constant term zero: X divides the minimal polynomial");
    PrimitiveExtensionData d;
    d.K = ext;
    d.k = k;
    size_t n = ext->degree();
    d.c.reserve(n);
    for (size_t i = 0; i < n; ++i) d.c.push_back(-mp[i]);
    d.alpha = ext->generator();
    Scalar dp = ext->zero();
    for (size_t i = 0; i < der.size(); ++i) dp = dp + embed_base(ext, der[i]) * d.alpha.pow((long)i);
    if (dp.is_zero()) throw InseparableMinimalPolynomial("p'(alpha) = 0");
    d.dp_alpha_inv = dp.inv();
    return d;
}

KSpace kspace_free(const PrimitiveExtensionData& d, size_t m) {
    size_t n = d.degree();
    const FieldPtr& k = d.k;
    Matrix a(k, n, n);
    for (size_t j = 0; j + 1 < n; ++j) a.at(j + 1, j) = k->one();
    for (size_t i = 0; i < n; ++i) a.at(i, n - 1) = d.c[i];
    return KSpace{m * n, kron(Matrix::identity(k, m), a)};
}

Matrix scalar_action(const PrimitiveExtensionData& d, const KSpace& space, const Scalar& s) {
    if (!d.K->same(s.field())) throw FieldMismatch("scalar_action: scalar not in K");
    Matrix r(d.k, space.kdim, space.kdim);
    Matrix power = Matrix::identity(d.k, space.kdim);
    const auto& coeffs = s.ext().coeffs;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero()) r = r + power * coeffs[i];
        if (i + 1 < coeffs.size()) power = power * space.alpha_action;
    }
    return r;
}

bool is_k_linear_over_K(const KSpace& m, const KSpace& n, const Matrix& f) {
    return f * m.alpha_action == n.alpha_action * f;
}

Matrix field_ext_deform(const PrimitiveExtensionData& d, const KSpace& m, const KSpace& n,
                        const Matrix& f) {
    size_t deg = d.degree();
    if (f.rows() != n.kdim || f.cols() != m.kdim) throw DimensionMismatch("field_ext_deform: map shape");
    // alpha actions must satisfy the minimal polynomial
    for (const KSpace* sp : {&m, &n}) {
        Matrix val = sp->alpha_action;
        for (size_t i = 0; i < deg - 1; ++i) val = val * sp->alpha_action; // alpha^deg
        Matrix rhs(d.k, sp->kdim, sp->kdim);
        Matrix power = Matrix::identity(d.k, sp->kdim);
        for (size_t i = 0; i < deg; ++i) {
            rhs = rhs + power * d.c[i];
            power = power * sp->alpha_action;
        }
        if (val != rhs) throw StructureMismatch("alpha action does not satisfy the minimal polynomial");
    }
    Matrix result(d.k, n.kdim, m.kdim);
    Matrix alpha_pow_m = Matrix::identity(d.k, m.kdim);
    for (size_t i = 0; i < deg; ++i) {
        // s_i = p'(alpha)^{-1} alpha^{-i-1} sum_{j<=i} c_j alpha^j
        Scalar inner = d.K->zero();
        for (size_t j = 0; j <= i; ++j) inner = inner + embed_base(d.K, d.c[j]) * d.alpha.pow((long)j);
        Scalar s_i = d.dp_alpha_inv * d.alpha.pow(-(long)i - 1) * inner;
        result = result + scalar_action(d, n, s_i) * f * alpha_pow_m;
        alpha_pow_m = alpha_pow_m * m.alpha_action;
    }
    return result;
}

Matrix deform_to_colinear(const EntwiningStructure& e, const Matrix& theta, const EntwinedModule& m,
                          const EntwinedModule& n, const Matrix& g) {
    Witness th;
    th.tag = WitnessTag::Theta;
    th.field = e.A.field;
    th.parts["data"] = theta;
    if (!verify_theta(e, th).ok()) throw InvalidTheta("theta fails its defining conditions");
    if (g.rows() != n.dim || g.cols() != m.dim) throw DimensionMismatch("deform_to_colinear: map shape");
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix idc = Matrix::identity(f, dc);
    Matrix idn = Matrix::identity(f, n.dim);
    (void)da;
    // x -> g(x_[0])_[0] theta(g(x_[0])_[1] (x) x_[1])
    return n.action.action_map(da) * kron(idn, theta) * kron(n.coaction.rho, idc) * kron(g, idc) *
           m.coaction.rho;
}

Matrix maschke_split(const EntwiningStructure& e, const Matrix& theta, const EntwinedModule& m,
                     const EntwinedModule& n, const Matrix& i, const Matrix& p) {
    if (p * i != Matrix::identity(e.A.field, m.dim))
        throw NotARetraction("p is not a retraction of i");
    Matrix r = deform_to_colinear(e, theta, n, m, p);
    if (r * i != Matrix::identity(e.A.field, m.dim))
        throw Error("internal: deformed retraction failed to split the monic");
    return r;
}

} // namespace hopfwit
