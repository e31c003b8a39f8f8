#include "hopfwit/witness.hpp"

namespace hopfwit {

namespace {

void add_eq(CheckReport& rep, const std::string& name, const Matrix& lhs, const Matrix& rhs) {
    bool ok = lhs == rhs;
    std::string detail;
    if (!ok) {
        for (size_t j = 0; j < lhs.cols() && detail.empty(); ++j)
            for (size_t i = 0; i < lhs.rows(); ++i)
                if (lhs.at(i, j) != rhs.at(i, j)) {
                    detail = "first mismatch at column " + std::to_string(j);
                    break;
                }
        if (detail.empty()) detail = "shape mismatch";
    }
    rep.add(name, ok, detail);
}

void assert_sound(const CheckReport& rep, const std::string& solver) {
    if (!rep.ok())
        throw Error("internal: solver " + solver + " produced a witness its verifier rejects\n" +
                    rep.pretty());
}

void require_algebra_map(const Presentation& from, const Presentation& to, const Matrix& iota,
                         const std::string& name) {
    if (iota.rows() != to.dim || iota.cols() != from.dim)
        throw DimensionMismatch(name + ": embedding shape");
    Matrix lhs = iota * from.mult();
    Matrix rhs = to.mult() * kron(iota, iota);
    if (lhs != rhs) throw NotAlgebraMap(name + " does not respect multiplication");
    if (iota.apply(from.unit()) != to.unit()) throw NotAlgebraMap(name + " does not preserve the unit");
}

void require_subalgebra_span(const Presentation& s, const std::vector<Vec>& t_span) {
    std::vector<Vec> span = t_span;
    if (!in_span(span, s.unit(), s.field)) throw TNotSubalgebra("1 is not in the span of T");
    for (const auto& a : t_span)
        for (const auto& b : t_span)
            if (!in_span(span, s.mul_vec(a, b), s.field))
                throw TNotSubalgebra("T is not closed under multiplication");
}

void check_relhopf_datum(const Presentation& l, const Presentation& a,
                         const ComoduleCoaction& coaction_a) {
    DoiKoppinenDatum d{l, a, coaction_a, l, regular_module(l)};
    CheckReport rep = check_doi_koppinen(d);
    if (!rep.ok()) throw InvalidDatum("relative Hopf datum fails:\n" + rep.pretty());
}

void check_lc_datum(const Presentation& l, const Presentation& c, const ModuleAction& action_c) {
    DoiKoppinenDatum d{l, l, regular_comodule(l), c, action_c};
    CheckReport rep = check_doi_koppinen(d);
    if (!rep.ok()) throw InvalidDatum("[L,C] datum fails:\n" + rep.pretty());
}

Witness make_witness(WitnessTag tag, const FieldPtr& field, std::map<std::string, Matrix> parts,
                     std::map<std::string, std::string> context) {
    Witness w;
    w.tag = tag;
    w.field = field;
    w.parts = std::move(parts);
    w.context = std::move(context);
    return w;
}

} // namespace

std::string tag_name(WitnessTag t) {
    switch (t) {
        case WitnessTag::NormalizedIntegral: return "integral";
        case WitnessTag::DualIntegral: return "dual_integral";
        case WitnessTag::RelativeCasimir: return "casimir";
        case WitnessTag::BimoduleRetraction: return "bimodule_retraction";
        case WitnessTag::Theta: return "theta";
        case WitnessTag::Cocasimir: return "cocasimir";
        case WitnessTag::TotalIntegral: return "total_integral";
        case WitnessTag::AugmentedCointegral: return "cointegral";
        case WitnessTag::Beta: return "beta";
        case WitnessTag::FrobeniusRing: return "frobenius_ring";
        case WitnessTag::FrobeniusEntwining: return "frobenius_entwining";
        case WitnessTag::FrobeniusHK: return "frobenius_hk";
        case WitnessTag::Alpha: return "alpha";
        case WitnessTag::CentralX: return "central_x";
        case WitnessTag::QuantumIntegral: return "quantum_integral";
    }
    return "?";
}

WitnessTag tag_from_name(const std::string& name) {
    for (int t = 0; t <= (int)WitnessTag::QuantumIntegral; ++t)
        if (tag_name((WitnessTag)t) == name) return (WitnessTag)t;
    throw ParseError("unknown witness tag '" + name + "'");
}

const Matrix& Witness::part(const std::string& name) const {
    auto it = parts.find(name);
    if (it == parts.end()) throw WrongTag("witness has no part '" + name + "'");
    return it->second;
}

nlohmann::json Witness::to_json() const {
    nlohmann::json j;
    j["tag"] = tag_name(tag);
    j["field"] = field->to_json();
    if (parts.size() == 1 && parts.count("data")) {
        j["data"] = data().to_json();
    } else {
        nlohmann::json d;
        for (const auto& [k, m] : parts) d[k] = m.to_json();
        j["data"] = d;
    }
    j["context"] = context;
    j["verified"] = true;
    return j;
}

Witness Witness::from_json(const nlohmann::json& j) {
    Witness w;
    w.tag = tag_from_name(j.at("tag").get<std::string>());
    w.field = Field::from_json(j.at("field"));
    const auto& d = j.at("data");
    if (d.contains("rows")) {
        w.parts["data"] = Matrix::from_json(w.field, d);
    } else {
        for (auto it = d.begin(); it != d.end(); ++it)
            w.parts[it.key()] = Matrix::from_json(w.field, it.value());
    }
    if (j.contains("context"))
        w.context = j.at("context").get<std::map<std::string, std::string>>();
    return w;
}

std::vector<Vec> full_basis_span(const Presentation& s) {
    std::vector<Vec> span;
    for (size_t i = 0; i < s.dim; ++i) span.push_back(unit_vec(s.field, s.dim, i));
    return span;
}

// ---------------------------------------------------------------------------
// relative Casimir elements (separability idempotents when T = S)

CheckReport verify_relative_casimir(const Presentation& s, const std::vector<Vec>& t_span,
                                    const Witness& w) {
    if (w.tag != WitnessTag::RelativeCasimir) throw WrongTag("expected a casimir witness");
    require_subalgebra_span(s, t_span);
    size_t n = s.dim;
    const Matrix& e = w.data(); // n^2 x 1
    if (e.rows() != n * n || e.cols() != 1) throw DimensionMismatch("casimir witness shape");
    Matrix id = Matrix::identity(s.field, n);
    CheckReport rep;
    bool centr = true;
    std::string detail;
    for (size_t t = 0; t < t_span.size(); ++t) {
        Matrix lhs = kron(s.left_mult(t_span[t]), id) * e;
        Matrix rhs = kron(id, s.right_mult(t_span[t])) * e;
        if (lhs != rhs) {
            centr = false;
            detail = "fails for spanning element " + std::to_string(t);
            break;
        }
    }
    rep.add("t e = e t for all t in T", centr, detail);
    add_eq(rep, "multiplication sends e to 1", s.mult() * e, s.unit_col());
    return rep;
}

std::optional<Witness> solve_relative_casimir(const Presentation& s, const std::vector<Vec>& t_span) {
    require_subalgebra_span(s, t_span);
    size_t n = s.dim;
    const FieldPtr& f = s.field;
    Matrix id = Matrix::identity(f, n);
    AffineMapSystem sys(f, n * n, 1);
    for (const auto& t : t_span) {
        Matrix diff = kron(s.left_mult(t), id) - kron(id, s.right_mult(t));
        sys.require([diff](const Matrix& x) { return diff * x; }, Matrix(s.field, n * n, 1));
    }
    Matrix mult = s.mult();
    sys.require([mult](const Matrix& x) { return mult * x; }, s.unit_col());
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    Witness w = make_witness(WitnessTag::RelativeCasimir, f, {{"data", *sol}},
                             {{"S", s.hash()}});
    assert_sound(verify_relative_casimir(s, t_span, w), "relative_casimir");
    return w;
}

// ---------------------------------------------------------------------------
// bimodule retractions of R -> S

CheckReport verify_bimodule_retraction(const Presentation& r, const Matrix& iota_r,
                                       const Presentation& q, const Matrix& iota_q,
                                       const Presentation& s, const Witness& w) {
    if (w.tag != WitnessTag::BimoduleRetraction) throw WrongTag("expected a bimodule_retraction witness");
    require_algebra_map(r, s, iota_r, "R -> S");
    require_algebra_map(q, s, iota_q, "Q -> S");
    const Matrix& nu = w.data(); // dimR x dimS
    CheckReport rep;
    bool left = true, right = true;
    std::string dl, dr;
    for (size_t j = 0; j < r.dim; ++j) {
        Vec rj = iota_r.col(j);
        if (nu * s.left_mult(rj) != r.left_mult(unit_vec(r.field, r.dim, j)) * nu) {
            left = false;
            dl = "fails for R basis " + std::to_string(j);
            break;
        }
    }
    for (size_t j = 0; j < q.dim; ++j) {
        Vec qj = iota_q.col(j);
        if (iota_r * nu * s.right_mult(qj) != s.right_mult(qj) * iota_r * nu) {
            right = false;
            dr = "fails for Q basis " + std::to_string(j);
            break;
        }
    }
    rep.add("left R-linearity", left, dl);
    rep.add("right Q-linearity", right, dr);
    rep.add("nu(1) = 1", nu.apply(s.unit()) == r.unit());
    return rep;
}

std::optional<Witness> solve_bimodule_retraction(const Presentation& r, const Matrix& iota_r,
                                                 const Presentation& q, const Matrix& iota_q,
                                                 const Presentation& s) {
    require_algebra_map(r, s, iota_r, "R -> S");
    require_algebra_map(q, s, iota_q, "Q -> S");
    const FieldPtr& f = s.field;
    AffineMapSystem sys(f, r.dim, s.dim);
    for (size_t j = 0; j < r.dim; ++j) {
        Matrix ls = s.left_mult(iota_r.col(j));
        Matrix lr = r.left_mult(unit_vec(f, r.dim, j));
        sys.require([ls, lr](const Matrix& nu) { return nu * ls - lr * nu; }, Matrix(f, r.dim, s.dim));
    }
    for (size_t j = 0; j < q.dim; ++j) {
        Matrix rs = s.right_mult(iota_q.col(j));
        sys.require([rs, iota_r](const Matrix& nu) { return iota_r * nu * rs - rs * iota_r * nu; },
                    Matrix(f, s.dim, s.dim));
    }
    Matrix one_s = s.unit_col();
    sys.require([one_s](const Matrix& nu) { return nu * one_s; }, Matrix::column(r.field, r.unit()));
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    Witness w = make_witness(WitnessTag::BimoduleRetraction, f, {{"data", *sol}},
                             {{"S", s.hash()}, {"R", r.hash()}, {"Q", q.hash()}});
    assert_sound(verify_bimodule_retraction(r, iota_r, q, iota_q, s, w), "bimodule_retraction");
    return w;
}

// ---------------------------------------------------------------------------
// integrals

CheckReport verify_normalized_integral(const Presentation& h, const Witness& w) {
    if (w.tag != WitnessTag::NormalizedIntegral) throw WrongTag("expected an integral witness");
    const Matrix& t = w.data(); // dim x 1
    if (t.rows() != h.dim || t.cols() != 1) throw DimensionMismatch("integral witness shape");
    CheckReport rep;
    bool integral = true;
    std::string detail;
    for (size_t j = 0; j < h.dim; ++j) {
        Vec ej = unit_vec(h.field, h.dim, j);
        Vec lhs = h.mul_vec(t.col(0), ej);
        Vec rhs = vec_scale(t.col(0), h.counit()[j]);
        if (lhs != rhs) {
            integral = false;
            detail = "t h != eps(h) t at basis " + std::to_string(j);
            break;
        }
    }
    rep.add("right integral condition", integral, detail);
    rep.add("eps(t) = 1", h.counit_apply(t.col(0)).is_one());
    return rep;
}

std::optional<Witness> solve_normalized_integral(const Presentation& h) {
    const FieldPtr& f = h.field;
    size_t n = h.dim;
    AffineMapSystem sys(f, n, 1);
    for (size_t j = 0; j < n; ++j) {
        Matrix cond = h.right_mult(unit_vec(f, n, j)) - Matrix::identity(f, n) * h.counit()[j];
        sys.require([cond](const Matrix& t) { return cond * t; }, Matrix(f, n, 1));
    }
    Matrix eps = h.counit_row();
    sys.require([eps](const Matrix& t) { return eps * t; }, Matrix::identity(f, 1));
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    Witness w = make_witness(WitnessTag::NormalizedIntegral, f, {{"data", *sol}}, {{"H", h.hash()}});
    assert_sound(verify_normalized_integral(h, w), "normalized_integral");
    return w;
}

CheckReport verify_dual_normalized_integral(const Presentation& h, const Witness& w) {
    if (w.tag != WitnessTag::DualIntegral) throw WrongTag("expected a dual_integral witness");
    const Matrix& phi = w.data(); // 1 x dim
    if (phi.rows() != 1 || phi.cols() != h.dim) throw DimensionMismatch("dual integral witness shape");
    CheckReport rep;
    Matrix id = Matrix::identity(h.field, h.dim);
    // phi(h1) h2 = phi(h) 1
    add_eq(rep, "dual right integral condition", kron(phi, id) * h.comult(), h.unit_col() * phi);
    rep.add("phi(1) = 1", (phi * h.unit_col()).at(0, 0).is_one());
    return rep;
}

std::optional<Witness> solve_dual_normalized_integral(const Presentation& h) {
    const FieldPtr& f = h.field;
    size_t n = h.dim;
    Matrix id = Matrix::identity(f, n);
    Matrix dl = h.comult();
    Matrix one = h.unit_col();
    AffineMapSystem sys(f, 1, n);
    sys.require([&, dl, id, one](const Matrix& phi) { return kron(phi, id) * dl - one * phi; },
                Matrix(f, n, n));
    sys.require([one](const Matrix& phi) { return phi * one; }, Matrix::identity(f, 1));
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    Witness w = make_witness(WitnessTag::DualIntegral, f, {{"data", *sol}}, {{"H", h.hash()}});
    assert_sound(verify_dual_normalized_integral(h, w), "dual_normalized_integral");
    return w;
}

// ---------------------------------------------------------------------------
// theta and cocasimir maps for an entwining

namespace {

// theta(c (x) d1) (x) d2 minus theta(c2 (x) d)_psi (x) c1^psi, as a function of theta
Matrix theta_side_condition(const EntwiningStructure& e, const Matrix& theta) {
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix ida = Matrix::identity(f, da), idc = Matrix::identity(f, dc);
    Matrix lhs = kron(theta, idc) * kron(idc, e.C.comult());
    Matrix rhs = e.psi * kron(idc, theta) * kron(e.C.comult(), idc);
    return lhs - rhs;
}

// e1(c) (x) e2(c) a minus a_psi e1(c^psi) (x) e2(c^psi), as a function of emap
Matrix cocasimir_side_condition(const EntwiningStructure& e, const Matrix& emap) {
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA();
    Matrix ida = Matrix::identity(f, da);
    const Matrix& m = e.A.mult();
    Matrix lhs = kron(ida, m) * kron(emap, ida);
    Matrix rhs = kron(m, ida) * kron(ida, emap) * e.psi;
    return lhs - rhs;
}

} // namespace

CheckReport verify_theta(const EntwiningStructure& e, const Witness& w) {
    if (w.tag != WitnessTag::Theta && w.tag != WitnessTag::QuantumIntegral)
        throw WrongTag("expected a theta witness");
    const Matrix& theta = w.data();
    size_t da = e.dimA(), dc = e.dimC();
    if (theta.rows() != da || theta.cols() != dc * dc) throw DimensionMismatch("theta shape");
    CheckReport rep;
    add_eq(rep, "colinearity-type condition", theta_side_condition(e, theta),
           Matrix(e.A.field, da * dc, dc * dc));
    add_eq(rep, "theta o Delta = unit o counit", theta * e.C.comult(),
           e.A.unit_col() * e.C.counit_row());
    return rep;
}

std::optional<Witness> solve_theta(const EntwiningStructure& e) {
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    AffineMapSystem sys(f, da, dc * dc);
    sys.require([&e](const Matrix& th) { return theta_side_condition(e, th); },
                Matrix(f, da * dc, dc * dc));
    sys.require([&e](const Matrix& th) { return th * e.C.comult(); },
                e.A.unit_col() * e.C.counit_row());
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    Witness w = make_witness(WitnessTag::Theta, f, {{"data", *sol}}, {{"entwining", e.hash()}});
    assert_sound(verify_theta(e, w), "theta");
    return w;
}

CheckReport verify_cocasimir(const EntwiningStructure& e, const Witness& w) {
    if (w.tag != WitnessTag::Cocasimir) throw WrongTag("expected a cocasimir witness");
    const Matrix& emap = w.data();
    size_t da = e.dimA(), dc = e.dimC();
    if (emap.rows() != da * da || emap.cols() != dc) throw DimensionMismatch("cocasimir shape");
    CheckReport rep;
    add_eq(rep, "centralizing condition", cocasimir_side_condition(e, emap),
           Matrix(e.A.field, da * da, dc * da));
    add_eq(rep, "mult o e = unit o counit", e.A.mult() * emap, e.A.unit_col() * e.C.counit_row());
    return rep;
}

std::optional<Witness> solve_cocasimir(const EntwiningStructure& e) {
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    AffineMapSystem sys(f, da * da, dc);
    sys.require([&e](const Matrix& em) { return cocasimir_side_condition(e, em); },
                Matrix(f, da * da, dc * da));
    sys.require([&e](const Matrix& em) { return e.A.mult() * em; },
                e.A.unit_col() * e.C.counit_row());
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    Witness w = make_witness(WitnessTag::Cocasimir, f, {{"data", *sol}}, {{"entwining", e.hash()}});
    assert_sound(verify_cocasimir(e, w), "cocasimir");
    return w;
}

// ---------------------------------------------------------------------------
// total integrals and augmented cointegrals

CheckReport verify_total_integral(const Presentation& l, const Presentation& a,
                                  const ComoduleCoaction& coaction_a, const Witness& w) {
    if (w.tag != WitnessTag::TotalIntegral) throw WrongTag("expected a total_integral witness");
    check_relhopf_datum(l, a, coaction_a);
    const Matrix& phi = w.data(); // dimA x dimL
    if (phi.rows() != a.dim || phi.cols() != l.dim) throw DimensionMismatch("total integral shape");
    CheckReport rep;
    Matrix idl = Matrix::identity(l.field, l.dim);
    add_eq(rep, "colinearity", coaction_a.rho * phi, kron(phi, idl) * l.comult());
    rep.add("phi(1) = 1", phi.apply(l.unit()) == a.unit());
    return rep;
}

std::optional<Witness> solve_total_integral(const Presentation& l, const Presentation& a,
                                            const ComoduleCoaction& coaction_a) {
    check_relhopf_datum(l, a, coaction_a);
    const FieldPtr& f = l.field;
    Matrix idl = Matrix::identity(f, l.dim);
    AffineMapSystem sys(f, a.dim, l.dim);
    sys.require([&](const Matrix& phi) { return coaction_a.rho * phi - kron(phi, idl) * l.comult(); },
                Matrix(f, a.dim * l.dim, l.dim));
    Matrix one_l = l.unit_col();
    sys.require([one_l](const Matrix& phi) { return phi * one_l; }, a.unit_col());
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    Witness w = make_witness(WitnessTag::TotalIntegral, f, {{"data", *sol}},
                             {{"L", l.hash()}, {"A", a.hash()}, {"coactionA", coaction_a.hash()}});
    assert_sound(verify_total_integral(l, a, coaction_a, w), "total_integral");
    return w;
}

CheckReport verify_augmented_cointegral(const Presentation& l, const Presentation& c,
                                        const ModuleAction& action_c, const Witness& w) {
    if (w.tag != WitnessTag::AugmentedCointegral) throw WrongTag("expected a cointegral witness");
    check_lc_datum(l, c, action_c);
    const Matrix& psi_map = w.data(); // dimL x dimC
    if (psi_map.rows() != l.dim || psi_map.cols() != c.dim)
        throw DimensionMismatch("cointegral shape");
    CheckReport rep;
    bool linear = true;
    std::string detail;
    for (size_t j = 0; j < l.dim; ++j) {
        Matrix lhs = psi_map * action_c.act[j];
        Matrix rhs = l.right_mult(unit_vec(l.field, l.dim, j)) * psi_map;
        if (lhs != rhs) {
            linear = false;
            detail = "fails at L basis " + std::to_string(j);
            break;
        }
    }
    rep.add("right L-linearity", linear, detail);
    add_eq(rep, "eps_L o psi = eps_C", l.counit_row() * psi_map, c.counit_row());
    return rep;
}

std::optional<Witness> solve_augmented_cointegral(const Presentation& l, const Presentation& c,
                                                  const ModuleAction& action_c) {
    check_lc_datum(l, c, action_c);
    const FieldPtr& f = l.field;
    AffineMapSystem sys(f, l.dim, c.dim);
    for (size_t j = 0; j < l.dim; ++j) {
        Matrix actj = action_c.act[j];
        Matrix rj = l.right_mult(unit_vec(f, l.dim, j));
        sys.require([actj, rj](const Matrix& x) { return x * actj - rj * x; },
                    Matrix(f, l.dim, c.dim));
    }
    sys.require([&](const Matrix& x) { return l.counit_row() * x; }, c.counit_row());
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    Witness w = make_witness(WitnessTag::AugmentedCointegral, f, {{"data", *sol}},
                             {{"L", l.hash()}, {"C", c.hash()}, {"actionC", action_c.hash()}});
    assert_sound(verify_augmented_cointegral(l, c, action_c, w), "augmented_cointegral");
    return w;
}

// ---------------------------------------------------------------------------
// quantum integrals: the curried theta of the Yetter-Drinfeld entwining

CheckReport verify_quantum_integral(const Presentation& l, const Witness& w) {
    if (w.tag != WitnessTag::QuantumIntegral) throw WrongTag("expected a quantum_integral witness");
    EntwiningStructure e = entwining_yetter_drinfeld(l);
    return verify_theta(e, w);
}

std::optional<Witness> solve_quantum_integral(const Presentation& l) {
    EntwiningStructure e = entwining_yetter_drinfeld(l);
    auto th = solve_theta(e);
    if (!th) return std::nullopt;
    Witness w = make_witness(WitnessTag::QuantumIntegral, l.field, {{"data", th->data()}},
                             {{"L", l.hash()}});
    assert_sound(verify_quantum_integral(l, w), "quantum_integral");
    return w;
}

// ---------------------------------------------------------------------------
// transports

std::string transport_direction_name(TransportDirection d) {
    switch (d) {
        case TransportDirection::IntegralToIdempotent: return "integral_to_idempotent";
        case TransportDirection::TotalIntegralToTheta: return "totalintegral_to_theta";
        case TransportDirection::ThetaToTotalIntegral: return "theta_to_totalintegral";
        case TransportDirection::CocasimirToCointegral: return "cocasimir_to_cointegral";
    }
    return "?";
}

TransportDirection transport_direction_from_name(const std::string& name) {
    for (int d = 0; d <= (int)TransportDirection::CocasimirToCointegral; ++d)
        if (transport_direction_name((TransportDirection)d) == name) return (TransportDirection)d;
    throw ParseError("unknown transport direction '" + name + "'");
}

Witness transport_integral_to_idempotent(const Presentation& h, const Witness& t) {
    if (t.tag != WitnessTag::NormalizedIntegral) throw WrongTag("transport expects an integral");
    if (!h.antipode) throw StructureMismatch("transport needs an antipode");
    // e = S(t1) (x) t2
    Matrix e = kron(*h.antipode, Matrix::identity(h.field, h.dim)) * h.comult() * t.data();
    Witness w = make_witness(WitnessTag::RelativeCasimir, h.field, {{"data", e}}, {{"S", h.hash()}});
    assert_sound(verify_relative_casimir(h, full_basis_span(h), w), "integral_to_idempotent");
    return w;
}

Witness transport_total_integral_to_theta(const Presentation& l, const Presentation& a,
                                          const ComoduleCoaction& coaction_a, const Witness& phi) {
    if (phi.tag != WitnessTag::TotalIntegral) throw WrongTag("transport expects a total_integral");
    EntwiningStructure e = relative_hopf_entwining(l, a, coaction_a);
    // theta(h (x) k) = phi(S(h) k)
    Matrix theta = phi.data() * l.mult() * kron(*l.antipode, Matrix::identity(l.field, l.dim));
    Witness w = make_witness(WitnessTag::Theta, l.field, {{"data", theta}},
                             {{"entwining", e.hash()}});
    assert_sound(verify_theta(e, w), "total_integral_to_theta");
    return w;
}

Witness transport_theta_to_total_integral(const Presentation& l, const Presentation& a,
                                          const ComoduleCoaction& coaction_a, const Witness& theta) {
    if (theta.tag != WitnessTag::Theta && theta.tag != WitnessTag::QuantumIntegral)
        throw WrongTag("transport expects a theta");
    // phi(h) = theta(1 (x) h)
    Matrix phi = theta.data() * kron(l.unit_col(), Matrix::identity(l.field, l.dim));
    Witness w = make_witness(WitnessTag::TotalIntegral, l.field, {{"data", phi}},
                             {{"L", l.hash()}, {"A", a.hash()}, {"coactionA", coaction_a.hash()}});
    assert_sound(verify_total_integral(l, a, coaction_a, w), "theta_to_total_integral");
    return w;
}

Witness transport_cocasimir_to_cointegral(const Presentation& l, const Presentation& c,
                                          const ModuleAction& action_c, const Witness& e) {
    if (e.tag != WitnessTag::Cocasimir) throw WrongTag("transport expects a cocasimir");
    // psi(c) = eps(e1(c)) e2(c)
    Matrix psi_map = kron(l.counit_row(), Matrix::identity(l.field, l.dim)) * e.data();
    Witness w = make_witness(WitnessTag::AugmentedCointegral, l.field, {{"data", psi_map}},
                             {{"L", l.hash()}, {"C", c.hash()}, {"actionC", action_c.hash()}});
    assert_sound(verify_augmented_cointegral(l, c, action_c, w), "cocasimir_to_cointegral");
    return w;
}

// ---------------------------------------------------------------------------
// Frobenius systems for ring extensions

CheckReport verify_frobenius_ring(const RingExtension& ext, const Matrix& mu, const Vec& f) {
    require_algebra_map(ext.R, ext.S, ext.iota_r, "R -> S");
    size_t ds = ext.S.dim, dr = ext.R.dim;
    if (mu.rows() != dr || mu.cols() != ds) throw DimensionMismatch("mu shape");
    if (f.size() != ds * ds) throw DimensionMismatch("f shape");
    const FieldPtr& k = ext.S.field;
    Matrix fcol = Matrix::column(k, f);
    Matrix id = Matrix::identity(k, ds);
    CheckReport rep;

    bool bimod = true;
    std::string detail;
    for (size_t j = 0; j < dr && bimod; ++j) {
        Vec rj = ext.iota_r.col(j);
        Matrix lr = ext.R.left_mult(unit_vec(k, dr, j));
        Matrix rr = ext.R.right_mult(unit_vec(k, dr, j));
        if (mu * ext.S.left_mult(rj) != lr * mu || mu * ext.S.right_mult(rj) != rr * mu) {
            bimod = false;
            detail = "fails at R basis " + std::to_string(j);
        }
    }
    rep.add("mu is an R-bimodule map", bimod, detail);

    bool casimir = true;
    detail.clear();
    for (size_t j = 0; j < ds && casimir; ++j) {
        Vec sj = unit_vec(k, ds, j);
        if (kron(ext.S.left_mult(sj), id) * fcol != kron(id, ext.S.right_mult(sj)) * fcol) {
            casimir = false;
            detail = "fails at S basis " + std::to_string(j);
        }
    }
    rep.add("f is a Casimir element", casimir, detail);

    Matrix mu_s = ext.iota_r * mu; // S -> S through R
    add_eq(rep, "mu(f1) f2 = 1", ext.S.mult() * kron(mu_s, id) * fcol, ext.S.unit_col());
    add_eq(rep, "f1 mu(f2) = 1", ext.S.mult() * kron(id, mu_s) * fcol, ext.S.unit_col());
    return rep;
}

std::optional<Vec> solve_casimir_given_mu(const RingExtension& ext, const Matrix& mu) {
    require_algebra_map(ext.R, ext.S, ext.iota_r, "R -> S");
    size_t ds = ext.S.dim;
    const FieldPtr& k = ext.S.field;
    Matrix id = Matrix::identity(k, ds);
    Matrix mu_s = ext.iota_r * mu;
    AffineMapSystem sys(k, ds * ds, 1);
    for (size_t j = 0; j < ds; ++j) {
        Matrix diff = kron(ext.S.left_mult(unit_vec(k, ds, j)), id) -
                      kron(id, ext.S.right_mult(unit_vec(k, ds, j)));
        sys.require([diff](const Matrix& x) { return diff * x; }, Matrix(diff.field(), ds * ds, 1));
    }
    Matrix c1 = ext.S.mult() * kron(mu_s, id);
    Matrix c2 = ext.S.mult() * kron(id, mu_s);
    sys.require([c1](const Matrix& x) { return c1 * x; }, ext.S.unit_col());
    sys.require([c2](const Matrix& x) { return c2 * x; }, ext.S.unit_col());
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    Vec f = sol->col(0);
    assert_sound(verify_frobenius_ring(ext, mu, f), "casimir_given_mu");
    return f;
}

std::optional<Witness> solve_alpha(const RingExtension& ext, const Matrix& mu, const Vec& f,
                                   const std::vector<Vec>& t_span) {
    CheckReport pre = verify_frobenius_ring(ext, mu, f);
    if (!pre.ok()) throw NotAFrobeniusSystem("(mu, f) is not a Frobenius system:\n" + pre.pretty());
    size_t ds = ext.S.dim;
    const FieldPtr& k = ext.S.field;
    Matrix id = Matrix::identity(k, ds);
    Matrix fcol = Matrix::column(k, f);
    AffineMapSystem sys(k, ds, ds);
    for (size_t j = 0; j < ext.R.dim; ++j) {
        Matrix ls = ext.S.left_mult(ext.iota_r.col(j));
        sys.require([ls](const Matrix& al) { return al * ls - ls * al; }, Matrix(k, ds, ds));
    }
    for (const auto& t : t_span) {
        Matrix rs = ext.S.right_mult(t);
        sys.require([rs](const Matrix& al) { return al * rs - rs * al; }, Matrix(k, ds, ds));
    }
    Matrix mult = ext.S.mult();
    sys.require([&, mult, id, fcol](const Matrix& al) { return mult * kron(id, al) * fcol; },
                ext.S.unit_col());
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    // soundness: check the defining equations directly
    Matrix alpha = *sol;
    if (mult * kron(id, alpha) * fcol != ext.S.unit_col())
        throw Error("internal: alpha solver soundness");
    Witness w = make_witness(WitnessTag::Alpha, k, {{"data", alpha}}, {{"S", ext.S.hash()}});
    return w;
}

std::optional<Witness> solve_central_x(const RingExtension& ext, const Matrix& mu, const Vec& f,
                                       const std::vector<Vec>& q_span) {
    CheckReport pre = verify_frobenius_ring(ext, mu, f);
    if (!pre.ok()) throw NotAFrobeniusSystem("(mu, f) is not a Frobenius system:\n" + pre.pretty());
    size_t ds = ext.S.dim;
    const FieldPtr& k = ext.S.field;
    AffineMapSystem sys(k, ds, 1);
    for (const auto& q : q_span) {
        Matrix diff = ext.S.left_mult(q) - ext.S.right_mult(q);
        sys.require([diff](const Matrix& x) { return diff * x; }, Matrix(k, ds, 1));
    }
    sys.require([&mu](const Matrix& x) { return mu * x; }, Matrix::column(ext.R.field, ext.R.unit()));
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    if (mu * *sol != Matrix::column(ext.R.field, ext.R.unit()))
        throw Error("internal: central x solver soundness");
    Witness w = make_witness(WitnessTag::CentralX, k, {{"data", *sol}}, {{"S", ext.S.hash()}});
    return w;
}

// ---------------------------------------------------------------------------
// Frobenius systems for entwining adjunctions

namespace {

// a z and z a as maps A -> A (x) C, for z in A (x) C
Matrix left_mult_by_z(const EntwiningStructure& e, const Matrix& zcol) {
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix ida = Matrix::identity(f, da);
    Matrix idc = Matrix::identity(f, dc);
    return kron(e.A.mult(), idc) * kron(ida, zcol);
}

Matrix right_mult_by_z(const EntwiningStructure& e, const Matrix& zcol) {
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix ida = Matrix::identity(f, da);
    Matrix idc = Matrix::identity(f, dc);
    return kron(e.A.mult(), idc) * kron(ida, e.psi) * kron(zcol, ida);
}

// a_l theta(c_l (x) d) as a map C -> A
Matrix z_counit_first(const EntwiningStructure& e, const Matrix& theta, const Matrix& zcol) {
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix ida = Matrix::identity(f, da);
    Matrix idc = Matrix::identity(f, dc);
    return e.A.mult() * kron(ida, theta) * kron(zcol, idc);
}

// a_{l psi} theta(d^psi (x) c_l) as a map C -> A
Matrix z_counit_second(const EntwiningStructure& e, const Matrix& theta, const Matrix& zcol) {
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix ida = Matrix::identity(f, da);
    Matrix idc = Matrix::identity(f, dc);
    return e.A.mult() * kron(ida, theta) * kron(e.psi, idc) * kron(idc, zcol);
}

// theta(c (x) d) a minus a_{psi Psi} theta(c^Psi (x) d^psi), as a map C(x)C(x)A -> A
Matrix theta_bilinearity_condition(const EntwiningStructure& e, const Matrix& theta) {
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix ida = Matrix::identity(f, da);
    Matrix idc = Matrix::identity(f, dc);
    const Matrix& m = e.A.mult();
    Matrix lhs = m * kron(theta, ida);
    Matrix rhs = m * kron(ida, theta) * kron(e.psi, idc) * kron(idc, e.psi);
    return lhs - rhs;
}

} // namespace

CheckReport verify_frobenius_fg(const EntwiningStructure& e, const Matrix& theta, const Vec& z) {
    size_t da = e.dimA(), dc = e.dimC();
    if (theta.rows() != da || theta.cols() != dc * dc) throw DimensionMismatch("theta shape");
    if (z.size() != da * dc) throw DimensionMismatch("z shape");
    const FieldPtr& f = e.A.field;
    Matrix zcol = Matrix::column(f, z);
    CheckReport rep;
    add_eq(rep, "theta(c,d) a = a_(psi Psi) theta(c^Psi, d^psi)",
           theta_bilinearity_condition(e, theta), Matrix(f, da, dc * dc * da));
    add_eq(rep, "theta colinearity-type condition", theta_side_condition(e, theta),
           Matrix(f, da * dc, dc * dc));
    add_eq(rep, "z is central", left_mult_by_z(e, zcol), right_mult_by_z(e, zcol));
    Matrix target = e.A.unit_col() * e.C.counit_row();
    add_eq(rep, "a_l theta(c_l, d) = unit eps(d)", z_counit_first(e, theta, zcol), target);
    add_eq(rep, "a_(l psi) theta(d^psi, c_l) = unit eps(d)", z_counit_second(e, theta, zcol), target);
    return rep;
}

std::optional<Vec> solve_z_given_theta(const EntwiningStructure& e, const Matrix& theta) {
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix target = e.A.unit_col() * e.C.counit_row();
    AffineMapSystem sys(f, da * dc, 1);
    sys.require([&](const Matrix& zc) { return left_mult_by_z(e, zc) - right_mult_by_z(e, zc); },
                Matrix(f, da * dc, da));
    sys.require([&](const Matrix& zc) { return z_counit_first(e, theta, zc); }, target);
    sys.require([&](const Matrix& zc) { return z_counit_second(e, theta, zc); }, target);
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    return sol->col(0);
}

std::optional<Matrix> solve_theta_given_z(const EntwiningStructure& e, const Vec& z) {
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix zcol = Matrix::column(f, z);
    Matrix target = e.A.unit_col() * e.C.counit_row();
    AffineMapSystem sys(f, da, dc * dc);
    sys.require([&](const Matrix& th) { return theta_bilinearity_condition(e, th); },
                Matrix(f, da, dc * dc * da));
    sys.require([&](const Matrix& th) { return theta_side_condition(e, th); },
                Matrix(f, da * dc, dc * dc));
    sys.require([&](const Matrix& th) { return z_counit_first(e, th, zcol); }, target);
    sys.require([&](const Matrix& th) { return z_counit_second(e, th, zcol); }, target);
    return sys.solve_canonical();
}

std::optional<Witness> solve_beta_hsep(const EntwiningStructure& e, const Matrix& theta, const Vec& z) {
    CheckReport pre = verify_frobenius_fg(e, theta, z);
    if (!pre.ok()) throw NotAFrobeniusSystem("(theta, z) is not a Frobenius system:\n" + pre.pretty());
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix ida = Matrix::identity(f, da);
    Matrix idc = Matrix::identity(f, dc);
    const Matrix& dl = e.C.comult();
    Matrix delta3 = kron(dl, kron(idc, idc)) * kron(dl, idc) * dl; // c1 (x) c2 (x) c3 (x) c4
    Matrix idc2 = kron(idc, idc);
    auto lhs = [&](const Matrix& beta) {
        Matrix step_beta = kron(idc2, kron(beta, idc));
        Matrix step_psi1 = kron(idc, kron(e.psi, idc));
        Matrix step_psi2 = kron(e.psi, idc2);
        Matrix step_theta = kron(ida, kron(idc, theta));
        Matrix step_psi3 = kron(ida, e.psi);
        Matrix step_m = kron(e.A.mult(), idc);
        return step_m * step_psi3 * step_theta * step_psi2 * step_psi1 * step_beta * delta3;
    };
    AffineMapSystem sys(f, da, dc);
    sys.require(lhs, kron(e.A.unit_col(), idc));
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    if (lhs(*sol) != kron(e.A.unit_col(), idc)) throw Error("internal: beta solver soundness");
    return make_witness(WitnessTag::Beta, f, {{"data", *sol}}, {{"entwining", e.hash()}});
}

std::optional<Witness> solve_beta_sep(const EntwiningStructure& e, const Matrix& theta, const Vec& z) {
    CheckReport pre = verify_frobenius_fg(e, theta, z);
    if (!pre.ok()) throw NotAFrobeniusSystem("(theta, z) is not a Frobenius system:\n" + pre.pretty());
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix ida = Matrix::identity(f, da);
    Matrix idc = Matrix::identity(f, dc);
    const Matrix& dl = e.C.comult();
    Matrix delta3 = kron(dl, kron(idc, idc)) * kron(dl, idc) * dl;
    Matrix idc2 = kron(idc, idc);
    auto hsep_lhs = [&](const Matrix& beta) {
        Matrix step_beta = kron(idc2, kron(beta, idc));
        Matrix step_psi1 = kron(idc, kron(e.psi, idc));
        Matrix step_psi2 = kron(e.psi, idc2);
        Matrix step_theta = kron(ida, kron(idc, theta));
        Matrix step_psi3 = kron(ida, e.psi);
        Matrix step_m = kron(e.A.mult(), idc);
        return step_m * step_psi3 * step_theta * step_psi2 * step_psi1 * step_beta * delta3;
    };
    AffineMapSystem sys(f, da, dc);
    sys.require(hsep_lhs, kron(e.A.unit_col(), idc));
    // the centralizing condition beta(c) a = a_psi beta(c^psi)
    sys.require(
        [&](const Matrix& beta) {
            return e.A.mult() * kron(beta, ida) - e.A.mult() * kron(ida, beta) * e.psi;
        },
        Matrix(f, da, dc * da));
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    return make_witness(WitnessTag::Beta, f, {{"data", *sol}}, {{"entwining", e.hash()}});
}

CheckReport verify_frobenius_hk(const EntwiningStructure& e, const Matrix& vartheta,
                                const Matrix& emap) {
    size_t da = e.dimA(), dc = e.dimC();
    if (vartheta.rows() != 1 || vartheta.cols() != dc * da)
        throw DimensionMismatch("vartheta shape");
    if (emap.rows() != da * da || emap.cols() != dc) throw DimensionMismatch("e shape");
    const FieldPtr& f = e.A.field;
    Matrix ida = Matrix::identity(f, da);
    Matrix idc = Matrix::identity(f, dc);
    const Matrix& dl = e.C.comult();
    CheckReport rep;

    // vartheta(c1 (x) a_psi) c2^psi = vartheta(c2 (x) a) c1
    Matrix lhs_a = kron(vartheta, idc) * kron(idc, e.psi) * kron(dl, ida);
    Matrix rhs_a = kron(idc, vartheta) * kron(dl, ida);
    add_eq(rep, "vartheta compatibility", lhs_a, rhs_a);

    // e(c1) (x) c2 = e1(c2)_psi (x) e2(c2)_Psi (x) c1^(psi Psi)
    Matrix lhs_b = kron(emap, idc) * dl;
    Matrix rhs_b = kron(ida, e.psi) * kron(e.psi, ida) * kron(idc, emap) * dl;
    add_eq(rep, "e colinearity-type condition", lhs_b, rhs_b);

    add_eq(rep, "e centralizing condition", cocasimir_side_condition(e, emap),
           Matrix(f, da * da, dc * da));

    Matrix target = e.A.unit_col() * e.C.counit_row();
    Matrix mid = kron(idc, emap) * dl; // c -> c1 (x) e1(c2) (x) e2(c2)
    add_eq(rep, "vartheta(c1, e1(c2)) e2(c2) = unit eps", kron(vartheta, ida) * mid, target);
    add_eq(rep, "vartheta(c1^psi, e2(c2)) e1(c2)_psi = unit eps",
           kron(ida, vartheta) * kron(e.psi, ida) * mid, target);
    return rep;
}

std::optional<Witness> solve_beta_fsep(const EntwiningStructure& e, const Matrix& vartheta,
                                       const Matrix& emap, bool require_colinear) {
    CheckReport pre = verify_frobenius_hk(e, vartheta, emap);
    if (!pre.ok())
        throw NotAFrobeniusSystem("(vartheta, e) is not a Frobenius system:\n" + pre.pretty());
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix ida = Matrix::identity(f, da);
    Matrix idc = Matrix::identity(f, dc);
    const Matrix& dl = e.C.comult();
    const Matrix& m = e.A.mult();
    // eps(c) a = a_(psi1 psi2) e1(c2^psi1)_psi3 beta(c1^(psi2 psi3)) e2(c2^psi1)
    Matrix step0 = kron(dl, ida);                        // (c1, c2, a)
    Matrix step_psi1 = kron(idc, e.psi);                 // (c1, a_psi1, c2^psi1)
    Matrix step_psi2 = kron(e.psi, idc);                 // (a.., c1^psi2, c2^psi1)
    Matrix step_e = kron(ida, kron(idc, emap));          // (a.., c1^psi2, e1, e2)
    Matrix step_psi3 = kron(ida, kron(e.psi, ida));      // (a.., e1_psi3, c1^.., e2)
    Matrix m3 = m * kron(m, ida) * kron(m, kron(ida, ida)); // multiply four factors in order
    Matrix fixed = step_psi3 * step_e * step_psi2 * step_psi1 * step0;
    auto lhs = [&](const Matrix& beta) {
        Matrix step_beta = kron(ida, kron(ida, kron(beta, ida)));
        return m3 * step_beta * fixed;
    };
    AffineMapSystem sys(f, da, dc);
    sys.require(lhs, kron(e.C.counit_row(), ida));
    if (require_colinear) {
        // beta(c1) (x) c2 = beta(c2)_psi (x) c1^psi
        sys.require(
            [&](const Matrix& beta) {
                return kron(beta, idc) * dl - e.psi * kron(idc, beta) * dl;
            },
            Matrix(f, da * dc, dc));
    }
    auto sol = sys.solve_canonical();
    if (!sol) return std::nullopt;
    if (lhs(*sol) != kron(e.C.counit_row(), ida)) throw Error("internal: beta solver soundness");
    return make_witness(WitnessTag::Beta, f, {{"data", *sol}}, {{"entwining", e.hash()}});
}

} // namespace hopfwit
