#include "hopfwit/entwine.hpp"

namespace hopfwit {

namespace {

std::string decode_pair(size_t flat, size_t d2) {
    return "(" + std::to_string(flat / d2) + "," + std::to_string(flat % d2) + ")";
}

bool maps_equal_at(const Matrix& lhs, const Matrix& rhs, const std::vector<size_t>& dims,
                   std::string& detail) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        detail = "shape mismatch";
        return false;
    }
    for (size_t j = 0; j < lhs.cols(); ++j)
        for (size_t i = 0; i < lhs.rows(); ++i)
            if (lhs.at(i, j) != rhs.at(i, j)) {
                size_t flat = j;
                std::vector<size_t> idx(dims.size());
                for (size_t t = dims.size(); t-- > 0;) {
                    idx[t] = flat % dims[t];
                    flat /= dims[t];
                }
                detail = "at basis (";
                for (size_t t = 0; t < idx.size(); ++t) {
                    if (t) detail += ",";
                    detail += std::to_string(idx[t]);
                }
                detail += ")";
                return false;
            }
    return true;
}

} // namespace

nlohmann::json EntwiningStructure::to_json() const {
    return nlohmann::json{{"A", A.to_json()}, {"C", C.to_json()}, {"psi", psi.to_json()}};
}

EntwiningStructure EntwiningStructure::from_json(const nlohmann::json& j) {
    EntwiningStructure e;
    e.A = Presentation::from_json(j.at("A"));
    e.C = Presentation::from_json(j.at("C"));
    e.psi = Matrix::from_json(e.A.field, j.at("psi"));
    return e;
}

std::string EntwiningStructure::hash() const { return content_hash(to_json().dump()); }

CheckReport check_entwining(const EntwiningStructure& e) {
    CheckReport rep;
    rep.merge(check_structure(e.A, CheckLevel::Algebra), "A: ");
    rep.merge(check_structure(e.C, CheckLevel::Coalgebra), "C: ");
    size_t da = e.dimA(), dc = e.dimC();
    const FieldPtr& f = e.A.field;
    if (e.psi.rows() != da * dc || e.psi.cols() != dc * da) throw DimensionMismatch("psi shape");
    Matrix ida = Matrix::identity(f, da);
    Matrix idc = Matrix::identity(f, dc);
    const Matrix& m = e.A.mult();
    const Matrix& dl = e.C.comult();
    std::string d;

    // (ab)_psi (x) c^psi  =  a_psi b_Psi (x) c^(psi Psi)
    Matrix lhs1 = e.psi * kron(idc, m);
    Matrix rhs1 = kron(m, idc) * kron(ida, e.psi) * kron(e.psi, ida);
    bool ax1 = maps_equal_at(lhs1, rhs1, {dc, da, da}, d);
    rep.add("multiplicativity", ax1, d);

    // (1_A)_psi (x) c^psi = 1_A (x) c
    Matrix lhs2 = e.psi * kron(idc, e.A.unit_col());
    Matrix rhs2 = kron(e.A.unit_col(), idc);
    bool ax2 = maps_equal_at(lhs2, rhs2, {dc}, d);
    rep.add("unitality", ax2, d);

    // a_psi (x) Delta(c^psi) = a_(psi Psi) (x) c_(1)^Psi (x) c_(2)^psi
    Matrix lhs3 = kron(ida, dl) * e.psi;
    Matrix rhs3 = kron(e.psi, idc) * kron(idc, e.psi) * kron(dl, ida);
    bool ax3 = maps_equal_at(lhs3, rhs3, {dc, da}, d);
    rep.add("comultiplicativity", ax3, d);

    // eps(c^psi) a_psi = eps(c) a
    Matrix lhs4 = kron(ida, e.C.counit_row()) * e.psi;
    Matrix rhs4 = kron(e.C.counit_row(), ida);
    bool ax4 = maps_equal_at(lhs4, rhs4, {dc, da}, d);
    rep.add("counitality", ax4, d);
    return rep;
}

// ---------------------------------------------------------------------------
// Doi-Koppinen data

nlohmann::json DoiKoppinenDatum::to_json() const {
    return nlohmann::json{{"H", H.to_json()},
                          {"A", A.to_json()},
                          {"C", C.to_json()},
                          {"coactionA", coactionA.to_json()},
                          {"actionC", actionC.to_json()}};
}

DoiKoppinenDatum DoiKoppinenDatum::from_json(const nlohmann::json& j) {
    DoiKoppinenDatum d;
    d.H = Presentation::from_json(j.at("H"));
    d.A = Presentation::from_json(j.at("A"));
    d.C = Presentation::from_json(j.at("C"));
    d.coactionA = ComoduleCoaction::from_json(d.A.field, j.at("coactionA"));
    d.actionC = ModuleAction::from_json(d.C.field, j.at("actionC"));
    return d;
}

CheckReport check_doi_koppinen(const DoiKoppinenDatum& d) {
    CheckReport rep;
    rep.merge(check_structure(d.H, CheckLevel::Bialgebra), "H: ");
    rep.merge(check_structure(d.A, CheckLevel::Algebra), "A: ");
    rep.merge(check_structure(d.C, CheckLevel::Coalgebra), "C: ");
    rep.merge(check_comodule(d.H, d.coactionA), "A over H: ");
    rep.merge(check_module(d.H, d.actionC), "C over H: ");
    if (!rep.ok()) return rep;

    const FieldPtr& f = d.H.field;
    size_t dh = d.H.dim, da = d.A.dim, dc = d.C.dim;
    std::string det;

    // rho_A is an algebra map into A（x)H with componentwise product
    Matrix mult_ah = kron(d.A.mult(), d.H.mult()) *
                     leg_permutation(f, {da, dh, da, dh}, {0, 2, 1, 3});
    Matrix lhs = d.coactionA.rho * d.A.mult();
    Matrix rhs = mult_ah * kron(d.coactionA.rho, d.coactionA.rho);
    bool comul = maps_equal_at(lhs, rhs, {da, da}, det);
    rep.add("coaction of A is multiplicative", comul, det);

    Vec rho_one = d.coactionA.rho.apply(d.A.unit());
    Vec one_one = kron(d.A.unit_col(), d.H.unit_col()).col(0);
    rep.add("coaction of A is unital", rho_one == one_one);

    // the H-action on C is a coalgebra map: Delta(c.h) = c_(1)h_(1) (x) c_(2)h_(2)
    Matrix act = d.actionC.action_map(dh);
    Matrix lhs2 = d.C.comult() * act;
    Matrix rhs2 = kron(act, act) * leg_permutation(f, {dc, dc, dh, dh}, {0, 2, 1, 3}) *
                  kron(d.C.comult(), d.H.comult());
    bool act_comul = maps_equal_at(lhs2, rhs2, {dc, dh}, det);
    rep.add("action of H on C is comultiplicative", act_comul, det);

    Matrix lhs3 = d.C.counit_row() * act;
    Matrix rhs3 = kron(d.C.counit_row(), d.H.counit_row());
    bool act_counit = maps_equal_at(lhs3, rhs3, {dc, dh}, det);
    rep.add("action of H on C is counital", act_counit, det);
    return rep;
}

EntwiningStructure entwining_from_doi_koppinen(const DoiKoppinenDatum& d) {
    CheckReport rep = check_doi_koppinen(d);
    if (!rep.ok()) throw InvalidDatum("Doi-Koppinen datum fails: " + rep.pretty());
    const FieldPtr& f = d.H.field;
    size_t dh = d.H.dim, da = d.A.dim, dc = d.C.dim;
    Matrix ida = Matrix::identity(f, da);
    Matrix idh = Matrix::identity(f, dh);
    Matrix idc = Matrix::identity(f, dc);
    // c (x) a -> c (x) a_[0] (x) a_[1] -> a_[0] (x) c (x) a_[1] -> a_[0] (x) c.a_[1]
    Matrix swap_ca = leg_permutation(f, {dc, da}, {1, 0});
    Matrix psi = kron(ida, d.actionC.action_map(dh)) * kron(swap_ca, idh) * kron(idc, d.coactionA.rho);
    (void)idc;
    return EntwiningStructure{d.A, d.C, std::move(psi)};
}

EntwiningStructure entwining_yetter_drinfeld(const Presentation& l) {
    CheckReport rep = check_structure(l, CheckLevel::Hopf);
    if (!rep.ok()) throw StructureMismatch("entwining_yetter_drinfeld: not a Hopf presentation");
    const FieldPtr& f = l.field;
    size_t n = l.dim;
    Matrix id = Matrix::identity(f, n);
    const Matrix& dl = l.comult();
    const Matrix& m = l.mult();
    Matrix delta2 = kron(dl, id) * dl; // h -> h1 (x) h2 (x) h3
    // g (x) h -> g (x) h1 (x) h2 (x) h3
    Matrix step1 = kron(id, delta2);
    // apply S to h1
    Matrix step2 = kron(kron(id, *l.antipode), kron(id, id));
    // reorder (g, S(h1), h2, h3) -> (h2, S(h1), g, h3)
    Matrix step3 = leg_permutation(f, {n, n, n, n}, {2, 1, 0, 3});
    // multiply the trailing three legs
    Matrix step4 = kron(id, m * kron(m, id));
    Matrix psi = step4 * step3 * step2 * step1;
    return EntwiningStructure{l, l, std::move(psi)};
}

EntwiningStructure trivial_entwining_modules(const Presentation& a) {
    Presentation k = unit_presentation(a.field);
    return EntwiningStructure{a, k, Matrix::identity(a.field, a.dim)};
}

EntwiningStructure trivial_entwining_comodules(const Presentation& c) {
    Presentation k = unit_presentation(c.field);
    return EntwiningStructure{k, c, Matrix::identity(c.field, c.dim)};
}

EntwiningStructure relative_hopf_entwining(const Presentation& l, const Presentation& a,
                                           const ComoduleCoaction& coaction_a) {
    DoiKoppinenDatum d{l, a, coaction_a, l, regular_module(l)};
    return entwining_from_doi_koppinen(d);
}

EntwiningStructure lc_entwining(const Presentation& l, const Presentation& c,
                                const ModuleAction& action_c) {
    DoiKoppinenDatum d{l, l, regular_comodule(l), c, action_c};
    return entwining_from_doi_koppinen(d);
}

// ---------------------------------------------------------------------------
// entwined modules

nlohmann::json EntwinedModule::to_json() const {
    nlohmann::json j = action.to_json();
    j["rho"] = coaction.to_json().at("rho");
    return j;
}

EntwinedModule EntwinedModule::from_json(const FieldPtr& f, const nlohmann::json& j) {
    EntwinedModule m;
    m.action = ModuleAction::from_json(f, j);
    m.coaction = ComoduleCoaction::from_json(f, j);
    m.dim = m.action.dim;
    return m;
}

std::string EntwinedModule::hash() const { return content_hash(to_json().dump()); }

CheckReport check_entwined_module(const EntwiningStructure& e, const EntwinedModule& m) {
    CheckReport rep;
    rep.merge(check_module(e.A, m.action), "module: ");
    rep.merge(check_comodule(e.C, m.coaction), "comodule: ");
    size_t dm = m.dim, da = e.dimA(), dc = e.dimC();
    const FieldPtr& f = e.A.field;
    Matrix idm = Matrix::identity(f, dm);
    Matrix ida = Matrix::identity(f, da);
    Matrix idc = Matrix::identity(f, dc);
    Matrix act = m.action.action_map(da);
    // rho(m.a) = m_[0] a_psi (x) m_[1]^psi
    Matrix lhs = m.coaction.rho * act;
    Matrix rhs = kron(act, idc) * kron(idm, e.psi) * kron(m.coaction.rho, ida);
    std::string d;
    bool compat = maps_equal_at(lhs, rhs, {dm, da}, d);
    rep.add("compatibility", compat, d);
    return rep;
}

EntwinedModule cofree_on_module(const EntwiningStructure& e, const ModuleAction& n) {
    const FieldPtr& f = e.A.field;
    size_t dn = n.dim, da = e.dimA(), dc = e.dimC();
    size_t dg = dn * dc;
    Matrix idn = Matrix::identity(f, dn);
    Matrix idc = Matrix::identity(f, dc);
    Matrix full = kron(n.action_map(da), idc) * kron(idn, e.psi); // N(x)C(x)A -> N(x)C
    EntwinedModule g;
    g.dim = dg;
    g.action.field = f;
    g.action.dim = dg;
    for (size_t j = 0; j < da; ++j)
        g.action.act.push_back(full * kron(Matrix::identity(f, dg),
                                           Matrix::column(f, unit_vec(f, da, j))));
    g.coaction = ComoduleCoaction{f, dg, kron(idn, e.C.comult())};
    return g;
}

ModuleAction hom_module(const Presentation& a, size_t dim_v) {
    const FieldPtr& f = a.field;
    size_t da = a.dim;
    ModuleAction m;
    m.field = f;
    m.dim = dim_v * da;
    for (size_t j = 0; j < da; ++j) {
        Matrix r(f, m.dim, m.dim);
        // (phi_{i,b} . e_j)(e_c) = phi_{i,b}(e_j e_c)
        for (size_t i = 0; i < dim_v; ++i)
            for (size_t b = 0; b < da; ++b)
                for (size_t c = 0; c < da; ++c)
                    r.at(i * da + c, i * da + b) = a.mult().at(b, j * da + c);
        m.act.push_back(std::move(r));
    }
    return m;
}

EntwinedModule cofree_on_space(const EntwiningStructure& e, size_t dim_v) {
    return cofree_on_module(e, hom_module(e.A, dim_v));
}

Matrix unit_map(const EntwiningStructure& e, const EntwinedModule& m) {
    const FieldPtr& f = e.A.field;
    size_t dm = m.dim, da = e.dimA(), dc = e.dimC();
    // curry: M -> Hom(A, M), m -> (a -> m.a)
    Matrix curry(f, dm * da, dm);
    for (size_t col = 0; col < dm; ++col)
        for (size_t b = 0; b < da; ++b) {
            Vec v = m.action.act[b].col(col);
            for (size_t i = 0; i < dm; ++i) curry.at(i * da + b, col) = v[i];
        }
    (void)dc;
    return kron(curry, Matrix::identity(f, dc)) * m.coaction.rho;
}

std::optional<Matrix> unit_splits(const EntwiningStructure& e, const EntwinedModule& m) {
    CheckReport pre = check_entwined_module(e, m);
    if (!pre.ok()) throw StructureMismatch("unit_splits: input is not an entwined module");
    const FieldPtr& f = e.A.field;
    EntwinedModule w = cofree_on_module(e, hom_module(e.A, m.dim));
    Matrix eta = unit_map(e, m);
    size_t dm = m.dim, dw = w.dim, da = e.dimA(), dc = e.dimC();
    Matrix idc = Matrix::identity(f, dc);
    AffineMapSystem sys(f, dm, dw);
    for (size_t j = 0; j < da; ++j)
        sys.require([&, j](const Matrix& r) { return r * w.action.act[j] - m.action.act[j] * r; },
                    Matrix(f, dm, dw));
    sys.require([&](const Matrix& r) { return kron(r, idc) * w.coaction.rho - m.coaction.rho * r; },
                Matrix(f, dm * dc, dw));
    sys.require([&](const Matrix& r) { return r * eta; }, Matrix::identity(f, dm));
    return sys.solve_canonical();
}

std::vector<Matrix> entwined_hom(const EntwiningStructure& e, const EntwinedModule& m,
                                 const EntwinedModule& n) {
    const FieldPtr& f = e.A.field;
    size_t da = e.dimA(), dc = e.dimC();
    Matrix idc = Matrix::identity(f, dc);
    AffineMapSystem sys(f, n.dim, m.dim);
    for (size_t j = 0; j < da; ++j)
        sys.require([&, j](const Matrix& g) { return g * m.action.act[j] - n.action.act[j] * g; },
                    Matrix(f, n.dim, m.dim));
    sys.require([&](const Matrix& g) { return kron(g, idc) * m.coaction.rho - n.coaction.rho * g; },
                Matrix(f, n.dim * dc, m.dim));
    SolutionSet s = sys.solve();
    std::vector<Matrix> basis;
    for (const auto& v : s.kernel) basis.push_back(Matrix::from_vec(f, n.dim, m.dim, v));
    return basis;
}

EntwinedModule entwined_direct_sum(const EntwinedModule& a, const EntwinedModule& b) {
    const FieldPtr& f = a.action.field;
    EntwinedModule s;
    s.dim = a.dim + b.dim;
    s.action.field = f;
    s.action.dim = s.dim;
    for (size_t j = 0; j < a.action.act.size(); ++j)
        s.action.act.push_back(Matrix::direct_sum(a.action.act[j], b.action.act[j]));
    size_t dc = a.coaction.rho.rows() / a.dim;
    Matrix rho(f, s.dim * dc, s.dim);
    for (size_t j = 0; j < a.dim; ++j)
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t c = 0; c < dc; ++c) rho.at(i * dc + c, j) = a.coaction.rho.at(i * dc + c, j);
    for (size_t j = 0; j < b.dim; ++j)
        for (size_t i = 0; i < b.dim; ++i)
            for (size_t c = 0; c < dc; ++c)
                rho.at((a.dim + i) * dc + c, a.dim + j) = b.coaction.rho.at(i * dc + c, j);
    s.coaction = ComoduleCoaction{f, s.dim, std::move(rho)};
    return s;
}

EntwinedModule entwined_conjugate(const EntwinedModule& m, const Matrix& p) {
    const FieldPtr& f = m.action.field;
    size_t dc = m.coaction.rho.rows() / m.dim;
    Matrix pinv;
    {
        Matrix aug = Matrix::hstack(p, Matrix::identity(f, p.rows()));
        RrefResult rr = rref(aug);
        if (rr.pivots.size() != p.rows()) throw DimensionMismatch("entwined_conjugate: singular map");
        pinv = rr.r.submatrix(0, p.cols(), p.rows(), p.cols());
    }
    EntwinedModule r;
    r.dim = m.dim;
    r.action.field = f;
    r.action.dim = m.dim;
    for (const auto& a : m.action.act) r.action.act.push_back(p * a * pinv);
    r.coaction = ComoduleCoaction{f, m.dim, kron(p, Matrix::identity(f, dc)) * m.coaction.rho * pinv};
    return r;
}

} // namespace hopfwit
