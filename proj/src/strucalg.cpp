#include "hopfwit/strucalg.hpp"

#include <sstream>

namespace hopfwit {

namespace {

std::string decode_tuple(size_t flat, const std::vector<size_t>& dims) {
    std::vector<size_t> idx(dims.size());
    for (size_t t = dims.size(); t-- > 0;) {
        idx[t] = flat % dims[t];
        flat /= dims[t];
    }
    std::string s = "(";
    for (size_t t = 0; t < idx.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(idx[t]);
    }
    return s + ")";
}

// compare two maps out of a tensor power of the basis; on mismatch name the
// first offending input tuple
bool maps_equal(const Matrix& lhs, const Matrix& rhs, const std::vector<size_t>& input_dims,
                std::string& detail) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        detail = "shape mismatch";
        return false;
    }
    for (size_t j = 0; j < lhs.cols(); ++j)
        for (size_t i = 0; i < lhs.rows(); ++i)
            if (lhs.at(i, j) != rhs.at(i, j)) {
                detail = "at basis " + decode_tuple(j, input_dims);
                return false;
            }
    return true;
}

} // namespace

const Matrix& Presentation::mult() const {
    if (!algebra) throw StructureMismatch("presentation has no algebra part");
    return algebra->mult;
}
const Vec& Presentation::unit() const {
    if (!algebra) throw StructureMismatch("presentation has no algebra part");
    return algebra->unit;
}
const Matrix& Presentation::comult() const {
    if (!coalgebra) throw StructureMismatch("presentation has no coalgebra part");
    return coalgebra->comult;
}
const Vec& Presentation::counit() const {
    if (!coalgebra) throw StructureMismatch("presentation has no coalgebra part");
    return coalgebra->counit;
}

Matrix Presentation::unit_col() const { return Matrix::column(field, unit()); }
Matrix Presentation::counit_row() const { return Matrix::row(field, counit()); }

Matrix Presentation::left_mult(const Vec& a) const {
    return mult() * kron(Matrix::column(field, a), Matrix::identity(field, dim));
}

Matrix Presentation::right_mult(const Vec& a) const {
    return mult() * kron(Matrix::identity(field, dim), Matrix::column(field, a));
}

Vec Presentation::mul_vec(const Vec& a, const Vec& b) const {
    return mult().apply(kron(Matrix::column(field, a), Matrix::column(field, b)).col(0));
}

Scalar Presentation::counit_apply(const Vec& c) const {
    Scalar r = field->zero();
    for (size_t i = 0; i < dim; ++i) r = r + counit()[i] * c[i];
    return r;
}

Vec Presentation::antipode_vec(const Vec& a) const {
    if (!antipode) throw StructureMismatch("presentation has no antipode");
    return antipode->apply(a);
}

// ---------------------------------------------------------------------------
// reports

bool CheckReport::ok() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

void CheckReport::add(std::string axiom, bool pass, std::string detail) {
    items.push_back({std::move(axiom), pass, std::move(detail)});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
    for (const auto& it : other.items) items.push_back({prefix + it.axiom, it.pass, it.detail});
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& it : items)
        arr.push_back({{"axiom", it.axiom}, {"pass", it.pass}, {"detail", it.detail}});
    return nlohmann::json{{"ok", ok()}, {"checks", arr}};
}

std::string CheckReport::pretty() const {
    std::ostringstream os;
    for (const auto& it : items) {
        os << (it.pass ? "pass" : "FAIL") << "  " << it.axiom;
        if (!it.pass && !it.detail.empty()) os << "  " << it.detail;
        os << "\n";
    }
    os << (ok() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// axiom checkers

CheckLevel check_level_from_name(const std::string& name) {
    if (name == "algebra") return CheckLevel::Algebra;
    if (name == "coalgebra") return CheckLevel::Coalgebra;
    if (name == "bialgebra") return CheckLevel::Bialgebra;
    if (name == "hopf") return CheckLevel::Hopf;
    if (name == "module") return CheckLevel::Module;
    if (name == "comodule") return CheckLevel::Comodule;
    throw ParseError("unknown check level '" + name + "'");
}

std::string check_level_name(CheckLevel level) {
    switch (level) {
        case CheckLevel::Algebra: return "algebra";
        case CheckLevel::Coalgebra: return "coalgebra";
        case CheckLevel::Bialgebra: return "bialgebra";
        case CheckLevel::Hopf: return "hopf";
        case CheckLevel::Module: return "module";
        case CheckLevel::Comodule: return "comodule";
    }
    return "?";
}

namespace {

void check_algebra_axioms(const Presentation& p, CheckReport& rep) {
    size_t n = p.dim;
    const FieldPtr& f = p.field;
    const Matrix& m = p.mult();
    if (m.rows() != n || m.cols() != n * n || p.unit().size() != n)
        throw DimensionMismatch("algebra part dimensions");
    Matrix id = Matrix::identity(f, n);
    std::string d;
    bool assoc = maps_equal(m * kron(m, id), m * kron(id, m), {n, n, n}, d);
    rep.add("associativity", assoc, d);
    bool ul = maps_equal(m * kron(p.unit_col(), id), id, {n}, d);
    rep.add("left unit law", ul, d);
    bool ur = maps_equal(m * kron(id, p.unit_col()), id, {n}, d);
    rep.add("right unit law", ur, d);
}

void check_coalgebra_axioms(const Presentation& p, CheckReport& rep) {
    size_t n = p.dim;
    const FieldPtr& f = p.field;
    const Matrix& dl = p.comult();
    if (dl.rows() != n * n || dl.cols() != n || p.counit().size() != n)
        throw DimensionMismatch("coalgebra part dimensions");
    Matrix id = Matrix::identity(f, n);
    std::string d;
    bool coassoc = maps_equal(kron(dl, id) * dl, kron(id, dl) * dl, {n}, d);
    rep.add("coassociativity", coassoc, d);
    bool cl = maps_equal(kron(p.counit_row(), id) * dl, id, {n}, d);
    rep.add("left counit law", cl, d);
    bool cr = maps_equal(kron(id, p.counit_row()) * dl, id, {n}, d);
    rep.add("right counit law", cr, d);
}

void check_bialgebra_axioms(const Presentation& p, CheckReport& rep) {
    check_algebra_axioms(p, rep);
    check_coalgebra_axioms(p, rep);
    size_t n = p.dim;
    const FieldPtr& f = p.field;
    const Matrix& m = p.mult();
    const Matrix& dl = p.comult();
    std::string d;
    Matrix mid_swap = leg_permutation(f, {n, n, n, n}, {0, 2, 1, 3});
    bool mult_map = maps_equal(dl * m, kron(m, m) * mid_swap * kron(dl, dl), {n, n}, d);
    rep.add("comultiplication is an algebra map", mult_map, d);
    bool unit_grp = maps_equal(dl * p.unit_col(), kron(p.unit_col(), p.unit_col()), {1}, d);
    rep.add("comultiplication of the unit", unit_grp, d);
    bool counit_mult = maps_equal(p.counit_row() * m, kron(p.counit_row(), p.counit_row()), {n, n}, d);
    rep.add("counit is an algebra map", counit_mult, d);
    rep.add("counit of the unit", p.counit_apply(p.unit()).is_one());
}

void check_hopf_axioms(const Presentation& p, CheckReport& rep) {
    check_bialgebra_axioms(p, rep);
    size_t n = p.dim;
    if (!p.antipode) {
        rep.add("antipode present", false);
        return;
    }
    if (p.antipode->rows() != n || p.antipode->cols() != n)
        throw DimensionMismatch("antipode shape");
    const Matrix& s = *p.antipode;
    Matrix id = Matrix::identity(p.field, n);
    Matrix conv_target = p.unit_col() * p.counit_row();
    std::string d;
    bool left = maps_equal(p.mult() * kron(s, id) * p.comult(), conv_target, {n}, d);
    rep.add("antipode convolution law (left)", left, d);
    bool right = maps_equal(p.mult() * kron(id, s) * p.comult(), conv_target, {n}, d);
    rep.add("antipode convolution law (right)", right, d);
}

} // namespace

CheckReport check_structure(const Presentation& p, CheckLevel level) {
    CheckReport rep;
    switch (level) {
        case CheckLevel::Algebra: check_algebra_axioms(p, rep); break;
        case CheckLevel::Coalgebra: check_coalgebra_axioms(p, rep); break;
        case CheckLevel::Bialgebra: check_bialgebra_axioms(p, rep); break;
        case CheckLevel::Hopf: check_hopf_axioms(p, rep); break;
        case CheckLevel::Module:
        case CheckLevel::Comodule:
            throw StructureMismatch("module/comodule checks need an action or coaction input");
    }
    return rep;
}

Matrix ModuleAction::action_of(const Vec& a) const {
    Matrix r(field, dim, dim);
    for (size_t j = 0; j < act.size(); ++j)
        if (!a[j].is_zero()) r = r + act[j] * a[j];
    return r;
}

Matrix ModuleAction::action_map(size_t dimA) const {
    Matrix r(field, dim, dim * dimA);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dimA; ++j) {
            Vec v = act[j].col(i);
            for (size_t k = 0; k < dim; ++k) r.at(k, i * dimA + j) = v[k];
        }
    return r;
}

CheckReport check_module(const Presentation& a, const ModuleAction& m) {
    CheckReport rep;
    size_t n = a.dim;
    if (m.act.size() != n) throw DimensionMismatch("module action count");
    for (const auto& mat : m.act)
        if (mat.rows() != m.dim || mat.cols() != m.dim) throw DimensionMismatch("module action shape");
    std::string d;
    bool unit_ok = maps_equal(m.action_of(a.unit()), Matrix::identity(m.field, m.dim), {m.dim}, d);
    rep.add("unit acts as identity", unit_ok, d);
    bool comp = true;
    std::string where;
    for (size_t i = 0; i < n && comp; ++i)
        for (size_t j = 0; j < n && comp; ++j) {
            Matrix lhs = m.act[j] * m.act[i]; // x -> (x e_i) e_j
            Matrix rhs = m.action_of(a.mult().col(i * n + j));
            if (lhs != rhs) {
                comp = false;
                where = "at basis (" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
    rep.add("action respects multiplication", comp, where);
    return rep;
}

CheckReport check_comodule(const Presentation& c, const ComoduleCoaction& m) {
    CheckReport rep;
    size_t n = c.dim;
    if (m.rho.rows() != m.dim * n || m.rho.cols() != m.dim) throw DimensionMismatch("coaction shape");
    Matrix idm = Matrix::identity(m.field, m.dim);
    Matrix idc = Matrix::identity(m.field, n);
    std::string d;
    bool coassoc = maps_equal(kron(m.rho, idc) * m.rho, kron(idm, c.comult()) * m.rho, {m.dim}, d);
    rep.add("coaction coassociativity", coassoc, d);
    bool counit = maps_equal(kron(idm, c.counit_row()) * m.rho, idm, {m.dim}, d);
    rep.add("coaction counit law", counit, d);
    return rep;
}

// ---------------------------------------------------------------------------
// builders

namespace {

void validate_group_table(const std::vector<std::vector<size_t>>& t, size_t& id_index) {
    size_t n = t.size();
    if (n == 0) throw InvalidGroupTable("empty table");
    for (const auto& row : t) {
        if (row.size() != n) throw InvalidGroupTable("table is not square");
        for (size_t v : row)
            if (v >= n) throw InvalidGroupTable("index out of range");
    }
    bool found = false;
    for (size_t e = 0; e < n && !found; ++e) {
        bool is_id = true;
        for (size_t j = 0; j < n; ++j) is_id &= t[e][j] == j && t[j][e] == j;
        if (is_id) {
            id_index = e;
            found = true;
        }
    }
    if (!found) throw InvalidGroupTable("no identity element");
    for (size_t i = 0; i < n; ++i) {
        bool inv = false;
        for (size_t j = 0; j < n; ++j) inv |= t[i][j] == id_index && t[j][i] == id_index;
        if (!inv) throw InvalidGroupTable("element without inverse");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]]) throw InvalidGroupTable("table is not associative");
}

} // namespace

Presentation unit_presentation(const FieldPtr& f) {
    Presentation p;
    p.field = f;
    p.dim = 1;
    p.algebra = AlgebraPart{Matrix::identity(f, 1), {f->one()}};
    p.coalgebra = CoalgebraPart{Matrix::identity(f, 1), {f->one()}};
    p.antipode = Matrix::identity(f, 1);
    return p;
}

Presentation group_algebra(const std::vector<std::vector<size_t>>& table, const FieldPtr& f) {
    size_t id_index = 0;
    validate_group_table(table, id_index);
    size_t n = table.size();
    Presentation p;
    p.field = f;
    p.dim = n;
    AlgebraPart alg{Matrix(f, n, n * n), zero_vec(f, n)};
    CoalgebraPart coa{Matrix(f, n * n, n), Vec(n, f->one())};
    Matrix s(f, n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) alg.mult.at(table[i][j], i * n + j) = f->one();
        coa.comult.at(i * n + i, i) = f->one();
        for (size_t j = 0; j < n; ++j)
            if (table[i][j] == id_index) s.at(j, i) = f->one();
    }
    alg.unit[id_index] = f->one();
    p.algebra = std::move(alg);
    p.coalgebra = std::move(coa);
    p.antipode = std::move(s);
    return p;
}

std::vector<std::vector<size_t>> cyclic_group_table(size_t n) {
    std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

std::vector<std::vector<size_t>> symmetric3_table() {
    // permutations of {0,1,2}; composition (f*g)(x) = f(g(x))
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto index_of = [&](const int* p) {
        for (int k = 0; k < 6; ++k)
            if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2]) return (size_t)k;
        throw Error("unreachable");
    };
    std::vector<std::vector<size_t>> t(6, std::vector<size_t>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(comp);
        }
    return t;
}

Presentation sweedler_h4(const FieldPtr& f) {
    // basis 1, g, x, w = gx with g^2 = 1, x^2 = 0, xg = -gx
    Presentation p;
    p.field = f;
    p.dim = 4;
    Scalar one = f->one(), neg = f->from_int(-1);
    AlgebraPart alg{Matrix(f, 4, 16), zero_vec(f, 4)};
    alg.unit[0] = one;
    auto set = [&](size_t i, size_t j, size_t k, const Scalar& c) { alg.mult.at(k, i * 4 + j) = c; };
    for (size_t j = 0; j < 4; ++j) {
        set(0, j, j, one); // 1 * y = y
        if (j) set(j, 0, j, one);
    }
    set(1, 1, 0, one);  // g g = 1
    set(1, 2, 3, one);  // g x = w
    set(1, 3, 2, one);  // g w = x
    set(2, 1, 3, neg);  // x g = -w
    set(3, 1, 2, neg);  // w g = -x
    // x x = x w = w x = w w = 0
    p.algebra = std::move(alg);

    CoalgebraPart coa{Matrix(f, 16, 4), {one, one, f->zero(), f->zero()}};
    auto dset = [&](size_t i, size_t j, size_t k, const Scalar& c) { coa.comult.at(j * 4 + k, i) = c; };
    dset(0, 0, 0, one);             // D(1) = 1(x)1
    dset(1, 1, 1, one);             // D(g) = g(x)g
    dset(2, 2, 0, one);             // D(x) = x(x)1 + g(x)x
    dset(2, 1, 2, one);
    dset(3, 3, 1, one);             // D(w) = w(x)g + 1(x)w
    dset(3, 0, 3, one);
    p.coalgebra = std::move(coa);

    Matrix s(f, 4, 4);
    s.at(0, 0) = one;
    s.at(1, 1) = one;
    s.at(3, 2) = neg; // S(x) = -w
    s.at(2, 3) = one; // S(w) = x
    p.antipode = std::move(s);
    if (f->characteristic() == 2) p.notes.push_back("degenerate signs");
    return p;
}

Presentation dual_of(const Presentation& p) {
    Presentation d;
    d.field = p.field;
    d.dim = p.dim;
    if (p.coalgebra) d.algebra = AlgebraPart{p.comult().transpose(), p.counit()};
    if (p.algebra) d.coalgebra = CoalgebraPart{p.mult().transpose(), p.unit()};
    if (p.antipode) d.antipode = p.antipode->transpose();
    return d;
}

Presentation extension_field_algebra(const FieldPtr& ext) {
    if (ext->kind() != FieldKind::SimpleExtension)
        throw StructureMismatch("extension_field_algebra expects a SimpleExtension field");
    const FieldPtr& k = ext->base();
    size_t n = ext->degree();
    Presentation p;
    p.field = k;
    p.dim = n;
    AlgebraPart alg{Matrix(k, n, n * n), zero_vec(k, n)};
    alg.unit[0] = k->one();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            polyring::Poly prod(i + j + 1, k->zero());
            prod[i + j] = k->one();
            auto [q, r] = polyring::divmod(prod, ext->minpoly(), k);
            (void)q;
            for (size_t t = 0; t < r.size(); ++t) alg.mult.at(t, i * n + j) = r[t];
        }
    p.algebra = std::move(alg);
    return p;
}

ModuleAction regular_module(const Presentation& a) {
    ModuleAction m;
    m.field = a.field;
    m.dim = a.dim;
    for (size_t j = 0; j < a.dim; ++j) m.act.push_back(a.right_mult(unit_vec(a.field, a.dim, j)));
    return m;
}

ModuleAction trivial_module(const Presentation& h, size_t dim) {
    ModuleAction m;
    m.field = h.field;
    m.dim = dim;
    for (size_t j = 0; j < h.dim; ++j)
        m.act.push_back(Matrix::identity(h.field, dim) * h.counit()[j]);
    return m;
}

ComoduleCoaction regular_comodule(const Presentation& c) {
    return ComoduleCoaction{c.field, c.dim, c.comult()};
}

ComoduleCoaction trivial_comodule(const Presentation& h, size_t dim) {
    return ComoduleCoaction{h.field, dim, kron(Matrix::identity(h.field, dim), h.unit_col())};
}

// ---------------------------------------------------------------------------
// hom spaces and retraction solver

std::vector<Matrix> module_hom(const Presentation& a, const ModuleAction& m, const ModuleAction& n) {
    if (!a.field->same(m.field) || !a.field->same(n.field)) throw StructureMismatch("field mismatch");
    if (m.act.size() != a.dim || n.act.size() != a.dim) throw StructureMismatch("module over different algebra");
    AffineMapSystem sys(a.field, n.dim, m.dim);
    for (size_t j = 0; j < a.dim; ++j)
        sys.require([&, j](const Matrix& f) { return f * m.act[j] - n.act[j] * f; },
                    Matrix(a.field, n.dim, m.dim));
    SolutionSet s = sys.solve();
    std::vector<Matrix> basis;
    for (const auto& v : s.kernel) basis.push_back(Matrix::from_vec(a.field, n.dim, m.dim, v));
    return basis;
}

std::vector<Matrix> comodule_hom(const Presentation& c, const ComoduleCoaction& m,
                                 const ComoduleCoaction& n) {
    if (!c.field->same(m.field) || !c.field->same(n.field)) throw StructureMismatch("field mismatch");
    Matrix idc = Matrix::identity(c.field, c.dim);
    AffineMapSystem sys(c.field, n.dim, m.dim);
    sys.require([&](const Matrix& f) { return kron(f, idc) * m.rho - n.rho * f; },
                Matrix(c.field, n.dim * c.dim, m.dim));
    SolutionSet s = sys.solve();
    std::vector<Matrix> basis;
    for (const auto& v : s.kernel) basis.push_back(Matrix::from_vec(c.field, n.dim, m.dim, v));
    return basis;
}

std::optional<Matrix> coaction_retraction(const Presentation& c, const ComoduleCoaction& m) {
    CheckReport pre = check_comodule(c, m);
    if (!pre.ok()) throw StructureMismatch("coaction_retraction: input is not a comodule");
    size_t nm = m.dim, nc = c.dim;
    Matrix idm = Matrix::identity(c.field, nm);
    Matrix idc = Matrix::identity(c.field, nc);
    AffineMapSystem sys(c.field, nm, nm * nc);
    // retraction of the coaction
    sys.require([&](const Matrix& lam) { return lam * m.rho; }, idm);
    // colinearity: M(x)C carries the coaction id(x)Delta
    sys.require([&](const Matrix& lam) { return m.rho * lam - kron(lam, idc) * kron(idm, c.comult()); },
                Matrix(c.field, nm * nc, nm * nc));
    return sys.solve_canonical();
}

// ---------------------------------------------------------------------------
// json

namespace {

nlohmann::json cube_to_json(const Matrix& mult, size_t n, bool algebra_layout) {
    // algebra layout: out[i][j][k] = coefficient of e_k in e_i e_j
    // coalgebra layout: out[i][j][k] = coefficient of e_j(x)e_k in D(e_i)
    nlohmann::json out = nlohmann::json::array();
    for (size_t i = 0; i < n; ++i) {
        nlohmann::json plane = nlohmann::json::array();
        for (size_t j = 0; j < n; ++j) {
            nlohmann::json line = nlohmann::json::array();
            for (size_t k = 0; k < n; ++k) {
                const Scalar& v = algebra_layout ? mult.at(k, i * n + j) : mult.at(j * n + k, i);
                line.push_back(v.str());
            }
            plane.push_back(std::move(line));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

Vec vec_from_json(const FieldPtr& f, const nlohmann::json& j) {
    Vec v;
    for (const auto& s : j) v.push_back(f->parse(s.get<std::string>()));
    return v;
}

nlohmann::json vec_to_json(const Vec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

} // namespace

nlohmann::json Presentation::to_json() const {
    nlohmann::json j;
    j["field"] = field->to_json();
    j["dim"] = dim;
    if (algebra) {
        j["mult"] = cube_to_json(algebra->mult, dim, true);
        j["unit"] = vec_to_json(algebra->unit);
    }
    if (coalgebra) {
        j["comult"] = cube_to_json(coalgebra->comult, dim, false);
        j["counit"] = vec_to_json(coalgebra->counit);
    }
    if (antipode) {
        nlohmann::json rows = nlohmann::json::array();
        for (size_t i = 0; i < dim; ++i) {
            nlohmann::json r = nlohmann::json::array();
            for (size_t jj = 0; jj < dim; ++jj) r.push_back(antipode->at(i, jj).str());
            rows.push_back(std::move(r));
        }
        j["antipode"] = rows;
    }
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

Presentation Presentation::from_json(const nlohmann::json& j) {
    Presentation p;
    p.field = Field::from_json(j.at("field"));
    p.dim = j.at("dim").get<size_t>();
    size_t n = p.dim;
    if (j.contains("mult")) {
        AlgebraPart alg{Matrix(p.field, n, n * n), vec_from_json(p.field, j.at("unit"))};
        const auto& cube = j.at("mult");
        for (size_t i = 0; i < n; ++i)
            for (size_t jj = 0; jj < n; ++jj)
                for (size_t k = 0; k < n; ++k)
                    alg.mult.at(k, i * n + jj) = p.field->parse(cube[i][jj][k].get<std::string>());
        if (alg.unit.size() != n) throw ParseError("unit length");
        p.algebra = std::move(alg);
    }
    if (j.contains("comult")) {
        CoalgebraPart coa{Matrix(p.field, n * n, n), vec_from_json(p.field, j.at("counit"))};
        const auto& cube = j.at("comult");
        for (size_t i = 0; i < n; ++i)
            for (size_t jj = 0; jj < n; ++jj)
                for (size_t k = 0; k < n; ++k)
                    coa.comult.at(jj * n + k, i) = p.field->parse(cube[i][jj][k].get<std::string>());
        if (coa.counit.size() != n) throw ParseError("counit length");
        p.coalgebra = std::move(coa);
    }
    if (j.contains("antipode")) {
        Matrix s(p.field, n, n);
        const auto& rows = j.at("antipode");
        for (size_t i = 0; i < n; ++i)
            for (size_t jj = 0; jj < n; ++jj) s.at(i, jj) = p.field->parse(rows[i][jj].get<std::string>());
        p.antipode = std::move(s);
    }
    if (j.contains("notes")) p.notes = j.at("notes").get<std::vector<std::string>>();
    return p;
}

std::string Presentation::hash() const { return content_hash(to_json().dump()); }

nlohmann::json ModuleAction::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : act) {
        nlohmann::json rows = nlohmann::json::array();
        for (size_t i = 0; i < dim; ++i) {
            nlohmann::json r = nlohmann::json::array();
            for (size_t j = 0; j < dim; ++j) r.push_back(m.at(i, j).str());
            rows.push_back(std::move(r));
        }
        arr.push_back(std::move(rows));
    }
    return nlohmann::json{{"dim", dim}, {"action", arr}};
}

ModuleAction ModuleAction::from_json(const FieldPtr& f, const nlohmann::json& j) {
    ModuleAction m;
    m.field = f;
    m.dim = j.at("dim").get<size_t>();
    for (const auto& mat : j.at("action")) {
        Matrix a(f, m.dim, m.dim);
        for (size_t i = 0; i < m.dim; ++i)
            for (size_t jj = 0; jj < m.dim; ++jj) a.at(i, jj) = f->parse(mat[i][jj].get<std::string>());
        m.act.push_back(std::move(a));
    }
    return m;
}

std::string ModuleAction::hash() const { return content_hash(to_json().dump()); }

nlohmann::json ComoduleCoaction::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < rho.rows(); ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (size_t j = 0; j < rho.cols(); ++j) r.push_back(rho.at(i, j).str());
        rows.push_back(std::move(r));
    }
    return nlohmann::json{{"dim", dim}, {"rho", rows}};
}

ComoduleCoaction ComoduleCoaction::from_json(const FieldPtr& f, const nlohmann::json& j) {
    ComoduleCoaction m;
    m.field = f;
    m.dim = j.at("dim").get<size_t>();
    const auto& rows = j.at("rho");
    size_t r = rows.size();
    if (r % m.dim != 0) throw ParseError("coaction shape");
    Matrix rho(f, r, m.dim);
    for (size_t i = 0; i < r; ++i)
        for (size_t jj = 0; jj < m.dim; ++jj) rho.at(i, jj) = f->parse(rows[i][jj].get<std::string>());
    m.rho = std::move(rho);
    return m;
}

std::string ComoduleCoaction::hash() const { return content_hash(to_json().dump()); }

} // namespace hopfwit
