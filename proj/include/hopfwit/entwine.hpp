#pragma once

#include "strucalg.hpp"

namespace hopfwit {

// Right-right entwining (A, C, psi) with psi : C(x)A -> A(x)C stored as one
// matrix in the global flattening.  All Sweedler-index expressions are
// compiled to explicit compositions; the leg order of each step is fixed by
// the flattening convention in linalg.hpp.
struct EntwiningStructure {
    Presentation A; // algebra part required
    Presentation C; // coalgebra part required
    Matrix psi;     // (dimA*dimC) x (dimC*dimA)

    size_t dimA() const { return A.dim; }
    size_t dimC() const { return C.dim; }
    nlohmann::json to_json() const;
    static EntwiningStructure from_json(const nlohmann::json& j);
    std::string hash() const;
};

CheckReport check_entwining(const EntwiningStructure& e);

// Doi-Koppinen datum (H, A, C): comodule algebra A and module coalgebra C
// over the bialgebra H.
struct DoiKoppinenDatum {
    Presentation H;
    Presentation A;
    ComoduleCoaction coactionA; // A -> A(x)H
    Presentation C;
    ModuleAction actionC; // right H-action on C

    nlohmann::json to_json() const;
    static DoiKoppinenDatum from_json(const nlohmann::json& j);
};

CheckReport check_doi_koppinen(const DoiKoppinenDatum& d);

// psi(c(x)a) = a_[0] (x) c.a_[1]; InvalidDatum when the datum checks fail
EntwiningStructure entwining_from_doi_koppinen(const DoiKoppinenDatum& d);

// psi(g(x)h) = h_(2) (x) S(h_(1)) g h_(3); entwined modules are the
// Yetter-Drinfeld modules of L
EntwiningStructure entwining_yetter_drinfeld(const Presentation& l);

// special data: (k, A, k) and (k, k, C)
EntwiningStructure trivial_entwining_modules(const Presentation& a);
EntwiningStructure trivial_entwining_comodules(const Presentation& c);
// relative Hopf data (A an L-comodule algebra) and [L,C] data (C an L-module
// coalgebra)
EntwiningStructure relative_hopf_entwining(const Presentation& l, const Presentation& a,
                                           const ComoduleCoaction& coaction_a);
EntwiningStructure lc_entwining(const Presentation& l, const Presentation& c,
                                const ModuleAction& action_c);

struct EntwinedModule {
    size_t dim = 0;
    ModuleAction action;     // over A
    ComoduleCoaction coaction; // over C

    nlohmann::json to_json() const;
    static EntwinedModule from_json(const FieldPtr& f, const nlohmann::json& j);
    std::string hash() const;
};

CheckReport check_entwined_module(const EntwiningStructure& e, const EntwinedModule& m);

// G(N) = N(x)C with (n(x)c).a = n.a_psi (x) c^psi and coaction id(x)Delta
EntwinedModule cofree_on_module(const EntwiningStructure& e, const ModuleAction& n);
// Hom(A, V) with (f.a)(b) = f(ab), V = k^dim_v
ModuleAction hom_module(const Presentation& a, size_t dim_v);
// Hom(A, V)(x)C
EntwinedModule cofree_on_space(const EntwiningStructure& e, size_t dim_v);
// unit  eta_M : M -> Hom(A, M)(x)C,  m -> m_[0]. (x) m_[1]
Matrix unit_map(const EntwiningStructure& e, const EntwinedModule& m);
// retraction of eta_M inside the entwined category; NoWitness as nullopt
std::optional<Matrix> unit_splits(const EntwiningStructure& e, const EntwinedModule& m);

std::vector<Matrix> entwined_hom(const EntwiningStructure& e, const EntwinedModule& m,
                                 const EntwinedModule& n);

EntwinedModule entwined_direct_sum(const EntwinedModule& a, const EntwinedModule& b);
// transport of structure along an invertible carrier map p (an isomorphic copy)
EntwinedModule entwined_conjugate(const EntwinedModule& m, const Matrix& p);

} // namespace hopfwit
