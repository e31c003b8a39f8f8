#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace hopfwit {

// Structure-constant presentation of an algebra/coalgebra/bialgebra/Hopf
// algebra on one carrier.  mult is the matrix of A(x)A -> A (column i*dim+j is
// the coordinate vector of e_i*e_j); comult is the matrix of C -> C(x)C.
// Right modules and right comodules only.

struct AlgebraPart {
    Matrix mult; // dim x dim^2
    Vec unit;    // coordinates of 1
};

struct CoalgebraPart {
    Matrix comult; // dim^2 x dim
    Vec counit;    // covector
};

struct Presentation {
    FieldPtr field;
    size_t dim = 0;
    std::optional<AlgebraPart> algebra;
    std::optional<CoalgebraPart> coalgebra;
    std::optional<Matrix> antipode; // dim x dim
    std::vector<std::string> notes;

    const Matrix& mult() const;
    const Vec& unit() const;
    const Matrix& comult() const;
    const Vec& counit() const;
    Matrix unit_col() const;   // k -> A
    Matrix counit_row() const; // C -> k

    Matrix left_mult(const Vec& a) const;  // x -> a*x
    Matrix right_mult(const Vec& a) const; // x -> x*a
    Vec mul_vec(const Vec& a, const Vec& b) const;
    Scalar counit_apply(const Vec& c) const;
    Vec antipode_vec(const Vec& a) const;

    nlohmann::json to_json() const;
    static Presentation from_json(const nlohmann::json& j);
    std::string hash() const;
};

enum class CheckLevel { Algebra, Coalgebra, Bialgebra, Hopf, Module, Comodule };
CheckLevel check_level_from_name(const std::string& name);
std::string check_level_name(CheckLevel level);

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string detail; // offending basis tuple on failure
};

struct CheckReport {
    std::vector<AxiomCheck> items;
    bool ok() const;
    void add(std::string axiom, bool pass, std::string detail = "");
    void merge(const CheckReport& other, const std::string& prefix = "");
    nlohmann::json to_json() const;
    std::string pretty() const;
};

CheckReport check_structure(const Presentation& p, CheckLevel level);

// Right action of the algebra A: act[j] is the matrix of x -> x*e_j.
struct ModuleAction {
    FieldPtr field;
    size_t dim = 0;
    std::vector<Matrix> act;

    Matrix action_of(const Vec& a) const;  // extended linearly
    Matrix action_map(size_t dimA) const;  // M(x)A -> M
    nlohmann::json to_json() const;
    static ModuleAction from_json(const FieldPtr& f, const nlohmann::json& j);
    std::string hash() const;
};

// Right coaction rho: M -> M(x)C.
struct ComoduleCoaction {
    FieldPtr field;
    size_t dim = 0;
    Matrix rho;

    nlohmann::json to_json() const;
    static ComoduleCoaction from_json(const FieldPtr& f, const nlohmann::json& j);
    std::string hash() const;
};

CheckReport check_module(const Presentation& a, const ModuleAction& m);
CheckReport check_comodule(const Presentation& c, const ComoduleCoaction& m);

// builders
Presentation unit_presentation(const FieldPtr& f); // the one-dimensional Hopf algebra k
Presentation group_algebra(const std::vector<std::vector<size_t>>& table, const FieldPtr& f);
Presentation sweedler_h4(const FieldPtr& f);
Presentation dual_of(const Presentation& p);
std::vector<std::vector<size_t>> cyclic_group_table(size_t n);
std::vector<std::vector<size_t>> symmetric3_table();

// K = k[x]/(m) viewed as a k-algebra with basis 1, x, ..., x^(deg-1)
Presentation extension_field_algebra(const FieldPtr& ext);

ModuleAction regular_module(const Presentation& a);
ModuleAction trivial_module(const Presentation& h, size_t dim = 1);  // via counit
ComoduleCoaction regular_comodule(const Presentation& c);
ComoduleCoaction trivial_comodule(const Presentation& h, size_t dim = 1); // via unit grouplike

// bases of intertwiner spaces (maps M -> N)
std::vector<Matrix> module_hom(const Presentation& a, const ModuleAction& m, const ModuleAction& n);
std::vector<Matrix> comodule_hom(const Presentation& c, const ComoduleCoaction& m,
                                 const ComoduleCoaction& n);

// colinear lambda: M(x)C -> M with lambda o rho = id (relative injectivity
// witness); NoWitness as nullopt
std::optional<Matrix> coaction_retraction(const Presentation& c, const ComoduleCoaction& m);

} // namespace hopfwit
