#pragma once

#include <map>

#include "entwine.hpp"

namespace hopfwit {

// Every solver assembles one exact affine system, returns the canonical
// witness (free variables zero) or nullopt, and re-verifies its own output
// before returning.  NoWitness is a normal empty result, never an error.

enum class WitnessTag {
    NormalizedIntegral,
    DualIntegral,
    RelativeCasimir,
    BimoduleRetraction,
    Theta,
    Cocasimir,
    TotalIntegral,
    AugmentedCointegral,
    Beta,
    FrobeniusRing,
    FrobeniusEntwining,
    FrobeniusHK,
    Alpha,
    CentralX,
    QuantumIntegral,
};

std::string tag_name(WitnessTag t);
WitnessTag tag_from_name(const std::string& name);

struct Witness {
    WitnessTag tag = WitnessTag::NormalizedIntegral;
    std::map<std::string, Matrix> parts;            // single-matrix tags use "data"
    std::map<std::string, std::string> context;     // input name -> content hash
    FieldPtr field;

    const Matrix& data() const { return parts.at("data"); }
    const Matrix& part(const std::string& name) const;

    nlohmann::json to_json() const;
    static Witness from_json(const nlohmann::json& j);
};

// ring extension R -> S (iota_r an algebra map); the base ring of all tensor
// products is the ground field
struct RingExtension {
    Presentation S;
    Presentation R;
    Matrix iota_r; // dimS x dimR
};

std::vector<Vec> full_basis_span(const Presentation& s);

// --- solvers -----------------------------------------------------------

std::optional<Witness> solve_relative_casimir(const Presentation& s, const std::vector<Vec>& t_span);
std::optional<Witness> solve_bimodule_retraction(const Presentation& r, const Matrix& iota_r,
                                                 const Presentation& q, const Matrix& iota_q,
                                                 const Presentation& s);
std::optional<Witness> solve_normalized_integral(const Presentation& h);
std::optional<Witness> solve_dual_normalized_integral(const Presentation& h);
std::optional<Witness> solve_theta(const EntwiningStructure& e);
std::optional<Witness> solve_cocasimir(const EntwiningStructure& e);
std::optional<Witness> solve_total_integral(const Presentation& l, const Presentation& a,
                                            const ComoduleCoaction& coaction_a);
std::optional<Witness> solve_augmented_cointegral(const Presentation& l, const Presentation& c,
                                                  const ModuleAction& action_c);
std::optional<Witness> solve_quantum_integral(const Presentation& l);

// --- verifiers ----------------------------------------------------------

CheckReport verify_relative_casimir(const Presentation& s, const std::vector<Vec>& t_span,
                                    const Witness& w);
CheckReport verify_bimodule_retraction(const Presentation& r, const Matrix& iota_r,
                                       const Presentation& q, const Matrix& iota_q,
                                       const Presentation& s, const Witness& w);
CheckReport verify_normalized_integral(const Presentation& h, const Witness& w);
CheckReport verify_dual_normalized_integral(const Presentation& h, const Witness& w);
CheckReport verify_theta(const EntwiningStructure& e, const Witness& w);
CheckReport verify_cocasimir(const EntwiningStructure& e, const Witness& w);
CheckReport verify_total_integral(const Presentation& l, const Presentation& a,
                                  const ComoduleCoaction& coaction_a, const Witness& w);
CheckReport verify_augmented_cointegral(const Presentation& l, const Presentation& c,
                                        const ModuleAction& action_c, const Witness& w);
CheckReport verify_quantum_integral(const Presentation& l, const Witness& w);

// --- transports ---------------------------------------------------------

enum class TransportDirection {
    IntegralToIdempotent,
    TotalIntegralToTheta,
    ThetaToTotalIntegral,
    CocasimirToCointegral,
};
TransportDirection transport_direction_from_name(const std::string& name);
std::string transport_direction_name(TransportDirection d);

Witness transport_integral_to_idempotent(const Presentation& h, const Witness& t);
Witness transport_total_integral_to_theta(const Presentation& l, const Presentation& a,
                                          const ComoduleCoaction& coaction_a, const Witness& phi);
Witness transport_theta_to_total_integral(const Presentation& l, const Presentation& a,
                                          const ComoduleCoaction& coaction_a, const Witness& theta);
Witness transport_cocasimir_to_cointegral(const Presentation& l, const Presentation& c,
                                          const ModuleAction& action_c, const Witness& e);

// --- Frobenius systems for ring extensions -------------------------------

// (mu, f): mu an R-bimodule map S -> R, f a Casimir element of S(x)S with
// mu(f1)f2 = f1 mu(f2) = 1
CheckReport verify_frobenius_ring(const RingExtension& ext, const Matrix& mu, const Vec& f);
std::optional<Vec> solve_casimir_given_mu(const RingExtension& ext, const Matrix& mu);
std::optional<Witness> solve_alpha(const RingExtension& ext, const Matrix& mu, const Vec& f,
                                   const std::vector<Vec>& t_span);
std::optional<Witness> solve_central_x(const RingExtension& ext, const Matrix& mu, const Vec& f,
                                       const std::vector<Vec>& q_span);

// --- Frobenius systems for entwining adjunctions -------------------------

CheckReport verify_frobenius_fg(const EntwiningStructure& e, const Matrix& theta, const Vec& z);
std::optional<Vec> solve_z_given_theta(const EntwiningStructure& e, const Matrix& theta);
std::optional<Matrix> solve_theta_given_z(const EntwiningStructure& e, const Vec& z);
std::optional<Witness> solve_beta_hsep(const EntwiningStructure& e, const Matrix& theta, const Vec& z);
std::optional<Witness> solve_beta_sep(const EntwiningStructure& e, const Matrix& theta, const Vec& z);
CheckReport verify_frobenius_hk(const EntwiningStructure& e, const Matrix& vartheta, const Matrix& emap);
std::optional<Witness> solve_beta_fsep(const EntwiningStructure& e, const Matrix& vartheta,
                                       const Matrix& emap, bool require_colinear);

} // namespace hopfwit
