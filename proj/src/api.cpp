#include "hopfwit/api.hpp"

namespace hopfwit::api {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

struct RelHopfInput {
    Presentation l;
    Presentation a;
    ComoduleCoaction rho;
};

RelHopfInput read_relhopf(const json& j) {
    RelHopfInput r;
    r.l = Presentation::from_json(j.at("L"));
    r.a = Presentation::from_json(j.at("A"));
    r.rho = ComoduleCoaction::from_json(r.a.field, j.at("coactionA"));
    return r;
}

struct LcInput {
    Presentation l;
    Presentation c;
    ModuleAction act;
};

LcInput read_lc(const json& j) {
    LcInput r;
    r.l = Presentation::from_json(j.at("L"));
    r.c = Presentation::from_json(j.at("C"));
    r.act = ModuleAction::from_json(r.c.field, j.at("actionC"));
    return r;
}

std::vector<Vec> read_span(const Presentation& s, const json& j, const char* key) {
    if (!j.contains(key)) return full_basis_span(s);
    std::vector<Vec> span;
    for (const auto& row : j.at(key)) {
        Vec v;
        for (const auto& entry : row) v.push_back(s.field->parse(entry.get<std::string>()));
        if (v.size() != s.dim) throw ParseError("spanning vector of wrong length");
        span.push_back(std::move(v));
    }
    return span;
}

std::optional<Witness> dispatch_solve(const std::string& kind, const json& j) {
    if (kind == "integral") return solve_normalized_integral(Presentation::from_json(j));
    if (kind == "dual_integral") return solve_dual_normalized_integral(Presentation::from_json(j));
    if (kind == "casimir") {
        Presentation s = Presentation::from_json(j.contains("S") ? j.at("S") : j);
        return solve_relative_casimir(s, read_span(s, j, "T"));
    }
    if (kind == "theta") return solve_theta(EntwiningStructure::from_json(j));
    if (kind == "cocasimir") return solve_cocasimir(EntwiningStructure::from_json(j));
    if (kind == "total_integral") {
        RelHopfInput r = read_relhopf(j);
        return solve_total_integral(r.l, r.a, r.rho);
    }
    if (kind == "cointegral") {
        LcInput r = read_lc(j);
        return solve_augmented_cointegral(r.l, r.c, r.act);
    }
    if (kind == "quantum_integral") return solve_quantum_integral(Presentation::from_json(j));
    throw ParseError("unknown witness kind '" + kind + "'");
}

CheckReport dispatch_verify(const std::string& kind, const json& j, const Witness& w) {
    if (kind == "integral") return verify_normalized_integral(Presentation::from_json(j), w);
    if (kind == "dual_integral")
        return verify_dual_normalized_integral(Presentation::from_json(j), w);
    if (kind == "casimir") {
        Presentation s = Presentation::from_json(j.contains("S") ? j.at("S") : j);
        return verify_relative_casimir(s, read_span(s, j, "T"), w);
    }
    if (kind == "theta") return verify_theta(EntwiningStructure::from_json(j), w);
    if (kind == "cocasimir") return verify_cocasimir(EntwiningStructure::from_json(j), w);
    if (kind == "total_integral") {
        RelHopfInput r = read_relhopf(j);
        return verify_total_integral(r.l, r.a, r.rho, w);
    }
    if (kind == "cointegral") {
        LcInput r = read_lc(j);
        return verify_augmented_cointegral(r.l, r.c, r.act, w);
    }
    if (kind == "quantum_integral") return verify_quantum_integral(Presentation::from_json(j), w);
    throw ParseError("unknown witness kind '" + kind + "'");
}

std::map<std::string, std::string> context_of(const std::string& kind, const json& j) {
    std::map<std::string, std::string> ctx;
    if (kind == "integral" || kind == "dual_integral") {
        ctx["H"] = Presentation::from_json(j).hash();
    } else if (kind == "quantum_integral") {
        ctx["L"] = Presentation::from_json(j).hash();
    } else if (kind == "casimir") {
        ctx["S"] = Presentation::from_json(j.contains("S") ? j.at("S") : j).hash();
    } else if (kind == "theta" || kind == "cocasimir") {
        ctx["entwining"] = EntwiningStructure::from_json(j).hash();
    } else if (kind == "total_integral") {
        RelHopfInput r = read_relhopf(j);
        ctx["L"] = r.l.hash();
        ctx["A"] = r.a.hash();
        ctx["coactionA"] = r.rho.hash();
    } else if (kind == "cointegral") {
        LcInput r = read_lc(j);
        ctx["L"] = r.l.hash();
        ctx["C"] = r.c.hash();
        ctx["actionC"] = r.act.hash();
    }
    return ctx;
}

} // namespace

std::string check(const std::string& level, const std::string& input_json) {
    json j = parse(input_json);
    CheckReport rep;
    if (level == "entwining") {
        rep = check_entwining(EntwiningStructure::from_json(j));
    } else if (level == "entwined") {
        EntwiningStructure e = EntwiningStructure::from_json(j.at("entwining"));
        rep = check_entwined_module(e, EntwinedModule::from_json(e.A.field, j.at("module")));
    } else if (level == "doikoppinen") {
        rep = check_doi_koppinen(DoiKoppinenDatum::from_json(j));
    } else if (level == "module") {
        Presentation a = Presentation::from_json(j.at("algebra"));
        rep = check_module(a, ModuleAction::from_json(a.field, j.at("module")));
    } else if (level == "comodule") {
        Presentation c = Presentation::from_json(j.at("coalgebra"));
        rep = check_comodule(c, ComoduleCoaction::from_json(c.field, j.at("comodule")));
    } else {
        rep = check_structure(Presentation::from_json(j), check_level_from_name(level));
    }
    return rep.to_json().dump();
}

std::optional<std::string> solve(const std::string& kind, const std::string& input_json) {
    auto w = dispatch_solve(kind, parse(input_json));
    if (!w) return std::nullopt;
    return w->to_json().dump();
}

std::string verify(const std::string& kind, const std::string& input_json,
                   const std::string& witness_json) {
    json j = parse(input_json);
    Witness w = Witness::from_json(parse(witness_json));
    for (const auto& [name, hash] : context_of(kind, j)) {
        auto it = w.context.find(name);
        if (it == w.context.end() || it->second != hash)
            throw ParseError("witness context mismatch for '" + name +
                             "': the witness was not solved against this input");
    }
    return dispatch_verify(kind, j, w).to_json().dump();
}

std::string transport(const std::string& direction, const std::string& input_json,
                      const std::string& witness_json) {
    json j = parse(input_json);
    Witness w = Witness::from_json(parse(witness_json));
    switch (transport_direction_from_name(direction)) {
        case TransportDirection::IntegralToIdempotent:
            return transport_integral_to_idempotent(Presentation::from_json(j), w).to_json().dump();
        case TransportDirection::TotalIntegralToTheta: {
            RelHopfInput r = read_relhopf(j);
            return transport_total_integral_to_theta(r.l, r.a, r.rho, w).to_json().dump();
        }
        case TransportDirection::ThetaToTotalIntegral: {
            RelHopfInput r = read_relhopf(j);
            return transport_theta_to_total_integral(r.l, r.a, r.rho, w).to_json().dump();
        }
        case TransportDirection::CocasimirToCointegral: {
            LcInput r = read_lc(j);
            return transport_cocasimir_to_cointegral(r.l, r.c, r.act, w).to_json().dump();
        }
    }
    throw ParseError("unknown transport direction");
}

std::string deform_theta(const std::string& theta_witness_json, const std::string& map_json) {
    json mj = parse(map_json);
    Witness th = Witness::from_json(parse(theta_witness_json));
    EntwiningStructure e = EntwiningStructure::from_json(mj.at("entwining"));
    EntwinedModule m = EntwinedModule::from_json(e.A.field, mj.at("M"));
    EntwinedModule n = EntwinedModule::from_json(e.A.field, mj.at("N"));
    Matrix g = Matrix::from_json(e.A.field, mj.at("g"));
    Matrix p = deform_to_colinear(e, th.data(), m, n, g);
    return json{{"deformed", p.to_json()}}.dump();
}

std::string deform_fieldext(const std::string& fieldext_json, const std::string& map_json) {
    json dj = parse(fieldext_json);
    json mj = parse(map_json);
    FieldPtr ext = Field::from_json(dj.at("field"));
    PrimitiveExtensionData d = PrimitiveExtensionData::from_field(ext);
    auto read_kspace = [&](const json& sj) {
        KSpace sp;
        sp.kdim = sj.at("kdim").get<size_t>();
        sp.alpha_action = Matrix::from_json(d.k, sj.at("alpha"));
        return sp;
    };
    KSpace m = read_kspace(mj.at("M"));
    KSpace n = read_kspace(mj.at("N"));
    Matrix g = Matrix::from_json(d.k, mj.at("g"));
    Matrix p = field_ext_deform(d, m, n, g);
    return json{{"deformed", p.to_json()}}.dump();
}

std::string catalog(const std::string& filter, uint64_t seed) {
    return catalog_run(filter, seed).to_json().dump();
}

std::vector<std::string> catalog_entries() { return catalog_entry_names(); }

std::string group_algebra_json(const std::vector<std::vector<size_t>>& table,
                               const std::string& field_json) {
    return group_algebra(table, Field::from_json(parse(field_json))).to_json().dump();
}

std::string sweedler_h4_json(const std::string& field_json) {
    return sweedler_h4(Field::from_json(parse(field_json))).to_json().dump();
}

std::string dual_of_json(const std::string& presentation_json) {
    return dual_of(Presentation::from_json(parse(presentation_json))).to_json().dump();
}

std::string yetter_drinfeld_entwining_json(const std::string& hopf_json) {
    return entwining_yetter_drinfeld(Presentation::from_json(parse(hopf_json))).to_json().dump();
}

std::string relative_hopf_entwining_json(const std::string& relhopf_input_json) {
    RelHopfInput r = read_relhopf(parse(relhopf_input_json));
    return relative_hopf_entwining(r.l, r.a, r.rho).to_json().dump();
}

} // namespace hopfwit::api
