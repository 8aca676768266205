#include "splitscan/report_io.hpp"

#include <json.hpp>

namespace splitscan::io {

using nlohmann::json;
using nlohmann::ordered_json;

std::string csv_line(const criterion::PrimeRecord& rec) {
    std::string s = std::to_string(rec.p);
    s += rec.phi_splits ? ",1" : ",0";
    s += rec.p_has_root ? ",1" : ",0";
    s += rec.p_splits ? ",1" : ",0";
    return s;
}

std::string report_json(const criterion::ScanReport& report) {
    ordered_json j;
    j["phi"] = to_string(report.phi);
    j["P"] = to_string(report.p_poly);
    j["B"] = report.bad_bound.get_str();
    j["p_max"] = report.p_max;
    j["n_primes"] = report.n_primes();
    j["n_split"] = report.n_split();
    if (!report.records.empty()) {
        criterion::DensityStats st = criterion::density_stats(report);
        j["split_fraction"] = st.split_fraction;
        j["expected_fraction_note"] = "1/deg(P) comparison is an engineering statistic only";
        j["expected_fraction"] = st.expected;
    }
    j["violations"] = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json e;
        e["p"] = v.p;
        e["equivalence"] =
            v.kind == criterion::ViolationKind::phi_vs_root ? "phi_splits<=>P_has_root" : "P_has_root<=>P_splits";
        j["violations"].push_back(e);
    }
    return j.dump(2);
}

std::string primitive_element_json(const splitfield::PrimitiveElement& pe) {
    ordered_json j;
    j["phi"] = to_string(pe.phi);
    j["min_poly"] = to_string(pe.min_poly);
    j["min_poly_coeffs"] = to_coeff_string(pe.min_poly);
    j["weights"] = pe.weights;
    j["degree"] = pe.degree();
    j["beta"] = {{"re", pe.beta.re.get_d()}, {"im", pe.beta.im.get_d()}, {"radius", pe.beta.rad.get_d()}};
    j["trace"] = ordered_json::array();
    for (const auto& t : pe.trace) {
        ordered_json e;
        e["factor"] = to_string(t.factor);
        e["weight"] = t.weight;
        e["degree_after"] = t.degree_after;
        j["trace"].push_back(e);
    }
    return j.dump(2);
}

std::string factorization_string(const zfactor::Factorization& f) {
    std::string s;
    if (f.unit != 1 || f.factors.empty()) s = f.unit.get_str();
    for (const auto& [poly, mult] : f.factors) {
        if (!s.empty()) s += " * ";
        s += "(" + to_string(poly) + ")";
        if (mult > 1) s += "^" + std::to_string(mult);
    }
    return s;
}

std::string factorization_json(const zfactor::Factorization& f) {
    ordered_json j;
    j["unit"] = f.unit.get_str();
    j["factors"] = ordered_json::array();
    for (const auto& [poly, mult] : f.factors) {
        ordered_json e;
        e["poly"] = to_string(poly);
        e["coeffs"] = to_coeff_string(poly);
        e["multiplicity"] = mult;
        j["factors"].push_back(e);
    }
    return j.dump(2);
}

std::string schur_json(const std::vector<criterion::SchurWitness>& witnesses) {
    ordered_json j = ordered_json::array();
    for (const auto& w : witnesses) {
        ordered_json e;
        e["q"] = w.q.get_str();
        e["m"] = w.m.get_str();
        e["value"] = w.value.get_str();
        j.push_back(e);
    }
    return j.dump(2);
}

}  // namespace splitscan::io
