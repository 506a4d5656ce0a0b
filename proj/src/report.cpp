#include "ohcp/report.hpp"

namespace ohcp::report {

using nlohmann::json;

json integer(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json verdict(const TUVerdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["method"] = to_string(v.method);
    j["witness_rows"] = json::array();
    j["witness_cols"] = json::array();
    j["witness_det"] = nullptr;
    if (v.witness) {
        j["witness_rows"] = v.witness->rows;
        j["witness_cols"] = v.witness->cols;
        j["witness_det"] = integer(v.witness->det);
    }
    j["confirmed_by"] = json::array();
    for (TUMethod m : v.confirmed_by) j["confirmed_by"].push_back(to_string(m));
    return j;
}

json cycle_complex(const std::optional<CycleComplexWitness>& w, const SimplicialComplex& k, int q) {
    json j;
    j["found"] = w.has_value();
    if (!w) return j;
    j["length"] = w->simplices.size();
    j["orientable"] = w->orientable;
    j["columns"] = w->simplices;
    j["rows"] = w->shared_faces;
    j["simplices"] = json::array();
    for (std::size_t c : w->simplices) j["simplices"].push_back(k.simplex(q, c).vertices);
    j["shared_faces"] = json::array();
    for (std::size_t r : w->shared_faces) j["shared_faces"].push_back(k.simplex(q - 1, r).vertices);
    return j;
}

json torsion_witness(const TorsionWitness& w, const SimplicialComplex& k, int p) {
    json j;
    j["L"] = json::array();
    for (std::size_t c : w.l_cols) j["L"].push_back(k.simplex(p + 1, c).vertices);
    j["L0"] = json::array();
    for (std::size_t r : w.l0_rows) j["L0"].push_back(k.simplex(p, r).vertices);
    j["torsion_coefficient"] = integer(w.torsion_coefficient);
    j["relative_snf"] = json::array();
    for (const auto& d : w.relative_snf) j["relative_snf"].push_back(integer(d));
    return j;
}

json solution(const OHCPSolution& s, const OHCPInstance& inst) {
    json j;
    j["objective"] = to_pq(s.objective);
    j["integral"] = s.integral;
    j["variant"] = to_string(inst.variant);
    j["nnz"] = s.nonzeros();
    j["y_support"] = json::array();
    for (std::size_t i = 0; i < s.y.size(); ++i) {
        if (s.y[i] == 0) continue;
        j["y_support"].push_back({{"simplex", inst.complex.simplex(inst.p + 1, i).vertices}, {"coeff", to_pq(s.y[i])}});
    }
    if (s.torsion_note) j["note"] = *s.torsion_note;
    return j;
}

}  // namespace ohcp::report
