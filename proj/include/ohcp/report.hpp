#pragma once

#include "ohcp/complex.hpp"
#include "ohcp/homology.hpp"
#include "ohcp/solver.hpp"
#include "ohcp/unimodularity.hpp"

#include <json.hpp>

namespace ohcp::report {

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json integer(const Integer& v);

/// {status, method, witness_rows, witness_cols, witness_det, confirmed_by}
nlohmann::json verdict(const TUVerdict& v);

nlohmann::json cycle_complex(const std::optional<CycleComplexWitness>& w, const SimplicialComplex& k, int q);

nlohmann::json torsion_witness(const TorsionWitness& w, const SimplicialComplex& k, int p);

/// {objective: "p/q", integral, variant, nnz, y_support}
nlohmann::json solution(const OHCPSolution& s, const OHCPInstance& inst);

}  // namespace ohcp::report
