#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "mhilb/equations.hpp"
#include "mhilb/grading.hpp"
#include "mhilb/hilbert_spec.hpp"
#include "mhilb/local_groebner.hpp"
#include "mhilb/monomial.hpp"
#include "mhilb/supportive.hpp"
#include "mhilb/toric.hpp"

namespace mhilb::io {

using nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";

// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

json big(const Int& x);
json big(const Rat& x);

Degree degree_from_json(const Grading& g, const json& j);
json degree_to_json(const Degree& a);
std::vector<Degree> degrees_from_json(const Grading& g, const json& j);
json degrees_to_json(const std::vector<Degree>& D);

Monomial monomial_from_json(int n, const json& j);
json monomial_to_json(const Monomial& m);

// {"standard": n} or {"n", "free_rank", "moduli", "columns": [[flat], ...]}
Grading grading_from_json(const json& j);
json grading_to_json(const Grading& g);

// {"tail": "zero" | "constant" | "polynomial", "table": [{"degree", "value"}], "value", "poly", "threshold"}
HilbertSpec hilbert_from_json(const Grading& g, const json& j);
json hilbert_to_json(const HilbertSpec& h);

MonomialIdeal ideal_from_json(int n, const json& j);
json ideal_to_json(const MonomialIdeal& I);

json equations_to_json(const EquationSet& es);
json support_report_to_json(const SupportReport& r);

// Coefficients: integers or "p/q" strings (Z_(p) model) or arrays of those (series in t).
LocalPoly local_poly_from_json(const LocalRing& R, int n, const json& j);
json local_poly_to_json(const LocalRing& R, const LocalPoly& p);
LocalRing local_ring_from_spec(const std::string& model, int m);

json read_json_file(const std::string& path);

}  // namespace mhilb::io
