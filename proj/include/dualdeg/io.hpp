#pragma once

#include <string>

#include "dualdeg/amplify.hpp"
#include "dualdeg/boolfn.hpp"
#include "dualdeg/degree.hpp"
#include "dualdeg/dist.hpp"
#include "dualdeg/polylib.hpp"
#include "dualdeg/verify.hpp"

namespace dualdeg {

// Bitstrings are written with variable 1 first ("011" has x1=0, x2=1, x3=1).
std::string point_str(Point x, int arity);
Point point_parse(const std::string& s, int arity);

json fn_to_json(const PartialBoolFn& f, bool include_entries = false);
PartialBoolFn fn_from_json(const json& j, int cap = kDefaultArityCap);

json cubefn_to_json(const CubeFn& c, size_t max_entries = size_t(1) << 20);
CubeFn cubefn_from_json(const json& j);

json poly_to_json(const MultilinearPoly& p);
MultilinearPoly poly_from_json(const json& j);

json unipoly_to_json(const UnivariatePoly& p);

json dist_to_json(const Distribution& d);
Distribution dist_from_json(const json& j);

json degree_result_to_json(const DegreeResult& r);
json witness_report_to_json(const WitnessReport& r);
json certificate_to_json(const Certificate& c);
json bundle_to_json(const AmplifyBundle& b);
json mu_decomposition_to_json(const MuDecompositionReport& r);
json helper_report_to_json(const HelperReport& r);
json bracket_to_json(const Bracket& b);

json load_json(const std::string& path);
void save_json(const json& j, const std::string& path);

}  // namespace dualdeg
