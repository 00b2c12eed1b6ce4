#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "virasoro/characters.hpp"
#include "virasoro/extensions.hpp"
#include "virasoro/growth.hpp"
#include "virasoro/minimal_models.hpp"
#include "virasoro/qseries.hpp"

namespace virasoro::cli {

using nlohmann::json;

// Floating-point values cross the CLI boundary as %.15g strings; exact
// rationals as "num" / "num/den" strings or explicit numerator/denominator
// CSV columns, never as truncated decimals.
std::string real15(double x);

json to_json(const MinimalModel& m);
json to_json(const KacEntry& e);
json to_json(const KacTable& t);
json to_json(const GrowthFit& fit);
json to_json(const GrowthVerdict& verdict);
json series_json(const QExpansion& f);
json character_json(const CharacterSeries& chi);
json smatrix_json(const SMatrix& s);

// CSV payloads. Schemas:
//   series:      n,exponent,numerator,denominator
//   kac table:   r,s,h_numerator,h_denominator
//   s-matrix:    row_r,row_s,col_r,col_s,value
//   partitions:  n,p_n
//   growth plot: n,a_n,power_law_fit,stretched_exponential_fit
//   candidates:  candidate,r,s,multiplicity
std::string series_csv(const QExpansion& f);
std::string kac_csv(const KacTable& t);
std::string smatrix_csv(const SMatrix& s);
std::string partition_csv(const std::vector<Integer>& p);
std::string growth_plot_csv(const std::vector<double>& values, const GrowthVerdict& verdict);
std::string candidates_csv(const std::vector<ExtensionCandidate>& candidates);

}  // namespace virasoro::cli
