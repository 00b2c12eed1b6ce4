#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace virasoro::cli {

std::string real15(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15g", x);
  return buffer;
}

json to_json(const MinimalModel& m) {
  return json{{"p", m.p}, {"q", m.q}, {"c", to_string(m.c)}, {"c_tilde", to_string(m.c_tilde)}};
}

json to_json(const KacEntry& e) {
  return json{{"r", e.r}, {"s", e.s}, {"h", to_string(e.h)}};
}

json to_json(const KacTable& t) {
  json entries = json::array();
  for (const KacEntry& e : t.entries) entries.push_back(to_json(e));
  return json{{"model", to_json(t.model)},
              {"lambda_min", to_string(t.lambda_min)},
              {"entries", std::move(entries)}};
}

json to_json(const GrowthFit& fit) {
  return json{{"model", fit.model == GrowthModel::power_law ? "power_law" : "stretched_exponential"},
              {"parameter", real15(fit.parameter)},
              {"intercept", real15(fit.intercept)},
              {"residual", real15(fit.residual)},
              {"window", json::array({fit.window_lo, fit.window_hi})},
              {"points", fit.points}};
}

json to_json(const GrowthVerdict& verdict) {
  const char* tag = verdict.tag == GrowthTag::polynomial        ? "polynomial"
                    : verdict.tag == GrowthTag::superpolynomial ? "superpolynomial"
                                                                : "inconclusive";
  return json{{"verdict", tag},
              {"power_law", to_json(verdict.power_law)},
              {"stretched_exponential", to_json(verdict.stretched)}};
}

json series_json(const QExpansion& f) {
  json coeffs = json::array();
  for (const Rational& c : f.coefficients()) coeffs.push_back(to_string(c));
  return json{{"leading_exponent", to_string(f.leading_exponent())},
              {"truncation_order", f.truncation_order()},
              {"coefficients", std::move(coeffs)}};
}

json character_json(const CharacterSeries& chi) {
  json out = series_json(chi.series);
  out["label"] = chi.label;
  return out;
}

json smatrix_json(const SMatrix& s) {
  json labels = json::array();
  for (const KacEntry& e : s.labels()) labels.push_back(to_json(e));
  json values = json::array();
  for (double v : s.values()) values.push_back(real15(v));
  return json{{"size", s.size()}, {"labels", std::move(labels)}, {"values", std::move(values)}};
}

namespace {

std::string exponent_string(const QExpansion& f, int n) {
  return to_string(f.leading_exponent() + n);
}

}  // namespace

std::string series_csv(const QExpansion& f) {
  std::ostringstream out;
  out << "n,exponent,numerator,denominator\n";
  for (int n = 0; n <= f.truncation_order(); ++n) {
    const Rational& c = f.coefficient(n);
    out << n << "," << exponent_string(f, n) << "," << c.get_num().get_str() << ","
        << c.get_den().get_str() << "\n";
  }
  return out.str();
}

std::string kac_csv(const KacTable& t) {
  std::ostringstream out;
  out << "r,s,h_numerator,h_denominator\n";
  for (const KacEntry& e : t.entries) {
    out << e.r << "," << e.s << "," << e.h.get_num().get_str() << "," << e.h.get_den().get_str()
        << "\n";
  }
  return out.str();
}

std::string smatrix_csv(const SMatrix& s) {
  std::ostringstream out;
  out << "row_r,row_s,col_r,col_s,value\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      out << s.labels()[i].r << "," << s.labels()[i].s << "," << s.labels()[j].r << ","
          << s.labels()[j].s << "," << real15(s.value(i, j)) << "\n";
    }
  }
  return out.str();
}

std::string partition_csv(const std::vector<Integer>& p) {
  std::ostringstream out;
  out << "n,p_n\n";
  for (std::size_t n = 0; n < p.size(); ++n) out << n << "," << p[n].get_str() << "\n";
  return out.str();
}

std::string growth_plot_csv(const std::vector<double>& values, const GrowthVerdict& verdict) {
  std::ostringstream out;
  out << "n,a_n,power_law_fit,stretched_exponential_fit\n";
  for (std::size_t n = 0; n < values.size(); ++n) {
    const double x = static_cast<double>(n);
    const double power = n == 0 ? std::nan("")
                                : std::exp(verdict.power_law.intercept +
                                           verdict.power_law.parameter * std::log(x));
    const double stretched =
        std::exp(verdict.stretched.intercept + verdict.stretched.parameter * std::sqrt(x));
    out << n << "," << real15(values[n]) << "," << real15(power) << "," << real15(stretched)
        << "\n";
  }
  return out.str();
}

std::string candidates_csv(const std::vector<ExtensionCandidate>& candidates) {
  std::ostringstream out;
  out << "candidate,r,s,multiplicity\n";
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (const auto& [entry, mult] : candidates[i].multiplicities) {
      out << i << "," << entry.r << "," << entry.s << "," << mult << "\n";
    }
  }
  return out.str();
}

}  // namespace virasoro::cli
