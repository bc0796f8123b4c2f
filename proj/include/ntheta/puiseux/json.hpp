#ifndef NTHETA_PUISEUX_JSON_HPP
#define NTHETA_PUISEUX_JSON_HPP

#include <string>

#include <json.hpp>

#include <ntheta/puiseux/qseries.hpp>

namespace ntheta
{

/// Canonical "num/den" text of a rational (integers keep the "/1").
std::string rational_str(const mpq_class &v);
mpq_class parse_rational(const std::string &text);

/// {"order": "num/den" | null, "terms": [["num/den", "num/den"], ...]},
/// exponents ascending. A null order marks an exact series.
nlohmann::json series_to_json(const QSeries &s);
QSeries series_from_json(const nlohmann::json &j);

} // namespace ntheta

#endif
