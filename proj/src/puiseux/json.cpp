#include <ntheta/puiseux/json.hpp>

#include <stdexcept>

namespace ntheta
{

std::string rational_str(const mpq_class &v)
{
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

mpq_class parse_rational(const std::string &text)
{
    mpq_class v;
    if (v.set_str(text, 10) != 0 || v.get_den() == 0) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    v.canonicalize();
    return v;
}

nlohmann::json series_to_json(const QSeries &s)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[e, c] : s.terms()) {
        terms.push_back({e.str(), rational_str(c)});
    }
    nlohmann::json j;
    j["order"] = s.order() ? nlohmann::json(s.order()->str()) : nlohmann::json(nullptr);
    j["terms"] = std::move(terms);
    return j;
}

QSeries series_from_json(const nlohmann::json &j)
{
    QSeries::Terms terms;
    for (const auto &t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) {
            throw std::invalid_argument("series term must be a [exponent, coefficient] pair");
        }
        terms[Exponent::parse(t[0].get<std::string>())] += parse_rational(t[1].get<std::string>());
    }
    const auto &order = j.at("order");
    if (order.is_null()) return QSeries::exact(std::move(terms));
    return QSeries::truncated(std::move(terms), Exponent::parse(order.get<std::string>()));
}

} // namespace ntheta
