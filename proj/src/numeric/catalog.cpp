#include <ntheta/numeric/catalog.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <ntheta/errors.hpp>

namespace ntheta
{

namespace
{

template <class T> std::optional<T> optional_field(const nlohmann::json &j, const char *key)
{
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

} // namespace

std::string catalog_path()
{
    if (const char *env = std::getenv("NONIC_THETA_DATA"); env && *env) return env;
    return NTHETA_DEFAULT_DATA;
}

Catalog Catalog::from_json(const nlohmann::json &doc)
{
    if (!doc.is_array()) throw std::invalid_argument("catalog must be a JSON array");
    Catalog c;
    for (const auto &j : doc) {
        CatalogEntry e;
        e.id = j.at("id").get<std::string>();
        e.kind = j.at("kind").get<std::string>();
        if (e.kind != "example" && e.kind != "trig" && e.kind != "gamma") {
            throw std::invalid_argument("catalog entry '" + e.id + "' has unknown kind '" + e.kind + "'");
        }
        e.n = optional_field<std::string>(j, "n");
        e.statement = j.value("statement", "");
        if (j.contains("let")) e.let = j.at("let");
        e.lhs = j.at("lhs");
        e.rhs = j.at("rhs");
        e.cubic = optional_field<nlohmann::json>(j, "cubic");
        e.pipeline = optional_field<nlohmann::json>(j, "pipeline");
        e.same_value_as = optional_field<std::string>(j, "same_value_as");
        if (c.contains(e.id)) throw std::invalid_argument("duplicate catalog id '" + e.id + "'");
        c.m_entries.push_back(std::move(e));
    }
    for (const auto &e : c.m_entries) {
        if (e.same_value_as && !c.contains(*e.same_value_as)) {
            throw std::invalid_argument("'" + e.id + "' refers to missing entry '" + *e.same_value_as + "'");
        }
    }
    return c;
}

Catalog Catalog::load(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file " + path);
    return from_json(nlohmann::json::parse(in));
}

const Catalog &Catalog::shipped()
{
    static const Catalog instance = load(catalog_path());
    return instance;
}

bool Catalog::contains(const std::string &id) const
{
    return std::any_of(m_entries.begin(), m_entries.end(), [&](const CatalogEntry &e) { return e.id == id; });
}

const CatalogEntry &Catalog::at(const std::string &id) const
{
    for (const auto &e : m_entries) {
        if (e.id == id) return e;
    }
    throw CatalogMiss("no catalog entry '" + id + "'");
}

std::vector<std::string> Catalog::ids(const std::string &kind) const
{
    std::vector<std::string> out;
    for (const auto &e : m_entries) {
        if (e.kind == kind) out.push_back(e.id);
    }
    return out;
}

} // namespace ntheta
