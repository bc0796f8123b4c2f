#ifndef NTHETA_NUMERIC_CATALOG_HPP
#define NTHETA_NUMERIC_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ntheta
{

/// One entry of the closed-form catalog. `lhs` and `rhs` are expression
/// trees evaluated against the entry's `let` bindings.
struct CatalogEntry {
    std::string id;
    std::string kind; // "example", "trig" or "gamma"
    std::optional<std::string> n;
    std::string statement;
    nlohmann::json let = nlohmann::json::object();
    nlohmann::json lhs;
    nlohmann::json rhs;
    /// {"p": expr, "u3": expr, "roots": [alpha, beta, gamma]}
    std::optional<nlohmann::json> cubic;
    /// {"n": "num/den", "scale": expr}: lhs = scale * (1 + u1 + u2 + u3 + u4)
    std::optional<nlohmann::json> pipeline;
    std::optional<std::string> same_value_as;
};

class Catalog
{
public:
    static Catalog from_json(const nlohmann::json &doc);
    static Catalog load(const std::string &path);
    /// The catalog at NONIC_THETA_DATA, or the one shipped with the build.
    /// Loaded once per process.
    static const Catalog &shipped();

    const CatalogEntry &at(const std::string &id) const;
    bool contains(const std::string &id) const;
    const std::vector<CatalogEntry> &entries() const noexcept { return m_entries; }
    std::vector<std::string> ids(const std::string &kind) const;

private:
    std::vector<CatalogEntry> m_entries;
};

std::string catalog_path();

} // namespace ntheta

#endif
