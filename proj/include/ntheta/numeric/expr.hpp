#ifndef NTHETA_NUMERIC_EXPR_HPP
#define NTHETA_NUMERIC_EXPR_HPP

#include <map>
#include <set>
#include <string>

#include <json.hpp>

#include <ntheta/numeric/real.hpp>

namespace ntheta
{

/// Evaluates closed-form expression trees written as prefix JSON arrays
/// (schema in docs/expression_schema.md). Literals are exact rationals given
/// as strings ("7", "-2/3") or JSON integers.
class ExprEvaluator
{
public:
    explicit ExprEvaluator(const Precision &prec, nlohmann::json let = nlohmann::json::object());

    Real eval(const nlohmann::json &e);
    /// Value of a "let" binding (evaluated once, then cached).
    Real var(const std::string &name);
    /// Injects a precomputed value under `name`, shadowing any binding.
    void bind(const std::string &name, Real value);

    const Precision &precision() const noexcept { return m_prec; }

private:
    Real apply(const std::string &op, const nlohmann::json &e);

    Precision m_prec;
    nlohmann::json m_let;
    std::map<std::string, Real> m_cache;
    std::set<std::string> m_active;
};

mpq_class literal_rational(const nlohmann::json &e);

} // namespace ntheta

#endif
