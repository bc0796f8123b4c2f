#include <ntheta/numeric/expr.hpp>

#include <stdexcept>

#include <ntheta/errors.hpp>
#include <ntheta/numeric/constants.hpp>
#include <ntheta/numeric/invariants.hpp>
#include <ntheta/numeric/theta_eval.hpp>
#include <ntheta/puiseux/json.hpp>

namespace ntheta
{

namespace
{

void arity(const nlohmann::json &e, std::size_t n)
{
    if (e.size() != n + 1) {
        throw std::invalid_argument("'" + e[0].get<std::string>() + "' takes " + std::to_string(n) + " argument(s): " + e.dump());
    }
}

Real gamma_constant(const mpq_class &a, const Precision &prec)
{
    if (prec.working_digits() >= constants::gamma_digits) {
        throw RequestedPrecisionExceedsConstants("gamma constants carry " + std::to_string(constants::gamma_digits) +
                                                 " digits; " + std::to_string(prec.working_digits()) + " working digits requested");
    }
    std::string_view text;
    if (a == mpq_class(1, 4)) {
        text = constants::gamma_1_4;
    } else if (a == mpq_class(3, 4)) {
        text = constants::gamma_3_4;
    } else if (a == mpq_class(1, 3)) {
        text = constants::gamma_1_3;
    } else {
        throw std::invalid_argument("no embedded constant for gamma(" + a.get_str() + ")");
    }
    return Real::from_decimal_literal(std::string(text), prec.bits());
}

} // namespace

mpq_class literal_rational(const nlohmann::json &e)
{
    if (e.is_number_integer()) return mpq_class(e.get<long>());
    if (e.is_string()) return parse_rational(e.get<std::string>());
    throw std::invalid_argument("expected a rational literal, got " + e.dump());
}

ExprEvaluator::ExprEvaluator(const Precision &prec, nlohmann::json let) : m_prec(prec), m_let(std::move(let))
{
    if (m_let.is_null()) m_let = nlohmann::json::object();
}

void ExprEvaluator::bind(const std::string &name, Real value)
{
    m_cache.insert_or_assign(name, std::move(value));
}

Real ExprEvaluator::var(const std::string &name)
{
    if (const auto it = m_cache.find(name); it != m_cache.end()) return it->second;
    if (!m_let.contains(name)) throw std::invalid_argument("unbound variable '" + name + "'");
    if (!m_active.insert(name).second) throw std::invalid_argument("cyclic binding through '" + name + "'");
    Real v = eval(m_let.at(name));
    m_active.erase(name);
    return m_cache.emplace(name, std::move(v)).first->second;
}

Real ExprEvaluator::eval(const nlohmann::json &e)
{
    if (e.is_string() || e.is_number_integer()) {
        return Real(literal_rational(e), m_prec.bits());
    }
    if (!e.is_array() || e.empty() || !e[0].is_string()) {
        throw std::invalid_argument("malformed expression: " + e.dump());
    }
    return apply(e[0].get<std::string>(), e);
}

Real ExprEvaluator::apply(const std::string &op, const nlohmann::json &e)
{
    const mpfr_prec_t bits = m_prec.bits();
    if (op == "+" || op == "*") {
        if (e.size() < 2) throw std::invalid_argument("'" + op + "' needs operands: " + e.dump());
        Real acc = eval(e[1]);
        for (std::size_t i = 2; i < e.size(); ++i) {
            if (op == "+") {
                acc += eval(e[i]);
            } else {
                acc *= eval(e[i]);
            }
        }
        return acc;
    }
    if (op == "-") {
        arity(e, 2);
        return eval(e[1]) - eval(e[2]);
    }
    if (op == "/") {
        arity(e, 2);
        return eval(e[1]) / eval(e[2]);
    }
    if (op == "neg") {
        arity(e, 1);
        return -eval(e[1]);
    }
    if (op == "pow") {
        arity(e, 2);
        return pow(eval(e[1]), literal_rational(e[2]));
    }
    if (op == "sqrt") {
        arity(e, 1);
        return sqrt(eval(e[1]));
    }
    if (op == "cbrt") {
        arity(e, 1);
        return cbrt(eval(e[1]));
    }
    if (op == "cos" || op == "sin") {
        // Argument is a multiple of pi.
        arity(e, 1);
        const Real x = eval(e[1]) * Real::pi(bits);
        return op == "cos" ? cos(x) : sin(x);
    }
    if (op == "pi") {
        arity(e, 0);
        return Real::pi(bits);
    }
    if (op == "gamma") {
        arity(e, 1);
        return gamma_constant(literal_rational(e[1]), m_prec);
    }
    if (op == "var") {
        arity(e, 1);
        return var(e[1].get<std::string>());
    }
    if (op == "G") {
        arity(e, 1);
        return class_invariant(literal_rational(e[1]), m_prec).value;
    }
    if (op == "phi") {
        arity(e, 1);
        return phi_at(literal_rational(e[1]), m_prec);
    }
    throw std::invalid_argument("unknown operator '" + op + "'");
}

} // namespace ntheta
