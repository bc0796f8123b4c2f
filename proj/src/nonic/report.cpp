#include <ntheta/nonic/report.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include <ntheta/puiseux/json.hpp>

namespace ntheta
{

nlohmann::json report_to_json(const CheckReport &r)
{
    nlohmann::json j;
    j["id"] = r.id;
    j["status"] = r.pass ? "pass" : "fail";
    if (r.order) j["order"] = r.order->str();
    if (r.verified_order) j["verified_order"] = r.verified_order->str();
    if (r.digits) j["digits"] = *r.digits;
    if (r.order) {
        if (r.mismatch) {
            j["mismatch"] = {{"subcheck", r.mismatch->subcheck},
                             {"exponent", r.mismatch->exponent.str()},
                             {"lhs", rational_str(r.mismatch->lhs)},
                             {"rhs", rational_str(r.mismatch->rhs)}};
        } else {
            j["mismatch"] = nullptr;
        }
    }
    if (r.residual) j["residual"] = *r.residual;
    if (!r.cleared_form.empty()) j["cleared_form"] = r.cleared_form;
    if (!r.message.empty()) j["message"] = r.message;
    if (!r.details.empty()) j["details"] = r.details;
    j["ms"] = r.ms;
    return j;
}

CheckReport report_from_json(const nlohmann::json &j)
{
    CheckReport r;
    r.id = j.at("id").get<std::string>();
    r.pass = j.at("status").get<std::string>() == "pass";
    if (j.contains("order")) r.order = Exponent::parse(j.at("order").get<std::string>());
    if (j.contains("verified_order")) r.verified_order = Exponent::parse(j.at("verified_order").get<std::string>());
    if (j.contains("digits")) r.digits = j.at("digits").get<int>();
    if (j.contains("mismatch") && !j.at("mismatch").is_null()) {
        const auto &m = j.at("mismatch");
        r.mismatch = Mismatch{m.at("subcheck").get<std::string>(), Exponent::parse(m.at("exponent").get<std::string>()),
                              parse_rational(m.at("lhs").get<std::string>()), parse_rational(m.at("rhs").get<std::string>())};
    }
    if (j.contains("residual")) r.residual = j.at("residual").get<std::string>();
    r.cleared_form = j.value("cleared_form", "");
    r.message = j.value("message", "");
    if (j.contains("details")) r.details = j.at("details").get<std::map<std::string, std::string>>();
    r.ms = j.at("ms").get<std::int64_t>();
    return r;
}

std::string report_to_text(const CheckReport &r)
{
    std::ostringstream os;
    os << (r.pass ? "PASS  " : "FAIL  ") << r.id;
    if (r.order) os << "  order " << (r.order->is_integer() ? std::to_string(r.order->num()) : r.order->str());
    if (r.digits) os << "  digits " << *r.digits;
    if (r.residual) os << "  residual " << *r.residual;
    os << "  (" << r.ms << " ms)";
    if (r.mismatch) {
        os << "\n      first mismatch in " << r.mismatch->subcheck << " at q^" << r.mismatch->exponent.str() << ": "
           << r.mismatch->lhs.get_str() << " vs " << r.mismatch->rhs.get_str();
    }
    if (!r.message.empty()) os << "\n      " << r.message;
    return os.str();
}

CheckReport combine_reports(const std::string &id, const std::vector<CheckReport> &parts)
{
    CheckReport out;
    out.id = id;
    out.pass = true;
    for (const auto &r : parts) {
        out.pass = out.pass && r.pass;
        if (r.order && (!out.order || *r.order < *out.order)) out.order = r.order;
        if (r.verified_order && (!out.verified_order || *r.verified_order < *out.verified_order)) {
            out.verified_order = r.verified_order;
        }
        if (r.digits && (!out.digits || *r.digits < *out.digits)) out.digits = r.digits;
        if (!out.mismatch && r.mismatch) {
            out.mismatch = r.mismatch;
            out.mismatch->subcheck = r.id + ": " + r.mismatch->subcheck;
        }
        if (r.residual) out.details[r.id + ".residual"] = *r.residual;
        if (!r.cleared_form.empty()) {
            if (!out.cleared_form.empty()) out.cleared_form += "; ";
            out.cleared_form += r.cleared_form;
        }
        if (!r.pass && out.message.empty()) out.message = r.id + (r.message.empty() ? " failed" : ": " + r.message);
        for (const auto &[k, v] : r.details) out.details[r.id + "." + k] = v;
        out.ms += r.ms;
    }
    return out;
}

SeriesCheck::SeriesCheck(std::string id, Exponent order) : m_order(order)
{
    m_report.id = std::move(id);
    m_report.order = order;
    m_report.verified_order = order;
    m_report.pass = true;
}

void SeriesCheck::expect_equal(const std::string &subcheck, const QSeries &lhs, const QSeries &rhs)
{
    const SeriesDiff diff = qs_compare(lhs.truncate(m_order), rhs.truncate(m_order));
    const Exponent reached = diff.compared_order.value_or(m_order);
    if (reached < *m_report.verified_order) m_report.verified_order = reached;
    if (diff.first_mismatch_exponent) {
        if (!m_report.mismatch) {
            m_report.mismatch = Mismatch{subcheck, *diff.first_mismatch_exponent, diff.lhs_coeff, diff.rhs_coeff};
        }
        m_report.pass = false;
    }
    if (reached < m_order) {
        m_report.pass = false;
        if (m_report.message.empty()) {
            m_report.message = subcheck + ": series only guaranteed below q^" + reached.str();
        }
    }
}

void SeriesCheck::expect_zero(const std::string &subcheck, const QSeries &s)
{
    expect_equal(subcheck, s, QSeries::zero(m_order));
}

void SeriesCheck::expect_different(const std::string &subcheck, const QSeries &lhs, const QSeries &rhs)
{
    const SeriesDiff diff = qs_compare(lhs.truncate(m_order), rhs.truncate(m_order));
    if (!diff.first_mismatch_exponent) {
        m_report.pass = false;
        if (m_report.message.empty()) m_report.message = subcheck + ": perturbed control agreed with the original";
        return;
    }
    detail(subcheck, "differs at q^" + diff.first_mismatch_exponent->str());
}

void SeriesCheck::expect_leading(const std::string &subcheck, const QSeries &s, const mpq_class &c, const Exponent &e)
{
    const auto v = s.valuation();
    if (v && *v == e && s.coeff(e) == c) return;
    m_report.pass = false;
    if (!m_report.mismatch) {
        m_report.mismatch = Mismatch{subcheck, v ? std::min(*v, e) : e, v ? s.coeff(std::min(*v, e)) : mpq_class(0),
                                     v && *v < e ? mpq_class(0) : c};
    }
}

void SeriesCheck::cleared_form(const std::string &text)
{
    if (!m_report.cleared_form.empty()) m_report.cleared_form += "; ";
    m_report.cleared_form += text;
}

void SeriesCheck::detail(const std::string &key, const std::string &value)
{
    m_report.details[key] = value;
}

CheckReport SeriesCheck::finish()
{
    return m_report;
}

NumericCheck::NumericCheck(std::string id, int digits)
    : m_digits(digits), m_worst_log10(-std::numeric_limits<double>::infinity())
{
    m_report.id = std::move(id);
    m_report.digits = digits;
    m_report.pass = true;
}

bool NumericCheck::expect_close(const std::string &subcheck, const Real &lhs, const Real &rhs)
{
    return expect_close(subcheck, lhs, rhs, m_digits);
}

bool NumericCheck::expect_close(const std::string &subcheck, const Real &lhs, const Real &rhs, int digits)
{
    const Real diff = lhs - rhs;
    const double mag = diff.magnitude();
    const double lg = mag > 0 ? std::log10(mag) : -std::numeric_limits<double>::infinity();
    if (m_worst.empty() || lg > m_worst_log10) {
        m_worst_log10 = lg;
        m_worst = diff.abs_bound_str();
    }
    const bool ok = abs_below(diff, digits);
    if (!ok) {
        m_report.pass = false;
        if (m_report.message.empty()) {
            m_report.message = subcheck + ": |lhs - rhs| <= " + diff.abs_bound_str() + " not below 1e-" + std::to_string(digits);
        }
    }
    return ok;
}

bool NumericCheck::expect_zero(const std::string &subcheck, const Real &x)
{
    return expect_close(subcheck, x, Real(0L, x.bits()));
}

void NumericCheck::expect(const std::string &subcheck, bool ok, const std::string &why)
{
    if (ok) return;
    m_report.pass = false;
    if (m_report.message.empty()) m_report.message = subcheck + (why.empty() ? ": condition failed" : ": " + why);
}

void NumericCheck::detail(const std::string &key, const std::string &value)
{
    m_report.details[key] = value;
}

void NumericCheck::fail(const std::string &why)
{
    m_report.pass = false;
    if (m_report.message.empty()) m_report.message = why;
}

CheckReport NumericCheck::finish()
{
    if (!m_worst.empty()) m_report.residual = m_worst;
    return m_report;
}

} // namespace ntheta
