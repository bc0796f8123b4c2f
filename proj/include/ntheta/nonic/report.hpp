#ifndef NTHETA_NONIC_REPORT_HPP
#define NTHETA_NONIC_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include <ntheta/numeric/real.hpp>
#include <ntheta/puiseux/qseries.hpp>

namespace ntheta
{

struct Mismatch {
    std::string subcheck;
    Exponent exponent;
    mpq_class lhs;
    mpq_class rhs;

    friend bool operator==(const Mismatch &a, const Mismatch &b)
    {
        return a.subcheck == b.subcheck && a.exponent == b.exponent && a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

/// Outcome of one check. Formal checks fill `order`, `verified_order`,
/// `mismatch` and `cleared_form`; numeric checks fill `digits` and
/// `residual` (an upper bound on the worst |lhs - rhs|).
struct CheckReport {
    std::string id;
    bool pass = false;
    std::optional<Exponent> order;
    std::optional<Exponent> verified_order;
    std::optional<int> digits;
    std::optional<Mismatch> mismatch;
    std::optional<std::string> residual;
    std::string cleared_form;
    std::string message;
    std::map<std::string, std::string> details;
    std::int64_t ms = 0;

    friend bool operator==(const CheckReport &, const CheckReport &) = default;
};

nlohmann::json report_to_json(const CheckReport &r);
CheckReport report_from_json(const nlohmann::json &j);
/// One or two lines of human-readable text.
std::string report_to_text(const CheckReport &r);

/// Folds several reports into one under `id`: passes iff every part passes,
/// keeps the first mismatch and the smallest verified order, and prefixes
/// each part's details with its id.
CheckReport combine_reports(const std::string &id, const std::vector<CheckReport> &parts);

/// Accumulates series comparisons for one formal check. Both sides are cut
/// at the requested order; the check passes only when every comparison is
/// guaranteed up to that order and no coefficient differs.
class SeriesCheck
{
public:
    SeriesCheck(std::string id, Exponent order);

    const Exponent &order() const noexcept { return m_order; }
    void expect_equal(const std::string &subcheck, const QSeries &lhs, const QSeries &rhs);
    void expect_zero(const std::string &subcheck, const QSeries &s);
    /// Requires a mismatch below the order (used for perturbed controls).
    void expect_different(const std::string &subcheck, const QSeries &lhs, const QSeries &rhs);
    /// Leading term of s is c q^e.
    void expect_leading(const std::string &subcheck, const QSeries &s, const mpq_class &c, const Exponent &e);
    void cleared_form(const std::string &text);
    void detail(const std::string &key, const std::string &value);
    CheckReport finish();

private:
    CheckReport m_report;
    Exponent m_order;
};

/// Accumulates enclosure comparisons for one numeric check.
class NumericCheck
{
public:
    NumericCheck(std::string id, int digits);

    int digits() const noexcept { return m_digits; }
    /// |lhs - rhs| < 10^-digits for every point of the enclosures.
    bool expect_close(const std::string &subcheck, const Real &lhs, const Real &rhs);
    bool expect_close(const std::string &subcheck, const Real &lhs, const Real &rhs, int digits);
    bool expect_zero(const std::string &subcheck, const Real &x);
    void expect(const std::string &subcheck, bool ok, const std::string &why = "");
    void detail(const std::string &key, const std::string &value);
    void fail(const std::string &why);
    CheckReport finish();

private:
    CheckReport m_report;
    int m_digits;
    double m_worst_log10;
    std::string m_worst;
};

} // namespace ntheta

#endif
