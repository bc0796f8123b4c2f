#ifndef NTHETA_CLI_COMMANDS_HPP
#define NTHETA_CLI_COMMANDS_HPP

#include <ostream>
#include <string>

#include <ntheta/cli/suite.hpp>
#include <ntheta/puiseux/qseries.hpp>

namespace ntheta
{

/// Process exit codes.
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

/// Runs the suite and prints it in the configured format. Returns 0 when every
/// check passes, 1 when any fails, 2 for an invalid config or unknown id.
int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Series for a named construction: phi, chi, u1..u4, p, septic-p or
/// theta:x/y (f(q^x, q^y); use theta:x,y for fractional arguments).
/// Throws CatalogMiss for an unknown id.
QSeries named_series(const std::string &id, const Exponent &order);
/// Prints the canonical JSON form of named_series. Exit code 0 or 2.
int cmd_series(const std::string &id, const Exponent &order, std::ostream &out, std::ostream &err);

/// Evaluates phi-ratio:<catalog id>, G:<n>, p:<n> or u3:<n> and prints the
/// value, the log10 of its error bound and the closed form when one is known.
int cmd_eval(const std::string &target, int digits, bool json, std::ostream &out, std::ostream &err);

} // namespace ntheta

#endif
