#ifndef NTHETA_NUMERIC_CONSTANTS_HPP
#define NTHETA_NUMERIC_CONSTANTS_HPP

#include <string_view>

namespace ntheta::constants
{

// Gamma values at 1/4, 3/4 and 1/3, 120 significant digits, truncated (not
// rounded) from a 130-digit mpmath evaluation. Enclosures built from them are
// widened by one unit in the last place.
inline constexpr std::string_view gamma_1_4 =
    "3.62560990822190831193068515586767200299516768288006546743337799956991924353872912161836013672338430036147175139242071996";
inline constexpr std::string_view gamma_3_4 =
    "1.22541670246517764512909830336289052685123924810807061123011893828982288842679835723717237621491506658217338023758803316";
inline constexpr std::string_view gamma_1_3 =
    "2.67893853470774763365569294097467764412868937795730110095042832759041761016774381954098288904118878941915904920007226333";

inline constexpr int gamma_digits = 120;

} // namespace ntheta::constants

#endif
