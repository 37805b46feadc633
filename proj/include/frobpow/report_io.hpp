// report_io.hpp
// Text renderings of count reports. CSV uses '.' decimals and 12
// significant digits, independent of locale; the column set is fixed:
//   c,d,k,g,pi,pred_pi,ratio_pi,N,pred_N,ratio_N,psi,pred_psi,ratio_psi,theta

#pragma once

#include <string>

#include <json.hpp>

#include "frobpow/counts.hpp"

namespace frobpow {

// a double as %.12g, always with '.' as decimal separator
std::string format_real(double v);

inline constexpr char csv_header[] =
    "c,d,k,g,pi,pred_pi,ratio_pi,N,pred_N,ratio_N,psi,pred_psi,ratio_psi,theta";

std::string csv_row(const CountReport& r);

nlohmann::json report_json(const CountReport& r);

} // namespace frobpow
