#include "frobpow/report_io.hpp"

#include <cstdio>

namespace frobpow {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_row(const CountReport& r) {
    std::string row;
    row += std::to_string(r.c);
    row += ',';
    row += std::to_string(r.d);
    row += ',';
    row += std::to_string(r.k);
    row += ',';
    row += std::to_string(r.g);
    row += ',';
    row += std::to_string(r.pi);
    row += ',';
    row += format_real(r.pred_pi);
    row += ',';
    row += format_real(r.ratio_pi);
    row += ',';
    row += std::to_string(r.n_count);
    row += ',';
    row += format_real(r.pred_n);
    row += ',';
    row += format_real(r.ratio_n);
    row += ',';
    row += format_real(r.psi);
    row += ',';
    row += format_real(r.pred_psi);
    row += ',';
    row += format_real(r.ratio_psi);
    row += ',';
    row += format_real(r.theta);
    return row;
}

nlohmann::json report_json(const CountReport& r) {
    return nlohmann::json{
        {"c", r.c},
        {"d", r.d},
        {"k", r.k},
        {"g", r.g},
        {"pi", r.pi},
        {"pred_pi", r.pred_pi},
        {"ratio_pi", r.ratio_pi},
        {"N", r.n_count},
        {"pred_N", r.pred_n},
        {"ratio_N", r.ratio_n},
        {"psi", r.psi},
        {"pred_psi", r.pred_psi},
        {"ratio_psi", r.ratio_psi},
        {"theta", r.theta},
    };
}

} // namespace frobpow
