#include "levyscale/mp_real.hpp"

#include <cstdio>
#include <vector>

namespace levyscale {

std::string MpReal::str(int digits10) const {
    if (!is_finite()) return is_nan() ? "nan" : (sign() > 0 ? "inf" : "-inf");
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits10), v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    std::string sign_str;
    if (!digits.empty() && digits[0] == '-') {
        sign_str = "-";
        digits.erase(0, 1);
    }
    if (digits.empty()) return "0";
    // mpfr convention: value = 0.digits * 10^e
    std::string out = sign_str + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(static_cast<long>(e - 1));
    return out;
}

} // namespace levyscale
