#pragma once

#include <algorithm>
#include <cmath>

namespace levyscale {

enum class PrecisionMode {
    NativeDouble, ///< plain IEEE double, ~16 significant decimal digits
    Extended,     ///< software float at ~32 decimal digits
    Arbitrary     ///< software float at the requested digit count
};

/// Explicit precision value passed into every operation that can run above
/// native double. There is no ambient global precision; a context is a value.
struct PrecisionContext {
    int digits = 16;
    PrecisionMode mode = PrecisionMode::NativeDouble;

    static PrecisionContext native() { return {16, PrecisionMode::NativeDouble}; }
    static PrecisionContext extended() { return {32, PrecisionMode::Extended}; }
    static PrecisionContext arbitrary(int d) { return {d, PrecisionMode::Arbitrary}; }

    bool is_native() const {
        return mode == PrecisionMode::NativeDouble && digits <= 16;
    }

    /// Working mantissa size in bits, with guard bits so that a chain of
    /// arithmetic still delivers `digits` correct decimal digits.
    long bits() const {
        int d = std::max(digits, 16);
        return static_cast<long>(std::ceil((d + 8) * 3.3219280948873626));
    }
};

} // namespace levyscale
