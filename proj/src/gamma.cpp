#include "yangian/gamma.hpp"

namespace yangian {

Rational gamma_ratio(const Rational& z, long m) {
    if (m >= 0) {
        Rational prod(1);
        for (long i = 0; i < m; ++i) {
            const Rational factor = z + Rational(i);
            if (factor.is_zero()) {
                return Rational(0);
            }
            prod *= factor;
        }
        return prod;
    }
    Rational prod(1);
    for (long i = 1; i <= -m; ++i) {
        const Rational factor = z - Rational(i);
        if (factor.is_zero()) {
            throw DivisionByZeroError("gamma_ratio(" + z.str() + ", " + std::to_string(m) +
                                      "): zero factor at offset -" + std::to_string(i));
        }
        prod *= factor;
    }
    return Rational(1) / prod;
}

}  // namespace yangian
