// zeta(1 + ib) three ways.
#include <zetalab/line_one.hpp>

#include <iostream>

int main()
{
    using namespace zetalab;
    const Real tol(1e-12);
    for (const char* text : {"0.5", "1", "14.134725"}) {
        const Real b = Real::parse(text);
        std::cout << "b = " << text << "\n";
        for (const LineOnePoint& p : {zeta_line_one(b, tol), zeta_line_one_integral(b, tol), zeta_line_one_flat(b)})
            std::cout << "  " << to_string(p.method) << ": " << p.value.with_digits(20) << "\n";
    }
    // the alternating series vanishes where 2^{-ib} = 1
    EtaZero z = eta_zero_scan(1, ten_to_minus(20));
    std::cout << "|eta(1 + i " << z.b.to_string(12) << ")| = " << z.eta_abs.to_string(3) << "\n";
}
