// Odd zeta values from the even values and a fixed linking constant f = 2.
#include <zetalab/odd_zeta.hpp>

#include <iostream>

int main()
{
    using namespace zetalab;
    const Real f(2L);
    const Real tol = ten_to_minus(30);
    for (const EvalRow& r : odd_error_table(15, f, tol))
        std::cout << "zeta(" << r.argument << ")  " << r.formula_value.to_string(8) << "  "
                  << r.reference_value.to_string(8) << "  " << r.abs_diff.to_string(5) << "\n";

    // with the exact linking constant the closed form is an identity
    FRatioSample s = f_ratio(2, FMode::closed, tol);
    std::cout << "f(2) = " << s.f_closed.to_string(20) << ", zeta(5) = " << zeta_odd_closed(2, s.f_closed).to_string(30)
              << "\n";
}
