// A few formula audits.
#include <zetalab/forensics.hpp>

#include <iostream>

int main()
{
    using namespace zetalab;
    for (const ForensicsReport& r : forensics({"eq2", "eq42", "eq52", "zeta5"})) {
        std::cout << r.formula_id << ": " << to_string(r.verdict) << ", deviation " << r.deviation.to_string(4);
        if (r.corrected_deviation)
            std::cout << ", repaired form " << r.corrected_deviation->to_string(4);
        std::cout << "\n  " << r.note << "\n";
    }
}
