#ifndef ZETALAB_ZETALAB_HPP
#define ZETALAB_ZETALAB_HPP

#include <zetalab/bernoulli.hpp>
#include <zetalab/error.hpp>
#include <zetalab/forensics.hpp>
#include <zetalab/line_one.hpp>
#include <zetalab/odd_zeta.hpp>
#include <zetalab/prime_tail.hpp>
#include <zetalab/primes.hpp>
#include <zetalab/quadrature.hpp>
#include <zetalab/real.hpp>
#include <zetalab/series.hpp>
#include <zetalab/special.hpp>
#include <zetalab/zeta_core.hpp>

#endif
