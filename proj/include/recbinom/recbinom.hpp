#ifndef RECBINOM_RECBINOM_HPP
#define RECBINOM_RECBINOM_HPP

#include "recbinom/closed_forms.hpp"
#include "recbinom/combinatorics.hpp"
#include "recbinom/hypergeometric.hpp"
#include "recbinom/quadrature.hpp"
#include "recbinom/rational.hpp"
#include "recbinom/stability.hpp"
#include "recbinom/sums.hpp"

#endif  // RECBINOM_RECBINOM_HPP
