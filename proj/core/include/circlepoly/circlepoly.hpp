#ifndef CIRCLEPOLY_CIRCLEPOLY_HPP
#define CIRCLEPOLY_CIRCLEPOLY_HPP

#include "circlepoly/constructor.hpp"
#include "circlepoly/error.hpp"
#include "circlepoly/function_spec.hpp"
#include "circlepoly/polynomial.hpp"
#include "circlepoly/series.hpp"
#include "circlepoly/verifier.hpp"

#endif  // CIRCLEPOLY_CIRCLEPOLY_HPP
