#ifndef SADIC_HPP_
#define SADIC_HPP_

#include "sadic/coboundary.hpp"
#include "sadic/directive.hpp"
#include "sadic/errors.hpp"
#include "sadic/exactalg.hpp"
#include "sadic/language.hpp"
#include "sadic/lattice.hpp"
#include "sadic/linalg.hpp"
#include "sadic/matrix.hpp"
#include "sadic/measures.hpp"
#include "sadic/poly.hpp"
#include "sadic/quadratic.hpp"
#include "sadic/rational.hpp"
#include "sadic/spectra.hpp"
#include "sadic/words.hpp"

#endif  // SADIC_HPP_
