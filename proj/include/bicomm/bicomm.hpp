#ifndef BICOMM_BICOMM_HPP
#define BICOMM_BICOMM_HPP

#include "algebra.hpp"
#include "catalog.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "hilbert.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "rational.hpp"
#include "symmetric.hpp"
#include "uni_polynomial.hpp"
#include "yz_polynomial.hpp"

#endif
