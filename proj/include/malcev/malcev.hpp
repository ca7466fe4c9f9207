#ifndef MALCEV_MALCEV_HPP
#define MALCEV_MALCEV_HPP

#include "malcev/algebra.hpp"
#include "malcev/bundle.hpp"
#include "malcev/cayley_dickson.hpp"
#include "malcev/factorization.hpp"
#include "malcev/identities.hpp"
#include "malcev/involution.hpp"
#include "malcev/linalg.hpp"
#include "malcev/module.hpp"
#include "malcev/report.hpp"
#include "malcev/scalar.hpp"
#include "malcev/structure.hpp"

#endif  // MALCEV_MALCEV_HPP
