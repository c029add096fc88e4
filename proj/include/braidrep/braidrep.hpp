#pragma once

// Umbrella header: exact braid-group representations built from multiset
// permutation orbits, with irreducibility certification and corank tools.

#include "braidrep/analysis.hpp"
#include "braidrep/braid_word.hpp"
#include "braidrep/dense.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/gaussian.hpp"
#include "braidrep/golden_phi3.hpp"
#include "braidrep/io.hpp"
#include "braidrep/monomial.hpp"
#include "braidrep/orbit.hpp"
#include "braidrep/qtable.hpp"
#include "braidrep/rational.hpp"
#include "braidrep/representation.hpp"
#include "braidrep/scalar.hpp"
