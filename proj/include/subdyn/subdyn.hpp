#pragma once

// Umbrella header: substitutions of one-variable Łukasiewicz logic, the
// falsum-free product family, and finite boolean substitutions, analyzed as
// dynamical systems with exact rational arithmetic.

#include "boolean.hpp"
#include "classify.hpp"
#include "corpus.hpp"
#include "dynamics.hpp"
#include "markov.hpp"
#include "plfunc.hpp"
#include "product.hpp"
#include "rational.hpp"
#include "serialize.hpp"
#include "term.hpp"
