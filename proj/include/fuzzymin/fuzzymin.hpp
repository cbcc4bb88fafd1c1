#ifndef FUZZYMIN_FUZZYMIN_HPP
#define FUZZYMIN_FUZZYMIN_HPP

#include "fuzzymin/automaton.hpp"
#include "fuzzymin/budget.hpp"
#include "fuzzymin/chain.hpp"
#include "fuzzymin/errors.hpp"
#include "fuzzymin/fuzzy_matrix.hpp"
#include "fuzzymin/io.hpp"
#include "fuzzymin/minimizer.hpp"
#include "fuzzymin/random.hpp"
#include "fuzzymin/sfpe.hpp"

#endif  // FUZZYMIN_FUZZYMIN_HPP
