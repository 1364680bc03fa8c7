#ifndef KLRC_KLRC_HPP
#define KLRC_KLRC_HPP

#include "criterion.hpp"
#include "exactla.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "representation.hpp"
#include "repmodels.hpp"
#include "root_data.hpp"
#include "serialize.hpp"
#include "specht.hpp"
#include "tableaux.hpp"
#include "witness.hpp"

#endif  // KLRC_KLRC_HPP
