#pragma once

#include "splitjac/algebra/errors.hpp"
#include "splitjac/algebra/field_traits.hpp"
#include "splitjac/algebra/forms.hpp"
#include "splitjac/algebra/polynomial.hpp"
#include "splitjac/algebra/prime_field.hpp"
#include "splitjac/algebra/quad_ext.hpp"
#include "splitjac/algebra/rational.hpp"
#include "splitjac/algebra/rational_function.hpp"
#include "splitjac/algebra/resultant.hpp"
#include "splitjac/algebra/roots.hpp"
#include "splitjac/algebra/serialize.hpp"
