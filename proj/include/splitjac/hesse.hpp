#pragma once

#include "splitjac/hesse/curve.hpp"
#include "splitjac/hesse/isogeny.hpp"
#include "splitjac/hesse/weierstrass.hpp"
