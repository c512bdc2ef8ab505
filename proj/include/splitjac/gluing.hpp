#pragma once

#include "splitjac/gluing/census.hpp"
#include "splitjac/gluing/invariants.hpp"
#include "splitjac/gluing/segre.hpp"
