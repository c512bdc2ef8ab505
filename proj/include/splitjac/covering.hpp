#pragma once

#include "splitjac/covering/constructions.hpp"
#include "splitjac/covering/families.hpp"
#include "splitjac/covering/models.hpp"
#include "splitjac/covering/reference.hpp"
#include "splitjac/covering/residue.hpp"
