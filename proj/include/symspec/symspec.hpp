#pragma once

#include "symspec/bounds.hpp"
#include "symspec/brute_force.hpp"
#include "symspec/characters.hpp"
#include "symspec/derangements.hpp"
#include "symspec/exact.hpp"
#include "symspec/families.hpp"
#include "symspec/family.hpp"
#include "symspec/generating_set.hpp"
#include "symspec/lp.hpp"
#include "symspec/partition.hpp"
#include "symspec/permutation.hpp"
#include "symspec/projection.hpp"
#include "symspec/random.hpp"
#include "symspec/report.hpp"
#include "symspec/search.hpp"
#include "symspec/spectrum.hpp"
#include "symspec/weight_opt.hpp"
