#pragma once

#include "trivec/abc.hpp"
#include "trivec/linalg.hpp"
#include "trivec/oracle.hpp"
#include "trivec/pluecker.hpp"
#include "trivec/recipes.hpp"
#include "trivec/so6.hpp"
#include "trivec/state.hpp"
#include "trivec/tangles.hpp"
