#pragma once

#include "eur/bounds.hpp"
#include "eur/constraint.hpp"
#include "eur/critique.hpp"
#include "eur/entropy.hpp"
#include "eur/error.hpp"
#include "eur/root.hpp"
#include "eur/sign_analysis.hpp"
#include "eur/types.hpp"
#include "eur/vs_bound.hpp"
#include "eur/oracle/boundary.hpp"
#include "eur/oracle/grid.hpp"
#include "eur/oracle/qubit.hpp"
#include "eur/oracle/random_states.hpp"
#include "eur/oracle/shape.hpp"
