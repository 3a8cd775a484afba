#pragma once

#include "picard/bernoulli.hpp"
#include "picard/congruence.hpp"
#include "picard/errors.hpp"
#include "picard/ideal.hpp"
#include "picard/invariants.hpp"
#include "picard/oracle.hpp"
#include "picard/output.hpp"
#include "picard/parse.hpp"
#include "picard/quadfield.hpp"
#include "picard/rational.hpp"
#include "picard/sweep.hpp"
#include "picard/verify.hpp"
