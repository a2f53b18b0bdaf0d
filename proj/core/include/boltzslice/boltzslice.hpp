#pragma once

#include "boltzslice/core_model.hpp"
#include "boltzslice/errors.hpp"
#include "boltzslice/experiment.hpp"
#include "boltzslice/interval_union.hpp"
#include "boltzslice/objectives.hpp"
#include "boltzslice/random.hpp"
#include "boltzslice/samplers.hpp"
