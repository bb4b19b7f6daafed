#pragma once

#include "dibound/bell.hpp"
#include "dibound/bounds.hpp"
#include "dibound/centropy.hpp"
#include "dibound/errors.hpp"
#include "dibound/inequality.hpp"
#include "dibound/optimize.hpp"
#include "dibound/qmath.hpp"
#include "dibound/rates.hpp"
#include "dibound/states.hpp"
