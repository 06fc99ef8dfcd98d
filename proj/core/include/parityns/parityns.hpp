#pragma once

#include "parityns/enumerate.hpp"
#include "parityns/errors.hpp"
#include "parityns/experiments.hpp"
#include "parityns/field.hpp"
#include "parityns/field_io.hpp"
#include "parityns/grid.hpp"
#include "parityns/halfspace.hpp"
#include "parityns/hash.hpp"
#include "parityns/nsops.hpp"
#include "parityns/selftest.hpp"
#include "parityns/spectral.hpp"
#include "parityns/symtype.hpp"
