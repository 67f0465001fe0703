#pragma once

#include "magnus/branched_complex.hpp"
#include "magnus/cylinder.hpp"
#include "magnus/errors.hpp"
#include "magnus/gamma.hpp"
#include "magnus/hyp_u.hpp"
#include "magnus/pcf.hpp"
