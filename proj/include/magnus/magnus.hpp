#pragma once

#include "magnus/asymptotics.hpp"
#include "magnus/quadrature.hpp"
#include "magnus/specfun.hpp"
#include "magnus/theorems.hpp"
#include "magnus/verifier.hpp"
