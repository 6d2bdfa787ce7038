#pragma once

#include "wlp/conjecture.hpp"
#include "wlp/exactmath.hpp"
#include "wlp/ideal.hpp"
#include "wlp/lefschetz.hpp"
#include "wlp/tilings.hpp"
