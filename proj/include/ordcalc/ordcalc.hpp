#pragma once

#include "ordcalc/params.hpp"
#include "ordcalc/words.hpp"
#include "ordcalc/group.hpp"
#include "ordcalc/tree.hpp"
#include "ordcalc/ball.hpp"
#include "ordcalc/orders.hpp"
#include "ordcalc/enumerate.hpp"
#include "ordcalc/verify.hpp"
