#pragma once

#include "freelip/deleeuw.hpp"
#include "freelip/errors.hpp"
#include "freelip/extremal.hpp"
#include "freelip/free_element.hpp"
#include "freelip/json_io.hpp"
#include "freelip/kr_solver.hpp"
#include "freelip/metric_space.hpp"
#include "freelip/rational.hpp"
