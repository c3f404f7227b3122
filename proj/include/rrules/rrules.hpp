#ifndef RRULES_RRULES_HPP
#define RRULES_RRULES_HPP

#include "rrules/conditions.hpp"
#include "rrules/dataset.hpp"
#include "rrules/induction.hpp"
#include "rrules/metrics.hpp"
#include "rrules/report.hpp"
#include "rrules/row_set.hpp"

#endif
