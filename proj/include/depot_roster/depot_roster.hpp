#pragma once

#include "depot_roster/compare.hpp"
#include "depot_roster/errors.hpp"
#include "depot_roster/evaluator.hpp"
#include "depot_roster/ga.hpp"
#include "depot_roster/genes.hpp"
#include "depot_roster/instance_io.hpp"
#include "depot_roster/model.hpp"
#include "depot_roster/oracle.hpp"
#include "depot_roster/repair.hpp"
#include "depot_roster/sa.hpp"
#include "depot_roster/trace.hpp"
