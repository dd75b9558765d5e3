#pragma once

#include "hoobs/automaton.hpp"
#include "hoobs/constructions.hpp"
#include "hoobs/dot.hpp"
#include "hoobs/errors.hpp"
#include "hoobs/families.hpp"
#include "hoobs/high_order.hpp"
#include "hoobs/nested.hpp"
#include "hoobs/oracle.hpp"
#include "hoobs/predicate.hpp"
#include "hoobs/report.hpp"
#include "hoobs/scenario.hpp"
#include "hoobs/verifier.hpp"
