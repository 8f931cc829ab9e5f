#pragma once

// Convenience include for the whole library.

#include "relmat/bigcount.hpp"
#include "relmat/bitvec.hpp"
#include "relmat/errors.hpp"
#include "relmat/io.hpp"
#include "relmat/oracle.hpp"
#include "relmat/relation.hpp"
#include "relmat/semiring.hpp"
#include "relmat/solver.hpp"
