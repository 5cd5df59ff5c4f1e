#pragma once

// Umbrella header: the whole library.

#include "invsemi/corpus.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/function.hpp"
#include "invsemi/generators.hpp"
#include "invsemi/io.hpp"
#include "invsemi/positive.hpp"
#include "invsemi/random.hpp"
#include "invsemi/report.hpp"
#include "invsemi/representation.hpp"
#include "invsemi/semigroup.hpp"
#include "invsemi/suite.hpp"
