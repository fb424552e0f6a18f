#pragma once

#include "rbsym/canonical.hpp"
#include "rbsym/checked.hpp"
#include "rbsym/composition.hpp"
#include "rbsym/delcon.hpp"
#include "rbsym/digraph.hpp"
#include "rbsym/digraph_io.hpp"
#include "rbsym/generators.hpp"
#include "rbsym/hopf.hpp"
#include "rbsym/listings.hpp"
#include "rbsym/parallel.hpp"
#include "rbsym/polynomial.hpp"
#include "rbsym/qsym.hpp"
#include "rbsym/rational.hpp"
#include "rbsym/redei_berge.hpp"
#include "rbsym/verify.hpp"
