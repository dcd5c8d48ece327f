#ifndef BRAIDCOUNT_BRAIDCOUNT_HPP
#define BRAIDCOUNT_BRAIDCOUNT_HPP

#include "braidcount/analysis.hpp"
#include "braidcount/census.hpp"
#include "braidcount/checked.hpp"
#include "braidcount/closedform.hpp"
#include "braidcount/coords.hpp"
#include "braidcount/diagram.hpp"
#include "braidcount/fuzz.hpp"
#include "braidcount/permcheck.hpp"
#include "braidcount/svg.hpp"
#include "braidcount/verify.hpp"

#endif  // BRAIDCOUNT_BRAIDCOUNT_HPP
