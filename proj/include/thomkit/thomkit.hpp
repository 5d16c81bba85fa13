#pragma once

#include "thomkit/catalog.hpp"
#include "thomkit/error.hpp"
#include "thomkit/family.hpp"
#include "thomkit/io.hpp"
#include "thomkit/lowering.hpp"
#include "thomkit/monomial.hpp"
#include "thomkit/polynomial.hpp"
#include "thomkit/rational.hpp"
#include "thomkit/schur.hpp"
#include "thomkit/series.hpp"
#include "thomkit/verify.hpp"
