#pragma once

#include "ncc/errors.hpp"
#include "ncc/rational.hpp"
#include "ncc/grassmann.hpp"
#include "ncc/polynomial.hpp"
#include "ncc/partition.hpp"
#include "ncc/word.hpp"
#include "ncc/law.hpp"
#include "ncc/law_io.hpp"
#include "ncc/cumulants.hpp"
#include "ncc/tensor.hpp"
#include "ncc/functional.hpp"
#include "ncc/shuffle.hpp"
#include "ncc/convolve.hpp"
#include "ncc/random.hpp"
#include "ncc/verify.hpp"
