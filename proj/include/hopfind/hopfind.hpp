#pragma once

#include "hopfind/builtins.hpp"
#include "hopfind/cyclotomic.hpp"
#include "hopfind/encoding.hpp"
#include "hopfind/errors.hpp"
#include "hopfind/hopf.hpp"
#include "hopfind/indicators.hpp"
#include "hopfind/linalg.hpp"
#include "hopfind/rational.hpp"
#include "hopfind/reps.hpp"
#include "hopfind/sparse_tensor.hpp"
#include "hopfind/textformat.hpp"
