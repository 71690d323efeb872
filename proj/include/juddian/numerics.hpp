#pragma once

#include "juddian/numerics/linear.hpp"
#include "juddian/numerics/matrix.hpp"
#include "juddian/numerics/polynomial.hpp"
#include "juddian/numerics/sym_eig.hpp"
