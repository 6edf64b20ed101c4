#pragma once

#include "entropic/specfun/hyp2f1.hpp"
#include "entropic/specfun/jacobi.hpp"
#include "entropic/specfun/log_gamma.hpp"
#include "entropic/specfun/su11_functions.hpp"
#include "entropic/specfun/wigner.hpp"
