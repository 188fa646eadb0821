#pragma once

#include "weylmin/classical.hpp"
#include "weylmin/errors.hpp"
#include "weylmin/expr.hpp"
#include "weylmin/fock.hpp"
#include "weylmin/gauss_rational.hpp"
#include "weylmin/hbar.hpp"
#include "weylmin/holomorphic.hpp"
#include "weylmin/poly.hpp"
#include "weylmin/rational_function.hpp"
#include "weylmin/render.hpp"
#include "weylmin/serialize.hpp"
#include "weylmin/surface.hpp"
#include "weylmin/weyl.hpp"
