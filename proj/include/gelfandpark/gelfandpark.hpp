#pragma once

#include "bigint.hpp"
#include "budget.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "gelfand.hpp"
#include "groups.hpp"
#include "parking.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"
#include "qcatalan.hpp"
#include "repthy.hpp"
#include "spherical.hpp"
#include "treepoly.hpp"
