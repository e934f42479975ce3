#pragma once

#include <natprod/error.hpp>
#include <natprod/scalar.hpp>
#include <natprod/matrix.hpp>
#include <natprod/supermatrix.hpp>
#include <natprod/matpoly.hpp>
#include <natprod/text.hpp>
#include <natprod/serialize.hpp>
#include <natprod/random.hpp>
#include <natprod/structures.hpp>
#include <natprod/suites.hpp>
