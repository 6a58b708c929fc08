#pragma once

#include "catalog.hpp"
#include "euler.hpp"
#include "integer.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "realization.hpp"
#include "symfunc.hpp"
