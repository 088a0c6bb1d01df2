#pragma once

#include "hyper/decomp.hpp"
#include "hyper/dsl.hpp"
#include "hyper/gram.hpp"
#include "hyper/hnum.hpp"
#include "hyper/scalar.hpp"
#include "hyper/structure_table.hpp"
