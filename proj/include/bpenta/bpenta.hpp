#pragma once

#include "bpenta/dense.hpp"
#include "bpenta/error.hpp"
#include "bpenta/oracle.hpp"
#include "bpenta/polynomial.hpp"
#include "bpenta/rational.hpp"
#include "bpenta/rational_function.hpp"
#include "bpenta/scalar.hpp"
#include "bpenta/solver.hpp"
#include "bpenta/system.hpp"
#include "bpenta/system_file.hpp"
