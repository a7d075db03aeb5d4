#pragma once

#include "lindef/errors.hpp"
#include "lindef/field.hpp"
#include "lindef/sparse_matrix.hpp"
#include "lindef/graph.hpp"
#include "lindef/graph_algorithms.hpp"
#include "lindef/graph_enum.hpp"
#include "lindef/graph_io.hpp"
#include "lindef/monomial.hpp"
#include "lindef/complex.hpp"
#include "lindef/resolution.hpp"
#include "lindef/lind.hpp"
#include "lindef/splitting.hpp"
#include "lindef/verify.hpp"
#include "lindef/analyze.hpp"
