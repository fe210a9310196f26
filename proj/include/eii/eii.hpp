#pragma once

#include "eii/betti.hpp"
#include "eii/betti_formulas.hpp"
#include "eii/binomial.hpp"
#include "eii/complex.hpp"
#include "eii/complex_io.hpp"
#include "eii/error.hpp"
#include "eii/field.hpp"
#include "eii/graph.hpp"
#include "eii/graph_io.hpp"
#include "eii/hilbert.hpp"
#include "eii/homology.hpp"
#include "eii/linalg.hpp"
#include "eii/oracle.hpp"
#include "eii/parallel.hpp"
#include "eii/series.hpp"
#include "eii/verify.hpp"
