#pragma once

// Everything except fetch.hpp, which needs OpenSSL.

#include "defectlab/census.hpp"
#include "defectlab/clusters.hpp"
#include "defectlab/colouring.hpp"
#include "defectlab/constructions.hpp"
#include "defectlab/covers.hpp"
#include "defectlab/deadline.hpp"
#include "defectlab/defect.hpp"
#include "defectlab/edge_set.hpp"
#include "defectlab/errors.hpp"
#include "defectlab/graph.hpp"
#include "defectlab/graph6.hpp"
#include "defectlab/matching.hpp"
#include "defectlab/native_format.hpp"
#include "defectlab/operations.hpp"
#include "defectlab/reduction.hpp"
#include "defectlab/structure.hpp"
