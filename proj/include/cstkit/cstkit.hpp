#pragma once

#include "cstkit/error.hpp"
#include "cstkit/rational.hpp"
#include "cstkit/cyclotomic.hpp"
#include "cstkit/matrix.hpp"
#include "cstkit/monomial.hpp"
#include "cstkit/poly.hpp"
#include "cstkit/poly_matrix.hpp"
#include "cstkit/parse.hpp"
#include "cstkit/group.hpp"
#include "cstkit/catalog.hpp"
#include "cstkit/span.hpp"
#include "cstkit/invariants.hpp"
#include "cstkit/cst.hpp"
#include "cstkit/report.hpp"
#include "cstkit/weights.hpp"
#include "cstkit/isotypic.hpp"
#include "cstkit/kernels.hpp"
#include "cstkit/verify.hpp"
