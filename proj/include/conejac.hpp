#pragma once

#include <conejac/abelian_group.hpp>
#include <conejac/circulant_fastpath.hpp>
#include <conejac/closed_forms.hpp>
#include <conejac/errors.hpp>
#include <conejac/exact_linalg.hpp>
#include <conejac/graph_io.hpp>
#include <conejac/int_matrix.hpp>
#include <conejac/int_poly.hpp>
#include <conejac/integer.hpp>
#include <conejac/invariants.hpp>
#include <conejac/laurent_poly.hpp>
#include <conejac/multigraph.hpp>
#include <conejac/oracle.hpp>
#include <conejac/report.hpp>
