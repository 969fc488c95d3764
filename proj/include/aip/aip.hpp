#pragma once

#include <aip/biquandle.hpp>
#include <aip/coloring.hpp>
#include <aip/diagram_ops.hpp>
#include <aip/errors.hpp>
#include <aip/gauss_code.hpp>
#include <aip/invariant.hpp>
#include <aip/laurent.hpp>
#include <aip/moves.hpp>
