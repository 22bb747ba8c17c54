#pragma once

#include "action.hpp"
#include "arith.hpp"
#include "certificate_io.hpp"
#include "diag.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "orbital.hpp"
#include "pipeline.hpp"
#include "psl2.hpp"
#include "quotient.hpp"
