#pragma once

// Everything in one include.

#include "tecodes/errors.hpp"
#include "tecodes/gf.hpp"
#include "tecodes/array.hpp"
#include "tecodes/vt.hpp"
#include "tecodes/rs.hpp"
#include "tecodes/te_codes.hpp"
#include "tecodes/dc_codes.hpp"
#include "tecodes/ted_codes.hpp"
#include "tecodes/bounds.hpp"
#include "tecodes/channel.hpp"
