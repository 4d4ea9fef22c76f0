#pragma once

#include "hauptq/error.hpp"
#include "hauptq/series.hpp"
#include "hauptq/residue.hpp"
#include "hauptq/eta.hpp"
#include "hauptq/catalog.hpp"
#include "hauptq/hecke.hpp"
#include "hauptq/dissections.hpp"
#include "hauptq/expr.hpp"
#include "hauptq/claims.hpp"
