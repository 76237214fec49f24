#pragma once

#include "thetagw/combinatorics.hpp"
#include "thetagw/degeneration.hpp"
#include "thetagw/error.hpp"
#include "thetagw/hankel.hpp"
#include "thetagw/invariants.hpp"
#include "thetagw/rational.hpp"
#include "thetagw/series.hpp"
#include "thetagw/spin_parity.hpp"
#include "thetagw/torsion_ledger.hpp"
