#pragma once

#include "ftsnd/bitvector.hpp"
#include "ftsnd/bounds.hpp"
#include "ftsnd/clique.hpp"
#include "ftsnd/combinatorics.hpp"
#include "ftsnd/constructors.hpp"
#include "ftsnd/decoder.hpp"
#include "ftsnd/errors.hpp"
#include "ftsnd/exact_cover.hpp"
#include "ftsnd/hadamard.hpp"
#include "ftsnd/io.hpp"
#include "ftsnd/report.hpp"
#include "ftsnd/search.hpp"
#include "ftsnd/set_system.hpp"
#include "ftsnd/steiner.hpp"
