#pragma once

#include "prunres/monomial.hpp"
#include "prunres/taylor.hpp"
#include "prunres/linalg.hpp"
#include "prunres/pruning.hpp"
#include "prunres/morse.hpp"
#include "prunres/betti.hpp"
#include "prunres/splitting.hpp"
#include "prunres/io.hpp"
