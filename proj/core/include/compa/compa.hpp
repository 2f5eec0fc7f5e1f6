#pragma once

#include "compa/actions.hpp"
#include "compa/corpus.hpp"
#include "compa/error.hpp"
#include "compa/generator_format.hpp"
#include "compa/orbitals.hpp"
#include "compa/perm_group.hpp"
#include "compa/permutation.hpp"
#include "compa/primes.hpp"
#include "compa/report.hpp"
#include "compa/stabilizer_chain.hpp"
#include "compa/structure.hpp"
#include "compa/theorems.hpp"
#include "compa/types.hpp"
