#pragma once

#include "fht/asymptotics.hpp"
#include "fht/eigensolver.hpp"
#include "fht/experiments.hpp"
#include "fht/io.hpp"
#include "fht/quasiparticle.hpp"
#include "fht/specialfn.hpp"
#include "fht/symbol.hpp"
#include "fht/toeplitz.hpp"
#include "fht/util.hpp"
#include "fht/wienerhopf.hpp"
