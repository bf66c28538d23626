#pragma once

#include "apuniform/apcount.hpp"
#include "apuniform/constructions.hpp"
#include "apuniform/error.hpp"
#include "apuniform/grid.hpp"
#include "apuniform/modulus.hpp"
#include "apuniform/parallel.hpp"
#include "apuniform/report.hpp"
#include "apuniform/rng.hpp"
#include "apuniform/search.hpp"
#include "apuniform/signal.hpp"
#include "apuniform/signal_io.hpp"
#include "apuniform/spectra.hpp"
