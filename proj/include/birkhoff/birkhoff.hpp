// Copyright 2026 The birkhoff-lab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "birkhoff/bracelet/bracelet.hpp"
#include "birkhoff/bracelet/factorisation.hpp"
#include "birkhoff/bracelet/sampling.hpp"
#include "birkhoff/core/dft.hpp"
#include "birkhoff/core/errors.hpp"
#include "birkhoff/core/io.hpp"
#include "birkhoff/core/matrix.hpp"
#include "birkhoff/core/polar.hpp"
#include "birkhoff/core/sinkhorn.hpp"
#include "birkhoff/core/tolerances.hpp"
#include "birkhoff/core/unitary_witness.hpp"
#include "birkhoff/explorer/fixtures.hpp"
#include "birkhoff/explorer/fuzz.hpp"
#include "birkhoff/explorer/parallel.hpp"
#include "birkhoff/explorer/raster.hpp"
#include "birkhoff/explorer/scatter.hpp"
#include "birkhoff/spectra/hypocycloid.hpp"
#include "birkhoff/unistochastic/certificate.hpp"
#include "birkhoff/unistochastic/certify.hpp"
#include "birkhoff/unistochastic/heuristic.hpp"
#include "birkhoff/unistochastic/witnesses.hpp"
