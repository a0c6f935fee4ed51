#pragma once

#include "seqlab/amplitude_estimation.hpp"
#include "seqlab/band.hpp"
#include "seqlab/band_oracle.hpp"
#include "seqlab/bits.hpp"
#include "seqlab/circuit.hpp"
#include "seqlab/errors.hpp"
#include "seqlab/gate.hpp"
#include "seqlab/pipeline.hpp"
#include "seqlab/qwht.hpp"
#include "seqlab/statevector.hpp"
#include "seqlab/walsh.hpp"
#include "seqlab/zero_crossing.hpp"
