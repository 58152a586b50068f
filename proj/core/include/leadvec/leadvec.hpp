// leadvec.hpp — umbrella header.
#pragma once

#include "leadvec/decomposer.hpp"
#include "leadvec/errors.hpp"
#include "leadvec/leading_vector.hpp"
#include "leadvec/local_unitary.hpp"
#include "leadvec/oracle.hpp"
#include "leadvec/product_structure.hpp"
#include "leadvec/register_state.hpp"
#include "leadvec/state_io.hpp"
#include "leadvec/types.hpp"
#include "leadvec/version.hpp"
