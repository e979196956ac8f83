#pragma once

// Umbrella header: exact computation of Castelnuovo-Mumford regularity, Tor
// and Ext modules, and weak-stability structure for monomial ideals.

#include "monreg/decomposition.hpp"
#include "monreg/extint.hpp"
#include "monreg/field.hpp"
#include "monreg/free_complex.hpp"
#include "monreg/graded_module.hpp"
#include "monreg/homology.hpp"
#include "monreg/ideal.hpp"
#include "monreg/io.hpp"
#include "monreg/linalg.hpp"
#include "monreg/monomial.hpp"
#include "monreg/random_ideal.hpp"
#include "monreg/regularity_ops.hpp"
#include "monreg/render.hpp"
#include "monreg/resolve.hpp"
#include "monreg/scan.hpp"
#include "monreg/stability.hpp"
#include "monreg/torext.hpp"
#include "monreg/verifier.hpp"
