#pragma once

// Variational ground- and excited-state energies of the parity-mapped H2
// Hamiltonian: Pauli algebra, a small statevector simulator, VQE/VQD drivers,
// a measurement-mapping readout emulation, and an exact-diagonalization
// oracle, over both the two-qubit and the reduced one-qubit formulation.

#include "h2vqe/ansatz.hpp"
#include "h2vqe/errors.hpp"
#include "h2vqe/linalg.hpp"
#include "h2vqe/measurement.hpp"
#include "h2vqe/molecule.hpp"
#include "h2vqe/nelder_mead.hpp"
#include "h2vqe/oracle.hpp"
#include "h2vqe/pauli.hpp"
#include "h2vqe/state.hpp"
#include "h2vqe/vqd.hpp"
