"""Stabilizer-code compiler and verifier.

Synthesizes encoder and syndrome-measurement circuits from stabilizer
generators, builds syndrome lookup tables, routes circuits onto
nearest-neighbor grids, and checks every construction with an exact
state-vector simulator.
"""

from ._stabforge import (
    CheckMatrix,
    Circuit,
    CodeSpec,
    CouplingGraph,
    GateKind,
    Layout,
    PauliString,
    RoutedResult,
    StandardForm,
    StateVector,
    SyndromeTable,
    ValidationError,
    apply_pauli_error,
    builtin,
    builtin_names,
    css_check_matrix,
    decompose_swaps,
    dump_state,
    eigencheck,
    equiv_up_to_phase,
    gate_counts,
    grid_graph,
    init_basis,
    is_compliant,
    load_code,
    multiply,
    optimize_trivial_z,
    parse_circuit,
    parse_layout,
    parse_pauli,
    route,
    run,
    serialize,
    shor_figure_decoder,
    shor_figure_encoder,
    shor_figure_roundtrip,
    symplectic_product,
    synth_encoder,
    synth_syndrome,
    syndrome_table,
    to_physical,
    to_standard_form,
    verify_codeword_amplitudes,
    verify_roundtrip,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
