"""Grover walks on graphs: spectra, periodicity and perfect state transfer."""

__version__ = "0.1.0"

from .errors import ConsistencyError, GraphValidationError
from .graphs import (
    ArcSpace,
    CirculantSpec,
    Graph,
    arc_space,
    cayley,
    named_graph,
    parse_edge_list,
    read_edge_list,
    unitary_cayley,
    unitary_cayley_spec,
    write_edge_list,
)
from .numtheory import euler_phi, mobius, ramanujan_closed, ramanujan_direct
from .periodicity import (
    ClassificationLabel,
    PeriodicityReport,
    angle_order,
    classify_integral_regular_periodic,
    is_periodic_integral_regular,
    period_bruteforce,
    period_spectral,
    uc_periodicity_predicted,
)
from .pst import (
    PSTCertificate,
    chebyshev,
    pst_bruteforce,
    pst_criterion_circulant,
    pst_necessary_filter,
    pst_no_go_equal_eigs,
    transfer_block,
    uc_pst_classification,
)
from .spectra import (
    Eigenprojector,
    SpectrumReport,
    circulant_spectrum,
    eigenprojectors,
    eigenvalue_support,
    hoffman_check,
    is_walk_regular,
    numeric_spectrum,
    spectral_map,
    uc_spectrum,
)
from .walk import WalkOperators, build_operators, evolve, matrix_power, vertex_state
