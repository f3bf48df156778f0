"""Horn inequalities, Littlewood-Richardson coefficients, and exact
spectra of line graphs of bipartite graphs.

Everything is exact unless explicitly numeric: partitions and LR
coefficients are integer combinatorics, characteristic polynomials are
computed over arbitrary-precision integers (with a compiled 64-bit fast
path selected at import, see `hornlr.kernel_backend`), and floating
point only enters for sampled Hermitian spectra and Ramanujan bounds on
non-integral graphs.
"""

from ._kernels import BACKEND as kernel_backend
from .errors import FormatError, InputError, TheoremViolation
from .graphs import (
    BipartiteGraph,
    ExactSpectrum,
    Graph,
    bipartite_complement,
    char_poly_exact,
    clique_number,
    complete_bipartite,
    connected_bipartite_graphs,
    degree_partitions,
    diameter,
    disjoint_union,
    even_cycle,
    exact_spectrum,
    integer_spectrum,
    line_graph,
    matching,
    numeric_spectrum,
    star_decomposition,
)
from .horn import (
    IndexTriple,
    check_inequality,
    find_horn_violation,
    generate_t,
    generate_u,
    horn_compatible,
    sample_necessity,
    trace_condition,
    weyl_bounds,
)
from .lr import SkewShape, lr_coefficient, lr_positive
from .partitions import Partition, enumerate_partitions
from .spectra import (
    CandidateSet,
    RamanujanVerdict,
    SpectrumReport,
    analyze_line_graph,
    classify_regular_ramanujan_case,
    enumerate_p,
    moment_c,
    moment_d,
    ramanujan_verdict,
    regular_line_spectrum_template,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "CandidateSet",
    "ExactSpectrum",
    "FormatError",
    "Graph",
    "IndexTriple",
    "InputError",
    "Partition",
    "RamanujanVerdict",
    "SkewShape",
    "SpectrumReport",
    "TheoremViolation",
    "analyze_line_graph",
    "bipartite_complement",
    "char_poly_exact",
    "check_inequality",
    "classify_regular_ramanujan_case",
    "clique_number",
    "complete_bipartite",
    "connected_bipartite_graphs",
    "degree_partitions",
    "diameter",
    "disjoint_union",
    "enumerate_p",
    "enumerate_partitions",
    "even_cycle",
    "exact_spectrum",
    "find_horn_violation",
    "generate_t",
    "generate_u",
    "horn_compatible",
    "integer_spectrum",
    "kernel_backend",
    "line_graph",
    "lr_coefficient",
    "lr_positive",
    "matching",
    "moment_c",
    "moment_d",
    "numeric_spectrum",
    "ramanujan_verdict",
    "regular_line_spectrum_template",
    "sample_necessity",
    "star_decomposition",
    "trace_condition",
    "weyl_bounds",
]
