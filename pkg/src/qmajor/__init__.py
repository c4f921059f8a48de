"""Exact q-polynomial statistics for lattice paths and tableaux.

The package computes major/amajor index distributions over generalized
Schroeder and Catalan paths, row-increasing, increasing, standard and
reverse tableaux; evaluates the matching closed-form generating functions
in exact integer arithmetic; and ships the statistic-preserving bijections
tying the families together.  The harness module sweeps every closed form
against brute-force enumeration on small parameter grids.
"""

from .qseries import (
    InvalidPartitionError,
    LaurentPoly,
    NonExactDivisionError,
    Q,
    gf_from_exponents,
    q_power,
    qbinom,
    qfact,
    qint,
    qmultinom,
)
from .paths import (
    ALL_ORDERS,
    DIAG,
    EAST,
    NORTH,
    LatticePath,
    NotComplementaryError,
    StepOrder,
    diagonal_reverse_labelling,
    enumerate_catalan,
    enumerate_schroeder,
    maj_gf_schroeder_enum,
    schroeder_family_nonempty,
    shuffles,
    standardize,
)
from .tableaux import (
    CellOutOfShapeError,
    Partition,
    SkewShape,
    Tableau,
    generate_family,
    increasing_tableaux,
    reverse_tableaux,
    row_increasing_tableaux,
    standard_tableaux,
    stat_gf,
)
from .bijections import (
    InvalidHoleError,
    NotInFamilyError,
    inc_to_hook_syt,
    hook_syt_to_inc,
    inc_to_rinc,
    jdt_in,
    jdt_out,
    path_to_tableau,
    rectify_pair,
    rinc_to_inc,
    rinc_to_syt,
    syt_to_rinc,
    tableau_to_path,
    unrectify_pair,
)
from .formulas import (
    FormulaResult,
    catalan_maj_closed,
    inc_maj_closed,
    rinc_amaj_closed,
    rinc_maj_closed,
    rinc_rect_maj_closed,
    schroeder_maj_closed,
    skew_hook_maj_closed,
    skew_syt_maj_gf,
    straight_hook_maj_closed,
    syt_maj_gf,
    two_row_syt_maj_closed,
)
from .harness import CheckRecord, SweepConfig, run_sweep

__version__ = "0.1.0"
