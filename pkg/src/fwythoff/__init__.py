"""Sprague-Grundy analysis toolkit for the F-Wythoff family of two-pile games.

The package splits into small layers:

* :mod:`fwythoff.games` -- positions, move legality and application for
  the four variants under either winning convention.
* :mod:`fwythoff.grundy` -- brute-force Grundy tables over rectangular
  strips, with value and winning-move queries.
* :mod:`fwythoff.beatty` -- exact integer generators for the golden-ratio
  closed forms, and their arithmetic sanity checks.
* :mod:`fwythoff.analysis` -- verifiers for every proved characterization
  and empirical probes for the open conjectures.
* :mod:`fwythoff.reportio` -- CSV/JSON exports, binary table cache, and
  the JSON verification report.
* :mod:`fwythoff.cli` -- the ``fwythoff`` command.
"""

from .analysis import (
    BoundMismatchError,
    KSequence,
    PeriodicityCertificate,
    TranslationFit,
    check_cover_intersect,
    check_diagonal,
    check_mex_recursion,
    check_row,
    compare_miserability,
    detect_additive_period,
    k_sequence,
    redundancy_witness,
    translation_probe,
    verify_characterization,
)
from .beatty import (
    CLOSED_SETS,
    BeattyPair,
    ClosedSet,
    beatty_pair,
    check_complementarity,
    check_ratio_lemma,
    closed_set,
    floor_phi,
    floor_phi2,
    is_floor_phi_value,
)
from .games import (
    Convention,
    IllegalMoveError,
    MoveKind,
    MoveSpec,
    Pile,
    Position,
    UndefinedRatioError,
    Variant,
    apply_move,
    canonicalize,
    is_terminal,
    legal_moves,
    ratio,
    take_both,
    take_extended,
    take_one,
)
from .grundy import (
    CapacityError,
    GrundyTable,
    OutOfRangeError,
    compute_table,
    grundy,
    mex,
    p_positions,
    positions_with_value,
    row_values,
    winning_moves,
)
from .report import ReportItem, Status, exit_code
from .reportio import (
    CorruptArtifactError,
    VersionMismatchError,
    cache_table,
    export_table,
    load_table,
    table_from_json,
    write_report,
)

__version__ = "0.1.0"
