"""Input-oriented DEA efficiency, Malmquist productivity and peer projections."""

from ._core import (  # noqa: F401
    BalancedPanel,
    DmuRecord,
    DomainError,
    EfficiencyResult,
    FrontierError,
    InvariantViolation,
    IoError,
    LookupError,
    PanelDataset,
    ParseError,
    Rts,
    RtsClass,
    Tolerances,
    ValidationError,
    VariableKind,
    aggregates_json,
    balanced_subpanel,
    cross_distance,
    descriptive_stats,
    efficiency_table,
    evaluate,
    lp,
    malmquist_index,
    malmquist_panel,
    max_slacks,
    parse_panel_csv,
    peer_frequency,
    project,
    radial_efficiency,
    read_panel_csv,
    render_projection_text,
    scale_analysis,
)

__version__ = "0.1.0"
