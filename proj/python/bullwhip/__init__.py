"""Three-echelon supply chain simulator with policy benchmarking,
knowledge-base retrieval, and strategy evaluation."""

from ._core import (
    ConfigError,
    KbParseError,
    KindError,
    KnowledgeBase,
    NoMatchError,
    __version__,
    hoarding_demo,
    rate_cost,
    rate_speed,
    render_frontier_svg,
    run_replications,
    run_simulation,
    scenario_suite,
    similarity,
    strategic_choice,
)

__all__ = [
    "ConfigError",
    "KbParseError",
    "KindError",
    "KnowledgeBase",
    "NoMatchError",
    "__version__",
    "hoarding_demo",
    "rate_cost",
    "rate_speed",
    "render_frontier_svg",
    "run_replications",
    "run_simulation",
    "scenario_suite",
    "similarity",
    "strategic_choice",
]
