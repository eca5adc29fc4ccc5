"""Mixed-Ramsey colorings of complete graphs: build, transform, verify and search.

A coloring of ``K_n`` is ``(G, H)``-good when it has no monochromatic copy of
``G`` and no rainbow copy of ``H``.  The spectrum ``S(n; G, H)`` is the set of
color counts that admit a good coloring.
"""

from .graph import (
    CensusSplit,
    Coloring,
    ColoringFormatError,
    Pattern,
    PatternError,
    color_census,
    load_coloring,
    parse_pattern,
    read_coloring,
    recognize_tag,
    save_coloring,
    write_coloring,
)
from .detect import Embedding, PartialColoring, Verdict, find_monochromatic, find_rainbow, is_good, violations_containing_edge
from .transform import TransformError, delete_vertex, extend_new_color, merge_star_classes
from .construct import k10_eight, k10_seven, matching_extremal, pentagon_power, star_coloring
from .formulas import KnownValue, NotCovered, known_min_colors, known_spectrum, lambda_value, literature_values, lookup, ramsey_matching
from .search import (
    Budget,
    ExistenceResult,
    MinColors,
    SpectrumReport,
    Status,
    existence,
    min_colors,
    monotone_nonexistence,
    spectrum,
)

__version__ = "0.1.0"
