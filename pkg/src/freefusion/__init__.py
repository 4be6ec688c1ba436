"""Exact fusion combinatorics of two-letter word labels.

Words over {a, b} label the irreducibles; the letter swap and the dual act
on them; the swap-fixed subalgebra has a star basis whose failure of finite
generation this package certifies degree by degree.
"""

from .words import (
    EMPTY_WORD,
    EmptyWordError,
    FreePoly,
    ParseError,
    StarClass,
    Word,
    all_words,
    dual,
    gamma,
    gamma_poly,
    parse_word,
    star_class,
    words_of_length,
)
from .fusion import (
    DimensionTable,
    FusionElement,
    ZeroElementError,
    character_product,
    fuse,
    haar_pairing,
    leading_part,
)
from .invariants import (
    NotInvariantError,
    StarVector,
    express_in_star_basis,
    graded_component,
    is_invariant,
    star_element,
    star_product,
)
from .generation import (
    BLACK,
    WHITE,
    DEFAULT_DIM_BUDGET,
    DegreeMismatchError,
    GenerationReport,
    HypercubeGraph,
    NotBipartiteError,
    ResourceLimitError,
    build_graph,
    bw_invariant,
    degree_generated,
    finite_generation_scan,
    product_rows,
    two_color,
    verify_hypercube_iso,
    verify_pair_reduction,
)
from .equivariant import (
    EquivariantClass,
    check_surjectivity_onto_invariants,
    classes_up_to,
    forget,
    induce,
)
from .orbits import (
    BUILTIN_PERMUTATIONS,
    DUAL,
    DUAL_GAMMA,
    GAMMA,
    IDENTITY,
    CompactCheck,
    GeneratorOrbitInfiniteError,
    IncompatiblePermutationError,
    IrrPermutation,
    OrbitReport,
    compact_action_check,
    custom_permutation,
    orbit,
    verify_fusion_compatible,
)

__version__ = "0.1.0"
