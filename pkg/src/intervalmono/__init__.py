"""Exact computation with monoids of monotone partial transformations of a
finite chain whose domain and image are intervals (PIM_n) and their full
counterparts (IM_n)."""

from .chain import (
    FAMILY_TAGS,
    PartialTransformation,
    Partition,
    compose,
    domain,
    format_transformation,
    generator,
    identity,
    image,
    in_family,
    is_interval,
    is_monotone,
    is_order_preserving,
    is_order_reversing,
    kernel,
    parse,
    pi_partition,
    zero,
)
from .enumeration import MonoidTable, closure_equals, enumerate_constructive, enumerate_filter, froidure_pin
from .exceptions import EmptyKernelError, RelationFileError, ResourceGuardError, SizeMismatchError
from .formulas import CountReport, card_IM, card_IO, card_N_PIM, card_N_PIO, card_PIM, card_PIO
from .nilpotents import NilpotencyVerdict, enumerate_nilpotents, is_nilpotent, nonclosure_witness
from .presentation import BoundExceeded, Presentation, fp_enumerate, machine_presentation, relations_N
from .rank import RankCertificate, certify_rank_exhaustive, certify_rank_structural, rank_formula

__version__ = "0.1.0"
