"""Utility functions package."""
from .logger import setup_logging
from .validators import (
    require_positive,
    require_nonnegative,
    require_positive_int,
    require_nonnegative_int,
    require_nonempty,
)
from .constants import (
    SPEED_OF_LIGHT,
    NODE_ALICE,
    NODE_BOB,
    NODE_EVE,
    LINK_AB,
    LINK_BA,
    LINK_AE,
    LINK_EA,
    LINK_BE,
    LINK_EB,
)

__all__ = [
    'setup_logging',
    'require_positive',
    'require_nonnegative',
    'require_positive_int',
    'require_nonnegative_int',
    'require_nonempty',
    'SPEED_OF_LIGHT',
    'NODE_ALICE',
    'NODE_BOB',
    'NODE_EVE',
    'LINK_AB',
    'LINK_BA',
    'LINK_AE',
    'LINK_EA',
    'LINK_BE',
    'LINK_EB',
]
