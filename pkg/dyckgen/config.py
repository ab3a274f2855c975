import logging
import os
from dataclasses import dataclass, field
from typing import Mapping, Optional, Type

from dyckgen.constants import (
    DEFAULT_DIRECT_DET_MAX_HEIGHT,
    DEFAULT_ENUM_PARTITION_BUDGET,
    DEFAULT_ORACLE_MAX_LEN,
    GUARD_ENV_VAR,
)
from dyckgen.errors import DyckgenError

logger = logging.getLogger(__name__)

_TRUTHY = ("1", "true", "yes", "on")


@dataclass(frozen=True)
class Guards:
    direct_det_max_height: int = field(
        default=DEFAULT_DIRECT_DET_MAX_HEIGHT,
        metadata={"help": "Largest ceiling k for the fraction-free determinant."})
    enum_partition_budget: int = field(
        default=DEFAULT_ENUM_PARTITION_BUDGET,
        metadata={"help": "Largest k*N for the enumerative bosonic partition methods."})
    oracle_max_len: int = field(
        default=DEFAULT_ORACLE_MAX_LEN,
        metadata={"help": "Largest path length the brute-force oracle will tabulate."})
    lifted: bool = field(
        default=False,
        metadata={"help": f"All guards disabled (set {GUARD_ENV_VAR}=1)."})

    def enforce(self, what: str, value: int, limit: int, error: Type[DyckgenError]) -> None:
        """
        Raise `error` when `value` exceeds `limit`, unless the guards are lifted.
        """
        if value <= limit:
            return
        if self.lifted:
            logger.warning(f"{what}={value} exceeds the desk-scale guard {limit}; continuing ({GUARD_ENV_VAR} set)")
            return
        raise error(f"{what}={value} exceeds the guard {limit}. Set {GUARD_ENV_VAR}=1 to lift it.")


def load_guards(environ: Optional[Mapping[str, str]] = None) -> Guards:
    """Read the guard configuration from the environment at call time."""
    env = os.environ if environ is None else environ
    lifted = env.get(GUARD_ENV_VAR, "").strip().lower() in _TRUTHY
    return Guards(lifted=lifted)
