from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Check:
    """Outcome of a predicate: truthy iff it holds; ``witness`` explains a failure."""

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


PASS = Check(True)
