"""Batch-processing helper: run an operation per item, collect failures."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Sequence


@dataclass
class BatchResult:
    """Per-item results aligned with the input order.

    ``items[i]`` is ``None`` when item ``i`` failed; the reason is recorded
    in ``failures`` as ``(index, message)``.
    """

    items: list = field(default_factory=list)
    failures: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def successes(self) -> list:
        return [item for item in self.items if item is not None]


def run_batch(func: Callable[[Any], Any], inputs: Sequence,
              catch: tuple = (Exception,)) -> BatchResult:
    """Apply ``func`` to every input; never abort the batch on a failure."""
    out = BatchResult()
    for i, item in enumerate(inputs):
        try:
            out.items.append(func(item))
        except catch as exc:
            out.items.append(None)
            out.failures.append((i, str(exc)))
    return out
