from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.order.selection import Regime


@dataclass
class TheoremVerdict:
    """
    Outcome of one theorem check on one instance.

    ``asserted`` is true when the instance lies in a regime where the
    statement is required to hold; otherwise the verdict is a finding.
    """
    theorem: str
    instance: str
    regime: Regime
    holds: bool
    asserted: bool
    witness: Optional[Any] = None
    details: List[str] = field(default_factory=list)

    @property
    def is_failure(self) -> bool:
        return self.asserted and not self.holds

    def as_dict(self) -> Dict[str, Any]:
        data = {
            'theorem': self.theorem,
            'instance': self.instance,
            'regime': self.regime.value,
            'holds': self.holds,
            'asserted': self.asserted,
        }
        if self.witness is not None:
            data['witness'] = self.witness
        if self.details:
            data['details'] = list(self.details)
        return data


def required(regime: Regime, needs: Regime) -> bool:
    """Whether an instance in ``regime`` is bound by a statement needing ``needs``."""
    if regime is Regime.IRREGULAR:
        return False
    if needs is Regime.BASE:
        return True
    return regime is Regime.FULL


def verdict(theorem: str, instance: str, regime: Regime, needs: Regime, holds: bool,
            witness: Optional[Any] = None, details: Optional[List[str]] = None) -> TheoremVerdict:
    return TheoremVerdict(theorem, instance, regime, bool(holds), required(regime, needs),
                          None if holds else witness, details or [])


def sort_verdicts(verdicts: List[TheoremVerdict]) -> List[TheoremVerdict]:
    return sorted(verdicts, key=lambda v: (v.theorem, v.instance))
