import json
from typing import Dict, List

import pandas as pd

from src.analysis.verdict import TheoremVerdict
from src.utils.helpers import dump_json, get_logger

logger = get_logger('report')

COLUMNS = ['theorem', 'instance', 'regime', 'holds', 'asserted', 'witness']


class VerdictReport:
    """Tabulates theorem verdicts for the JSON, text and xlsx outputs."""

    def __init__(self, verdicts: List[TheoremVerdict]):
        self.verdicts = list(verdicts)

    @property
    def failures(self) -> List[TheoremVerdict]:
        return [v for v in self.verdicts if v.is_failure]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def compile_results(self) -> pd.DataFrame:
        """One row per verdict; witnesses rendered as compact JSON text."""
        rows = []
        for v in self.verdicts:
            rows.append({
                'theorem': v.theorem,
                'instance': v.instance,
                'regime': v.regime.value,
                'holds': v.holds,
                'asserted': v.asserted,
                'witness': '' if v.witness is None else json.dumps(v.witness, ensure_ascii=False, default=str),
            })
        return pd.DataFrame(rows, columns=COLUMNS)

    def summary(self) -> Dict[str, int]:
        return {
            'verdicts': len(self.verdicts),
            'asserted': sum(v.asserted for v in self.verdicts),
            'holding': sum(v.holds for v in self.verdicts),
            'failures': len(self.failures),
        }

    def to_json(self) -> str:
        return dump_json([v.as_dict() for v in self.verdicts])

    def to_text(self) -> str:
        df = self.compile_results()
        lines = [df.to_string(index=False) if not df.empty else '(no verdicts)']
        for v in self.verdicts:
            for detail in v.details:
                if not v.holds:
                    lines.append(f"{v.theorem} [{v.instance}]: {detail}")
        s = self.summary()
        lines.append(f"{s['verdicts']} verdicts, {s['asserted']} asserted, {s['failures']} asserted failure(s)")
        return '\n'.join(lines) + '\n'

    def save_results(self, output_path: str):
        """Saves the verdict table to an Excel file."""
        self.compile_results().to_excel(output_path, index=False, engine='openpyxl')
        logger.info(f"verdict table written to {output_path}")
