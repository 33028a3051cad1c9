"""
Verification reports: findings, overall status and serialization
"""
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

PASS = 'pass'
FAIL = 'fail'
INFO = 'info'
REFUSED = 'refused'


@dataclass
class Finding:
    """One checked condition: its name, outcome and supporting data"""
    check: str
    status: str = FAIL
    witness: Any = None
    value: Any = None
    tolerance: Any = None
    detail: str = ''

    def to_dict(self) -> Dict[str, Any]:
        data = {'check': self.check, 'status': self.status}
        for key in ('witness', 'value', 'tolerance'):
            item = getattr(self, key)
            if item is not None:
                data[key] = to_jsonable(item)
        if self.detail:
            data['detail'] = self.detail
        return data


@dataclass
class Report:
    """Ordered findings plus provenance of the inputs and numeric parameters"""
    status: str = PASS
    findings: List[Finding] = field(default_factory=list)
    provenance: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_findings(cls, findings: List[Finding], provenance: Optional[Dict[str, Any]] = None) -> 'Report':
        status = FAIL if any(f.status == FAIL for f in findings) else PASS
        return cls(status=status, findings=list(findings), provenance=dict(provenance or {}))

    @classmethod
    def refused(cls, reason: str, witness: Any = None, check: str = 'input') -> 'Report':
        return cls(status=REFUSED, findings=[Finding(check=check, status=REFUSED, witness=witness, detail=reason)])

    @property
    def ok(self) -> bool:
        return self.status == PASS

    @property
    def violations(self) -> List[Finding]:
        return [f for f in self.findings if f.status == FAIL]

    @property
    def informational(self) -> List[Finding]:
        return [f for f in self.findings if f.status == INFO]

    def failed_checks(self) -> List[str]:
        return sorted({f.check for f in self.violations})

    def extend(self, other: 'Report', prefix: str = '') -> 'Report':
        """Merge another report's findings, recomputing the status"""
        for finding in other.findings:
            if prefix:
                finding = Finding(f"{prefix}{finding.check}", finding.status, finding.witness,
                                  finding.value, finding.tolerance, finding.detail)
            self.findings.append(finding)
        if self.status != REFUSED:
            self.status = FAIL if self.violations else PASS
        return self

    def to_dict(self) -> Dict[str, Any]:
        data = {'status': self.status, 'findings': [f.to_dict() for f in self.findings]}
        if self.provenance:
            data['provenance'] = to_jsonable(self.provenance)
        return data


def to_jsonable(item: Any) -> Any:
    """Convert numpy scalars/arrays and tuples into plain JSON types; NaN and ±inf become null"""
    if isinstance(item, dict):
        return {str(k): to_jsonable(v) for k, v in item.items()}
    if isinstance(item, (list, tuple)):
        return [to_jsonable(v) for v in item]
    if isinstance(item, np.ndarray):
        return to_jsonable(item.tolist())
    if isinstance(item, np.integer):
        return int(item)
    if isinstance(item, (float, np.floating)):
        return float(item) if np.isfinite(item) else None
    if isinstance(item, np.bool_):
        return bool(item)
    if isinstance(item, (complex, np.complexfloating)):
        return [to_jsonable(float(item.real)), to_jsonable(float(item.imag))]
    return item


def emit_report(report: Report, fmt: str = 'json') -> str:
    """Serialize a report; JSON output uses canonical key order"""
    if fmt == 'json':
        return json.dumps(report.to_dict(), sort_keys=True, allow_nan=False)
    if fmt != 'text':
        raise ValueError(f"Unsupported report format: {fmt}")

    icons = {PASS: '✅', FAIL: '❌', INFO: 'ℹ️ ', REFUSED: '⛔'}
    lines = [f"{icons.get(report.status, '')} status: {report.status}"]
    for finding in report.findings:
        line = f"  {icons.get(finding.status, '•')} {finding.check}"
        if finding.witness is not None:
            line += f" witness={to_jsonable(finding.witness)}"
        if finding.value is not None:
            line += f" value={to_jsonable(finding.value)}"
        if finding.tolerance is not None:
            line += f" tolerance={finding.tolerance}"
        if finding.detail:
            line += f" ({finding.detail})"
        lines.append(line)
    for key in sorted(report.provenance):
        lines.append(f"  📋 {key}: {to_jsonable(report.provenance[key])}")
    return '\n'.join(lines)
