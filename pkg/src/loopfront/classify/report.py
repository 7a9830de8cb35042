"""Singularity reports and the two-band zero test."""
import json
from dataclasses import dataclass, field
from fractions import Fraction

LABELS = ("Regular", "CuspidalEdge", "Swallowtail", "CuspidalButterfly", "CuspidalLips",
          "CuspidalBeaks", "TwoFiveCuspidalEdge", "Shcherbak", "Rank0", "Unresolved")

CODIMENSION = {
    "Regular": 0, "CuspidalEdge": 0, "Swallowtail": 0,
    "CuspidalButterfly": 1, "CuspidalLips": 1, "CuspidalBeaks": 1,
    "TwoFiveCuspidalEdge": 1, "Shcherbak": 1, "Rank0": 2, "Unresolved": None,
}

# relative bands: "= 0" below ZERO_BAND * scale, "!= 0" above NONZERO_BAND * scale
ZERO_BAND = 1e-6
NONZERO_BAND = 1e-4


@dataclass
class Condition:
    id: str
    value: object
    verdict: str   # "zero", "nonzero", "positive", "negative" or "undecided"

    def as_dict(self):
        v = self.value
        if isinstance(v, Fraction):
            v = float(v) if v.denominator != 1 else int(v)
        return {"id": self.id, "value": v, "verdict": self.verdict}


@dataclass
class SingularityReport:
    label: str
    method: str
    conditions: list = field(default_factory=list)
    note: str = ""
    point: tuple = None

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"unknown label {self.label!r}")

    @property
    def codimension(self):
        return CODIMENSION[self.label]

    def condition(self, cid):
        for c in self.conditions:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def value(self, cid):
        return self.condition(cid).value

    def to_dict(self):
        out = {"label": self.label, "method": self.method, "codimension": self.codimension,
               "conditions": [c.as_dict() for c in self.conditions]}
        if self.note:
            out["note"] = self.note
        return out

    def to_json(self, **kw):
        kw.setdefault("indent", 2)
        kw.setdefault("sort_keys", False)
        return json.dumps(self.to_dict(), **kw)


class Checker:
    """Collects conditions; exact values are compared with zero directly.

    Float values use the two bands relative to ``scale``.  A value inside
    the gap is recorded as undecided and makes the report Unresolved.
    """

    def __init__(self, exact=True):
        self.exact = exact
        self.conditions = []
        self.undecided = False

    def _verdict(self, value, scale):
        if self.exact or isinstance(value, Fraction) or isinstance(value, int):
            return "zero" if value == 0 else "nonzero"
        s = max(abs(float(scale)), 1e-300)
        a = abs(float(value))
        if a <= ZERO_BAND * s:
            return "zero"
        if a >= NONZERO_BAND * s:
            return "nonzero"
        return "undecided"

    def zero(self, cid, value, scale=1.0):
        """Record the condition and return True/False/None for =0/!=0/undecided."""
        v = self._verdict(value, scale)
        self.conditions.append(Condition(cid, value, v))
        if v == "undecided":
            self.undecided = True
            return None
        return v == "zero"

    def sign(self, cid, value, scale=1.0):
        """+1, -1, 0 (clearly zero) or None (undecided)."""
        v = self._verdict(value, scale)
        if v == "nonzero":
            v = "positive" if value > 0 else "negative"
        self.conditions.append(Condition(cid, value, v))
        if v == "undecided":
            self.undecided = True
            return None
        return {"zero": 0, "positive": 1, "negative": -1}[v]

    def info(self, cid, value):
        self.conditions.append(Condition(cid, value, "info"))

    def report(self, label, method, note="", point=None):
        return SingularityReport(label, method, list(self.conditions), note, point)
