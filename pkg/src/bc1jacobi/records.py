"""Canonical serialization of computed polynomials (JSON / CSV)."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .laurent import _Sparse
from .transport import PolyMat2, PolyVec2, VecLaurent2


def frac_str(v) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


@dataclass
class PolyRecord:
    family: str
    k: tuple | None
    scale: int
    params: dict
    # component label ("" for scalars, "1"/"2" for vectors, "11".."22" for matrices) -> polynomial
    components: dict = field(default_factory=dict)

    def coeff_rows(self):
        rows = []
        for comp in sorted(self.components):
            for key, v in self.components[comp].items():
                rows.append({"component": comp, "key": key, "num": str(Fraction(v).numerator),
                             "den": str(Fraction(v).denominator)})
        return rows

    def to_json_obj(self):
        obj = {
            "family": self.family,
            "k": None if self.k is None else [frac_str(x) for x in self.k],
            "scale": self.scale,
            "params": {key: _param(v) for key, v in self.params.items()},
            "coeffs": [],
        }
        for row in self.coeff_rows():
            entry = {"key": row["key"], "num": row["num"], "den": row["den"]}
            if row["component"]:
                entry = {"component": row["component"], **entry}
            obj["coeffs"].append(entry)
        return obj


def _param(v):
    if isinstance(v, Fraction):
        return frac_str(v)
    return v


def components_of(obj) -> dict:
    if isinstance(obj, _Sparse):
        return {"": obj}
    if isinstance(obj, VecLaurent2):
        return {"1": obj.comp1, "2": obj.comp2}
    if isinstance(obj, PolyVec2):
        return {"1": obj.f1, "2": obj.f2}
    if isinstance(obj, PolyMat2):
        return {f"{i + 1}{j + 1}": obj[i, j] for i in range(2) for j in range(2)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_json(records) -> str:
    return json.dumps([r.to_json_obj() for r in records], sort_keys=True, indent=2) + "\n"


def dumps_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "k1", "k2", "scale", "params", "component", "key", "num", "den"])
    for r in records:
        k1, k2 = (frac_str(r.k[0]), frac_str(r.k[1])) if r.k else ("", "")
        params = json.dumps({key: _param(v) for key, v in r.params.items()}, sort_keys=True)
        for row in r.coeff_rows():
            writer.writerow([r.family, k1, k2, r.scale, params, row["component"], row["key"],
                             row["num"], row["den"]])
    return buf.getvalue()
