# trigonal/schemas/curves.py
"""
Input documents: a curve given by three components, optionally a family
over one parameter with its sample grid.
"""
import json
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from trigonal.core.errors import CurveError, ParseError, SpecValidationError
from trigonal.models.analysis import Family, ParameterGrid
from trigonal.models.curve import TrigonalCurve
from trigonal.services.curve_service import make_curve
from trigonal.services.polytext import Table, parse_table

Pair = Tuple[float, float]
# one entry per power of x: a constant [re, im] or a polynomial in the parameter
Entry = Union[Pair, List[Pair]]
Component = Union[str, List[Entry]]

COMPONENTS = ("y1", "y2", "y3")


def to_complex(value: Union[float, Pair]) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    return complex(value[0], value[1])


def component_table(component: Component, param: Optional[str], path: str) -> Table:
    if isinstance(component, str):
        return parse_table(component, param, path)
    table: Table = {}
    for i, entry in enumerate(component):
        if entry and isinstance(entry[0], (int, float)):
            table[(i, 0)] = complex(entry[0], entry[1])
            continue
        if param is None:
            raise ParseError("parameter polynomials need a family block", f"{path}.{i}")
        for k, pair in enumerate(entry):
            table[(i, k)] = complex(pair[0], pair[1])
    if not table:
        raise ParseError("empty coefficient list", path)
    return table


class GridSpec(BaseModel):
    lo: Union[float, Pair]
    hi: Union[float, Pair]
    count: int = Field(200, ge=1)
    im_count: Optional[int] = Field(None, ge=1)

    @model_validator(mode="before")
    @classmethod
    def accept_range(cls, data):
        if isinstance(data, dict) and "range" in data:
            data = dict(data)
            lo, hi = data.pop("range")
            data.setdefault("lo", lo)
            data.setdefault("hi", hi)
        return data

    def to_grid(self) -> ParameterGrid:
        return ParameterGrid(to_complex(self.lo), to_complex(self.hi), self.count, self.im_count)


class FamilySpec(BaseModel):
    param: str = "a"
    grid: GridSpec
    path: Optional[GridSpec] = None

    @field_validator("param")
    @classmethod
    def check_param(cls, value: str) -> str:
        if not value.isidentifier() or value in ("x", "i"):
            raise ValueError("param must be an identifier other than x and i")
        return value


class CurveSpec(BaseModel):
    y1: Component
    y2: Component
    y3: Component
    family: Optional[FamilySpec] = None

    @model_validator(mode="after")
    def check_components(self) -> "CurveSpec":
        self.tables()
        return self

    @property
    def param(self) -> Optional[str]:
        return self.family.param if self.family else None

    def tables(self) -> Tuple[Table, Table, Table]:
        return tuple(component_table(getattr(self, name), self.param, name) for name in COMPONENTS)

    def to_family(self) -> Family:
        if self.family is None:
            raise ParseError("the spec has no family block", "family")
        path = self.family.path.to_grid() if self.family.path else None
        return Family(self.family.param, self.tables(), self.family.grid.to_grid(), path)

    def to_curve(self, a: complex = 0j) -> TrigonalCurve:
        """The curve, or the family member at a. Raises SpecValidationError."""
        family = Family(self.param or "a", self.tables(), ParameterGrid(a, a, 1))
        try:
            return make_curve(*family.member(a))
        except CurveError as exc:
            raise SpecValidationError(exc, "curve") from exc


def parse_spec(text: str) -> CurveSpec:
    """Read a JSON spec. Raises ParseError with the offending line or field path."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}", {"line": exc.lineno, "column": exc.colno})
    try:
        return CurveSpec.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        path = ".".join(str(p) for p in first["loc"])
        raise ParseError(first["msg"], path, {"errors": len(exc.errors())})
