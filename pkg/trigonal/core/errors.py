# trigonal/core/errors.py
"""
Error hierarchy. Every error carries a machine-readable code so the CLI
can report it without parsing messages.
"""
from typing import Any, Dict, Optional


class TrigonalError(Exception):
    """Base class for all pipeline errors"""

    code: str = "trigonal_error"
    exit_status: int = 1

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "detail": self.detail}


# Numerical substrate

class NonConvergence(TrigonalError):
    code = "non_convergence"


class InvalidPolynomial(TrigonalError):
    code = "invalid_polynomial"
    exit_status = 2


# Curve validation

class CurveError(TrigonalError):
    exit_status = 2


class TripleIntersection(CurveError):
    code = "triple_intersection"


class DegenerateComponents(CurveError):
    code = "degenerate_components"


class ZeroDegree(CurveError):
    code = "zero_degree"


# Dessin construction

class TraceAmbiguity(TrigonalError):
    code = "trace_ambiguity"


class InconsistentEmbedding(TrigonalError):
    code = "inconsistent_embedding"


# Combinatorics

class SizeGuard(TrigonalError):
    code = "size_guard"
    exit_status = 2


# Analysis surgery

class NotMergeable(TrigonalError):
    code = "not_mergeable"


class NoSameColorPair(TrigonalError):
    code = "no_same_color_pair"


# Input handling

class ParseError(TrigonalError):
    code = "parse_error"
    exit_status = 2

    def __init__(self, message: str, path: str = "", detail: Optional[Dict[str, Any]] = None):
        detail = dict(detail or {})
        detail.setdefault("path", path)
        super().__init__(message, detail)
        self.path = path


class SpecValidationError(TrigonalError):
    """Wraps a curve validation error raised while materializing a spec"""

    code = "validation_error"
    exit_status = 2

    def __init__(self, cause: TrigonalError, path: str = ""):
        super().__init__(cause.message, {"path": path, "cause": cause.code, **cause.detail})
        self.cause = cause


# Rendering

class ProjectionClash(TrigonalError):
    code = "projection_clash"
