"""
Error types - exception hierarchy for set-pair verification, construction and search
"""

from enum import Enum
from typing import Any


class ErrorType(str, Enum):
    """Base error type classification"""

    VALIDATION_ERROR = "validation_error"
    PARSE_ERROR = "parse_error"
    RESOURCE_CAP_ERROR = "resource_cap_error"
    AMBIENT_MISMATCH_ERROR = "ambient_mismatch_error"
    GENERAL_POSITION_ERROR = "general_position_error"
    INVARIANT_ERROR = "invariant_error"


class SetPairError(Exception):
    """
    Base exception for the setpairs toolkit

    Every error carries a classification and a free-form context dict that the
    CLI prints next to the message.
    """

    def __init__(
        self, error_type: ErrorType, message: str, context: dict[str, Any] | None = None
    ):
        self.error_type = error_type
        self.message = message
        self.context = context or {}
        super().__init__(f"[{error_type.value}] {message}")


class ValidationError(SetPairError):
    """
    Contract violations (preconditions, malformed systems, failed smart constructors)
    """

    def __init__(
        self, message: str, field: str | None = None, context: dict[str, Any] | None = None
    ):
        ctx = context or {}
        if field:
            ctx["field"] = field
        super().__init__(ErrorType.VALIDATION_ERROR, message, ctx)
        self.field = field


class ParseError(SetPairError):
    """
    Input format errors (JSON-lines system files)
    """

    def __init__(
        self, message: str, line_number: int | None = None, context: dict[str, Any] | None = None
    ):
        ctx = context or {}
        if line_number is not None:
            ctx["line_number"] = line_number
        super().__init__(ErrorType.PARSE_ERROR, message, ctx)
        self.line_number = line_number


class ResourceCapError(SetPairError):
    """
    Documented size caps exceeded (ground size, materialized system size, search space)
    """

    def __init__(
        self,
        message: str,
        limit: int | None = None,
        requested: int | None = None,
        context: dict[str, Any] | None = None,
    ):
        ctx = context or {}
        if limit is not None:
            ctx["limit"] = limit
        if requested is not None:
            ctx["requested"] = requested
        super().__init__(ErrorType.RESOURCE_CAP_ERROR, message, ctx)
        self.limit = limit
        self.requested = requested


class AmbientMismatchError(SetPairError):
    """
    Linear-algebra operands living in different ambient spaces or fields
    """

    def __init__(self, message: str, left: int, right: int, context: dict[str, Any] | None = None):
        ctx = context or {}
        ctx["left"] = left
        ctx["right"] = right
        super().__init__(ErrorType.AMBIENT_MISMATCH_ERROR, message, ctx)
        self.left = left
        self.right = right


class GeneralPositionError(SetPairError):
    """
    Las Vegas sampler ran out of tries

    Usually means the field is too small for the number of constraints, or an
    unlucky seed.
    """

    def __init__(
        self,
        message: str,
        violated: list[int] | None = None,
        tries: int = 0,
        context: dict[str, Any] | None = None,
    ):
        ctx = context or {}
        ctx["violated"] = violated or []
        ctx["tries"] = tries
        super().__init__(ErrorType.GENERAL_POSITION_ERROR, message, ctx)
        self.violated = violated or []
        self.tries = tries


class InvariantError(SetPairError):
    """
    Two independent oracles disagree, or a search witness fails re-verification.
    Always a bug.
    """

    def __init__(self, message: str, context: dict[str, Any] | None = None):
        super().__init__(ErrorType.INVARIANT_ERROR, message, context)
