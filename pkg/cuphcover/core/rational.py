"""Exact-rational helpers: parsing, rendering, and conservative logarithms."""
import math
from decimal import Decimal, localcontext
from fractions import Fraction

from cuphcover.core.config import settings
from cuphcover.core.errors import PreconditionError


def parse_fraction(text: str, label: str = "value") -> Fraction:
    """Parse `3`, `1/3` or `0.25` into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise PreconditionError(f"{label} '{text}' is not a rational number") from exc


def format_fraction(value: Fraction) -> str:
    """Always `num/den`, also for integers (the .cover weight format)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def render(value: Fraction | None, digits: int = 6) -> str:
    """`num/den (decimal)`; the exact fraction always travels with the decimal."""
    if value is None:
        return "inf"
    value = Fraction(value)
    return f"{format_fraction(value)} ({float(value):.{digits}f})"


def dyadic(x: float, bits: int | None = None) -> Fraction:
    """Nearest multiple of 2^-bits to `x`."""
    bits = bits or settings.get("APPROX_BITS", 30)
    scale = 1 << bits
    return Fraction(math.floor(x * scale + 0.5), scale)


def _ln(value: Fraction) -> Decimal:
    return Decimal(value.numerator).ln() - Decimal(value.denominator).ln()


def log_ratio_floor(x: Fraction, y: Fraction) -> Fraction:
    """A rational lower bound (within 10^-40) of ln x / ln y, for x > 0, y > 1."""
    if x <= 0 or y <= 1:
        raise PreconditionError(f"log ratio needs x > 0 and y > 1, got x={x}, y={y}")
    precision = settings.get("DECIMAL_PRECISION", 60)
    with localcontext() as ctx:
        ctx.prec = precision
        ratio = _ln(Fraction(x)) / _ln(Fraction(y))
        margin = Decimal(10) ** -(precision - 20)
        return Fraction(ratio - margin)
