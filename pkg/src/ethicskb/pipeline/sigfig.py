"""Two-significant-figure formatting for ratios and efficiencies.

Values at or above 1 are rounded to two significant figures; values below
1 are rounded to two decimals and printed without the leading zero (".46").
Rounding is half-up throughout, so 1.25 prints "1.3" and 12.16 prints "12".
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal


def format_two_sig(value: float | None) -> str:
    """Format a ratio the way the report prints it; None becomes ''."""
    if value is None:
        return ""
    if value == 0:
        return "0"
    d = Decimal(repr(float(value)))
    if abs(d) < 1:
        q = d.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
        if q == 0:
            return "0"
        if abs(q) < 1:
            text = str(q)
            if text.startswith("0."):
                return text[1:]
            if text.startswith("-0."):
                return "-" + text[2:]
            return text
        d = q  # rounded up across 1.0; fall through to the >= 1 branch
    exponent = d.adjusted()
    q = d.quantize(Decimal(1).scaleb(exponent - 1), rounding=ROUND_HALF_UP)
    if q.adjusted() > exponent:  # rounding carried into the next decade
        q = q.quantize(Decimal(1).scaleb(q.adjusted() - 1), rounding=ROUND_HALF_UP)
    return format(q, "f")


def format_count(value: float | int) -> str:
    """Counts print as integers; weighted coverage may be fractional."""
    if float(value) == int(value):
        return str(int(value))
    return format_two_sig(float(value))


def gain_percent(ratio: float | None) -> int | None:
    """Percentage gain implied by a T/E ratio, from its two-sig-fig form.

    The rounded ratio is what a reader sees, so the gain is derived from
    it: ratio 1.9 -> +90, ratio 12 -> +1100. None stays None.
    """
    if ratio is None:
        return None
    text = format_two_sig(ratio)
    if text in ("", "0"):
        return -100 if text == "0" else None
    if text.startswith("."):
        text = "0" + text
    elif text.startswith("-."):
        text = "-0" + text[1:]
    return int(Decimal(text) * 100) - 100
