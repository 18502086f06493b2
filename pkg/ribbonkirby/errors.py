"""Exceptions raised by ribbonkirby."""


class RibbonKirbyError(Exception):
    """Base class of every domain error."""


class NotNormalizable(RibbonKirbyError):
    """A polynomial does not evaluate to ±1 at t=1."""


class NotSymmetric(RibbonKirbyError):
    """A matrix or polynomial expected to be symmetric is not."""


class BadAbelianization(RibbonKirbyError):
    """A relator does not abelianize to zero under the given map."""


class Disconnected(RibbonKirbyError):
    """The diagram has more than one connected piece."""


class UnknownComponent(RibbonKirbyError):
    """A component id does not exist in the diagram."""


class BadParameter(RibbonKirbyError):
    """A constructor parameter is outside of its supported range."""


class NotAKnot(RibbonKirbyError):
    """A one component plain diagram was required."""


class NotRibbon(RibbonKirbyError):
    """Band surgery did not produce a verifiable unlink."""


class BandCollision(RibbonKirbyError):
    """Bands are not embedded and disjoint."""


class NoMarker(RibbonKirbyError):
    """The requested marker is absent."""


class PreconditionFailed(RibbonKirbyError):
    """A move cannot be applied at the requested site."""

    def __init__(self, kind, detail):
        super().__init__(f"{kind}: {detail}")
        self.kind = kind
        self.detail = detail


class PatternMismatch(PreconditionFailed):
    """The site does not match the pattern of a composite move."""


class UnknownSite(RibbonKirbyError):
    """A move references an element which is not part of the diagram."""


class TooLarge(RibbonKirbyError):
    """The diagram is beyond the exact computation budget."""


class NotStandardPosition(RibbonKirbyError):
    """Dotted circles are not in standard position."""


class NotApplicable(RibbonKirbyError):
    """The grading equivalence does not apply to the given knot."""


class OddSignature(RibbonKirbyError):
    """A knot signature must be even."""


class ParseError(RibbonKirbyError):
    """Malformed diagram text."""

    def __init__(self, message, line=0, column=0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(RibbonKirbyError):
    """A parsed diagram failed validation."""

    def __init__(self, report):
        super().__init__("; ".join(f"{v.kind}: {v.detail}" for v in report.violations))
        self.report = report
