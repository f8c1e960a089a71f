"""Exception types shared across the toolkit.

Loader errors distinguish malformed documents (ParseError) from documents
that parse but violate a contract (ValidationError, ContractError,
CrossRefError). The walkthrough state-machine errors (InvalidBranch, AtLeaf,
AtRoot, NotAtLeaf) map onto HTTP 4xx responses in the service layer.
"""


class EthicsKbError(Exception):
    """Base class for all toolkit errors."""


class ParseError(EthicsKbError):
    """Document is not structurally readable (bad JSON, wrong shape)."""


class ValidationError(EthicsKbError):
    """A knowledge-base tree violates one or more structural invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__(
            "invalid tree: " + "; ".join(str(v) for v in self.violations)
        )


class CrossRefError(EthicsKbError):
    """A document references an id that does not exist."""


class ContractError(EthicsKbError):
    """A document parses but breaks a field-level contract."""


class UnknownLeaf(EthicsKbError):
    """Requested leaf id is not part of the tree."""


class UnknownTree(EthicsKbError):
    """Requested tree id is not registered with the service."""


class EmptyResult(EthicsKbError):
    """A filter removed every leaf but a non-empty tree was required."""


class UnknownItem(EthicsKbError):
    """A vote or grouping references an item missing from the mapping."""


class EmptyGroupLabels(EthicsKbError):
    """group_label was called with no labels at all."""


class UnknownSession(EthicsKbError):
    """No session with the given id exists."""


class InvalidBranch(EthicsKbError):
    """Branch index is out of range for the current question."""


class AtLeaf(EthicsKbError):
    """Cannot answer: the session cursor already sits on a leaf."""


class AtRoot(EthicsKbError):
    """Cannot step back: the session cursor is at the root."""


class NotAtLeaf(EthicsKbError):
    """Cannot record a finding unless the cursor sits on a leaf."""
