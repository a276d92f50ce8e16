"""Exception hierarchy for agreetree."""


class AgreeTreeError(Exception):
    """Base class for all agreetree errors."""


class NewickSyntaxError(AgreeTreeError):
    """Malformed Newick text; carries the 0-based offset of the problem."""

    def __init__(self, message, offset):
        super().__init__("%s (at offset %d)" % (message, offset))
        self.offset = offset


class DuplicateLabelError(AgreeTreeError):
    """The same label appears on two nodes of one tree."""


class EmptySubtreeError(AgreeTreeError):
    """A '()' group or a dangling comma produced an empty subtree."""


class EmptyRestrictionError(AgreeTreeError):
    """Restriction label set does not meet the tree at all."""


class LabelNotCoveredError(AgreeTreeError):
    """Candidate tree is missing labels required by an input tree."""


class LabelUniverseMismatchError(AgreeTreeError):
    """Candidate label set differs from the profile label universe."""


class MultiLabeledInputError(AgreeTreeError):
    """An input tree carries two or more labels on a single node."""


class InvalidProfileError(AgreeTreeError):
    """Profile is not fully and singly labeled."""


class InvalidPositionError(AgreeTreeError):
    """Position does not satisfy the validity equation."""


class NicenessViolatedError(AgreeTreeError):
    """A child block intersects an exposed label's children in >1 element."""


class AlreadyDeletedError(AgreeTreeError):
    """Vertex was already removed from the display graph."""


class DeadVertexError(AgreeTreeError):
    """Connectivity query on a deleted vertex."""


class OracleCapError(AgreeTreeError):
    """Label universe exceeds the exhaustive-search cap."""


class BadConfigError(AgreeTreeError):
    """Generator configuration is out of range."""
