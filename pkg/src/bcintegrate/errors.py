"""Exception hierarchy shared by the bcintegrate modules."""


class IntegrationError(Exception):
    """Base class for all bcintegrate errors."""


class DocumentParseError(IntegrationError):
    """Input document is not syntactically valid (bad JSON/XML)."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class DocumentValidationError(IntegrationError):
    """Input document parsed but violates the format contract."""


class UniquenessError(DocumentValidationError):
    """Duplicate (system, name) inside one component set."""


class OntologyReferenceError(DocumentValidationError):
    """Thesaurus entry points at a concept id that does not exist."""


class ThesaurusConsistencyError(DocumentValidationError):
    """Thesaurus breaks a structural rule (term in two synonym groups,
    homonym with < 2 senses, term both synonym and homonym)."""


class OracleSizeError(IntegrationError):
    """Brute-force oracle asked to enumerate more than it safely can."""


class NothingToIntegrateError(IntegrationError):
    """Fewer than two systems in the input; there is nothing to align."""


class MergeConsistencyError(IntegrationError):
    """Conflict report and component set passed to merge do not match."""
