from typing import Optional

from pluripotential.core.exception import PluripotentialError


class DocumentError(PluripotentialError):
    """
    Exception raised when a JSON document cannot be turned into an object.

    Attributes:
        path -- JSON path of the offending member, e.g. "$.del.0,0[1][0]".
        message -- What is wrong with it.
        line -- Line in the document text, when the decoder knows it.
        column -- Column in the document text, when the decoder knows it.
    """
    def __init__(self, path: str, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.path = path
        self.message = message
        self.line = line
        self.column = column
        position = f' (line {line}, column {column})' if line is not None else ''
        super().__init__(
            f'{path}{position}: {message}'
        )
