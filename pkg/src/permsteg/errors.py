"""Exception hierarchy shared by all modules."""


class StegoError(Exception):
    """Base class for every error raised by permsteg."""


class InvalidOrder(StegoError, ValueError):
    pass


class RankOutOfRange(StegoError, ValueError):
    pass


class InvalidPermutation(StegoError, ValueError):
    pass


class NotByteAligned(StegoError, ValueError):
    pass


class MalformedBlock(StegoError, ValueError):
    pass


class InvalidDimensions(StegoError, ValueError):
    pass


class NotFound(StegoError, LookupError):
    pass


class ValidationError(StegoError):
    """The cover list is unusable as given (duplicates, ragged rows, bad syntax)."""


class DuplicateCells(ValidationError):
    def __init__(self, column: int, values=()):
        self.column = column
        self.values = tuple(values)
        shown = ", ".join(repr(v) for v in self.values[:5])
        super().__init__(f"column {column} has duplicate cells: {shown}")


class TableFormatError(ValidationError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class RaggedRows(TableFormatError):
    def __init__(self, row: int, expected: int, got: int):
        self.row = row
        super().__init__(f"record {row} has {got} fields, expected {expected}")


class UnterminatedQuote(TableFormatError):
    def __init__(self, offset: int):
        super().__init__("quoted field is not terminated", offset)


class CapacityError(StegoError):
    pass


class MessageTooLong(CapacityError):
    def __init__(self, length: int, capacity: int):
        self.length = length
        self.capacity = capacity
        super().__init__(f"message has {length} bits but the cover holds at most {capacity}")


class ListTooSmall(CapacityError):
    pass


class UnknownTarget(StegoError, KeyError):
    pass
