"""
Report documents
"""
from typing import Any


class DocumentMeta:
    """
    Helper class for holding information about the report format
    """

    def __init__(self, format_version: int) -> None:
        self.format_version = format_version

    @property
    def generator(self) -> str:
        """
        Generator string written into report headers
        """
        return f"fixpoint-lab report v{self.format_version}"


class Document(DocumentMeta):
    """
    Ordered collection of report items that end up in one file.

    CSV documents hold exactly one tabular item (trajectory, coupled run or
    suite result); JSON documents hold any number of items.
    """

    def __init__(self, items: list[Any] | None = None, title: str = "", format_version: int = 1) -> None:
        super().__init__(format_version)
        self.title = title
        self.items: list[Any] = []
        if items is not None:
            for item in items:
                self.append(item)

    def append(self, item: Any) -> None:
        """
        Appends report item
        """
        if item is None:
            raise ValueError("Cannot append None to a report document")
        self.items.append(item)

    def __len__(self) -> int:
        return len(self.items)
