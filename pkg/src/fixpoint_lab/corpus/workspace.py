"""
Corpus workspace
"""
import datetime
import os
from typing import Any
from fixpoint_lab.conditions.element import MappingSpec
from fixpoint_lab.corpus.document import Document
from fixpoint_lab.corpus.reader import Reader
from fixpoint_lab.corpus.writer import Writer

BUNDLED_CORPUS_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data",
                                   "corpus.json")


class Workspace:
    """
    Label-addressed collection of mappings plus the report documents
    waiting to be written
    """

    def __init__(self) -> None:
        self.mappings: list[MappingSpec] = []
        self._mapping_map: dict[str, MappingSpec] = {}
        self.documents: list[tuple[Document, str]] = []

    @classmethod
    def from_corpus(cls, file_path: str | None = None) -> "Workspace":
        """
        Workspace holding every map of a corpus file (default: the bundled corpus)
        """
        workspace = cls()
        workspace.load_corpus(BUNDLED_CORPUS_PATH if file_path is None else file_path)
        return workspace

    def load_corpus(self, file_path: str) -> None:
        """
        Reads corpus file and appends its maps
        """
        for mapping in Reader().read_file(file_path):
            self.append(mapping)

    def append(self, mapping: MappingSpec) -> None:
        """
        Appends mapping to this workspace
        """
        assert isinstance(mapping, MappingSpec)
        if mapping.label in self._mapping_map:
            raise ValueError(f"Map with label '{mapping.label}' already exists")
        self._mapping_map[mapping.label] = mapping
        self.mappings.append(mapping)

    def find(self, label: str) -> MappingSpec | None:
        """
        Finds mapping by label
        """
        return self._mapping_map.get(label, None)

    @property
    def labels(self) -> list[str]:
        """Labels in corpus order"""
        return [mapping.label for mapping in self.mappings]

    def create_document(self, file_path: str, items: Any | list[Any], title: str = "") -> Document:
        """
        Creates a new document object holding one or more report items.
        Use the write_documents method to write documents to file system
        """
        document = Document(items if isinstance(items, list) else [items], title)
        self.documents.append((document, file_path))
        return document

    def write_documents(self, timestamp: datetime.datetime | None = None) -> list[str]:
        """
        Writes all pending documents to file system and returns their paths
        """
        writer = Writer()
        written = []
        for (document, file_path) in self.documents:
            writer.write_file(document, file_path, timestamp)
            written.append(file_path)
        self.documents.clear()
        return written
