"""
Corpus files and reports
"""
from fixpoint_lab.corpus.document import Document
from fixpoint_lab.corpus.reader import Reader
from fixpoint_lab.corpus.writer import Writer
from fixpoint_lab.corpus.workspace import Workspace, BUNDLED_CORPUS_PATH

__all__ = ["Document", "Reader", "Writer", "Workspace", "BUNDLED_CORPUS_PATH"]
