"""Unit tests for workspace"""

# pylint: disable=missing-class-docstring, missing-function-docstring
import datetime
import os
import sys
import tempfile
import unittest
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../../src')))
import fixpoint_lab.enumeration as fp_enum  # noqa E402
from fixpoint_lab.conditions.element import Box, MappingSpec  # noqa E402
from fixpoint_lab.corpus.workspace import Workspace  # noqa E402
from fixpoint_lab.schemes.config import SchemeConfig  # noqa E402
from fixpoint_lab.schemes.runner import run  # noqa E402


class WorkspaceTests(unittest.TestCase):

    def test_bundled_corpus(self):
        workspace = Workspace.from_corpus()
        self.assertEqual(len(workspace.labels), 6)
        mapping = workspace.find("half")
        self.assertEqual(mapping.certificate["delta"], 0.5)
        self.assertIsNone(workspace.find("missing"))

    def test_append_rejects_duplicates(self):
        workspace = Workspace()
        workspace.append(MappingSpec.scalar_formula("half", Box(0.0, 1.0), scale=0.5))
        with self.assertRaises(ValueError):
            workspace.append(MappingSpec.scalar_formula("half", Box(0.0, 1.0), scale=0.25))
        self.assertEqual(workspace.labels, ["half"])

    def test_write_documents(self):
        workspace = Workspace.from_corpus()
        trajectory = run(workspace.find("half"), SchemeConfig(fp_enum.SchemeFamily.PICARD), [1.0])
        timestamp = datetime.datetime(2026, 1, 1, tzinfo=datetime.timezone.utc)
        with tempfile.TemporaryDirectory() as directory:
            csv_path = os.path.join(directory, "half_picard.csv")
            json_path = os.path.join(directory, "half_picard.json")
            workspace.create_document(csv_path, trajectory, "half_picard")
            workspace.create_document(json_path, [trajectory])
            written = workspace.write_documents(timestamp)
            self.assertEqual(written, [csv_path, json_path])
            self.assertTrue(os.path.isfile(csv_path))
            self.assertTrue(os.path.isfile(json_path))
        self.assertEqual(workspace.documents, [])


if __name__ == '__main__':
    unittest.main()
