"""
Report writer module (CSV and JSON)
"""
# pylint: disable=consider-using-with
import datetime
import json
import math
import os
from io import StringIO
from typing import Any, Callable, TextIO
import numpy as np
import fixpoint_lab.enumeration as fp_enum
from fixpoint_lab.corpus.document import Document

FLOAT_FORMAT = ".17g"


class _ReportWriter:
    def __init__(self) -> None:
        self.file_path: str | None = None
        self.fh: TextIO = None  # pylint: disable=invalid-name
        self.line_number: int = 0

    def _str_open(self):
        self.fh = StringIO()
        self.line_number = 1

    def _open(self, file_path: str):
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        self.fh = open(file_path, 'w', encoding='utf-8', newline='')
        self.file_path = file_path
        self.line_number = 1

    def _close(self):
        self.fh.close()

    def _add_line(self, text: str):
        self.fh.write(text)
        self.fh.write('\n')
        self.line_number += 1

    def _add_row(self, values: list[Any]):
        self._add_line(','.join(self._format_cell(value) for value in values))

    def _format_cell(self, value: Any) -> str:
        if isinstance(value, bool):
            return self._format_boolean(value)
        if isinstance(value, (int, np.integer)):
            return str(int(value))
        if isinstance(value, (float, np.floating)):
            return self._format_float(float(value))
        if value is None:
            return ''
        return str(value)

    def _format_float(self, value: float) -> str:
        """
        Decimal with 17 significant digits, independent of locale
        """
        if math.isinf(value):
            return '-inf' if value < 0 else 'inf'
        if math.isnan(value):
            return 'nan'
        return format(value, FLOAT_FORMAT)

    def _format_boolean(self, value: bool) -> str:
        return 'true' if value else 'false'


class Writer(_ReportWriter):
    """
    Report writer class
    """

    def __init__(self) -> None:
        super().__init__()
        # Tabular items, written as CSV
        self.switcher_csv: dict[str, Callable[[Any], None]] = {
            'Trajectory': self._write_trajectory_csv,
            'CoupledRun': self._write_coupled_run_csv,
            'SuiteResult': self._write_suite_result_csv,
        }
        # All items, converted to JSON-compatible dictionaries
        self.switcher_json: dict[str, Callable[[Any], dict]] = {
            'ContractiveCertificate': self._to_dict,
            'ConditionViolation': self._to_dict,
            'UniquenessVerdict': self._uniqueness_verdict_to_dict,
            'SchemeConfig': self._to_dict,
            'Trajectory': self._trajectory_to_dict,
            'CoupledRun': self._coupled_run_to_dict,
            'AuditReport': self._to_dict,
            'LemmaVerdict': self._to_dict,
            'BoundReport': self._to_dict,
            'SuiteResult': self._suite_result_to_dict,
            'dict': dict,
        }

    def write_str(self, document: Document, file_format: str = 'csv',
                  timestamp: datetime.datetime | None = None) -> str:
        """
        Serializes the document to string.
        """
        self._str_open()
        self._write_document(document, file_format, timestamp)
        return self.fh.getvalue()

    def write_file(self, document: Document, file_path: str, timestamp: datetime.datetime | None = None):
        """
        Serializes the document to file, format chosen by file extension
        """
        file_format = 'json' if file_path.lower().endswith('.json') else 'csv'
        self._open(file_path)
        try:
            self._write_document(document, file_format, timestamp)
        finally:
            self._close()

    def _write_document(self, document: Document, file_format: str, timestamp: datetime.datetime | None):
        if file_format == 'csv':
            self._write_csv_document(document, timestamp)
        elif file_format == 'json':
            self._write_json_document(document)
        else:
            raise NotImplementedError(f"Unsupported report format: {file_format}")

    # CSV

    def _write_csv_document(self, document: Document, timestamp: datetime.datetime | None):
        if len(document) != 1:
            raise ValueError(f"CSV documents hold exactly one item, got {len(document)}")
        item = document.items[0]
        class_name = item.__class__.__name__
        write_method = self.switcher_csv.get(class_name, None)
        if write_method is None:
            raise NotImplementedError(f"Found no CSV writer for class {class_name}")
        if timestamp is None:
            timestamp = datetime.datetime.now(datetime.timezone.utc)
        title = f" {document.title}" if document.title else ""
        self._add_line(f"# {document.generator}{title} generated {timestamp.isoformat()}")
        write_method(item)

    def _write_trajectory_csv(self, trajectory: Any):
        dimension = trajectory.iterates.shape[1]
        self._add_row(['n'] + [f'x[{i}]' for i in range(dimension)] + ['residual', 'fp_distance'])
        for n, point in enumerate(trajectory.iterates):
            self._add_row([n] + list(point) + [trajectory.residuals[n], trajectory.fp_distances[n]])

    def _write_coupled_run_csv(self, run: Any):
        dimension = run.reference.iterates.shape[1]
        self._add_row(['n']
                      + [f'u[{i}]' for i in range(dimension)]
                      + [f'x[{i}]' for i in range(dimension)]
                      + ['gap', 'residual_u', 'residual_x'])
        for n in range(len(run.gap)):
            self._add_row([n] + list(run.reference.iterates[n]) + list(run.candidate.iterates[n])
                          + [run.gap[n], run.reference.residuals[n], run.candidate.residuals[n]])

    def _write_suite_result_csv(self, result: Any):
        self._add_row(['scheme', 'fp_error', 'gap_tail', 'iterations', 'stop_reason', 'audits', 'verdict'])
        for row in result.rows:
            self._add_row([row.scheme, row.fp_error, row.gap_tail, row.iterations,
                           fp_enum.enum_to_str(row.stop_reason), row.audit_verdict,
                           'PASS' if row.passed and row.audits_hold else 'FAIL'])

    # JSON

    def _write_json_document(self, document: Document):
        data = {"generator": document.generator,
                "title": document.title,
                "items": [self._item_to_dict(item) for item in document.items]}
        self.fh.write(json.dumps(data, indent=2))
        self.fh.write('\n')

    def _item_to_dict(self, item: Any) -> dict:
        class_name = item.__class__.__name__
        convert_method = self.switcher_json.get(class_name, None)
        if convert_method is None:
            raise NotImplementedError(f"Found no JSON writer for class {class_name}")
        return convert_method(item)

    def _to_dict(self, item: Any) -> dict:
        return item.to_dict()

    def _uniqueness_verdict_to_dict(self, verdict: Any) -> dict:
        return {"fixed_point": None if verdict.fixed_point is None else verdict.fixed_point.tolist(),
                "passing_count": verdict.passing_count,
                "contradiction": verdict.contradiction,
                "residual": verdict.residual}

    def _trajectory_to_dict(self, trajectory: Any) -> dict:
        return {"label": trajectory.label,
                "scheme": trajectory.scheme.to_dict(),
                "stop_reason": fp_enum.enum_to_str(trajectory.stop_reason),
                "iterations": trajectory.iterations,
                "final_point": trajectory.final_point.tolist(),
                "final_residual": trajectory.final_residual}

    def _coupled_run_to_dict(self, run: Any) -> dict:
        return {"map": run.mapping.label,
                "scheme_a": run.scheme_a.to_dict(),
                "scheme_b": run.scheme_b.to_dict(),
                "x0": run.x0.tolist(),
                "floor": run.floor,
                "shared_alpha": run.shared_alpha,
                "iterations": run.iterations,
                "final_gap": run.final_gap,
                "gap_tail": run.gap_tail,
                "outcome": fp_enum.enum_to_str(run.outcome),
                "stop_reason_a": fp_enum.enum_to_str(run.reference.stop_reason),
                "stop_reason_b": fp_enum.enum_to_str(run.candidate.stop_reason)}

    def _suite_result_to_dict(self, result: Any) -> dict:
        return {"map": result.mapping.label,
                "corollary": result.corollary,
                "fixed_point": np.asarray(result.fixed_point).tolist(),
                "passed": result.passed,
                "rows": [{"scheme": row.scheme,
                          "fp_error": row.fp_error,
                          "gap_tail": row.gap_tail,
                          "iterations": row.iterations,
                          "stop_reason": fp_enum.enum_to_str(row.stop_reason),
                          "audits": [report.to_dict() for report in row.audits]}
                         for row in result.rows]}
