"""
Corpus reader module

A corpus file is a JSON object {"format_version": 1, "maps": [entry, ...]} where each entry reads
{label, dimension, domain: {lo, hi}, kind, parameters, known_fixed_point?, certificate?}.
"""
import json
import logging
import os
from typing import Any
import fixpoint_lab.exception as fp_exception
from fixpoint_lab.conditions.element import Box, GaugeFunction, MappingSpec
from fixpoint_lab.schemes.config import SchemeConfig

_logger = logging.getLogger(__name__)

ENTRY_KEYS = frozenset(["label", "dimension", "domain", "kind", "parameters", "known_fixed_point", "certificate",
                        "description"])
CERTIFICATE_KEYS = frozenset(["zamfirescu", "delta", "L", "gauge"])


class Reader:
    """
    Corpus reader class
    """

    def __init__(self, warn_on_unprocessed_key: bool = True, use_full_path_on_warning: bool = False) -> None:
        self.file_path: str = ""
        self.file_base_name: str = ""
        self.warn_on_unprocessed_key = warn_on_unprocessed_key
        self.use_full_path_on_warning = use_full_path_on_warning
        self.observed_unsupported_keys: set[str] = set()
        self.switcher_map_kind = {
            "affine": self._read_affine,
            "scalar_formula": self._read_scalar_formula,
            "piecewise": self._read_piecewise,
        }

    def read_file(self, file_path: str) -> list[MappingSpec]:
        """
        Reads corpus file
        """
        self.file_path = file_path
        self.file_base_name = os.path.basename(file_path)
        self.observed_unsupported_keys = set()
        try:
            with open(file_path, encoding="utf-8") as fh:
                data = json.load(fh)
        except json.JSONDecodeError as ex:
            raise fp_exception.CorpusError(f"{self._file_name()}: invalid JSON: {ex}") from ex
        return self._read_corpus(data)

    def read_str(self, text: str) -> list[MappingSpec]:
        """
        Reads corpus from string
        """
        self.file_path = ""
        self.file_base_name = ""
        self.observed_unsupported_keys = set()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as ex:
            raise fp_exception.CorpusError(f"Invalid JSON: {ex}") from ex
        return self._read_corpus(data)

    def read_str_entry(self, text: str) -> MappingSpec:
        """
        Reads a single corpus entry from string.
        This is primarily used for unit-testing.
        """
        self.observed_unsupported_keys = set()
        return self._read_entry(json.loads(text), 0)

    def read_scheme_config_file(self, file_path: str) -> list[SchemeConfig]:
        """
        Reads one scheme configuration object or a list of them
        """
        with open(file_path, encoding="utf-8") as fh:
            data = json.load(fh)
        items = data if isinstance(data, list) else [data]
        configs = []
        for index, item in enumerate(items):
            try:
                configs.append(SchemeConfig.from_dict(item))
            except (KeyError, TypeError) as ex:
                raise fp_exception.ConfigError(f"{file_path}: scheme config {index} is incomplete: {ex}") from ex
        return configs

    # Utility methods

    def _file_name(self) -> str:
        return self.file_path if self.use_full_path_on_warning else self.file_base_name

    def _raise_parse_error(self, index: int, message: str):
        """
        Raises a corpus error with location header
        """
        file = self._file_name()
        header = f"{file}(map {index}): " if file else f"map {index}: "
        raise fp_exception.CorpusError(header + message)

    def _report_unprocessed_keys(self, data: dict, known: frozenset, index: int) -> None:
        """
        Logs keys that are not understood, once per key and file
        """
        for key in data:
            if key not in known and key not in self.observed_unsupported_keys:
                self.observed_unsupported_keys.add(key)
                if self.warn_on_unprocessed_key:
                    _logger.warning("%s(map %d): Unprocessed key '%s'", self._file_name(), index, key)

    def _require(self, data: dict, key: str, index: int) -> Any:
        if key not in data:
            self._raise_parse_error(index, f"missing key '{key}'")
        return data[key]

    # Corpus

    def _read_corpus(self, data: Any) -> list[MappingSpec]:
        if not isinstance(data, dict) or not isinstance(data.get("maps"), list):
            raise fp_exception.CorpusError(f"{self._file_name()}: corpus must be an object with a 'maps' list")
        version = data.get("format_version", 1)
        if version != 1:
            raise fp_exception.CorpusError(f"{self._file_name()}: unsupported corpus version {version}")
        mappings = []
        labels = set()
        for index, entry in enumerate(data["maps"]):
            mapping = self._read_entry(entry, index)
            if mapping.label in labels:
                self._raise_parse_error(index, f"duplicate label '{mapping.label}'")
            labels.add(mapping.label)
            mappings.append(mapping)
        _logger.debug("Read %d maps from %s", len(mappings), self._file_name() or "string")
        return mappings

    def _read_entry(self, entry: Any, index: int) -> MappingSpec:
        if not isinstance(entry, dict):
            self._raise_parse_error(index, "entry must be an object")
        self._report_unprocessed_keys(entry, ENTRY_KEYS, index)
        label = str(self._require(entry, "label", index))
        kind = str(self._require(entry, "kind", index))
        read_method = self.switcher_map_kind.get(kind, None)
        if read_method is None:
            self._raise_parse_error(index, f"unknown map kind '{kind}'")
        domain_data = self._require(entry, "domain", index)
        try:
            domain = Box(domain_data["lo"], domain_data["hi"])
            dimension = int(entry.get("dimension", domain.dimension))
            if dimension != domain.dimension:
                self._raise_parse_error(index, f"dimension {dimension} does not match domain")
            certificate = self._read_certificate(entry.get("certificate", {}), index)
            return read_method(label, domain, entry.get("parameters", {}), entry.get("known_fixed_point"),
                               certificate)
        except fp_exception.CorpusError:
            raise
        except (KeyError, TypeError, ValueError) as ex:
            self._raise_parse_error(index, f"'{label}': {ex}")
        return None

    def _read_certificate(self, data: dict, index: int) -> dict:
        """
        Parsed certificate block: zamfirescu (a, b, c), delta, L and gauge
        """
        self._report_unprocessed_keys(data, CERTIFICATE_KEYS, index)
        certificate: dict[str, Any] = {}
        if "zamfirescu" in data:
            constants = data["zamfirescu"]
            certificate["zamfirescu"] = (float(constants["a"]), float(constants["b"]), float(constants["c"]))
        if "delta" in data:
            certificate["delta"] = float(data["delta"])
        if "L" in data:
            certificate["L"] = float(data["L"])
        if "gauge" in data:
            certificate["gauge"] = GaugeFunction.from_dict(data["gauge"])
        return certificate

    def _read_affine(self, label: str, domain: Box, parameters: dict, known_fixed_point: Any,
                     certificate: dict) -> MappingSpec:
        return MappingSpec.affine(label, parameters["matrix"], parameters["offset"], domain, known_fixed_point,
                                  certificate)

    def _read_scalar_formula(self, label: str, domain: Box, parameters: dict, known_fixed_point: Any,
                             certificate: dict) -> MappingSpec:
        return MappingSpec.scalar_formula(label, domain,
                                          function=parameters.get("function", "identity"),
                                          scale=float(parameters.get("scale", 1.0)),
                                          shift=float(parameters.get("shift", 0.0)),
                                          inner_scale=float(parameters.get("inner_scale", 1.0)),
                                          inner_shift=float(parameters.get("inner_shift", 0.0)),
                                          known_fixed_point=known_fixed_point,
                                          certificate=certificate)

    def _read_piecewise(self, label: str, domain: Box, parameters: dict, known_fixed_point: Any,
                        certificate: dict) -> MappingSpec:
        return MappingSpec.piecewise(label, domain, parameters["knots"], parameters["values"], known_fixed_point,
                                     certificate)
