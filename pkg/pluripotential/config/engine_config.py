from dataclasses import dataclass, fields
import json
import os
from typing import Optional

from infrastructure.log_handler import get_base_path

DEFAULT_CONFIG_PATH = "/pluripotential/config/engine_config.json"


@dataclass
class EngineConfig:
    """
    Settings shared by every command.

    Attributes:
        table_format (str): tabulate format of the human-readable tables.
        window_margin (int): Extra bidegrees scanned around a support, e.g. for Bigolin identifications.
        max_report_rows (int): Rows shown per table before the report is cut.
        logging_config (str): Logging ini path, relative to the repository root.
    """
    table_format: str = "fancy_grid"
    window_margin: int = 1
    max_report_rows: int = 200
    logging_config: str = "/pluripotential/config/logging_config_launch.ini"

    @classmethod
    def load(cls, path: Optional[str] = None) -> "EngineConfig":
        """
        Reads the JSON configuration, ignoring unknown keys.

        Args:
            path (Optional[str]): Absolute path of the JSON file. Defaults to the shipped engine_config.json.

        Returns:
            EngineConfig: The loaded configuration; missing keys keep their defaults.
        """
        path = path or get_base_path() + DEFAULT_CONFIG_PATH
        if not os.path.exists(path):
            return cls()
        with open(path, "r") as f:
            raw = json.load(f)
        known = {field.name for field in fields(cls)}
        return cls(**{key: value for key, value in raw.items() if key in known})
