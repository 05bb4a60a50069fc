# test_logging_config.py

import logging
import logging.config
import os
import sys
import tempfile
import unittest
from pathlib import Path
from unittest.mock import Mock, patch

LOG_EXPORTER = "opentelemetry.exporter.otlp.proto.grpc._log_exporter.OTLPLogExporter"
SPAN_EXPORTER = "opentelemetry.exporter.otlp.proto.grpc.trace_exporter.OTLPSpanExporter"


class TestLoggingConfiguration(unittest.TestCase):
    def setUp(self):
        """
        logging_config builds its providers and exporters at import time, so
        it is re-imported under each test's environment.
        """
        sys.modules.pop("src.logging_config", None)
        self.log_dir = tempfile.mkdtemp(prefix="bipolar-logs-")

    def _import_config(self, **env):
        with patch.dict(os.environ, {"BIPOLAR_LOG_DIR": self.log_dir, **env}):
            import src.logging_config as logging_config
        return logging_config

    @patch(SPAN_EXPORTER)
    @patch(LOG_EXPORTER)
    def test_exporters_follow_endpoint(self, mock_log_exporter, mock_span_exporter):
        mock_log_exporter.return_value = Mock()
        mock_span_exporter.return_value = Mock()

        self._import_config(BIPOLAR_OTLP_ENDPOINT="http://collector:4317")

        mock_log_exporter.assert_called_once_with(
            endpoint="http://collector:4317", insecure=True
        )
        mock_span_exporter.assert_called_once_with(
            endpoint="http://collector:4317", insecure=True
        )

    @patch(SPAN_EXPORTER)
    @patch(LOG_EXPORTER)
    def test_no_exporters_without_endpoint(self, mock_log_exporter, mock_span_exporter):
        with patch.dict(os.environ):
            os.environ.pop("BIPOLAR_OTLP_ENDPOINT", None)
            self._import_config()

        mock_log_exporter.assert_not_called()
        mock_span_exporter.assert_not_called()

    def test_one_file_per_concern(self):
        logging_config = self._import_config()
        config = logging_config.LOGGING_CONFIG

        for name in logging_config.LOGGER_NAMES:
            concern = name.removesuffix("_logger")
            handler = config["handlers"][f"{concern}_file_handler"]
            self.assertEqual(Path(handler["filename"]), Path(self.log_dir) / f"{concern}.log")
            self.assertEqual(
                config["loggers"][name]["handlers"], [f"{concern}_file_handler"]
            )
        self.assertIn("opentelemetry_handler", config["root"]["handlers"])

    def test_records_reach_concern_file(self):
        logging_config = self._import_config()
        logging.config.dictConfig(logging_config.LOGGING_CONFIG)

        logging.getLogger("walks_logger").info("sampled a walk")

        text = (Path(self.log_dir) / "walks.log").read_text()
        self.assertIn("walks_logger - INFO - sampled a walk", text)
        self.assertIn("sampled a walk", (Path(self.log_dir) / "app.log").read_text())


class TestSettings(unittest.TestCase):
    def test_defaults(self):
        from src.config import load_settings

        with patch.dict(os.environ, {"TESTING": "true"}, clear=True):
            settings = load_settings()
        self.assertEqual(settings.log_level, "WARNING")
        self.assertEqual(settings.workers, 1)
        self.assertIsNone(settings.otlp_endpoint)
        self.assertTrue(settings.testing)

    def test_environment_overrides(self):
        from src.config import load_settings

        env = {"BIPOLAR_LOG_LEVEL": "debug", "BIPOLAR_WORKERS": "4"}
        with patch.dict(os.environ, env):
            settings = load_settings()
        self.assertEqual(settings.log_level, "DEBUG")
        self.assertEqual(settings.workers, 4)

    def test_invalid_values(self):
        from pydantic import ValidationError

        from src.config import load_settings

        for env in ({"BIPOLAR_LOG_LEVEL": "loud"}, {"BIPOLAR_WORKERS": "0"}):
            with self.subTest(env=env), patch.dict(os.environ, env):
                with self.assertRaises(ValidationError):
                    load_settings()


if __name__ == "__main__":
    unittest.main()
