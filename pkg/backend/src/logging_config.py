import os

from opentelemetry import trace
from opentelemetry._logs import set_logger_provider
from opentelemetry.exporter.otlp.proto.grpc._log_exporter import (
    OTLPLogExporter,
)
from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import OTLPSpanExporter
from opentelemetry.sdk._logs import LoggerProvider
from opentelemetry.sdk._logs.export import BatchLogRecordProcessor
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor
from opentelemetry.semconv.attributes import service_attributes

from src.config import SERVICE_NAME, SERVICE_VERSION, load_settings

settings = load_settings()

# Log files live in one directory per installation (a temp dir under tests)
log_dir = settings.log_dir
os.makedirs(log_dir, exist_ok=True)
app_log_path = log_dir / "app.log"
LOGGER_NAMES = (
    "walks_logger",
    "maps_logger",
    "distances_logger",
    "busemann_logger",
    "samplers_logger",
    "enumeration_logger",
    "experiments_logger",
    "cli_logger",
)


resource = Resource.create(
    {
        service_attributes.SERVICE_NAME: SERVICE_NAME,
        service_attributes.SERVICE_VERSION: SERVICE_VERSION,
    }
)

log_provider = LoggerProvider(resource=resource)
set_logger_provider(log_provider)
trace.set_tracer_provider(TracerProvider(resource=resource))

# Exporters only when a collector is configured; a desk run has none
if settings.otlp_endpoint:
    otlp_log_exporter = OTLPLogExporter(endpoint=settings.otlp_endpoint, insecure=True)
    log_provider.add_log_record_processor(BatchLogRecordProcessor(otlp_log_exporter))
    otlp_exporter = OTLPSpanExporter(endpoint=settings.otlp_endpoint, insecure=True)
    trace.get_tracer_provider().add_span_processor(BatchSpanProcessor(otlp_exporter))


FILE_HANDLER_CLASS = "logging.FileHandler"


def _file_handler(filename):
    return {
        "class": FILE_HANDLER_CLASS,
        "formatter": "standard",
        "filename": filename,
        "level": "DEBUG",
    }


LOGGING_CONFIG = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {"format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s"},
    },
    "handlers": {
        "opentelemetry_handler": {
            "class": "opentelemetry.sdk._logs.LoggingHandler",
            "level": "DEBUG",
            "logger_provider": log_provider,
        },
        "app_file_handler": _file_handler(app_log_path),
        **{
            f"{name.removesuffix('_logger')}_file_handler": _file_handler(
                log_dir / f"{name.removesuffix('_logger')}.log"
            )
            for name in LOGGER_NAMES
        },
    },
    "root": {
        "handlers": ["app_file_handler", "opentelemetry_handler"],
        "level": "DEBUG",
    },
    "loggers": {
        name: {
            "handlers": [f"{name.removesuffix('_logger')}_file_handler"],
            "level": "DEBUG",
        }
        for name in LOGGER_NAMES
    },
}
