from hazkg.service.app import ServiceState, create_app
from hazkg.service.cli import build_state, main
from hazkg.service.config import ConfigError, ServiceConfig, load_config, validate_for_serve

__all__ = [
    "ConfigError",
    "ServiceConfig",
    "ServiceState",
    "build_state",
    "create_app",
    "load_config",
    "main",
    "validate_for_serve",
]
