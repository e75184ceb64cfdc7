from .app import create_app
from .config import AppConfig, load_config
from .storage import Store

__all__ = ["AppConfig", "Store", "create_app", "load_config"]
