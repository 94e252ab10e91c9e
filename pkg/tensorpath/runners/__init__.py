from .base import BaseRunner, SerialRunner
from .pool import ThreadPoolRunner

__all__ = ["BaseRunner", "SerialRunner", "ThreadPoolRunner"]
