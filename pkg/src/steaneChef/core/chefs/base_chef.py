"""Base chef class for building verification pipelines."""

import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Union

from steaneChef.config.config import Config
from steaneChef.utils.paths import Paths


class BaseChef:
    """Base class for pipelines ("chefs") that turn codes into artifacts.

    This class provides core functionality that all chefs should inherit from:
    - Data directory handling
    - Event callbacks

    Example:
    ```python
    class MyChef(BaseChef):
        def __init__(self):
            super().__init__(name="my_chef")

        def process(self, code_ref):
            # Your chef's pipeline here
            pass
    ```
    """

    def __init__(self, name: str, data_dir: Optional[Union[str, Path]] = None):
        """Initialize the base chef."""
        self.name = name
        self.data_dir = Path(data_dir) if data_dir is not None else Path(Config().data_dir)

        self.logger = logging.getLogger(f"steanechef.chef.{name}")

        # Event callbacks
        self.callbacks: Dict[str, List[Callable[[Any], None]]] = {}

    def register_callback(self, event: str, callback: Callable[[Any], None]) -> None:
        """Register a callback for chef events."""
        self.callbacks.setdefault(event, []).append(callback)

    def emit_event(self, event: str, data: Any = None) -> None:
        """Emit an event to registered callbacks."""
        for callback in self.callbacks.get(event, ()):
            try:
                callback(data)
            except Exception as e:
                self.logger.error("Error in %s callback: %s", event, e)

    def ensure_data_dir(self) -> Path:
        return Paths().ensure_path(self.data_dir)

    def process(self, input_data: Any) -> Dict[str, Any]:
        """Process input data. Override in subclasses."""
        raise NotImplementedError("Subclasses must implement process()")
