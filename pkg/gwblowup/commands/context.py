from dataclasses import dataclass
from typing import Optional

from gwblowup.config import Settings
from gwblowup.services.engine import InvariantEngine


@dataclass
class AppContext:
    """State shared by every sub-command of one invocation."""

    settings: Settings
    engine: InvariantEngine
    cache_path: Optional[str] = None
