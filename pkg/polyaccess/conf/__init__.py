"""Configuration and lazy settings loader."""

from types import SimpleNamespace


class LazySettings:
    """Load default settings lazily and layer run-time overrides on top."""

    def __init__(self):
        self._wrapped = None

    def _setup(self) -> None:
        if self._wrapped is not None:
            return

        from . import global_settings

        data = {
            key: getattr(global_settings, key)
            for key in dir(global_settings)
            if key.isupper()
        }
        self._wrapped = SimpleNamespace(**data)

    def __getattr__(self, item):
        self._setup()
        return getattr(self._wrapped, item)

    def __setattr__(self, key, value):
        if key == "_wrapped":
            super().__setattr__(key, value)
        else:
            self._setup()
            setattr(self._wrapped, key, value)

    def configure(self, **overrides) -> None:
        """Override settings; ``None`` values are ignored."""
        self._setup()
        for key, value in overrides.items():
            if value is None:
                continue
            if not key.isupper():
                raise KeyError(f"settings keys are upper case, got {key!r}")
            setattr(self._wrapped, key, value)

    def reset(self) -> None:
        """Drop overrides and reload the defaults on next access."""
        self._wrapped = None

    def load(self):
        """Force loading settings."""
        self._setup()


settings = LazySettings()
