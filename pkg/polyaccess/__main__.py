"""Entry point for ``python -m polyaccess``.

Runs the CLI module ``polyaccess.py`` that sits next to this package.
"""
from pathlib import Path
import runpy


def main() -> None:
    module_path = Path(__file__).resolve().parent.parent / "polyaccess.py"
    runpy.run_path(str(module_path), run_name="__main__")


if __name__ == "__main__":
    main()
