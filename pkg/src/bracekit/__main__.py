"""Entry point for ``python -m bracekit``."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
