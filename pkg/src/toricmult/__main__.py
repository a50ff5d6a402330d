"""Allow `python -m toricmult` as an alias for the `toricmult` script."""

from .cli import main

raise SystemExit(main())
